#include <doctest.h>

#include <algorithm>
#include <set>

#include "coartin/semigroup.hpp"
#include "oracles.hpp"

using namespace coartin;

namespace {

std::set<int> asSet(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::uint64_t reduceP(std::uint64_t l, std::uint64_t p) { return oracle::coprimePart(l, p); }

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11};

}  // namespace

TEST_CASE("enumerating S(m)") {
    auto members = [](int m) {
        std::vector<std::vector<int>> out;
        for (const auto& g : enumerateS(m)) out.push_back(g.members());
        return out;
    };
    CHECK(members(2) == std::vector<std::vector<int>>{{}});
    CHECK(members(3) == std::vector<std::vector<int>>{{}});
    CHECK(members(4) == std::vector<std::vector<int>>{{}, {2}});
    CHECK(members(5) == std::vector<std::vector<int>>{{}, {3}});
    const auto six = members(6);
    CHECK(six.size() == 5);
    CHECK(std::set<std::vector<int>>(six.begin(), six.end()) ==
          std::set<std::vector<int>>{{}, {3}, {4}, {2, 4}, {3, 4}});
}

TEST_CASE("enumeration agrees with the exhaustive filter") {
    for (int m = 2; m <= 16; ++m) {
        std::set<std::vector<int>> fast;
        for (const auto& g : enumerateS(m)) {
            CHECK(isSemigroupDatum(m, g.members()));
            CHECK(std::is_sorted(g.members().begin(), g.members().end()));
            fast.insert(g.members());
        }
        const auto slow = oracle::naiveSemigroups(m);
        CHECK(fast == std::set<std::vector<int>>(slow.begin(), slow.end()));
        CHECK(fast.size() == enumerateS(m).size());
    }
}

TEST_CASE("Gamma validation") {
    CHECK_NOTHROW(Gamma(6, {4, 2}));
    CHECK(Gamma(6, {4, 2}).members() == std::vector<int>{2, 4});
    CHECK_THROWS_AS(Gamma(6, {2}), ValidationError);      // 2+2 = 4 missing
    CHECK_THROWS_AS(Gamma(6, {5}), ValidationError);      // m-1 excluded
    CHECK_THROWS_AS(Gamma(6, {1}), ValidationError);
    CHECK_THROWS_AS(Gamma(6, {3, 3}), ValidationError);
    CHECK_THROWS_AS(Gamma(1), ValidationError);
}

TEST_CASE("C(i) and Gamma(i) companions") {
    const Gamma g24(6, {2, 4});
    CHECK(g24.cGammaAfter(4) == std::vector<int>{5});
    CHECK(g24.cGammaAfter(2) == std::vector<int>{3, 5});
    CHECK(Gamma(6, {3, 4}).cGammaAfter(4) == std::vector<int>{5});
    CHECK(g24.gammaAfter(2) == std::vector<int>{4});
    CHECK(g24.gammaBetween(2, 5) == std::vector<int>{4});
    CHECK(g24.gammaBetween(2, 4).empty());
    CHECK(g24.cGammaBetween(2, 5) == std::vector<int>{3});
    CHECK(g24.complement() == std::vector<int>{3, 5});
    CHECK_THROWS_AS(g24.cGammaAfter(1), ValidationError);
    CHECK_THROWS_AS(g24.cGammaAfter(6), ValidationError);
}

TEST_CASE("ind, dec and Rel") {
    {
        const auto g = structure(Gamma(6, {2, 4}));
        CHECK(g.ind == std::vector<int>{2});
        CHECK(g.dec == std::vector<int>{4});
        CHECK(g.rel.at(4) == std::vector<Exponent>{{2}});
        CHECK(g.decGe2.empty());
    }
    {
        const auto g = structure(Gamma(8, {3, 5, 6}));
        CHECK(g.ind == std::vector<int>{3, 5});
        CHECK(g.dec == std::vector<int>{6});
        CHECK(g.rel.at(6) == std::vector<Exponent>{{2, 0}});
        CHECK(g.decGe2.empty());
    }
    {
        const auto g = structure(Gamma(14, {4, 6, 8, 10, 12}));
        CHECK(g.ind == std::vector<int>{4, 6});
        CHECK(g.dec == std::vector<int>{8, 10, 12});
        const auto& r = g.rel.at(12);
        CHECK(std::set<Exponent>(r.begin(), r.end()) == std::set<Exponent>{{3, 0}, {0, 2}});
        CHECK(g.decGe2 == std::vector<int>{12});
    }
    CHECK_THROWS_AS(structure(Gamma(6)), ValidationError);
}

TEST_CASE("structure invariants over S(m)") {
    for (int m = 4; m <= 16; ++m)
        for (const auto& gamma : enumerateS(m)) {
            if (gamma.empty()) continue;
            const auto g = structure(gamma);
            std::vector<int> all = g.ind;
            all.insert(all.end(), g.dec.begin(), g.dec.end());
            std::sort(all.begin(), all.end());
            CHECK(all == gamma.members());
            for (std::size_t i = 0; i < g.s(); ++i) CHECK(g.a(g.ind[i]) == g.unit(i));
            for (int x : gamma.members()) {
                CHECK(dot(g.a(x), g.ind) == x);
                const auto& r = g.rel.at(x);
                CHECK(std::find(r.begin(), r.end(), g.a(x)) != r.end());
                for (const auto& a : r) CHECK(dot(a, g.ind) == x);
                CHECK(r == relSet(g.ind, x));
            }
            for (int x : g.dec) {
                const bool ge2 = std::find(g.decGe2.begin(), g.decGe2.end(), x) != g.decGe2.end();
                CHECK(ge2 == (g.rel.at(x).size() >= 2));
            }
            if (!g.decGe2.empty()) CHECK(isNonAvoidableChoice(g));
        }
}

TEST_CASE("conductor ideal generators") {
    using V = std::vector<Exponent>;
    CHECK(conductorIdealGenerators(structure(Gamma(8, {3, 5, 6}))) == V{{0, 2}, {1, 1}, {3, 0}});
    CHECK(conductorIdealGenerators(structure(Gamma(6, {2, 4}))) == V{{3}});
    CHECK(conductorIdealGenerators(structure(Gamma(14, {4, 6, 8, 10, 12}))) ==
          V{{0, 3}, {1, 2}, {2, 1}, {4, 0}});
}

TEST_CASE("conductor ideal generators agree with the box filter") {
    for (int m = 4; m <= 14; ++m)
        for (const auto& gamma : enumerateS(m)) {
            if (gamma.empty()) continue;
            const auto g = structure(gamma);
            const auto gens = conductorIdealGenerators(g);
            CHECK(std::set<Exponent>(gens.begin(), gens.end()) == oracle::naiveConductorGenerators(g.ind, m));
        }
}

TEST_CASE("monomial quotient has 1 + |Gamma| elements") {
    for (int m = 4; m <= 14; ++m)
        for (const auto& gamma : enumerateS(m)) {
            if (gamma.empty()) continue;
            const auto g = structure(gamma);
            const auto deg = monomialQuotientDegrees(g);
            CHECK(deg.size() == 1 + gamma.size());
            std::set<int> expect{0};
            for (int x : gamma.members()) expect.insert(x);
            CHECK(deg == expect);
        }
}

TEST_CASE("relation basis on Gamma = {4,6,8,10,12}") {
    const auto g = structure(Gamma(14, {4, 6, 8, 10, 12}));
    CHECK(g.a(12) == Exponent{0, 2});
    const auto rb = relationBasis(g);
    CHECK(std::set<Exponent>(rb.bAll.begin(), rb.bAll.end()) == std::set<Exponent>{{3, 0}, {0, 2}});
    CHECK(std::set<Exponent>(rb.bPrime.begin(), rb.bPrime.end()) == std::set<Exponent>{{3, 0}, {0, 2}});
    CHECK(rb.avoidable == std::vector<int>{12});
    CHECK(rb.nonAvoidable.empty());
    CHECK(rb.bList == std::vector<Exponent>{{3, 0}});
    CHECK(rb.muList == std::vector<int>{12});
    CHECK(rb.t == 1);
    CHECK(rb.t == rb.bPrime.size() - rb.avoidable.size());
    CHECK(rb.multiplicity.at(12) == 1);
    CHECK_THROWS_AS(relationBasis(structure(Gamma(6, {2, 4}))), ValidationError);
}

TEST_CASE("relation basis bookkeeping on every general Gamma") {
    for (int m = 4; m <= 18; ++m)
        for (const auto& gamma : enumerateS(m)) {
            if (gamma.empty()) continue;
            const auto g = structure(gamma);
            if (g.decGe2.empty()) continue;
            const auto rb = relationBasis(g);
            CHECK(rb.t == rb.bPrime.size() - rb.avoidable.size());
            CHECK(rb.bList.size() == rb.t);
            CHECK(std::is_sorted(rb.muList.begin(), rb.muList.end()));
            std::set<Exponent> expect(rb.bPrime.begin(), rb.bPrime.end());
            for (int mu : rb.avoidable) expect.erase(g.a(mu));
            CHECK(std::set<Exponent>(rb.bList.begin(), rb.bList.end()) == expect);
            std::size_t total = 0;
            for (const auto& [mu, k] : rb.multiplicity) total += k;
            CHECK(total == rb.t);
            for (std::size_t i = 0; i < rb.t; ++i) CHECK(dot(rb.bList[i], g.ind) == rb.muList[i]);
        }
}

TEST_CASE("order set L(m, Gamma)") {
    CHECK(orderSetL(Gamma(6, {4})) == std::vector<int>{1});
    CHECK(orderSetL(Gamma(6, {2, 4})) == std::vector<int>{1, 3});
    CHECK(orderSetL(Gamma(6, {3}), 2) == std::vector<int>{1});
    CHECK(orderSetL(Gamma(6)).empty());
}

TEST_CASE("L(m, Gamma) against its definition, and the p-part identity") {
    for (int m = 4; m <= 14; ++m)
        for (const auto& gamma : enumerateS(m)) {
            const auto L = orderSetL(gamma);
            CHECK(asSet(L) == oracle::naiveL(m, gamma.members()));
            for (auto p : kPrimes) {
                std::set<int> reduced;
                for (int l : L) reduced.insert(static_cast<int>(reduceP(l, p)));
                CHECK(asSet(orderSetL(gamma, p)) == reduced);
            }
        }
}

TEST_CASE("order tables") {
    const auto t6 = orderTables(6);
    CHECK(t6.L == std::vector<int>{1, 2, 3});
    CHECK(t6.B == std::vector<int>{4, 5});
    CHECK(t6.O == std::vector<int>{1, 2, 3});
    CHECK(orderTables(8).B == std::vector<int>{6, 7});
    CHECK(orderTables(6, 2).O == std::vector<int>{1, 3});
    CHECK_THROWS_AS(orderTables(3), ValidationError);
}

TEST_CASE("L(m) and B(m) partition {1..m-1}") {
    for (int m = 4; m <= 14; ++m) {
        const auto t = orderTables(m);
        std::set<int> all(t.L.begin(), t.L.end());
        for (int b : t.B) CHECK(all.insert(b).second);
        std::set<int> range;
        for (int l = 1; l < m; ++l) range.insert(l);
        CHECK(all == range);
        CHECK(asSet(t.B) == oracle::naiveB(m));
        CHECK(std::find(t.B.begin(), t.B.end(), 1) == t.B.end());
        CHECK(t.O == t.L);
    }
}

TEST_CASE("B(m) contains the top n+1 values for m = n! + 1") {
    const int n = 3, m = 7;
    const auto B = asSet(orderTables(m).B);
    for (int i = 0; i <= n; ++i) CHECK(B.count(m - 1 - i) == 1);
}

TEST_CASE("explicit lower bounds for L(m) and O_p(m)") {
    for (int m = 4; m <= 14; ++m) {
        const auto L = asSet(orderTables(m).L);
        std::set<int> li, lii;
        for (int i = 2; 2 * i <= m - 1; ++i) {
            if ((m - 1) % i != 0) continue;
            const int l = (i - 1) * (m - 1) / i;
            const int n = (m - 1) / i - 1;
            li.insert(l);
            if (n >= 2 && (m - 1) % n != 0 && (m - 2) % n != 0) lii.insert(l);
        }
        for (int l = 1; l <= m - 3; ++l)
            if (!li.count(l)) CHECK(L.count(l) == 1);
        for (int l : lii) CHECK(L.count(l) == 1);
        for (auto p : kPrimes) {
            const auto O = asSet(orderTables(m, p).O);
            std::set<int> excluded;
            for (int l : li) excluded.insert(static_cast<int>(reduceP(l, p)));
            for (int l = 1; l <= m - 3; ++l)
                if (l % static_cast<int>(p) != 0 && !excluded.count(l)) CHECK(O.count(l) == 1);
            for (int l : lii) CHECK(O.count(static_cast<int>(reduceP(l, p))) == 1);
            std::set<int> reducedL;
            for (int l : L) reducedL.insert(static_cast<int>(reduceP(l, p)));
            CHECK(O == reducedL);
        }
    }
}

TEST_CASE("largest finite order") {
    CHECK(maxFiniteOrder(6) == 3);
    CHECK(maxFiniteOrder(9) == 5);
    CHECK(maxFiniteOrder(6, 3) == 2);
    CHECK(finiteOrderFormula(6, 3) == 2);
    CHECK(maxFiniteOrder(7) == 2);  // 3 | 6, so m-4 is not reached
    CHECK(finiteOrderBound(7) == 3);
    for (int m = 4; m <= 16; ++m) {
        CHECK(maxFiniteOrder(m) <= finiteOrderBound(m));
        if (m % 2 == 0 || (m - 1) % 3 != 0) CHECK(maxFiniteOrder(m) == finiteOrderBound(m));
        CHECK(maxFiniteOrder(m) == finiteOrderFormula(m));
    }
}

TEST_CASE("closed-form maximum in characteristic p differs from max O_p(m) at three places up to m = 20") {
    std::set<std::pair<int, int>> mismatch;
    for (int m = 4; m <= 20; ++m)
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19}) {
            const int exact = maxFiniteOrder(m, p);
            std::set<int> reduced;
            for (int l : orderTables(m).L) reduced.insert(static_cast<int>(reduceP(l, p)));
            CHECK(exact == *reduced.rbegin());
            if (finiteOrderFormula(m, p) != exact) mismatch.insert({m, p});
        }
    CHECK(mismatch == std::set<std::pair<int, int>>{{10, 7}, {16, 13}, {17, 13}});
    // 6 is in no L(10, Gamma): 3 in Gamma forces 9, and 2 in Gamma forces 8 = 6 + 2.
    CHECK(finiteOrderFormula(10, 7) == 6);
    CHECK(maxFiniteOrder(10, 7) == 5);
}

TEST_CASE("relSet enumerates solutions of a . nu = target") {
    CHECK(relSet({4, 6}, 12) == std::vector<Exponent>{{0, 2}, {3, 0}});
    CHECK(relSet({3, 5}, 7).empty());
    CHECK(relSet({2}, 0) == std::vector<Exponent>{{0}});
}
