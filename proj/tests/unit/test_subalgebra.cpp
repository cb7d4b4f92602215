#include <doctest.h>

#include <random>

#include "coartin/families.hpp"
#include "coartin/subalgebra.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace coartin;

namespace {

const FieldSpec Q;

Poly P(const char* s, const FieldSpec& F = Q) { return parsePoly(s, F); }

oracle::QVec toQVec(const TruncPoly& t) {
    oracle::QVec v;
    for (const auto& c : t.coeffs()) v.push_back(c.rational());
    return v;
}

/// All f_gamma sum to one random combination; used to reshuffle generators.
std::vector<Poly> scrambled(const CanonicalAlgebra& A, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Poly> out;
    const auto& mem = A.gamma().members();
    for (std::size_t k = 0; k < mem.size(); ++k) {
        Poly p = A.f(mem[k]).toPoly() * A.field().fromInt(2 + static_cast<int>(k));
        for (std::size_t j = k + 1; j < mem.size(); ++j) p += A.f(mem[j]).toPoly() * A.field().fromInt(d(rng));
        p += Poly::monomial(A.field(), 0, A.field().fromInt(d(rng)));
        p += Poly::monomial(A.field(), static_cast<std::size_t>(A.m() + 1), A.field().fromInt(d(rng)));
        out.push_back(p);
    }
    std::shuffle(out.begin(), out.end(), rng);
    if (!out.empty()) out.push_back(out.front() * out.back());
    return out;
}

}  // namespace

TEST_CASE("canonical basis from generators") {
    {
        const auto A = fromGenerators(Q, 6, {P("x^2 + x^5")});
        CHECK(A.gamma() == Gamma(6, {2, 4}));
        CHECK(A.lambda(2, 3).isZero());
        CHECK(A.lambda(2, 5) == Q.one());
        CHECK(A.lambda(4, 5).isZero());
        CHECK(A.f(2).toPoly() == P("x^2 + x^5"));
        CHECK(A.f(4).toPoly() == P("x^4"));
    }
    {
        const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
        CHECK(A.gamma() == Gamma(6, {2, 4}));
        CHECK(A.lambda(2, 3) == Q.one());
        CHECK(A.lambda(2, 5).isZero());
        CHECK(A.lambda(4, 5) == Q.fromInt(2));
    }
    {
        const auto A = fromGenerators(Q, 6, {});
        CHECK(A.gamma().empty());
        CHECK(A.barDimension() == 1);
        CHECK(A.isMonomial());
    }
}

TEST_CASE("generators outside A(m) are rejected") {
    CHECK_THROWS_AS(fromGenerators(Q, 6, {P("x + x^2")}), NotInAmError);
    CHECK_THROWS_AS(fromGenerators(Q, 6, {P("x^5")}), NotInAmError);
}

TEST_CASE("canonical basis agrees with the span-closure oracle") {
    for (int m = 4; m <= 12; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 12, 100 + m)) {
            std::vector<oracle::QVec> gens;
            for (int g : A.gamma().members()) gens.push_back(toQVec(A.f(g)));
            const auto basis = oracle::naiveCanonicalBasis(m, gens);
            REQUIRE(basis.size() == A.gamma().size());
            for (const auto& [g, f] : basis) CHECK(toQVec(A.f(g)) == f);
        }
}

TEST_CASE("canonical basis is independent of the generating set") {
    std::mt19937_64 rng(21);
    for (int m = 4; m <= 12; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 8, 200 + m)) {
            const auto B = fromGenerators(Q, m, scrambled(A, rng));
            CHECK(B == A);
            CHECK(B.lambdaTable() == A.lambdaTable());
            const auto C = CanonicalAlgebra::fromLambda(Q, A.gamma(), A.lambdaTable());
            CHECK(C == A);
        }
}

TEST_CASE("fromLambda rejects inconsistent tables") {
    LambdaTable t;
    t[{2, 3}] = Q.one();  // forces lambda_{4,5} = 2
    CHECK_THROWS_AS(CanonicalAlgebra::fromLambda(Q, Gamma(6, {2, 4}), t), ValidationError);
    t[{4, 5}] = Q.fromInt(2);
    CHECK_NOTHROW(CanonicalAlgebra::fromLambda(Q, Gamma(6, {2, 4}), t));
    t[{2, 4}] = Q.one();  // 4 is in Gamma
    CHECK_THROWS_AS(CanonicalAlgebra::fromLambda(Q, Gamma(6, {2, 4}), t), ValidationError);
}

TEST_CASE("canonical units") {
    for (int m = 4; m <= 10; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 6, 300 + m))
            for (int g : A.gamma().members()) {
                const TruncPoly u = A.unit(g);
                CHECK(u[0].isOne());
                CHECK(mulInF(TruncPoly::monomial(Q, static_cast<std::size_t>(m), static_cast<std::size_t>(g)), u) ==
                      A.f(g));
            }
}

TEST_CASE("membership") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    const auto in = membership(A, P("x^4 + 2x^5"));
    CHECK(in.member);
    CHECK(in.coords.at(4) == Q.one());
    CHECK(in.conductor.isZero());
    CHECK_FALSE(membership(A, P("x^5")).member);
    const auto cond = membership(A, P("x^6"));
    CHECK(cond.member);
    CHECK(cond.conductor.coords()[0] == P("1"));
    const auto mixed = membership(A, P("3 + 2x^2 + 2x^3 + x^9"));
    CHECK(mixed.member);
    CHECK(mixed.coords.at(0) == Q.fromInt(3));
    CHECK(mixed.coords.at(2) == Q.fromInt(2));
}

TEST_CASE("structure constants") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    const auto rules = structureConstants(A);
    bool seen = false;
    for (const auto& r : rules)
        if (r.g1 == 2 && r.g2 == 2) {
            seen = true;
            CHECK_FALSE(r.vanishes);
            CHECK(r.mu.empty());
        }
    CHECK(seen);
    CHECK(A.lambda(4, 5) == A.lambda(2, 3) * Q.fromInt(2));

    for (const auto& r : structureConstants(monomialAlgebra(Q, Gamma(14, {4, 6, 8, 10, 12}))))
        for (const auto& [rho, mu] : r.mu) CHECK(mu.isZero());
    for (const auto& r : structureConstants(monomialAlgebra(Q, Gamma(14, {4, 6, 8, 10, 12}))))
        if (r.g1 == 4 && r.g2 == 10) CHECK(r.vanishes);
}

TEST_CASE("structure constants by formula equal direct multiplication") {
    for (std::uint64_t p : {0, 3, 7}) {
        FieldSpec F(p);
        for (int m = 4; m <= 14; ++m)
            for (const auto& A : corpus::randomAlgebras(F, m, 6, 400 + m)) {
                CHECK(structureConstantsByFormula(A) == structureConstantsDirect(A));
                CHECK(satisfiesProductIdentities(A));
                for (const auto& r : structureConstantsDirect(A)) {
                    const TruncPoly prod = mulInF(A.f(r.g1), A.f(r.g2));
                    if (r.vanishes) {
                        CHECK(prod.isZero());
                        continue;
                    }
                    TruncPoly rhs = A.f(r.g1 + r.g2);
                    for (const auto& [rho, mu] : r.mu) rhs += A.f(rho) * mu;
                    CHECK(prod == rhs);
                }
            }
    }
}

TEST_CASE("powers and their coordinates") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    const auto g = structure(A.gamma());
    const auto e = expandPower(A, g, {1});
    CHECK(e.value == A.f(2));
    const auto sq = expandPower(A, g, {2});
    CHECK(sq.value.toPoly() == P("x^4 + 2x^5"));
    CHECK(sq.degree == 4);
    CHECK(sq.coords.at(4) == Q.one());
    CHECK(sq.coords.size() == 1);

    const auto M = monomialAlgebra(Q, Gamma(14, {4, 6, 8, 10, 12}));
    const auto gm = structure(M.gamma());
    const auto cube = expandPower(M, gm, {3, 0});
    CHECK(cube.value.toPoly() == P("x^12"));
    CHECK(cube.coords.at(12) == Q.one());
    CHECK_THROWS_AS(expandPower(M, gm, {0, 0}), ValidationError);
}

TEST_CASE("power coordinates reproduce the power") {
    for (int m = 5; m <= 14; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 5, 500 + m)) {
            if (A.gamma().empty()) continue;
            const auto g = structure(A.gamma());
            for (int x : A.gamma().members())
                for (const auto& a : g.rel.at(x)) {
                    const auto e = expandPower(A, g, a);
                    TruncPoly sum(Q, static_cast<std::size_t>(m));
                    for (const auto& [gp, c] : e.coords) sum += A.f(gp) * c;
                    CHECK(sum == e.value);
                    CHECK(e.coords.at(x) == Q.one());
                    CHECK(powerInKx(A, g, a).truncate(static_cast<std::size_t>(m)) == e.value);
                }
        }
}

TEST_CASE("eta: basis change and its inverse") {
    {
        const auto M = monomialAlgebra(Q, Gamma(12, {4, 6, 8, 10}));
        const auto g = structure(M.gamma());
        for (const auto& [k, v] : etaCoefficients(M, g)) CHECK(v.isZero());
    }
    {
        const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
        // a(4) = (2) and f_2 = f^(1), f_4 = f^(2): every eta vanishes.
        for (const auto& [k, v] : etaCoefficients(A, structure(A.gamma()))) CHECK(v.isZero());
    }
    for (std::uint64_t p : {0, 5}) {
        FieldSpec F(p);
        for (int m = 5; m <= 14; ++m)
            for (const auto& A : corpus::randomAlgebras(F, m, 5, 600 + m)) {
                if (A.gamma().empty()) continue;
                const auto g = structure(A.gamma());
                const auto eta = etaCoefficients(A, g);
                CHECK(eta == etaBySolve(A, g));
                const Matrix C = basisChangeMatrix(A, g);
                const std::size_t n = C.size();
                Matrix Cinv = identity(n, F);
                const auto& mem = A.gamma().members();
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (auto it = eta.find({mem[c], mem[r]}); it != eta.end()) Cinv[r][c] = it->second;
                CHECK(multiply(C, Cinv, F) == identity(n, F));
                for (int x : mem) {
                    TruncPoly rhs = expandPower(A, g, g.a(x)).value;
                    for (int y : A.gamma().gammaAfter(x))
                        if (auto it = eta.find({x, y}); it != eta.end()) rhs += expandPower(A, g, g.a(y)).value * it->second;
                    CHECK(rhs == A.f(x));
                }
            }
    }
}

TEST_CASE("theta on Gamma = {4,6,8,10,12}") {
    const Gamma G(14, {4, 6, 8, 10, 12});
    const auto g = structure(G);
    const auto M = monomialAlgebra(Q, G);
    for (const auto& [k, v] : thetaCoefficients(M, g, 12, {3, 0})) CHECK(v.isZero());

    LambdaTable tails;
    tails[{4, 5}] = Q.one();
    tails[{6, 7}] = Q.parse("3/2");
    const auto A = fromIndecomposables(Q, G, tails);
    CHECK(thetaCoefficients(A, g, 12, {3, 0}).empty());
    const auto a = expandPower(A, g, {3, 0}).value;
    const auto b = expandPower(A, g, {0, 2}).value;
    CHECK(a[13] == b[13]);
    CHECK(a[13] == Q.fromInt(3));
    CHECK(a == b);
    CHECK_THROWS_AS(thetaCoefficients(A, g, 12, {0, 2}), ValidationError);
    CHECK_THROWS_AS(thetaCoefficients(A, g, 10, {1, 1}), ValidationError);
}

TEST_CASE("theta: closed form, recursion and dense solve agree") {
    for (std::uint64_t p : {0, 3}) {
        FieldSpec F(p);
        for (const auto& G : corpus::generalGammas(14, 17))
            for (const auto& A : corpus::randomAlgebrasOn(F, G, 3, 700 + G.m())) {
                const auto g = structure(A.gamma());
                for (int x : g.decGe2)
                    for (const auto& b : g.rel.at(x)) {
                        if (b == g.a(x)) continue;
                        const auto th = thetaClosedForm(A, g, x, b);
                        CHECK(th == thetaByRecursion(A, g, x, b));
                        CHECK(th == thetaBySolve(A, g, x, b));
                        TruncPoly rhs = expandPower(A, g, g.a(x)).value;
                        for (const auto& [y, c] : th) rhs += expandPower(A, g, g.a(y)).value * c;
                        CHECK(rhs == expandPower(A, g, b).value);
                    }
            }
    }
}

TEST_CASE("bar dimension is 1 + |Gamma|") {
    for (int m = 4; m <= 12; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 6, 800 + m)) {
            CHECK(A.barDimension() == 1 + A.gamma().size());
            std::vector<oracle::QVec> gens;
            for (int x : A.gamma().members()) gens.push_back(toQVec(A.f(x)));
            CHECK(oracle::naiveCanonicalBasis(m, gens).size() + 1 == A.barDimension());
        }
}

TEST_CASE("torus action") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3 + x^5")});
    const auto B = applyTorus(A, Q.fromInt(2));
    CHECK(B.lambda(2, 3) == Q.fromInt(2));
    CHECK(B.lambda(2, 5) == Q.fromInt(8));
    CHECK(applyTorus(B, Q.parse("1/2")) == A);
}

TEST_CASE("families") {
    {
        const auto e = evenExtremal(Q, 6);
        CHECK(e.algebra.gamma() == Gamma(6, {2, 4}));
        CHECK(e.algebra.f(2).toPoly() == P("x^2 + x^5"));
        CHECK(e.algebra.f(4).toPoly() == P("x^4"));
        CHECK(e.predictedOrder == 3);
    }
    {
        const auto e = familyAL(Q, 6, 3);
        CHECK(e.generator == P("x^2 + x^5"));
        CHECK(e.algebra == evenExtremal(Q, 6).algebra);
    }
    {
        const auto e = familyAGammaL(Q, Gamma(6, {2, 4}), 2, 1);
        CHECK(e.generator == P("x^2 + x^3"));
        CHECK(e.algebra.gamma() == Gamma(6, {2, 4}));
        CHECK(e.predictedOrder == 1);
    }
    {
        const auto e = oddExtremal(Q, 9);
        CHECK(e.algebra.gamma() == Gamma(9, {3, 6}));
        CHECK(e.predictedOrder == 5);
    }
    CHECK_THROWS_AS(familyAL(Q, 7, 3), ValidationError);      // 3 | 6
    CHECK_THROWS_AS(familyAGammaL(Q, Gamma(6, {2, 4}), 2, 2), ValidationError);
    CHECK_THROWS_AS(familyAI(Q, 7, 2), ValidationError);
    CHECK_THROWS_AS(evenExtremal(Q, 7), ValidationError);
    CHECK((parseFamilyKind("even-extremal") == FamilyKind::EvenExtremal));
    CHECK_THROWS_AS(parseFamilyKind("nope"), ValidationError);
}

TEST_CASE("A_i family over its parameter range") {
    int built = 0;
    for (int m = 4; m <= 40; ++m)
        for (int i = 2; 2 * i <= m - 1; ++i) {
            if ((m - 1) % i != 0) continue;
            const int n = (m - 1) / i - 1;
            if (n < 2 || (m - 1) % n == 0 || (m - 2) % n == 0) {
                CHECK_THROWS_AS(familyAI(Q, m, i), ValidationError);
                continue;
            }
            const auto e = familyAI(Q, m, i);
            ++built;
            CHECK(e.predictedOrder == static_cast<std::uint64_t>((i - 1) * (m - 1) / i));
            CHECK(e.algebra.f(n).toPoly() == Poly::monomial(Q, n) + Poly::monomial(Q, m - 2));
            for (int j = 2; j * n < m - 1; ++j) CHECK(e.algebra.f(j * n).toPoly() == Poly::monomial(Q, j * n));
        }
    CHECK(built > 0);
}
