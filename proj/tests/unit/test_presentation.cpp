#include <doctest.h>

#include "coartin/presentation.hpp"
#include "corpus.hpp"

using namespace coartin;

namespace {

const FieldSpec Q;

Poly P(const char* s) { return parsePoly(s, Q); }

std::size_t countKind(const Presentation& p, RelationKind k) {
    std::size_t n = 0;
    for (const auto& r : p.relations) n += r.kind == k;
    return n;
}

void checkAll(const Presentation& p) {
    for (const auto& r : p.relations) CHECK(validateRelation(p, r));
}

}  // namespace

TEST_CASE("empty Gamma") {
    const auto A = fromGenerators(Q, 3, {});
    const auto bar = present(A, Target::Bar, Style::Raw);
    CHECK((bar.tag == CaseTag::EmptyGamma));
    CHECK(bar.generators.empty());
    CHECK(quotientDimension(bar) == 1);

    const auto full = present(A, Target::Full, Style::Raw);
    REQUIRE(full.generators.size() == 3);
    CHECK(full.generators[0].value == P("x^3"));
    CHECK(full.generators[2].value == P("x^5"));
    checkAll(full);
    bool found = false;
    for (const auto& r : full.relations) {
        if (r.lhs[0].exps != Exponent{0, 1, 1}) continue;
        found = true;
        REQUIRE(r.rhs.size() == 1);
        CHECK(r.rhs[0].exps == Exponent{3, 0, 0});  // x^4 x^5 = (x^3)^2 x^3
    }
    CHECK(found);
    CHECK(full.relations.size() == 6);
}

TEST_CASE("single indecomposable") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    const auto bar = present(A, Target::Bar, Style::Irredundant);
    CHECK((bar.tag == CaseTag::SingleInd));
    REQUIRE(bar.generators.size() == 1);
    CHECK(bar.generators[0].name == "f2");
    REQUIRE(bar.relations.size() == 1);
    CHECK(bar.relations[0].lhs[0].exps == Exponent{3});
    CHECK(relationToText(bar, bar.relations[0]) == "f2^3 = 0");
    checkAll(bar);

    const auto full = present(A, Target::Full, Style::Irredundant);
    checkAll(full);
    const Relation& r = full.relations[0];
    REQUIRE(r.bracket.has_value());
    CHECK(r.bracket->expand() == P("x^6 + 3x^7 + 3x^8 + x^9"));
}

TEST_CASE("single indecomposable power is floor((m-1)/nu) + 1") {
    for (int m = 4; m <= 14; ++m)
        for (const auto& A : corpus::randomAlgebras(Q, m, 6, 900 + m)) {
            if (A.gamma().empty()) continue;
            const auto g = structure(A.gamma());
            if (g.s() != 1) continue;
            const auto p = present(A, Target::Bar, Style::Irredundant);
            REQUIRE(p.relations.size() == 1);
            CHECK(p.relations[0].lhs[0].exps[0] == (m - 1) / g.ind[0] + 1);
        }
}

TEST_CASE("no decomposable with two representations") {
    const auto A = fromGenerators(Q, 8, {P("x^3 + x^4"), P("x^5 + 2x^7")});
    CHECK(A.gamma() == Gamma(8, {3, 5, 6}));
    const auto p = present(A, Target::Bar, Style::Irredundant);
    CHECK((p.tag == CaseTag::NoDec2));
    CHECK(p.exchangeCount == 0);
    CHECK(countKind(p, RelationKind::Power) == 3);
    checkAll(p);
    CHECK(quotientDimension(p) == 4);
}

TEST_CASE("general case on Gamma = {4,6,8,10,12}") {
    const Gamma G(14, {4, 6, 8, 10, 12});
    LambdaTable tails;
    tails[{4, 5}] = Q.one();
    tails[{6, 7}] = Q.parse("3/2");
    const auto A = fromIndecomposables(Q, G, tails);
    const auto p = present(A, Target::Bar, Style::Irredundant);
    CHECK((p.tag == CaseTag::General));
    CHECK(p.exchangeCount == 1);
    CHECK(countKind(p, RelationKind::Power) == 4);
    const Relation* ex = nullptr;
    for (const auto& r : p.relations)
        if (r.kind == RelationKind::Exchange) ex = &r;
    REQUIRE(ex != nullptr);
    CHECK(ex->lhs[0].exps == Exponent{3, 0});
    CHECK(ex->rhs[0].exps == Exponent{0, 2});
    CHECK(relationToText(p, *ex) == "f4^3 = f6^2");
    checkAll(p);
    CHECK(quotientDimension(p) == 6);

    const auto full = present(A, Target::Full, Style::Irredundant);
    checkAll(full);
    CHECK((present(monomialAlgebra(Q, G), Target::Bar, Style::Irredundant).tag == CaseTag::Monomial));
}

TEST_CASE("soundness and completeness over random algebras") {
    for (std::uint64_t p : {0, 5}) {
        FieldSpec F(p);
        for (int m = 4; m <= 11; ++m)
            for (const auto& A : corpus::randomAlgebras(F, m, 5, 1000 + m))
                for (auto style : {Style::Raw, Style::Irredundant, Style::Structure}) {
                    const auto bar = present(A, Target::Bar, style);
                    checkAll(bar);
                    CHECK(quotientDimension(bar) == A.barDimension());
                    const auto full = present(A, Target::Full, style);
                    checkAll(full);
                    for (const auto& r : full.relations) {
                        if (r.kind == RelationKind::Product && r.rhs.empty()) continue;
                        if (r.bracket) CHECK(r.bracket->m() == static_cast<std::size_t>(m));
                    }
                }
    }
}

TEST_CASE("general Gammas: raw and irredundant give the same quotient, and no exchange relation is redundant") {
    for (const auto& G : corpus::generalGammas(14, 16))
        for (const auto& A : corpus::randomAlgebrasOn(Q, G, 2, 1100 + G.m())) {
            const auto raw = present(A, Target::Bar, Style::Raw);
            const auto irr = present(A, Target::Bar, Style::Irredundant);
            checkAll(raw);
            checkAll(irr);
            CHECK(raw.exchangeCount >= irr.exchangeCount);
            CHECK(irr.exchangeCount == relationBasis(structure(G)).t);
            CHECK(quotientDimension(raw) == 1 + G.size());
            CHECK(quotientDimension(irr) == 1 + G.size());
            for (std::size_t k = 0; k < irr.relations.size(); ++k) {
                if (irr.relations[k].kind != RelationKind::Exchange) continue;
                Presentation cut = irr;
                cut.relations.erase(cut.relations.begin() + static_cast<long>(k));
                CHECK(quotientDimension(cut) > 1 + G.size());
            }
            checkAll(present(A, Target::Full, Style::Raw));
            checkAll(present(A, Target::Full, Style::Irredundant));
        }
}

TEST_CASE("a tampered relation fails validation") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    auto full = present(A, Target::Full, Style::Irredundant);
    Relation r = full.relations[0];
    r.bracket = splitConductor(P("x^6"), 6).second;
    CHECK_FALSE(validateRelation(full, r));
}

TEST_CASE("text rendering") {
    const auto A = fromGenerators(Q, 6, {P("x^2 + x^3")});
    const auto text = toText(present(A, Target::Bar, Style::Irredundant));
    CHECK(text.find("f2^3 = 0") != std::string::npos);
    CHECK((parseTarget("full") == Target::Full));
    CHECK((parseStyle("raw") == Style::Raw));
    CHECK_THROWS_AS(parseStyle("fancy"), ValidationError);
}
