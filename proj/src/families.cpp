#include "coartin/families.hpp"

namespace coartin {

std::string toString(FamilyKind k) {
    switch (k) {
        case FamilyKind::AGammaL: return "agl";
        case FamilyKind::AL: return "al";
        case FamilyKind::AI: return "ai";
        case FamilyKind::EvenExtremal: return "even-extremal";
        case FamilyKind::OddExtremal: return "odd-extremal";
    }
    return "?";
}

FamilyKind parseFamilyKind(const std::string& s) {
    for (auto k : {FamilyKind::AGammaL, FamilyKind::AL, FamilyKind::AI, FamilyKind::EvenExtremal,
                   FamilyKind::OddExtremal})
        if (toString(k) == s) return k;
    throw ValidationError("unknown family '" + s + "' (agl, al, ai, even-extremal, odd-extremal)");
}

std::uint64_t reduceOrder(std::uint64_t n, const FieldSpec& field) {
    return field.isRational() ? n : pCoPrimeDivisor(n, field.characteristic());
}

namespace {

Poly binomial(const FieldSpec& F, int lo, int hi) {
    return Poly::monomial(F, static_cast<std::size_t>(lo)) + Poly::monomial(F, static_cast<std::size_t>(hi));
}

/// Builds the algebra generated by x^step + x^tail and checks that its
/// semigroup is the multiples of step below m-1 with canonical basis
/// {g, x^(j step) : j >= 2}. For A_{gamma l} only f_step = g is asserted.
FamilyExample build(FamilyKind kind, const FieldSpec& F, int m, int step, int tail, std::uint64_t order) {
    const bool onlyFirst = kind == FamilyKind::AGammaL;
    const Poly g = binomial(F, step, tail);
    CanonicalAlgebra A = fromGenerators(F, m, {g});
    std::vector<int> expected;
    for (int v = step; v < m - 1; v += step) expected.push_back(v);
    if (A.gamma().members() != expected)
        throw InternalError(toString(kind) + ": semigroup " + A.gamma().toString() + " differs from the multiples of " +
                            std::to_string(step));
    for (int v : expected) {
        if (onlyFirst && v != step) continue;
        const TruncPoly want = v == step ? g.truncate(static_cast<std::size_t>(m))
                                         : TruncPoly::monomial(F, static_cast<std::size_t>(m), static_cast<std::size_t>(v));
        if (!(A.f(v) == want)) throw InternalError(toString(kind) + ": unexpected canonical element f_" + std::to_string(v));
    }
    return FamilyExample{kind, g, std::move(A), reduceOrder(order, F)};
}

}  // namespace

FamilyExample familyAGammaL(FieldSpec field, const Gamma& gamma, int g, int l) {
    const int m = gamma.m();
    if (!gamma.contains(g)) throw ValidationError("A_{gamma l}: gamma = " + std::to_string(g) + " is not in Gamma");
    if (l < 1) throw ValidationError("A_{gamma l}: l must be >= 1");
    if (g + l > m - 1) throw ValidationError("A_{gamma l}: gamma + l must be <= m-1");
    if (gamma.contains(g + l)) throw ValidationError("A_{gamma l}: gamma + l must not lie in Gamma");
    return build(FamilyKind::AGammaL, field, m, g, g + l, static_cast<std::uint64_t>(l));
}

FamilyExample familyAL(FieldSpec field, int m, int l) {
    if (m < 4) throw ValidationError("A_l: m must be >= 4");
    if (l < 1 || l > m - 3) throw ValidationError("A_l: l must satisfy 1 <= l <= m-3");
    if ((m - 1) % (m - 1 - l) == 0) throw ValidationError("A_l: m-1-l must not divide m-1");
    return build(FamilyKind::AL, field, m, m - 1 - l, m - 1, static_cast<std::uint64_t>(l));
}

FamilyExample familyAI(FieldSpec field, int m, int i) {
    if (m < 4) throw ValidationError("A_i: m must be >= 4");
    if (i < 2 || 2 * i > m - 1) throw ValidationError("A_i: i must satisfy 2 <= i <= (m-1)/2");
    if ((m - 1) % i != 0) throw ValidationError("A_i: i must divide m-1");
    const int n = (m - 1) / i - 1;
    if (n < 2) throw ValidationError("A_i: n(i) = (m-1)/i - 1 must be >= 2");
    if ((m - 1) % n == 0) throw ValidationError("A_i: n(i) must not divide m-1");
    if ((m - 2) % n == 0) throw ValidationError("A_i: n(i) must not divide m-2");
    return build(FamilyKind::AI, field, m, n, m - 2, static_cast<std::uint64_t>((i - 1) * (m - 1) / i));
}

FamilyExample evenExtremal(FieldSpec field, int m) {
    if (m < 4 || m % 2 != 0) throw ValidationError("even extremal example needs an even m >= 4");
    return build(FamilyKind::EvenExtremal, field, m, 2, m - 1, static_cast<std::uint64_t>(m - 3));
}

FamilyExample oddExtremal(FieldSpec field, int m) {
    if (m < 5 || m % 2 == 0) throw ValidationError("odd extremal example needs an odd m >= 5");
    if ((m - 1) % 3 == 0) throw ValidationError("odd extremal example needs 3 not dividing m-1");
    return build(FamilyKind::OddExtremal, field, m, 3, m - 1, static_cast<std::uint64_t>(m - 4));
}

}  // namespace coartin
