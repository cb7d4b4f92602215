#pragma once

#include <cstdint>
#include <string>

#include "coartin/subalgebra.hpp"

namespace coartin {

enum class FamilyKind { AGammaL, AL, AI, EvenExtremal, OddExtremal };

std::string toString(FamilyKind k);
FamilyKind parseFamilyKind(const std::string& s);

/// An algebra K + sum K g^i + x^m K[x] with its single generator and the
/// order of its automorphism group predicted from the construction.
struct FamilyExample {
    FamilyKind kind;
    Poly generator;
    CanonicalAlgebra algebra;
    /// l in characteristic 0, l_p in characteristic p.
    std::uint64_t predictedOrder = 0;
};

/// g = x^gamma (1 + x^l) with gamma in Gamma, gamma + l not in Gamma, gamma + l <= m-1.
FamilyExample familyAGammaL(FieldSpec field, const Gamma& gamma, int g, int l);

/// g_l = x^(m-1-l) + x^(m-1), 1 <= l <= m-3, m-1-l not dividing m-1.
FamilyExample familyAL(FieldSpec field, int m, int l);

/// f_i = x^n(i) + x^(m-2) with n(i) = (m-1)/i - 1, for i | m-1, 2 <= i <= (m-1)/2,
/// n(i) >= 2 dividing neither m-1 nor m-2. The order is l(i) = (i-1)(m-1)/i.
FamilyExample familyAI(FieldSpec field, int m, int i);

/// x^2 (1 + x^(m-3)) for even m >= 4.
FamilyExample evenExtremal(FieldSpec field, int m);

/// x^3 (1 + x^(m-4)) for odd m >= 5 with 3 not dividing m-1.
FamilyExample oddExtremal(FieldSpec field, int m);

/// p-co-prime part of n in characteristic p, n itself in characteristic 0.
std::uint64_t reduceOrder(std::uint64_t n, const FieldSpec& field);

}  // namespace coartin
