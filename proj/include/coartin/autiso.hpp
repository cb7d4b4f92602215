#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coartin/families.hpp"
#include "coartin/subalgebra.hpp"

namespace coartin {

/// gcd of the exponents j >= 1 with u_j != 0; nullopt stands for infinity (u = 1).
/// Throws ValidationError unless the constant term is 1.
std::optional<std::uint64_t> exponentGcd(const TruncPoly& u);

enum class AutKind { FullTorus, Cyclic };

/// Aut_K(A) is either the torus {t_c : x -> cx} or the cyclic group generated
/// by t_c for c a primitive n-th root of unity.
struct AutDescription {
    AutKind kind = AutKind::FullTorus;
    std::uint64_t n = 0;

    std::string generator() const;
    friend bool operator==(const AutDescription&, const AutDescription&) = default;
};

/// Computed over the indecomposables; the gcd over all of Gamma is checked to agree.
AutDescription autGroup(const CanonicalAlgebra& A);
/// gcd over every gamma in Gamma (p-co-prime part in characteristic p); nullopt when monomial.
std::optional<std::uint64_t> autOrderOverAllGamma(const CanonicalAlgebra& A);

/// lambda^k = c.
struct TorusConstraint {
    long k = 0;
    Scalar c;
};

/// Any isomorphism t_lambda satisfies lambda^g = mu. g = 0 means no constraint.
struct IsoWitness {
    bool solvable = false;
    long g = 0;
    Scalar mu;
    std::vector<TorusConstraint> checkedExponents;
    /// Why the algebras fail to be isomorphic; empty when solvable.
    std::string reason;
};

/// Decides whether some lambda in the algebraic closure satisfies every
/// constraint. In characteristic p each k is first replaced by its p-co-prime part.
IsoWitness torusSolve(const FieldSpec& field, const std::vector<TorusConstraint>& constraints);

/// Isomorphism over the algebraic closure of the coefficient field.
IsoWitness isoTest(const CanonicalAlgebra& A, const CanonicalAlgebra& B);

/// A lambda in the base field with lambda^g = mu, if one exists. Over Q this is
/// an exact rational g-th root; over F_p it searches when p is small enough.
std::optional<Scalar> baseFieldLambda(const FieldSpec& field, const IsoWitness& w);
/// Over F_p: whether lambda^g = mu has a solution in F_p^x. Over Q: whether a rational root exists.
bool baseFieldSolvable(const FieldSpec& field, const IsoWitness& w);

struct OrderRealization {
    std::uint64_t l = 0;
    std::uint64_t order = 0;
    Gamma gamma;
    int gammaElement = 0;
    FamilyExample example;
};

/// One A_{gamma l} for each l in L(m); its automorphism order is checked to be l (or l_p).
std::vector<OrderRealization> realizeOrders(int m, const FieldSpec& field);
/// Distinct orders of a realization table.
std::vector<std::uint64_t> realizedOrders(const std::vector<OrderRealization>& table);

/// Random search in A(m, Gamma) for an algebra whose automorphism group has
/// order l (l_p in characteristic p). Tails are supported on j with l | j - nu.
std::optional<CanonicalAlgebra> searchOrderRealization(const Gamma& gamma, std::uint64_t l, const FieldSpec& field,
                                                       int tries, std::uint64_t seed);

}  // namespace coartin
