#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "coartin/errors.hpp"

namespace coartin {

class Scalar;

/// The coefficient field: Q when characteristic is 0, F_p otherwise.
class FieldSpec {
public:
    FieldSpec() = default;

    /// Throws ValidationError unless p is 0 or a prime below 2^31.
    explicit FieldSpec(std::uint64_t characteristic);

    static FieldSpec rationals() { return FieldSpec{}; }

    std::uint64_t characteristic() const { return p_; }
    bool isRational() const { return p_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar fromInt(long v) const;
    Scalar fromRational(const mpq_class& q) const;

    /// Parses "n", "-n", "n/d". In characteristic p the value is reduced mod p;
    /// a denominator divisible by p is rejected.
    Scalar parse(std::string_view text) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    friend class Scalar;
    static FieldSpec unchecked(std::uint64_t p) {
        FieldSpec f;
        f.p_ = p;
        return f;
    }

    std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
public:
    /// Zero of Q.
    Scalar() = default;

    FieldSpec field() const { return FieldSpec::unchecked(p_); }
    std::uint64_t characteristic() const { return p_; }

    bool isZero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool isOne() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Throws ValidationError on zero.
    Scalar inverse() const;

    /// Integer power; negative exponents invert.
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order used only for deterministic containers; not a field order.
    friend bool operator<(const Scalar& a, const Scalar& b);

    /// Rational value (char 0 only).
    const mpq_class& rational() const;
    /// Residue (char p only).
    std::uint64_t residue() const;

    /// "num/den" in characteristic 0, decimal residue in characteristic p.
    std::string toJsonString() const;
    /// Short human form: "3", "-1/2", residue digits.
    std::string toString() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.toString(); }

private:
    friend class FieldSpec;
    void requireSameField(const Scalar& o) const;

    std::uint64_t p_ = 0;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

/// n_p where n = p^s * n_p and p does not divide n_p. Throws on n == 0.
std::uint64_t pCoPrimeDivisor(std::uint64_t n, std::uint64_t p);

/// gcd of a nonempty set of positive integers. Throws on an empty set.
std::uint64_t gcdOfSet(std::span<const std::uint64_t> values);

bool isPrime(std::uint64_t n);

}  // namespace coartin
