#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coartin/field.hpp"

namespace coartin {

class TruncPoly;

/// Univariate polynomial in K[x], dense, with no trailing zero coefficients.
class Poly {
public:
    explicit Poly(FieldSpec field = {}) : field_(field) {}
    Poly(FieldSpec field, std::vector<Scalar> coeffs);

    static Poly monomial(FieldSpec field, std::size_t degree, const Scalar& c);
    static Poly monomial(FieldSpec field, std::size_t degree) { return monomial(field, degree, field.one()); }

    const FieldSpec& field() const { return field_; }
    bool isZero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient, -1 for zero.
    long lowestDegree() const;

    /// c_j(f); zero beyond the degree.
    Scalar coeff(std::size_t j) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    /// Reduction modulo x^m.
    TruncPoly truncate(std::size_t m) const;

    /// "x^2 + 3x^5" style; `var` names the indeterminate.
    std::string toString(std::string_view var = "x") const;

private:
    void trim();

    FieldSpec field_;
    std::vector<Scalar> c_;
};

/// Element of F_m = K[x]/(x^m): exactly m coefficients, index i for x^i.
class TruncPoly {
public:
    TruncPoly(FieldSpec field, std::size_t m);
    TruncPoly(FieldSpec field, std::size_t m, std::vector<Scalar> coeffs);

    static TruncPoly one(FieldSpec field, std::size_t m);
    static TruncPoly monomial(FieldSpec field, std::size_t m, std::size_t degree);

    const FieldSpec& field() const { return field_; }
    std::size_t m() const { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool isZero() const;
    long lowestDegree() const;

    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    TruncPoly& operator*=(const Scalar& s);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(TruncPoly a, const Scalar& s) { return a *= s; }

    TruncPoly pow(unsigned e) const;

    friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// The representative of degree < m in K[x].
    Poly toPoly() const;
    std::string toString() const { return toPoly().toString(); }

private:
    void requireCompatible(const TruncPoly& o) const;

    FieldSpec field_;
    std::vector<Scalar> c_;
};

/// Product in F_m. Throws ValidationError when the truncation orders differ.
TruncPoly mulInF(const TruncPoly& f, const TruncPoly& g);

/// An element of the conductor x^m K[x] written as sum_i p_i(x^m) x^(m+i),
/// 0 <= i < m. coords[i] is p_i as a polynomial in y = x^m.
class ConductorElement {
public:
    ConductorElement(FieldSpec field, std::size_t m);
    ConductorElement(std::size_t m, std::vector<Poly> coords);

    const FieldSpec& field() const { return field_; }
    std::size_t m() const { return coords_.size(); }
    const std::vector<Poly>& coords() const { return coords_; }
    bool isZero() const;

    Poly expand() const;

    friend bool operator==(const ConductorElement&, const ConductorElement&) = default;

    /// "[ (1 + 3y) x^6 + ... ]" style with y standing for x^m.
    std::string toString() const;

private:
    FieldSpec field_;
    std::vector<Poly> coords_;
};

/// The unique splitting p = pbar + [p] with deg pbar < m and [p] in (x^m).
std::pair<TruncPoly, ConductorElement> splitConductor(const Poly& p, std::size_t m);

/// Coefficient of x^j.
inline Scalar coefficientAt(const Poly& f, std::size_t j) { return f.coeff(j); }

/// Parses "x^2 + 3/2 x^5", "2x^3", "-x", "7", "x^2*3" is rejected.
/// Grammar: poly := term (('+'|'-') term)*; term := [coeff ['*']] ['x' ['^' nat]] | coeff.
Poly parsePoly(std::string_view text, FieldSpec field);

/// One polynomial per nonempty line; lines starting with '#' are skipped.
std::vector<Poly> parsePolyList(std::string_view text, FieldSpec field);

}  // namespace coartin
