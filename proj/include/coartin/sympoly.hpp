#pragma once

#include <map>
#include <string>
#include <vector>

#include "coartin/field.hpp"

namespace coartin {

/// Exponent vector of a monomial in the variables 0..n-1.
using SymMonomial = std::vector<int>;

/// Graded lexicographic: total degree first, then lexicographic on the exponents.
struct GradedLex {
    bool operator()(const SymMonomial& a, const SymMonomial& b) const;
};

/// Multivariate polynomial over a FieldSpec in a fixed number of variables.
/// No zero coefficients are stored.
class SymPoly {
public:
    explicit SymPoly(FieldSpec field = {}, std::size_t nvars = 0) : field_(field), n_(nvars) {}
    static SymPoly constant(FieldSpec field, std::size_t nvars, const Scalar& c);
    static SymPoly variable(FieldSpec field, std::size_t nvars, std::size_t index);

    const FieldSpec& field() const { return field_; }
    std::size_t variableCount() const { return n_; }
    const std::map<SymMonomial, Scalar, GradedLex>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    int totalDegree() const;
    /// Coefficient of a monomial; zero when absent.
    Scalar coefficient(const SymMonomial& mono) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Scalar& s);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Scalar& s) { return a *= s; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly operator-() const { return *this * -field_.one(); }

    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Substitutes values for the variables flagged in `known`; the rest stay symbolic.
    SymPoly partialEvaluate(const std::vector<Scalar>& point, const std::vector<bool>& known) const;

    /// Highest term first; `names` supplies one name per variable.
    std::string toString(const std::vector<std::string>& names) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void add(const SymMonomial& mono, const Scalar& c);

    FieldSpec field_;
    std::size_t n_ = 0;
    std::map<SymMonomial, Scalar, GradedLex> terms_;
};

}  // namespace coartin
