#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coartin/field.hpp"
#include "coartin/linalg.hpp"
#include "coartin/poly.hpp"
#include "coartin/semigroup.hpp"

namespace coartin {

/// lambda_{gamma, delta} keyed by (gamma, delta), delta in C(gamma).
using LambdaTable = std::map<std::pair<int, int>, Scalar>;

/// An algebra A in A(m, Gamma), stored through the canonical basis
/// f_gamma = x^gamma + sum_{delta in C(gamma)} lambda_{gamma delta} x^delta of A/x^m K[x].
class CanonicalAlgebra {
public:
    /// Missing entries are zero. Throws ValidationError if a key is outside
    /// {(gamma, delta) : delta in C(gamma)} or the span of {1, f_gamma} is not closed.
    static CanonicalAlgebra fromLambda(FieldSpec field, Gamma gamma, const LambdaTable& table);

    const FieldSpec& field() const { return field_; }
    int m() const { return gamma_.m(); }
    const Gamma& gamma() const { return gamma_; }

    /// Every (gamma, delta) with delta in C(gamma), zeros included.
    const LambdaTable& lambdaTable() const { return lambda_; }
    Scalar lambda(int g, int d) const;

    /// Canonical element f_gamma in F_m.
    const TruncPoly& f(int g) const;
    /// u_gamma = 1 + sum lambda_{gamma delta} x^(delta - gamma), as an element of F_m.
    TruncPoly unit(int g) const;

    bool isMonomial() const;
    /// dim_K of A/x^m K[x].
    std::size_t barDimension() const { return 1 + gamma_.size(); }

    friend bool operator==(const CanonicalAlgebra& a, const CanonicalAlgebra& b) {
        return a.field_ == b.field_ && a.gamma_ == b.gamma_ && a.lambda_ == b.lambda_;
    }

private:
    CanonicalAlgebra(FieldSpec field, Gamma gamma, LambdaTable lambda);

    FieldSpec field_;
    Gamma gamma_;
    LambdaTable lambda_;
    std::map<int, TruncPoly> f_;
};

/// The subalgebra generated by gens and x^m K[x], in canonical form.
/// Throws NotInAmError when x or x^(m-1) lands in A/x^m K[x].
CanonicalAlgebra fromGenerators(FieldSpec field, int m, const std::vector<Poly>& gens);

/// K + sum K x^gamma + x^m K[x].
CanonicalAlgebra monomialAlgebra(FieldSpec field, const Gamma& gamma);

/// The algebra generated by f_nu = x^nu + sum_j tails[(nu, j)] x^j over
/// nu in ind(Gamma). Throws ValidationError when its semigroup is not Gamma.
CanonicalAlgebra fromIndecomposables(FieldSpec field, const Gamma& gamma, const LambdaTable& tails);

/// t_c(A) for x -> c x.
CanonicalAlgebra applyTorus(const CanonicalAlgebra& A, const Scalar& c);

struct Membership {
    bool member = false;
    /// Coordinates over {1, f_gamma}; key 0 is the constant.
    std::map<int, Scalar> coords;
    ConductorElement conductor;
};

Membership membership(const CanonicalAlgebra& A, const Poly& p);

/// Coordinates of an element of F_m over {1, f_gamma}, nullopt if outside A/x^m K[x].
std::optional<std::map<int, Scalar>> barCoordinates(const CanonicalAlgebra& A, const TruncPoly& v);

struct ProductRule {
    int g1 = 0;
    int g2 = 0;
    /// g1 + g2 >= m-1: the product is zero in F_m.
    bool vanishes = false;
    /// mu_{g1, g2; rho} for rho in Gamma(g1 + g2).
    std::map<int, Scalar> mu;

    friend bool operator==(const ProductRule&, const ProductRule&) = default;
};

/// f_g1 f_g2 = f_{g1+g2} + sum mu f_rho for all g1 <= g2, by the closed
/// formula, checked against direct multiplication.
std::vector<ProductRule> structureConstants(const CanonicalAlgebra& A);
std::vector<ProductRule> structureConstantsByFormula(const CanonicalAlgebra& A);
std::vector<ProductRule> structureConstantsDirect(const CanonicalAlgebra& A);

/// lambda_{g1, g2; xi}: the x^xi coefficient of f_g1 f_g2 for xi in C(g1 + g2).
Scalar productTailCoefficient(const CanonicalAlgebra& A, int g1, int g2, int xi);

/// Checks lambda_{g1+g2, delta} = lambda_{g1,g2;delta} - sum mu lambda_{rho delta}
/// for every pair with g1 + g2 < m-1.
bool satisfiesProductIdentities(const CanonicalAlgebra& A);

struct PowerExpansion {
    TruncPoly value;
    int degree = 0;  // a . nu
    /// c_gamma'(f^a) for gamma' in {a.nu} u Gamma(a.nu); empty when a.nu >= m.
    std::map<int, Scalar> coords;
};

/// f^a = prod f_{nu_i}^{a_i} in F_m. Requires a != 0.
PowerExpansion expandPower(const CanonicalAlgebra& A, const GammaStructure& g, const Exponent& a);

/// The same product taken in K[x], without truncation.
Poly powerInKx(const CanonicalAlgebra& A, const GammaStructure& g, const Exponent& a);

/// Column gamma holds the canonical coordinates of f^{a(gamma)}; rows and
/// columns follow Gamma in increasing order.
Matrix basisChangeMatrix(const CanonicalAlgebra& A, const GammaStructure& g);

/// eta_{gamma gamma'} for gamma' in Gamma(gamma), from the inverse of the
/// basis-change matrix as a Neumann series.
std::map<std::pair<int, int>, Scalar> etaCoefficients(const CanonicalAlgebra& A, const GammaStructure& g);
/// The same coefficients by peeling off f^{a(gamma')} one degree at a time.
std::map<std::pair<int, int>, Scalar> etaBySolve(const CanonicalAlgebra& A, const GammaStructure& g);

/// theta_{gamma, gamma'; b} for gamma' in Gamma(gamma): closed form, checked
/// against the recursion.
std::map<int, Scalar> thetaCoefficients(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                        const Exponent& b);
std::map<int, Scalar> thetaClosedForm(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                      const Exponent& b);
std::map<int, Scalar> thetaByRecursion(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                       const Exponent& b);
/// Dense linear solve in the basis {f^{a(gamma')}}.
std::map<int, Scalar> thetaBySolve(const CanonicalAlgebra& A, const GammaStructure& g, int gamma, const Exponent& b);

}  // namespace coartin
