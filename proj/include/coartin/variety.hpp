#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coartin/subalgebra.hpp"
#include "coartin/sympoly.hpp"

namespace coartin {

/// The coordinate lambda_{nu, j} of f_nu, nu in ind(Gamma), j in C(nu).
struct VarietyVariable {
    int nu = 0;
    int j = 0;
    /// "l_<nu>_<j>".
    std::string name() const;
    /// Torus weight j - nu.
    int weight() const { return j - nu; }
    friend bool operator==(const VarietyVariable&, const VarietyVariable&) = default;
};

/// Ordered by the index of nu in ind(Gamma), then by j.
std::vector<VarietyVariable> varietyVariables(const GammaStructure& g);
std::vector<std::string> variableNames(const std::vector<VarietyVariable>& vars);

/// c_j of an expression whose leading monomial has degree `degree`.
struct VarietyEquation {
    SymPoly poly;
    int j = 0;
    int degree = 0;
    /// "nu=4,gamma=8" for XX, "gamma=12,b=(3,0)" for XY.
    std::string source;
    /// Torus weight every monomial must carry: j - degree.
    int weight() const { return j - degree; }
};

/// eta_{nu_i, a(gamma); delta} for nu_i + gamma in Gamma and delta in Gamma(nu_i + gamma),
/// keyed by (nu_i, gamma, delta).
std::map<std::tuple<int, int, int>, SymPoly> symbolicEta(const GammaStructure& g, const FieldSpec& field);

/// theta_{gamma, gamma'; b}, keyed by (gamma, gamma', b). Requires dec>=2 nonempty.
std::map<std::tuple<int, int, Exponent>, SymPoly> symbolicTheta(const GammaStructure& g, const FieldSpec& field);

/// Requires |ind| >= 2 and dec>=2 nonempty.
std::vector<VarietyEquation> equationsXX(const GammaStructure& g, const FieldSpec& field);

struct XYSystem {
    std::vector<VarietyEquation> equations;
    std::size_t n = 0;
    std::size_t l = 0;
    long dimLowerBound = 0;
};

/// Requires |ind| >= 2 and dec>=2 nonempty. Every (gamma, b, j) contributes
/// one entry, including entries that vanish identically.
XYSystem equationsXY(const GammaStructure& g, const FieldSpec& field);

enum class VarietyKind { Point, AffineSpace, General };
std::string toString(VarietyKind k);

struct VarietyPresentation {
    VarietyKind kind = VarietyKind::Point;
    Gamma gamma{2};
    FieldSpec field;
    std::vector<VarietyVariable> variables;
    std::vector<VarietyEquation> equationsXX;
    std::vector<VarietyEquation> equationsXY;
    std::size_t nVars = 0;
    std::size_t lXY = 0;
    long dimLowerBound = 0;
    std::map<std::string, int> torusWeights;
};

/// Zero equations. Requires |ind| = 1 or dec>=2 empty.
VarietyPresentation affineSpaceCase(const GammaStructure& g, const FieldSpec& field);
/// Dispatches on the case: Gamma empty is a point.
VarietyPresentation variety(const Gamma& gamma, const FieldSpec& field, const std::map<int, Exponent>& overrides = {});

/// Variables that vanish on the fixed locus of C_n: n does not divide j - nu.
std::vector<VarietyVariable> fixedPointEquations(const GammaStructure& g, int n);

bool isTorusHomogeneous(const VarietyEquation& e, const std::vector<VarietyVariable>& vars);

/// Coordinates of A in the variable order of `vars`.
std::vector<Scalar> pointOf(const CanonicalAlgebra& A, const std::vector<VarietyVariable>& vars);
/// The algebra with f_nu = x^nu + sum lambda x^j. Throws ValidationError when
/// the point is off the variety.
CanonicalAlgebra algebraAt(const FieldSpec& field, const Gamma& gamma, const std::vector<VarietyVariable>& vars,
                           const std::vector<Scalar>& point);

/// Points on the XY system, drawn weight by weight: variables of weight w are
/// drawn from {-2..2}, then the weight-w equations (affine in those variables
/// once lower weights are fixed) are solved exactly. Inconsistent draws are
/// rejected and retried up to `tries` times in total.
std::vector<std::vector<Scalar>> sampleVarietyPoints(const GammaStructure& g, const FieldSpec& field, int count,
                                                     std::uint64_t seed, int tries = 1000);

}  // namespace coartin
