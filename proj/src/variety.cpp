#include "coartin/variety.hpp"

#include <algorithm>
#include <random>

namespace coartin {

std::string VarietyVariable::name() const { return "l_" + std::to_string(nu) + "_" + std::to_string(j); }

std::vector<VarietyVariable> varietyVariables(const GammaStructure& g) {
    std::vector<VarietyVariable> vars;
    for (int nu : g.ind)
        for (int j : g.gamma.cGammaAfter(nu)) vars.push_back({nu, j});
    return vars;
}

std::vector<std::string> variableNames(const std::vector<VarietyVariable>& vars) {
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(v.name());
    return names;
}

std::string toString(VarietyKind k) {
    switch (k) {
        case VarietyKind::Point: return "point";
        case VarietyKind::AffineSpace: return "affine-space";
        case VarietyKind::General: return "general";
    }
    return "?";
}

namespace {

/// Truncated polynomial in x with SymPoly coefficients.
using SymTrunc = std::vector<SymPoly>;

class SymbolicAlgebra {
public:
    SymbolicAlgebra(const GammaStructure& g, const FieldSpec& F) : g_(g), F_(F), vars_(varietyVariables(g)) {
        const std::size_t n = vars_.size();
        const auto m = static_cast<std::size_t>(g.m());
        for (std::size_t i = 0; i < g.s(); ++i) {
            SymTrunc f(m, SymPoly(F, n));
            f[static_cast<std::size_t>(g.ind[i])] = SymPoly::constant(F, n, F.one());
            for (std::size_t k = 0; k < n; ++k)
                if (vars_[k].nu == g.ind[i]) f[static_cast<std::size_t>(vars_[k].j)] = SymPoly::variable(F, n, k);
            gens_.push_back(std::move(f));
        }
    }

    const std::vector<VarietyVariable>& vars() const { return vars_; }
    std::size_t n() const { return vars_.size(); }

    SymTrunc mul(const SymTrunc& a, const SymTrunc& b) const {
        const std::size_t m = a.size();
        SymTrunc c(m, SymPoly(F_, n()));
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i].isZero()) continue;
            for (std::size_t j = 0; i + j < m; ++j)
                if (!b[j].isZero()) c[i + j] += a[i] * b[j];
        }
        return c;
    }

    const SymTrunc& gen(std::size_t i) const { return gens_[i]; }

    /// f^a, memoized.
    const SymTrunc& power(const Exponent& a) {
        auto it = powers_.find(a);
        if (it != powers_.end()) return it->second;
        SymTrunc result;
        std::size_t i = 0;
        while (i < a.size() && a[i] == 0) ++i;
        if (i == a.size()) throw ValidationError("power: zero exponent");
        Exponent rest = a;
        --rest[i];
        if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; }))
            result = gens_[i];
        else
            result = mul(power(rest), gens_[i]);
        return powers_.emplace(a, std::move(result)).first->second;
    }

    /// Peels h over f^{a(delta)} for delta in Gamma(start) ascending; returns the coefficients.
    std::map<int, SymPoly> peel(SymTrunc& h, int start) {
        std::map<int, SymPoly> coeffs;
        for (int d : g_.gamma.gammaAfter(start)) {
            const SymPoly c = h[static_cast<std::size_t>(d)];
            coeffs.emplace(d, c);
            if (c.isZero()) continue;
            const SymTrunc& f = power(g_.a(d));
            for (std::size_t k = static_cast<std::size_t>(d); k < h.size(); ++k)
                if (!f[k].isZero()) h[k] -= c * f[k];
        }
        return coeffs;
    }

    SymTrunc sub(SymTrunc a, const SymTrunc& b) const {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    }

private:
    const GammaStructure& g_;
    FieldSpec F_;
    std::vector<VarietyVariable> vars_;
    std::vector<SymTrunc> gens_;
    std::map<Exponent, SymTrunc> powers_;
};

void requireGeneralCase(const GammaStructure& g, const char* what) {
    if (g.s() < 2 || g.decGe2.empty())
        throw ValidationError(std::string(what) +
                              " needs |ind| >= 2 and dec>=2 nonempty; this Gamma is an affine space (use affineSpaceCase)");
}

/// Pairs (i, gamma) with nu_i + gamma in Gamma.
template <typename Fn>
void forEachXXPair(const GammaStructure& g, Fn fn) {
    for (std::size_t i = 0; i < g.s(); ++i)
        for (int gam : g.gamma.members()) {
            const int target = g.ind[i] + gam;
            if (!g.gamma.contains(target)) continue;
            fn(i, gam, target);
        }
}

std::string exponentSource(int gam, const Exponent& b) {
    return "gamma=" + std::to_string(gam) + ",b=" + exponentToString(b);
}

void requireHomogeneous(const std::vector<VarietyEquation>& eqs, const std::vector<VarietyVariable>& vars) {
    for (const auto& e : eqs)
        if (!isTorusHomogeneous(e, vars)) throw InternalError("equation from " + e.source + " is not torus-homogeneous");
}

}  // namespace

std::map<std::tuple<int, int, int>, SymPoly> symbolicEta(const GammaStructure& g, const FieldSpec& field) {
    SymbolicAlgebra S(g, field);
    std::map<std::tuple<int, int, int>, SymPoly> out;
    forEachXXPair(g, [&](std::size_t i, int gam, int target) {
        SymTrunc h = S.sub(S.mul(S.gen(i), S.power(g.a(gam))), S.power(g.a(target)));
        for (auto& [d, c] : S.peel(h, target)) out.emplace(std::make_tuple(g.ind[i], gam, d), std::move(c));
    });
    return out;
}

std::map<std::tuple<int, int, Exponent>, SymPoly> symbolicTheta(const GammaStructure& g, const FieldSpec& field) {
    if (g.decGe2.empty()) throw ValidationError("symbolicTheta: dec>=2 is empty");
    SymbolicAlgebra S(g, field);
    std::map<std::tuple<int, int, Exponent>, SymPoly> out;
    for (int gam : g.decGe2)
        for (const auto& b : g.rel.at(gam)) {
            if (b == g.a(gam)) continue;
            SymTrunc h = S.sub(S.power(b), S.power(g.a(gam)));
            for (auto& [d, c] : S.peel(h, gam)) out.emplace(std::make_tuple(gam, d, b), std::move(c));
        }
    return out;
}

std::vector<VarietyEquation> equationsXX(const GammaStructure& g, const FieldSpec& field) {
    requireGeneralCase(g, "equationsXX");
    SymbolicAlgebra S(g, field);
    std::vector<VarietyEquation> eqs;
    forEachXXPair(g, [&](std::size_t i, int gam, int target) {
        Exponent lifted = g.a(gam);
        ++lifted[i];
        if (lifted == g.a(target)) return;
        SymTrunc h = S.sub(S.mul(S.gen(i), S.power(g.a(gam))), S.power(g.a(target)));
        S.peel(h, target);
        for (int j : g.gamma.cGammaAfter(target))
            eqs.push_back({h[static_cast<std::size_t>(j)], j, target,
                           "nu=" + std::to_string(g.ind[i]) + ",gamma=" + std::to_string(gam)});
    });
    requireHomogeneous(eqs, S.vars());
    return eqs;
}

XYSystem equationsXY(const GammaStructure& g, const FieldSpec& field) {
    requireGeneralCase(g, "equationsXY");
    SymbolicAlgebra S(g, field);
    XYSystem sys;
    for (int gam : g.decGe2)
        for (const auto& b : g.rel.at(gam)) {
            if (b == g.a(gam)) continue;
            SymTrunc h = S.sub(S.power(b), S.power(g.a(gam)));
            S.peel(h, gam);
            for (int j : g.gamma.cGammaAfter(gam))
                sys.equations.push_back({h[static_cast<std::size_t>(j)], j, gam, exponentSource(gam, b)});
        }
    requireHomogeneous(sys.equations, S.vars());
    sys.n = S.n();
    sys.l = sys.equations.size();
    sys.dimLowerBound = static_cast<long>(sys.n) - static_cast<long>(sys.l);
    return sys;
}

namespace {

VarietyPresentation skeleton(const Gamma& gamma, const FieldSpec& field, const std::vector<VarietyVariable>& vars) {
    VarietyPresentation V;
    V.gamma = gamma;
    V.field = field;
    V.variables = vars;
    V.nVars = vars.size();
    for (const auto& v : vars) V.torusWeights.emplace(v.name(), v.weight());
    return V;
}

}  // namespace

VarietyPresentation affineSpaceCase(const GammaStructure& g, const FieldSpec& field) {
    if (g.s() >= 2 && !g.decGe2.empty())
        throw ValidationError("affineSpaceCase: |ind| >= 2 and dec>=2 is nonempty; use the XX/XY systems");
    VarietyPresentation V = skeleton(g.gamma, field, varietyVariables(g));
    V.kind = VarietyKind::AffineSpace;
    V.dimLowerBound = static_cast<long>(V.nVars);
    return V;
}

VarietyPresentation variety(const Gamma& gamma, const FieldSpec& field, const std::map<int, Exponent>& overrides) {
    if (gamma.empty()) {
        VarietyPresentation V = skeleton(gamma, field, {});
        V.kind = VarietyKind::Point;
        return V;
    }
    const GammaStructure g = structure(gamma, overrides);
    if (g.s() < 2 || g.decGe2.empty()) return affineSpaceCase(g, field);
    VarietyPresentation V = skeleton(gamma, field, varietyVariables(g));
    V.kind = VarietyKind::General;
    V.equationsXX = equationsXX(g, field);
    XYSystem xy = equationsXY(g, field);
    V.equationsXY = std::move(xy.equations);
    V.lXY = xy.l;
    V.dimLowerBound = xy.dimLowerBound;
    return V;
}

std::vector<VarietyVariable> fixedPointEquations(const GammaStructure& g, int n) {
    if (n < 1) throw ValidationError("fixedPointEquations: n must be >= 1");
    std::vector<VarietyVariable> out;
    for (const auto& v : varietyVariables(g))
        if (v.weight() % n != 0) out.push_back(v);
    return out;
}

bool isTorusHomogeneous(const VarietyEquation& e, const std::vector<VarietyVariable>& vars) {
    for (const auto& [mono, c] : e.poly.terms()) {
        int w = 0;
        for (std::size_t i = 0; i < mono.size(); ++i) w += mono[i] * vars[i].weight();
        if (w != e.weight()) return false;
    }
    return true;
}

std::vector<Scalar> pointOf(const CanonicalAlgebra& A, const std::vector<VarietyVariable>& vars) {
    std::vector<Scalar> p;
    for (const auto& v : vars) p.push_back(A.lambda(v.nu, v.j));
    return p;
}

CanonicalAlgebra algebraAt(const FieldSpec& field, const Gamma& gamma, const std::vector<VarietyVariable>& vars,
                           const std::vector<Scalar>& point) {
    if (point.size() != vars.size()) throw ValidationError("algebraAt: wrong number of coordinates");
    LambdaTable tails;
    for (std::size_t k = 0; k < vars.size(); ++k) tails[{vars[k].nu, vars[k].j}] = point[k];
    CanonicalAlgebra A = fromIndecomposables(field, gamma, tails);
    if (!(pointOf(A, vars) == point)) throw ValidationError("algebraAt: point does not give canonical generators");
    return A;
}

std::vector<std::vector<Scalar>> sampleVarietyPoints(const GammaStructure& g, const FieldSpec& field, int count,
                                                     std::uint64_t seed, int tries) {
    const auto vars = varietyVariables(g);
    const std::size_t n = vars.size();
    std::vector<VarietyEquation> eqs;
    if (g.s() >= 2 && !g.decGe2.empty()) eqs = equationsXY(g, field).equations;
    int maxWeight = 0;
    for (const auto& v : vars) maxWeight = std::max(maxWeight, v.weight());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> grid(-2, 2);
    std::vector<std::vector<Scalar>> out;
    for (int attempt = 0; attempt < tries && static_cast<int>(out.size()) < count; ++attempt) {
        std::vector<Scalar> point(n, field.zero());
        std::vector<bool> known(n, false);
        bool ok = true;
        for (int w = 1; w <= maxWeight && ok; ++w) {
            std::vector<std::size_t> level;
            for (std::size_t k = 0; k < n; ++k)
                if (vars[k].weight() == w) {
                    level.push_back(k);
                    point[k] = field.fromInt(grid(rng));
                }
            // Each weight-w equation is affine in the weight-w variables.
            Matrix M;
            std::vector<Scalar> rhs;
            for (const auto& e : eqs) {
                if (e.weight() != w) continue;
                const SymPoly r = e.poly.partialEvaluate(point, known);
                std::vector<Scalar> row(level.size(), field.zero());
                Scalar c = field.zero();
                for (const auto& [mono, coef] : r.terms()) {
                    auto it = std::find_if(level.begin(), level.end(), [&](std::size_t k) { return mono[k] == 1; });
                    if (it == level.end())
                        c += coef;
                    else
                        row[static_cast<std::size_t>(it - level.begin())] += coef;
                }
                // Residual after the random draw: M (x - draw) = -(M draw + c).
                Scalar atDraw = c;
                for (std::size_t t = 0; t < level.size(); ++t) atDraw += row[t] * point[level[t]];
                M.push_back(std::move(row));
                rhs.push_back(-atDraw);
            }
            if (!M.empty()) {
                auto delta = solve(M, rhs, field);
                if (!delta) {
                    ok = false;
                    break;
                }
                for (std::size_t t = 0; t < level.size(); ++t) point[level[t]] += (*delta)[t];
            }
            for (std::size_t k : level) known[k] = true;
        }
        if (!ok) continue;
        for (const auto& e : eqs)
            if (!e.poly.evaluate(point).isZero()) throw InternalError("sampled point misses equation " + e.source);
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace coartin
