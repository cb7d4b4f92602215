#include "coartin/subalgebra.hpp"

#include <algorithm>
#include <set>

namespace coartin {

namespace {

/// Row echelon span in F_m with the lowest-degree coefficient as pivot.
class EchelonSpan {
public:
    EchelonSpan(FieldSpec field, std::size_t m) : field_(field), m_(m) {}

    /// Returns the new pivot, or nullopt when v already lies in the span.
    std::optional<std::size_t> insert(TruncPoly v) {
        for (std::size_t d = 0; d < m_; ++d) {
            if (v[d].isZero()) continue;
            auto it = rows_.find(d);
            if (it == rows_.end()) continue;
            v -= it->second * v[d];
        }
        const long low = v.lowestDegree();
        if (low < 0) return std::nullopt;
        const auto p = static_cast<std::size_t>(low);
        v *= v[p].inverse();
        rows_.emplace(p, std::move(v));
        return p;
    }

    const std::map<std::size_t, TruncPoly>& rows() const { return rows_; }

private:
    FieldSpec field_;
    std::size_t m_;
    std::map<std::size_t, TruncPoly> rows_;
};

void requireStructureFor(const CanonicalAlgebra& A, const GammaStructure& g) {
    if (!(g.gamma == A.gamma()))
        throw ValidationError("GammaStructure for " + g.gamma.toString() + " used with an algebra on " +
                              A.gamma().toString());
}

void requireThetaArgs(const GammaStructure& g, int gamma, const Exponent& b) {
    if (std::find(g.decGe2.begin(), g.decGe2.end(), gamma) == g.decGe2.end())
        throw ValidationError(std::to_string(gamma) + " is not in dec(Gamma)>=2");
    const auto& r = g.rel.at(gamma);
    if (std::find(r.begin(), r.end(), b) == r.end())
        throw ValidationError(exponentToString(b) + " is not in Rel(" + std::to_string(gamma) + ")");
    if (b == g.a(gamma)) throw ValidationError("b must differ from a(" + std::to_string(gamma) + ")");
}

}  // namespace

// ---------------------------------------------------------------- CanonicalAlgebra

CanonicalAlgebra::CanonicalAlgebra(FieldSpec field, Gamma gamma, LambdaTable lambda)
    : field_(field), gamma_(std::move(gamma)), lambda_(std::move(lambda)) {
    const auto m = static_cast<std::size_t>(gamma_.m());
    for (int g : gamma_.members()) {
        TruncPoly f = TruncPoly::monomial(field_, m, static_cast<std::size_t>(g));
        for (int d : gamma_.cGammaAfter(g)) f[static_cast<std::size_t>(d)] = lambda_.at({g, d});
        f_.emplace(g, std::move(f));
    }
}

CanonicalAlgebra CanonicalAlgebra::fromLambda(FieldSpec field, Gamma gamma, const LambdaTable& table) {
    LambdaTable full;
    for (int g : gamma.members())
        for (int d : gamma.cGammaAfter(g)) full.emplace(std::make_pair(g, d), field.zero());
    for (const auto& [key, value] : table) {
        auto it = full.find(key);
        if (it == full.end())
            throw ValidationError("lambda(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                  ") is not a canonical coordinate for " + gamma.toString());
        if (value.characteristic() != field.characteristic())
            throw ValidationError("lambda value over the wrong field");
        it->second = value;
    }
    CanonicalAlgebra A(field, std::move(gamma), std::move(full));
    const auto& members = A.gamma().members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            const TruncPoly prod = mulInF(A.f(members[i]), A.f(members[j]));
            if (!barCoordinates(A, prod))
                throw ValidationError("lambda table is not closed: f_" + std::to_string(members[i]) + " * f_" +
                                      std::to_string(members[j]) + " leaves the span");
        }
    return A;
}

Scalar CanonicalAlgebra::lambda(int g, int d) const {
    auto it = lambda_.find({g, d});
    if (it == lambda_.end())
        throw ValidationError("lambda(" + std::to_string(g) + "," + std::to_string(d) + ") is not a coordinate");
    return it->second;
}

const TruncPoly& CanonicalAlgebra::f(int g) const {
    auto it = f_.find(g);
    if (it == f_.end()) throw ValidationError(std::to_string(g) + " is not in " + gamma_.toString());
    return it->second;
}

TruncPoly CanonicalAlgebra::unit(int g) const {
    const TruncPoly& fg = f(g);
    const auto mm = static_cast<std::size_t>(m());
    TruncPoly u(field_, mm);
    for (std::size_t k = static_cast<std::size_t>(g); k < mm; ++k) u[k - static_cast<std::size_t>(g)] = fg[k];
    return u;
}

bool CanonicalAlgebra::isMonomial() const {
    for (const auto& [key, v] : lambda_)
        if (!v.isZero()) return false;
    return true;
}

// ---------------------------------------------------------------- constructors

CanonicalAlgebra fromGenerators(FieldSpec field, int m, const std::vector<Poly>& gens) {
    if (m < 2) throw ValidationError("m must be at least 2, got " + std::to_string(m));
    const auto mm = static_cast<std::size_t>(m);
    EchelonSpan span(field, mm);
    span.insert(TruncPoly::one(field, mm));

    auto check = [&](std::size_t pivot) {
        if (pivot == 1) throw NotInAmError("the generated algebra contains an element of order 1");
        if (pivot == mm - 1)
            throw NotInAmError("the generated algebra contains x^" + std::to_string(m - 1) +
                               " modulo x^" + std::to_string(m) + ", so x^m K[x] is not its conductor");
    };

    std::vector<TruncPoly> work;
    for (const auto& p : gens) {
        if (!(p.field() == field)) throw ValidationError("generator over a different field");
        TruncPoly t = p.truncate(mm);
        if (auto piv = span.insert(t)) {
            check(*piv);
            work.push_back(span.rows().at(*piv));
        }
    }
    while (!work.empty()) {
        TruncPoly r = std::move(work.back());
        work.pop_back();
        std::vector<TruncPoly> current;
        for (const auto& [piv, row] : span.rows())
            if (piv > 0) current.push_back(row);
        for (const auto& q : current) {
            if (auto piv = span.insert(mulInF(r, q))) {
                check(*piv);
                work.push_back(span.rows().at(*piv));
            }
        }
    }

    std::vector<int> members;
    for (const auto& [piv, row] : span.rows())
        if (piv > 0) members.push_back(static_cast<int>(piv));
    Gamma gamma(m, members);

    std::map<int, TruncPoly> canon;
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
        TruncPoly row = span.rows().at(static_cast<std::size_t>(*it));
        for (const auto& [g2, f2] : canon) {
            const Scalar c = row[static_cast<std::size_t>(g2)];
            if (!c.isZero()) row -= f2 * c;
        }
        canon.emplace(*it, std::move(row));
    }
    LambdaTable table;
    for (int g : members)
        for (int d : gamma.cGammaAfter(g)) table.emplace(std::make_pair(g, d), canon.at(g)[static_cast<std::size_t>(d)]);
    return CanonicalAlgebra::fromLambda(field, gamma, table);
}

CanonicalAlgebra monomialAlgebra(FieldSpec field, const Gamma& gamma) {
    return CanonicalAlgebra::fromLambda(field, gamma, {});
}

CanonicalAlgebra fromIndecomposables(FieldSpec field, const Gamma& gamma, const LambdaTable& tails) {
    if (gamma.empty()) {
        if (!tails.empty()) throw ValidationError("tails given for an empty Gamma");
        return monomialAlgebra(field, gamma);
    }
    const GammaStructure g = structure(gamma);
    const auto m = static_cast<std::size_t>(gamma.m());
    std::map<int, std::vector<Scalar>> coeffs;
    for (int nu : g.ind) {
        coeffs[nu] = std::vector<Scalar>(m, field.zero());
        coeffs[nu][static_cast<std::size_t>(nu)] = field.one();
    }
    for (const auto& [key, value] : tails) {
        const auto [nu, j] = key;
        auto it = coeffs.find(nu);
        const auto cg = gamma.cGammaAfter(nu);
        if (it == coeffs.end() || std::find(cg.begin(), cg.end(), j) == cg.end())
            throw ValidationError("(" + std::to_string(nu) + "," + std::to_string(j) +
                                  ") is not an indecomposable coordinate of " + gamma.toString());
        it->second[static_cast<std::size_t>(j)] = value;
    }
    std::vector<Poly> gens;
    for (auto& [nu, c] : coeffs) gens.emplace_back(field, c);
    CanonicalAlgebra A = fromGenerators(field, gamma.m(), gens);
    if (!(A.gamma() == gamma))
        throw ValidationError("the indecomposable tails generate semigroup " + A.gamma().toString() + ", not " +
                              gamma.toString());
    return A;
}

CanonicalAlgebra applyTorus(const CanonicalAlgebra& A, const Scalar& c) {
    if (c.isZero()) throw ValidationError("torus parameter must be nonzero");
    LambdaTable t;
    for (const auto& [key, v] : A.lambdaTable()) t.emplace(key, v * c.pow(key.second - key.first));
    return CanonicalAlgebra::fromLambda(A.field(), A.gamma(), t);
}

// ---------------------------------------------------------------- membership

std::optional<std::map<int, Scalar>> barCoordinates(const CanonicalAlgebra& A, const TruncPoly& v) {
    if (v.m() != static_cast<std::size_t>(A.m())) throw ValidationError("truncation order differs from m");
    std::map<int, Scalar> coords;
    TruncPoly r = v;
    coords.emplace(0, r[0]);
    r[0] = A.field().zero();
    for (std::size_t d = 1; d < r.m(); ++d) {
        if (r[d].isZero()) continue;
        const int di = static_cast<int>(d);
        if (!A.gamma().contains(di)) return std::nullopt;
        const Scalar c = r[d];
        coords.emplace(di, c);
        r -= A.f(di) * c;
    }
    return coords;
}

Membership membership(const CanonicalAlgebra& A, const Poly& p) {
    auto [bar, cond] = splitConductor(p, static_cast<std::size_t>(A.m()));
    Membership out{false, {}, std::move(cond)};
    if (auto c = barCoordinates(A, bar)) {
        out.member = true;
        out.coords = std::move(*c);
    }
    return out;
}

// ---------------------------------------------------------------- structure constants

Scalar productTailCoefficient(const CanonicalAlgebra& A, int g1, int g2, int xi) {
    const Gamma& G = A.gamma();
    auto inTail = [&](int g, int d) {
        return d > g && d <= G.m() - 1 && !G.contains(d);
    };
    Scalar s = A.field().zero();
    if (inTail(g1, xi - g2)) s += A.lambda(g1, xi - g2);
    if (inTail(g2, xi - g1)) s += A.lambda(g2, xi - g1);
    for (int d : G.cGammaAfter(g1)) {
        const int d2 = xi - d;
        if (inTail(g2, d2)) s += A.lambda(g1, d) * A.lambda(g2, d2);
    }
    return s;
}

std::vector<ProductRule> structureConstantsByFormula(const CanonicalAlgebra& A) {
    std::vector<ProductRule> out;
    const auto& members = A.gamma().members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            ProductRule r;
            r.g1 = members[i];
            r.g2 = members[j];
            const int sum = r.g1 + r.g2;
            if (sum >= A.m() - 1) {
                r.vanishes = true;
            } else {
                for (int rho : A.gamma().gammaAfter(sum)) r.mu.emplace(rho, productTailCoefficient(A, r.g1, r.g2, rho));
            }
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<ProductRule> structureConstantsDirect(const CanonicalAlgebra& A) {
    std::vector<ProductRule> out;
    const auto& members = A.gamma().members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            ProductRule r;
            r.g1 = members[i];
            r.g2 = members[j];
            const int sum = r.g1 + r.g2;
            const TruncPoly prod = mulInF(A.f(r.g1), A.f(r.g2));
            const auto coords = barCoordinates(A, prod);
            if (!coords) throw InternalError("canonical basis is not closed under multiplication");
            if (sum >= A.m() - 1) {
                r.vanishes = true;
                if (!prod.isZero()) throw InternalError("product above the conductor is nonzero in F");
            } else {
                for (const auto& [rho, c] : *coords) {
                    if (rho == sum) {
                        if (!c.isOne()) throw InternalError("leading structure constant differs from 1");
                    } else if (rho > sum) {
                        r.mu.emplace(rho, c);
                    } else if (!c.isZero()) {
                        throw InternalError("product has a term below its order");
                    }
                }
                for (int rho : A.gamma().gammaAfter(sum)) r.mu.emplace(rho, A.field().zero());
            }
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<ProductRule> structureConstants(const CanonicalAlgebra& A) {
    auto byFormula = structureConstantsByFormula(A);
    if (byFormula != structureConstantsDirect(A))
        throw InternalError("structure constants by formula disagree with direct multiplication");
    return byFormula;
}

bool satisfiesProductIdentities(const CanonicalAlgebra& A) {
    const Gamma& G = A.gamma();
    for (const auto& r : structureConstantsByFormula(A)) {
        if (r.vanishes) continue;
        const int sum = r.g1 + r.g2;
        for (int delta : G.cGammaAfter(sum)) {
            Scalar rhs = productTailCoefficient(A, r.g1, r.g2, delta);
            for (int rho : G.gammaBetween(sum, delta)) rhs -= r.mu.at(rho) * A.lambda(rho, delta);
            if (!(A.lambda(sum, delta) == rhs)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- powers

PowerExpansion expandPower(const CanonicalAlgebra& A, const GammaStructure& g, const Exponent& a) {
    requireStructureFor(A, g);
    if (a.size() != g.s()) throw ValidationError("exponent length does not match ind(Gamma)");
    if (std::all_of(a.begin(), a.end(), [](int v) { return v == 0; }))
        throw ValidationError("expandPower needs a nonzero exponent");
    for (int v : a)
        if (v < 0) throw ValidationError("exponents must be nonnegative");
    const auto m = static_cast<std::size_t>(A.m());
    TruncPoly value = TruncPoly::one(A.field(), m);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < a[i]; ++k) value = mulInF(value, A.f(g.ind[i]));
    PowerExpansion out{value, dot(a, g.ind), {}};
    if (out.degree <= A.m() - 1) {
        const auto coords = barCoordinates(A, value);
        if (!coords) throw InternalError("power of generators left the algebra");
        for (const auto& [k, c] : *coords) {
            if (k < out.degree) {
                if (!c.isZero()) throw InternalError("power has a term below its order");
                continue;
            }
            out.coords.emplace(k, c);
        }
        for (int gp : A.gamma().gammaAfter(out.degree)) out.coords.emplace(gp, A.field().zero());
        if (!out.coords.at(out.degree).isOne()) throw InternalError("power is not monic at its order");
    }
    return out;
}

Poly powerInKx(const CanonicalAlgebra& A, const GammaStructure& g, const Exponent& a) {
    requireStructureFor(A, g);
    if (a.size() != g.s()) throw ValidationError("exponent length does not match ind(Gamma)");
    Poly value = Poly::monomial(A.field(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Poly f = A.f(g.ind[i]).toPoly();
        for (int k = 0; k < a[i]; ++k) value = value * f;
    }
    return value;
}

Matrix basisChangeMatrix(const CanonicalAlgebra& A, const GammaStructure& g) {
    requireStructureFor(A, g);
    const auto& members = A.gamma().members();
    const std::size_t n = members.size();
    Matrix C(n, std::vector<Scalar>(n, A.field().zero()));
    for (std::size_t col = 0; col < n; ++col) {
        const auto pe = expandPower(A, g, g.a(members[col]));
        for (std::size_t row = 0; row < n; ++row) {
            auto it = pe.coords.find(members[row]);
            if (it != pe.coords.end()) C[row][col] = it->second;
        }
    }
    return C;
}

namespace {

void verifyEta(const CanonicalAlgebra& A, const GammaStructure& g, const std::map<std::pair<int, int>, Scalar>& eta) {
    for (int gam : A.gamma().members()) {
        TruncPoly rhs = expandPower(A, g, g.a(gam)).value;
        for (int gp : A.gamma().gammaAfter(gam)) rhs += expandPower(A, g, g.a(gp)).value * eta.at({gam, gp});
        if (!(rhs == A.f(gam))) throw InternalError("eta coefficients do not reproduce f_" + std::to_string(gam));
    }
}

}  // namespace

std::map<std::pair<int, int>, Scalar> etaCoefficients(const CanonicalAlgebra& A, const GammaStructure& g) {
    const Matrix C = basisChangeMatrix(A, g);
    const std::size_t n = C.size();
    const FieldSpec& F = A.field();
    Matrix negN(n, std::vector<Scalar>(n, F.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) negN[i][j] = -C[i][j];
    Matrix inv = identity(n, F);
    Matrix term = identity(n, F);
    for (std::size_t k = 1; k <= n; ++k) {
        term = multiply(term, negN, F);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv[i][j] += term[i][j];
    }
    const auto& members = A.gamma().members();
    std::map<std::pair<int, int>, Scalar> eta;
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = col + 1; row < n; ++row) eta.emplace(std::make_pair(members[col], members[row]), inv[row][col]);
    verifyEta(A, g, eta);
    return eta;
}

std::map<std::pair<int, int>, Scalar> etaBySolve(const CanonicalAlgebra& A, const GammaStructure& g) {
    requireStructureFor(A, g);
    std::map<std::pair<int, int>, Scalar> eta;
    for (int gam : A.gamma().members()) {
        TruncPoly r = A.f(gam) - expandPower(A, g, g.a(gam)).value;
        for (int gp : A.gamma().gammaAfter(gam)) {
            const Scalar c = r[static_cast<std::size_t>(gp)];
            eta.emplace(std::make_pair(gam, gp), c);
            r -= expandPower(A, g, g.a(gp)).value * c;
        }
        if (!r.isZero()) throw InternalError("eta solve left a remainder for f_" + std::to_string(gam));
    }
    return eta;
}

std::map<int, Scalar> thetaClosedForm(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                      const Exponent& b) {
    requireStructureFor(A, g);
    requireThetaArgs(g, gamma, b);
    const auto eta = etaCoefficients(A, g);
    const auto fb = expandPower(A, g, b);
    std::map<int, Scalar> theta;
    for (int gp : A.gamma().gammaAfter(gamma)) {
        Scalar t = eta.at({gamma, gp}) + fb.coords.at(gp);
        for (int d : A.gamma().gammaBetween(gamma, gp)) t += fb.coords.at(d) * eta.at({d, gp});
        theta.emplace(gp, t);
    }
    return theta;
}

std::map<int, Scalar> thetaByRecursion(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                       const Exponent& b) {
    requireStructureFor(A, g);
    requireThetaArgs(g, gamma, b);
    TruncPoly r = expandPower(A, g, b).value - expandPower(A, g, g.a(gamma)).value;
    std::map<int, Scalar> theta;
    for (int gp : A.gamma().gammaAfter(gamma)) {
        const Scalar t = r[static_cast<std::size_t>(gp)];
        theta.emplace(gp, t);
        r -= expandPower(A, g, g.a(gp)).value * t;
    }
    if (!r.isZero()) throw InternalError("theta recursion left a remainder");
    return theta;
}

std::map<int, Scalar> thetaBySolve(const CanonicalAlgebra& A, const GammaStructure& g, int gamma, const Exponent& b) {
    requireStructureFor(A, g);
    requireThetaArgs(g, gamma, b);
    const auto above = A.gamma().gammaAfter(gamma);
    const TruncPoly diff = expandPower(A, g, b).value - expandPower(A, g, g.a(gamma)).value;
    const auto target = barCoordinates(A, diff);
    if (!target) throw InternalError("f^b - f^a(gamma) left the algebra");
    const FieldSpec& F = A.field();
    Matrix M(above.size(), std::vector<Scalar>(above.size(), F.zero()));
    std::vector<Scalar> rhs(above.size(), F.zero());
    for (std::size_t col = 0; col < above.size(); ++col) {
        const auto pe = expandPower(A, g, g.a(above[col]));
        for (std::size_t row = 0; row < above.size(); ++row) {
            auto it = pe.coords.find(above[row]);
            if (it != pe.coords.end()) M[row][col] = it->second;
        }
    }
    for (std::size_t row = 0; row < above.size(); ++row) {
        auto it = target->find(above[row]);
        if (it != target->end()) rhs[row] = it->second;
    }
    for (const auto& [k, c] : *target)
        if (k <= gamma && !c.isZero()) throw InternalError("f^b - f^a(gamma) has a term at or below gamma");
    const auto sol = solve(M, rhs, F);
    if (!sol) throw InternalError("theta system is inconsistent");
    std::map<int, Scalar> theta;
    for (std::size_t i = 0; i < above.size(); ++i) theta.emplace(above[i], (*sol)[i]);
    return theta;
}

std::map<int, Scalar> thetaCoefficients(const CanonicalAlgebra& A, const GammaStructure& g, int gamma,
                                        const Exponent& b) {
    auto closed = thetaClosedForm(A, g, gamma, b);
    if (closed != thetaByRecursion(A, g, gamma, b))
        throw InternalError("theta closed form disagrees with the recursion");
    return closed;
}

}  // namespace coartin
