#include "coartin/autiso.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>

namespace coartin {

std::optional<std::uint64_t> exponentGcd(const TruncPoly& u) {
    if (!u[0].isOne()) throw ValidationError("exponentGcd: constant term must be 1");
    std::uint64_t g = 0;
    for (std::size_t j = 1; j < u.m(); ++j)
        if (!u[j].isZero()) g = std::gcd(g, static_cast<std::uint64_t>(j));
    if (g == 0) return std::nullopt;
    return g;
}

std::string AutDescription::generator() const {
    if (kind == AutKind::FullTorus) return "t_c for every nonzero c";
    return "t_c with c a primitive root of unity of order " + std::to_string(n);
}

namespace {

std::optional<std::uint64_t> gcdOver(const CanonicalAlgebra& A, const std::vector<int>& gammas) {
    std::uint64_t g = 0;
    for (int v : gammas)
        if (auto e = exponentGcd(A.unit(v))) g = std::gcd(g, *e);
    if (g == 0) return std::nullopt;
    return reduceOrder(g, A.field());
}

/// (d, x, y) with d = gcd(a, b) >= 0 and x a + y b = d.
std::tuple<long, long, long> extendedGcd(long a, long b) {
    long r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        x0 = std::exchange(x1, x0 - q * x1);
        y0 = std::exchange(y1, y0 - q * y1);
    }
    if (r0 < 0) return {-r0, -x0, -y0};
    return {r0, x0, y0};
}

}  // namespace

std::optional<std::uint64_t> autOrderOverAllGamma(const CanonicalAlgebra& A) {
    return gcdOver(A, A.gamma().members());
}

AutDescription autGroup(const CanonicalAlgebra& A) {
    if (A.isMonomial()) return {AutKind::FullTorus, 0};
    const auto n = gcdOver(A, structure(A.gamma()).ind);
    const auto all = autOrderOverAllGamma(A);
    if (!n || n != all) throw InternalError("automorphism order over ind(Gamma) disagrees with the order over Gamma");
    return {AutKind::Cyclic, *n};
}

IsoWitness torusSolve(const FieldSpec& field, const std::vector<TorusConstraint>& constraints) {
    IsoWitness w;
    w.mu = field.one();
    w.checkedExponents = constraints;
    std::vector<long> ks;
    for (const auto& t : constraints) {
        if (t.k == 0) throw ValidationError("torusSolve: exponent must be nonzero");
        if (t.c.isZero()) throw ValidationError("torusSolve: constant must be nonzero");
        if (t.c.characteristic() != field.characteristic()) throw ValidationError("torusSolve: constant over the wrong field");
        long k = t.k;
        if (!field.isRational()) {
            const auto kp = static_cast<long>(pCoPrimeDivisor(static_cast<std::uint64_t>(std::labs(k)), field.characteristic()));
            k = k < 0 ? -kp : kp;
        }
        ks.push_back(k);
    }
    // g = sum a_t k_t, mu = prod c_t^a_t, folded one constraint at a time.
    long g = 0;
    Scalar mu = field.one();
    for (std::size_t t = 0; t < ks.size(); ++t) {
        const auto [d, x, y] = extendedGcd(g, ks[t]);
        mu = mu.pow(x) * constraints[t].c.pow(y);
        g = d;
    }
    w.g = g;
    w.mu = mu;
    w.solvable = true;
    for (std::size_t t = 0; t < ks.size(); ++t)
        if (!(mu.pow(ks[t] / g) == constraints[t].c)) {
            w.solvable = false;
            w.reason = "no lambda satisfies lambda^" + std::to_string(constraints[t].k) + " = " +
                       constraints[t].c.toString() + " together with lambda^" + std::to_string(g) + " = " +
                       mu.toString();
            break;
        }
    return w;
}

IsoWitness isoTest(const CanonicalAlgebra& A, const CanonicalAlgebra& B) {
    if (!(A.field() == B.field())) throw ValidationError("isoTest: algebras over different fields");
    const FieldSpec& F = A.field();
    auto fail = [&](std::string why) {
        IsoWitness w;
        w.mu = F.one();
        w.reason = std::move(why);
        return w;
    };
    if (A.m() != B.m()) return fail("m differs: " + std::to_string(A.m()) + " vs " + std::to_string(B.m()));
    if (!(A.gamma() == B.gamma()))
        return fail("semigroups differ: " + A.gamma().toString() + " vs " + B.gamma().toString());
    if (A.gamma().empty()) return torusSolve(F, {});
    std::vector<TorusConstraint> cs;
    for (int nu : structure(A.gamma()).ind)
        for (int d : A.gamma().cGammaAfter(nu)) {
            const Scalar a = A.lambda(nu, d);
            const Scalar b = B.lambda(nu, d);
            if (a.isZero() != b.isZero())
                return fail("supports of u_" + std::to_string(nu) + " differ at x^" + std::to_string(d - nu));
            if (!a.isZero()) cs.push_back({d - nu, b / a});
        }
    return torusSolve(F, cs);
}

namespace {

std::optional<mpz_class> exactRoot(const mpz_class& v, unsigned long g) {
    if (sgn(v) < 0) {
        if (g % 2 == 0) return std::nullopt;
        auto r = exactRoot(-v, g);
        if (!r) return std::nullopt;
        return mpz_class(-*r);
    }
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), g) == 0) return std::nullopt;
    return r;
}

constexpr std::uint64_t kSearchLimit = 1000003;

}  // namespace

std::optional<Scalar> baseFieldLambda(const FieldSpec& field, const IsoWitness& w) {
    if (!w.solvable) return std::nullopt;
    if (w.g == 0) return field.one();
    if (field.isRational()) {
        const mpq_class& q = w.mu.rational();
        auto num = exactRoot(q.get_num(), static_cast<unsigned long>(w.g));
        auto den = exactRoot(q.get_den(), static_cast<unsigned long>(w.g));
        if (!num || !den) return std::nullopt;
        return field.fromRational(mpq_class(*num, *den));
    }
    if (field.characteristic() > kSearchLimit) return std::nullopt;
    for (std::uint64_t v = 1; v < field.characteristic(); ++v) {
        const Scalar c = field.fromInt(static_cast<long>(v));
        if (c.pow(w.g) == w.mu) return c;
    }
    return std::nullopt;
}

bool baseFieldSolvable(const FieldSpec& field, const IsoWitness& w) {
    if (!w.solvable) return false;
    if (w.g == 0 || field.isRational()) return w.g == 0 || baseFieldLambda(field, w).has_value();
    const std::uint64_t pm1 = field.characteristic() - 1;
    const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(w.g), pm1);
    return w.mu.pow(static_cast<long>(pm1 / d)).isOne();
}

std::vector<OrderRealization> realizeOrders(int m, const FieldSpec& field) {
    if (m < 4) throw ValidationError("realizeOrders: m must be >= 4");
    const auto all = enumerateS(m);
    const auto L = orderTables(m).L;
    std::vector<OrderRealization> out;
    for (int l : L) {
        bool done = false;
        for (const auto& G : all) {
            for (int g : G.members()) {
                if (g + l > m - 1 || G.contains(g + l)) continue;
                FamilyExample ex = familyAGammaL(field, G, g, l);
                const AutDescription aut = autGroup(ex.algebra);
                const std::uint64_t want = reduceOrder(static_cast<std::uint64_t>(l), field);
                if (aut.kind != AutKind::Cyclic || aut.n != want || ex.predictedOrder != want)
                    throw InternalError("A_{gamma l} with l = " + std::to_string(l) + " has the wrong automorphism group");
                out.push_back(OrderRealization{static_cast<std::uint64_t>(l), aut.n, G, g, std::move(ex)});
                done = true;
                break;
            }
            if (done) break;
        }
        if (!done) throw InternalError("no gamma realizes l = " + std::to_string(l));
    }
    return out;
}

std::vector<std::uint64_t> realizedOrders(const std::vector<OrderRealization>& table) {
    std::vector<std::uint64_t> v;
    for (const auto& r : table) v.push_back(r.order);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::optional<CanonicalAlgebra> searchOrderRealization(const Gamma& gamma, std::uint64_t l, const FieldSpec& field,
                                                       int tries, std::uint64_t seed) {
    if (gamma.empty()) throw ValidationError("searchOrderRealization: Gamma must be nonempty");
    if (l == 0) throw ValidationError("searchOrderRealization: l must be >= 1");
    const auto g = structure(gamma);
    std::vector<std::pair<int, int>> slots;
    for (int nu : g.ind)
        for (int d : gamma.cGammaAfter(nu))
            if (static_cast<std::uint64_t>(d - nu) % l == 0) slots.emplace_back(nu, d);
    if (slots.empty()) return std::nullopt;
    const std::uint64_t want = reduceOrder(l, field);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < tries; ++t) {
        LambdaTable tails;
        for (const auto& s : slots) tails[s] = field.fromInt(coeff(rng));
        try {
            CanonicalAlgebra A = fromIndecomposables(field, gamma, tails);
            const AutDescription aut = autGroup(A);
            if (aut.kind == AutKind::Cyclic && aut.n == want) return A;
        } catch (const ValidationError&) {
        }
    }
    return std::nullopt;
}

}  // namespace coartin
