#include "coartin/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "coartin/field.hpp"

namespace coartin {

// ---------------------------------------------------------------- Gamma

Gamma::Gamma(int m) : m_(m) {
    if (m < 2) throw ValidationError("m must be at least 2, got " + std::to_string(m));
}

Gamma::Gamma(int m, std::vector<int> members) : Gamma(m) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw ValidationError("Gamma has repeated members");
    for (int v : members)
        if (v < 2 || v > m - 2)
            throw ValidationError("Gamma member " + std::to_string(v) + " outside {2, ..., " + std::to_string(m - 2) +
                                  "}");
    members_ = std::move(members);
    for (int a : members_)
        for (int b : members_) {
            const int s = a + b;
            if (s < m && !contains(s))
                throw ValidationError("Gamma is not closed: " + std::to_string(a) + " + " + std::to_string(b) + " = " +
                                      std::to_string(s) + " is missing");
        }
}

bool Gamma::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

void Gamma::requireIndex(int i) const {
    if (i < 2 || i > m_ - 1)
        throw ValidationError("index " + std::to_string(i) + " outside {2, ..., " + std::to_string(m_ - 1) + "}");
}

std::vector<int> Gamma::complement() const {
    std::vector<int> out;
    for (int d = 2; d <= m_ - 1; ++d)
        if (!contains(d)) out.push_back(d);
    return out;
}

std::vector<int> Gamma::cGammaAfter(int i) const {
    requireIndex(i);
    std::vector<int> out;
    for (int d = i + 1; d <= m_ - 1; ++d)
        if (!contains(d)) out.push_back(d);
    return out;
}

std::vector<int> Gamma::gammaAfter(int i) const {
    requireIndex(i);
    std::vector<int> out;
    for (int g : members_)
        if (g > i) out.push_back(g);
    return out;
}

std::vector<int> Gamma::gammaBetween(int i, int j) const {
    requireIndex(i);
    requireIndex(j);
    if (i > j) throw ValidationError("gammaBetween needs i <= j");
    std::vector<int> out;
    for (int g : members_)
        if (g > i && g < j) out.push_back(g);
    return out;
}

std::vector<int> Gamma::cGammaBetween(int i, int j) const {
    requireIndex(i);
    requireIndex(j);
    if (i > j) throw ValidationError("cGammaBetween needs i <= j");
    std::vector<int> out;
    for (int d = i + 1; d < j; ++d)
        if (!contains(d)) out.push_back(d);
    return out;
}

std::string Gamma::toString() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < members_.size(); ++k) os << (k ? "," : "") << members_[k];
    os << '}';
    return os.str();
}

bool isSemigroupDatum(int m, const std::vector<int>& members) {
    try {
        Gamma g(m, members);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

// ---------------------------------------------------------------- enumeration

namespace {

void enumerateFrom(int m, int v, std::vector<int>& chosen, std::vector<char>& required, std::vector<Gamma>& out) {
    if (v > m - 2) {
        out.emplace_back(m, chosen);
        return;
    }
    if (!required[v]) {
        // v left out
        enumerateFrom(m, v + 1, chosen, required, out);
    }
    // v taken: every new sum below m must stay available, and m-1 is forbidden
    std::vector<int> newly;
    bool ok = true;
    chosen.push_back(v);
    for (int w : chosen) {
        const int s = v + w;
        if (s == m - 1) {
            ok = false;
            break;
        }
        if (s < m - 1 && !required[s]) {
            required[s] = 1;
            newly.push_back(s);
        }
    }
    if (ok) enumerateFrom(m, v + 1, chosen, required, out);
    for (int s : newly) required[s] = 0;
    chosen.pop_back();
}

}  // namespace

std::vector<Gamma> enumerateS(int m) {
    if (m < 2) throw ValidationError("m must be at least 2, got " + std::to_string(m));
    std::vector<Gamma> out;
    std::vector<int> chosen;
    std::vector<char> required(static_cast<std::size_t>(m) + 1, 0);
    enumerateFrom(m, 2, chosen, required, out);
    std::sort(out.begin(), out.end(), [](const Gamma& a, const Gamma& b) { return a.members() < b.members(); });
    return out;
}

// ---------------------------------------------------------------- Rel and structure

int dot(const Exponent& a, const std::vector<int>& nu) {
    if (a.size() != nu.size()) throw ValidationError("exponent length does not match ind(Gamma)");
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * nu[i];
    return s;
}

namespace {

void relFrom(const std::vector<int>& nu, std::size_t i, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (i == nu.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k * nu[i] <= remaining; ++k) {
        cur[i] = k;
        relFrom(nu, i + 1, remaining - k * nu[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Exponent> relSet(const std::vector<int>& nu, int target) {
    for (int v : nu)
        if (v <= 0) throw ValidationError("relSet needs positive weights");
    std::vector<Exponent> out;
    Exponent cur(nu.size(), 0);
    relFrom(nu, 0, target, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

const Exponent& GammaStructure::a(int g) const {
    auto it = aChoice.find(g);
    if (it == aChoice.end()) throw ValidationError(std::to_string(g) + " is not a member of " + gamma.toString());
    return it->second;
}

std::size_t GammaStructure::indexOfInd(int nu) const {
    auto it = std::find(ind.begin(), ind.end(), nu);
    if (it == ind.end()) throw ValidationError(std::to_string(nu) + " is not indecomposable in " + gamma.toString());
    return static_cast<std::size_t>(it - ind.begin());
}

Exponent GammaStructure::unit(std::size_t i) const {
    Exponent e(ind.size(), 0);
    e.at(i) = 1;
    return e;
}

namespace {

std::vector<Exponent> shiftedBAll(const std::vector<Exponent>& bAll, std::size_t s) {
    std::vector<Exponent> out;
    for (const auto& b : bAll)
        for (std::size_t i = 0; i < s; ++i) {
            Exponent c = b;
            ++c[i];
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool containsExp(const std::vector<Exponent>& sorted, const Exponent& e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

struct BasisSets {
    std::vector<Exponent> bAll;
    std::vector<Exponent> shifted;
    std::vector<Exponent> bPrime;
    std::vector<int> avoidable;
    std::vector<int> nonAvoidable;
};

BasisSets basisSets(const GammaStructure& g) {
    BasisSets bs;
    for (int gam : g.decGe2)
        for (const auto& b : g.rel.at(gam)) bs.bAll.push_back(b);
    std::sort(bs.bAll.begin(), bs.bAll.end());
    bs.shifted = shiftedBAll(bs.bAll, g.s());
    std::set<int> mus;
    for (const auto& b : bs.bAll)
        if (!containsExp(bs.shifted, b)) {
            bs.bPrime.push_back(b);
            mus.insert(dot(b, g.ind));
        }
    for (int mu : mus) {
        bool hit = false;
        for (const auto& r : g.rel.at(mu))
            if (containsExp(bs.shifted, r)) hit = true;
        (hit ? bs.nonAvoidable : bs.avoidable).push_back(mu);
    }
    return bs;
}

}  // namespace

GammaStructure structure(const Gamma& gamma, const std::map<int, Exponent>& overrides) {
    if (gamma.empty()) throw ValidationError("structure needs a nonempty Gamma");
    GammaStructure g;
    g.gamma = gamma;
    for (int v : gamma.members()) {
        bool decomposable = false;
        for (int w : gamma.members())
            if (w < v && gamma.contains(v - w)) decomposable = true;
        (decomposable ? g.dec : g.ind).push_back(v);
    }
    const std::size_t s = g.ind.size();
    for (std::size_t i = 0; i < s; ++i) {
        g.rel[g.ind[i]] = {g.unit(i)};
        g.aChoice[g.ind[i]] = g.unit(i);
    }
    for (int v : g.dec) {
        g.rel[v] = relSet(g.ind, v);
        if (g.rel[v].empty()) throw InternalError("decomposable element without a relation vector");
        if (g.rel[v].size() >= 2) g.decGe2.push_back(v);
        g.aChoice[v] = g.rel[v].front();
    }
    if (!g.decGe2.empty()) {
        const BasisSets bs = basisSets(g);
        for (int mu : bs.nonAvoidable) {
            for (const auto& r : g.rel.at(mu)) {
                const bool inPrime = containsExp(bs.bPrime, r);
                if (!inPrime) {
                    g.aChoice[mu] = r;
                    break;
                }
            }
        }
    }
    for (const auto& [v, a] : overrides) {
        auto it = g.rel.find(v);
        if (it == g.rel.end()) throw ValidationError(std::to_string(v) + " is not a member of " + gamma.toString());
        if (std::find(it->second.begin(), it->second.end(), a) == it->second.end())
            throw ValidationError(exponentToString(a) + " is not in Rel(" + std::to_string(v) + ")");
        g.aChoice[v] = a;
    }
    return g;
}

bool isNonAvoidableChoice(const GammaStructure& g) {
    if (g.decGe2.empty()) return true;
    const BasisSets bs = basisSets(g);
    for (int mu : bs.nonAvoidable)
        if (containsExp(bs.bPrime, g.a(mu))) return false;
    return true;
}

// ---------------------------------------------------------------- conductor ideal

namespace {

void boxFrom(const std::vector<int>& nu, int bound, std::size_t i, Exponent& cur, int acc,
             const std::function<void(const Exponent&, int)>& visit) {
    if (i == nu.size()) {
        visit(cur, acc);
        return;
    }
    for (int k = 0;; ++k) {
        cur[i] = k;
        boxFrom(nu, bound, i + 1, cur, acc + k * nu[i], visit);
        if (acc + k * nu[i] >= bound) break;
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Exponent> conductorIdealGenerators(const GammaStructure& g) {
    const int bound = g.m() - 1;
    std::vector<Exponent> out;
    Exponent cur(g.s(), 0);
    boxFrom(g.ind, bound, 0, cur, 0, [&](const Exponent& c, int value) {
        if (value < bound) return;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > 0 && value - g.ind[i] >= bound) return;
        out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> monomialQuotientDegrees(const GammaStructure& g) {
    const int bound = g.m() - 1;
    std::set<int> out;
    Exponent cur(g.s(), 0);
    boxFrom(g.ind, bound, 0, cur, 0, [&](const Exponent&, int value) {
        if (value < bound) out.insert(value);
    });
    return out;
}

// ---------------------------------------------------------------- relation basis

RelationBasis relationBasis(const GammaStructure& g) {
    if (g.decGe2.empty()) throw ValidationError("relationBasis needs dec>=2 to be nonempty");
    if (!isNonAvoidableChoice(g)) throw ValidationError("the choice of a(gamma) is not a non-avoidable set");
    BasisSets bs = basisSets(g);
    RelationBasis rb;
    rb.bAll = bs.bAll;
    rb.bPrime = bs.bPrime;
    rb.avoidable = bs.avoidable;
    rb.nonAvoidable = bs.nonAvoidable;
    std::vector<std::pair<int, Exponent>> list;
    for (const auto& b : bs.bPrime) {
        const int mu = dot(b, g.ind);
        const bool isAvoidable = std::binary_search(bs.avoidable.begin(), bs.avoidable.end(), mu);
        if (isAvoidable && g.a(mu) == b) continue;
        list.emplace_back(mu, b);
    }
    std::sort(list.begin(), list.end());
    for (auto& [mu, b] : list) {
        rb.muList.push_back(mu);
        rb.bList.push_back(b);
        ++rb.multiplicity[mu];
    }
    rb.t = rb.bList.size();
    if (rb.t != bs.bPrime.size() - bs.avoidable.size())
        throw InternalError("relation basis size disagrees with |B'| - |avoidable|");
    return rb;
}

std::size_t relationLatticeRank(const GammaStructure& g) {
    std::vector<std::vector<mpq_class>> rows;
    for (int gam : g.decGe2) {
        const auto& r = g.rel.at(gam);
        for (std::size_t k = 1; k < r.size(); ++k) {
            std::vector<mpq_class> row(g.s());
            for (std::size_t i = 0; i < g.s(); ++i) row[i] = r[k][i] - r[0][i];
            rows.push_back(std::move(row));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < g.s() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const mpq_class f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < g.s(); ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------- order sets

std::vector<int> orderSetL(const Gamma& gamma, std::optional<std::uint64_t> p) {
    if (p && !isPrime(*p)) throw ValidationError("characteristic must be prime, got " + std::to_string(*p));
    std::vector<int> out;
    if (gamma.empty()) return out;
    const int m = gamma.m();
    for (int l = 1; l <= m - 1; ++l) {
        if (p && static_cast<std::uint64_t>(l) % *p == 0) continue;
        bool escapes = false;
        for (int g : gamma.members()) {
            const int v = l + g;
            if (v <= m - 1 && !gamma.contains(v)) escapes = true;
        }
        if (escapes) out.push_back(l);
    }
    return out;
}

OrderTables orderTables(int m, std::optional<std::uint64_t> p) {
    if (m < 4) throw ValidationError("orderTables needs m >= 4, got " + std::to_string(m));
    if (p && !isPrime(*p)) throw ValidationError("characteristic must be prime, got " + std::to_string(*p));
    std::set<int> L;
    for (const auto& g : enumerateS(m))
        for (int l : orderSetL(g)) L.insert(l);
    OrderTables t;
    t.L.assign(L.begin(), L.end());
    for (int l = 1; l <= m - 1; ++l)
        if (!L.count(l)) t.B.push_back(l);
    std::set<int> O;
    for (int l : L) O.insert(p ? static_cast<int>(pCoPrimeDivisor(static_cast<std::uint64_t>(l), *p)) : l);
    t.O.assign(O.begin(), O.end());
    return t;
}

int finiteOrderBound(int m) {
    if (m < 4) throw ValidationError("finiteOrderBound needs m >= 4, got " + std::to_string(m));
    return m % 2 == 0 ? m - 3 : m - 4;
}

int finiteOrderFormula(int m, std::optional<std::uint64_t> p) {
    if (m < 4) throw ValidationError("finiteOrderFormula needs m >= 4, got " + std::to_string(m));
    if (p && !isPrime(*p)) throw ValidationError("characteristic must be prime, got " + std::to_string(*p));
    int best = 0;
    for (int i = 1; i <= m - 3; ++i) {
        bool ok = false;
        for (int j = 2; i + j <= m - 1; ++j)
            if ((m - 1) % j != 0) ok = true;
        if (!ok) continue;
        const auto reduced = p ? pCoPrimeDivisor(static_cast<std::uint64_t>(i), *p) : static_cast<std::uint64_t>(i);
        best = std::max(best, static_cast<int>(reduced));
    }
    return best;
}

int maxFiniteOrder(int m, std::optional<std::uint64_t> p) {
    if (m < 4) throw ValidationError("maxFiniteOrder needs m >= 4, got " + std::to_string(m));
    return orderTables(m, p).O.back();
}

std::string exponentToString(const Exponent& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

}  // namespace coartin
