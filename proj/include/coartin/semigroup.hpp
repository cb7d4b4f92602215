#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coartin/errors.hpp"

namespace coartin {

/// A vector in N^s, indexed like ind(Gamma).
using Exponent = std::vector<int>;

/// A member of S(m): a subset of {2, ..., m-2} with G + G inside G u [m, oo).
class Gamma {
public:
    /// The empty semigroup datum for m.
    explicit Gamma(int m);
    /// Validates range and closure; members may be given in any order.
    Gamma(int m, std::vector<int> members);

    int m() const { return m_; }
    const std::vector<int>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(int v) const;

    /// {2, ..., m-1} minus Gamma.
    std::vector<int> complement() const;
    /// C(i): non-members delta with i < delta <= m-1.
    std::vector<int> cGammaAfter(int i) const;
    /// Gamma(i): members above i.
    std::vector<int> gammaAfter(int i) const;
    /// Gamma(i, j): members strictly between i and j.
    std::vector<int> gammaBetween(int i, int j) const;
    /// C(i, j): non-members in {2, ..., m-1} strictly between i and j.
    std::vector<int> cGammaBetween(int i, int j) const;

    std::string toString() const;

    friend bool operator==(const Gamma&, const Gamma&) = default;
    friend auto operator<=>(const Gamma&, const Gamma&) = default;

private:
    void requireIndex(int i) const;

    int m_;
    std::vector<int> members_;
};

/// True when the subset of {2, ..., m-2} satisfies the closure condition.
bool isSemigroupDatum(int m, const std::vector<int>& members);

/// All of S(m) including the empty set, in lexicographic order of member lists.
std::vector<Gamma> enumerateS(int m);

/// Solutions a in N^s of a . nu = target, in lexicographic order.
std::vector<Exponent> relSet(const std::vector<int>& nu, int target);

int dot(const Exponent& a, const std::vector<int>& nu);

struct GammaStructure {
    Gamma gamma{2};
    std::vector<int> ind;
    std::vector<int> dec;
    std::vector<int> decGe2;
    /// Rel(gamma) for every member (indecomposables have Rel = {e_i}).
    std::map<int, std::vector<Exponent>> rel;
    std::map<int, Exponent> aChoice;

    int m() const { return gamma.m(); }
    std::size_t s() const { return ind.size(); }
    const Exponent& a(int g) const;
    /// Position of nu in ind, or throws.
    std::size_t indexOfInd(int nu) const;
    Exponent unit(std::size_t i) const;
};

/// ind/dec split, Rel tables and the default choice of a(gamma).
/// Entries of `overrides` replace the default choice for the listed members;
/// each must lie in Rel(gamma). Throws on an empty Gamma.
GammaStructure structure(const Gamma& gamma, const std::map<int, Exponent>& overrides = {});

/// Minimal generators of {c : c . nu >= m-1}, lexicographically ordered.
std::vector<Exponent> conductorIdealGenerators(const GammaStructure& g);

/// Distinct values a . nu over a outside the conductor ideal.
std::set<int> monomialQuotientDegrees(const GammaStructure& g);

struct RelationBasis {
    std::vector<Exponent> bAll;    // union of Rel over dec>=2
    std::vector<Exponent> bPrime;  // bAll minus (e_i + bAll)
    std::vector<int> avoidable;
    std::vector<int> nonAvoidable;
    std::vector<Exponent> bList;  // sorted by mu
    std::vector<int> muList;
    std::size_t t = 0;
    std::map<int, std::size_t> multiplicity;
};

/// Throws when dec>=2 is empty or the choice of a(gamma) is not non-avoidable.
RelationBasis relationBasis(const GammaStructure& g);

/// Whether the a(gamma) choice satisfies the non-avoidable condition.
bool isNonAvoidableChoice(const GammaStructure& g);

/// Rank of the lattice spanned by a - b, a, b in Rel(gamma), gamma in dec>=2.
std::size_t relationLatticeRank(const GammaStructure& g);

/// L(m, Gamma), optionally restricted to l not divisible by p.
std::vector<int> orderSetL(const Gamma& gamma, std::optional<std::uint64_t> p = std::nullopt);

struct OrderTables {
    std::vector<int> L;
    std::vector<int> B;
    std::vector<int> O;
};

/// L(m), B(m) and O(m) (char 0) or O_p(m). Requires m >= 4.
OrderTables orderTables(int m, std::optional<std::uint64_t> p = std::nullopt);

/// Largest finite order of Aut over A(m): max O(m), or max O_p(m). Requires m >= 4.
int maxFiniteOrder(int m, std::optional<std::uint64_t> p = std::nullopt);

/// max{i_p : 1 <= i <= m-3, i + j <= m-1 for some j >= 2 not dividing m-1},
/// with i_p = i in characteristic 0. Agrees with maxFiniteOrder except at a few
/// (m, p), e.g. m = 10, p = 7 where it gives 6 although 6 is not in L(10).
int finiteOrderFormula(int m, std::optional<std::uint64_t> p = std::nullopt);

/// m-3 for even m, m-4 for odd m. Attained in characteristic 0 unless m is odd
/// and 3 divides m-1.
int finiteOrderBound(int m);

std::string exponentToString(const Exponent& a);

}  // namespace coartin
