#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coartin/subalgebra.hpp"

namespace coartin {

/// Bar: the quotient A/x^m K[x] inside F_m. Full: A itself inside K[x].
enum class Target { Bar, Full };

/// Raw keeps one relation per (gamma, b); Irredundant keeps the relation
/// basis only; Structure uses every f_gamma as a generator and multiplies pairs.
enum class Style { Raw, Irredundant, Structure };

enum class CaseTag { EmptyGamma, SingleInd, NoDec2, General, Monomial, StructureConstants };

std::string toString(Target t);
std::string toString(Style s);
std::string toString(CaseTag c);
Target parseTarget(const std::string& s);
Style parseStyle(const std::string& s);

struct Generator {
    std::string name;
    Poly value;
    /// Order of the generator: gamma for f_gamma, m + i for x^(m+i).
    int weight = 0;
};

/// coeff * prod generators[k]^exps[k].
struct Word {
    Scalar coeff;
    Exponent exps;
};

enum class RelationKind {
    Product,   // f_g f_g' in terms of the canonical basis
    Exchange,  // f^b against f^a(gamma)
    Power,     // f^c with c . nu >= m-1
    Module,    // x^(m+i) f
    Shift,     // x^(m+i) x^(m+j)
};

std::string toString(RelationKind k);

/// lhs = rhs (+ bracket), where the bracket is an element of x^m K[x] written
/// in the coordinates sum_i p_i(x^m) x^(m+i).
struct Relation {
    RelationKind kind = RelationKind::Product;
    std::vector<Word> lhs;
    std::vector<Word> rhs;
    std::optional<ConductorElement> bracket;
};

struct Presentation {
    Target target = Target::Bar;
    Style style = Style::Raw;
    CaseTag tag = CaseTag::EmptyGamma;
    FieldSpec field;
    int m = 0;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    /// Number of Exchange relations.
    std::size_t exchangeCount = 0;
};

/// Builds the presentation and checks every relation by substitution.
/// `g` overrides the default choice of a(gamma); it must describe A's Gamma.
Presentation present(const CanonicalAlgebra& A, Target target, Style style,
                     const std::optional<GammaStructure>& g = std::nullopt);

/// Substitutes generator values: in F_m for Bar, in K[x] for Full.
bool validateRelation(const Presentation& P, const Relation& r);

/// Dimension of K[generators]/(relations) for a Bar presentation, computed
/// modulo the monomials of weight >= m-1 (all of which lie in the ideal).
std::size_t quotientDimension(const Presentation& P);

/// One relation per line.
std::string toText(const Presentation& P);
std::string relationToText(const Presentation& P, const Relation& r);

}  // namespace coartin
