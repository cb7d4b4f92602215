#include "coartin/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace coartin {

std::string toString(Target t) { return t == Target::Bar ? "bar" : "full"; }

std::string toString(Style s) {
    switch (s) {
        case Style::Raw: return "raw";
        case Style::Irredundant: return "irredundant";
        case Style::Structure: return "structure";
    }
    return "?";
}

std::string toString(CaseTag c) {
    switch (c) {
        case CaseTag::EmptyGamma: return "EmptyGamma";
        case CaseTag::SingleInd: return "SingleInd";
        case CaseTag::NoDec2: return "NoDec2";
        case CaseTag::General: return "General";
        case CaseTag::Monomial: return "Monomial";
        case CaseTag::StructureConstants: return "StructureConstants";
    }
    return "?";
}

std::string toString(RelationKind k) {
    switch (k) {
        case RelationKind::Product: return "product";
        case RelationKind::Exchange: return "exchange";
        case RelationKind::Power: return "power";
        case RelationKind::Module: return "module";
        case RelationKind::Shift: return "shift";
    }
    return "?";
}

Target parseTarget(const std::string& s) {
    if (s == "bar") return Target::Bar;
    if (s == "full") return Target::Full;
    throw ValidationError("target must be 'bar' or 'full', got '" + s + "'");
}

Style parseStyle(const std::string& s) {
    if (s == "raw") return Style::Raw;
    if (s == "irredundant") return Style::Irredundant;
    if (s == "structure") return Style::Structure;
    throw ValidationError("style must be 'raw', 'irredundant' or 'structure', got '" + s + "'");
}

namespace {

class Builder {
public:
    Builder(const CanonicalAlgebra& A, Target target, Style style, const GammaStructure* g)
        : A_(A), g_(g), F_(A.field()), m_(A.m()) {
        P_.target = target;
        P_.style = style;
        P_.field = F_;
        P_.m = m_;
    }

    Presentation build() {
        const Gamma& G = A_.gamma();
        if (G.empty()) {
            P_.tag = CaseTag::EmptyGamma;
            if (P_.target == Target::Full) emptyGammaRelations();
            return std::move(P_);
        }
        if (P_.style == Style::Structure) {
            P_.tag = CaseTag::StructureConstants;
            for (int gam : G.members()) addGenerator("f" + std::to_string(gam), A_.f(gam).toPoly(), gam);
            fGenCount_ = generators().size();
            if (P_.target == Target::Full) addShiftGenerators();
            productRelations();
            if (P_.target == Target::Full) conductorRelations();
            return std::move(P_);
        }
        const GammaStructure& g = *g_;
        for (int nu : g.ind) addGenerator("f" + std::to_string(nu), A_.f(nu).toPoly(), nu);
        fGenCount_ = generators().size();
        if (P_.target == Target::Full) addShiftGenerators();
        if (g.s() == 1)
            P_.tag = CaseTag::SingleInd;
        else if (g.decGe2.empty())
            P_.tag = CaseTag::NoDec2;
        else
            P_.tag = A_.isMonomial() ? CaseTag::Monomial : CaseTag::General;

        if (P_.tag == CaseTag::General || P_.tag == CaseTag::Monomial) {
            if (P_.style == Style::Raw) {
                for (int gam : g.decGe2)
                    for (const auto& b : g.rel.at(gam))
                        if (b != g.a(gam)) exchangeRelation(gam, b);
            } else {
                const RelationBasis rb = relationBasis(g);
                for (std::size_t i = 0; i < rb.t; ++i) exchangeRelation(rb.muList[i], rb.bList[i]);
            }
        }
        for (const auto& c : conductorIdealGenerators(g)) powerRelation(c);
        if (P_.target == Target::Full) conductorRelations();
        return std::move(P_);
    }

private:
    std::vector<Generator>& generators() { return P_.generators; }

    void addGenerator(std::string name, Poly value, int weight) {
        P_.generators.push_back(Generator{std::move(name), std::move(value), weight});
    }

    void addShiftGenerators() {
        shiftBase_ = generators().size();
        for (int i = 0; i < m_; ++i)
            addGenerator("X" + std::to_string(i), Poly::monomial(F_, static_cast<std::size_t>(m_ + i)), m_ + i);
    }

    Exponent zeroExp() const { return Exponent(P_.generators.size(), 0); }

    Word fWord(const Exponent& a, const Scalar& c) const {
        Word w{c, zeroExp()};
        for (std::size_t i = 0; i < a.size(); ++i) w.exps[i] = a[i];
        return w;
    }

    Word single(std::size_t gen, int power = 1) const {
        Word w{F_.one(), zeroExp()};
        w.exps[gen] = power;
        return w;
    }

    std::size_t fIndex(int gam) const {
        for (std::size_t i = 0; i < fGenCount_; ++i)
            if (P_.generators[i].weight == gam) return i;
        throw InternalError("no generator for f_" + std::to_string(gam));
    }

    Poly kxPower(const Exponent& a) const { return powerInKx(A_, *g_, a); }

    ConductorElement bracketOf(const Poly& p) const {
        return splitConductor(p, static_cast<std::size_t>(m_)).second;
    }

    ConductorElement combine(const std::vector<std::pair<Scalar, ConductorElement>>& parts) const {
        Poly sum(F_);
        for (const auto& [c, e] : parts) sum += e.expand() * c;
        return bracketOf(sum);
    }

    void push(Relation r) {
        if (r.kind == RelationKind::Exchange) ++P_.exchangeCount;
        P_.relations.push_back(std::move(r));
    }

    void exchangeRelation(int gam, const Exponent& b) {
        const auto theta = thetaCoefficients(A_, *g_, gam, b);
        Relation r;
        r.kind = RelationKind::Exchange;
        r.lhs.push_back(fWord(b, F_.one()));
        r.rhs.push_back(fWord(g_->a(gam), F_.one()));
        std::vector<std::pair<Scalar, ConductorElement>> parts;
        if (P_.target == Target::Full) {
            parts.emplace_back(F_.one(), bracketOf(kxPower(b)));
            parts.emplace_back(-F_.one(), bracketOf(kxPower(g_->a(gam))));
        }
        for (const auto& [gp, t] : theta) {
            if (t.isZero()) continue;
            r.rhs.push_back(fWord(g_->a(gp), t));
            if (P_.target == Target::Full) parts.emplace_back(-t, bracketOf(kxPower(g_->a(gp))));
        }
        if (P_.target == Target::Full) r.bracket = combine(parts);
        push(std::move(r));
    }

    void powerRelation(const Exponent& c) {
        Relation r;
        r.kind = RelationKind::Power;
        r.lhs.push_back(fWord(c, F_.one()));
        if (P_.target == Target::Full) r.bracket = bracketOf(kxPower(c));
        push(std::move(r));
    }

    void productRelations() {
        for (const auto& rule : structureConstants(A_)) {
            Relation r;
            r.kind = RelationKind::Product;
            Word w{F_.one(), zeroExp()};
            ++w.exps[fIndex(rule.g1)];
            ++w.exps[fIndex(rule.g2)];
            r.lhs.push_back(w);
            if (!rule.vanishes) {
                r.rhs.push_back(single(fIndex(rule.g1 + rule.g2)));
                for (const auto& [rho, mu] : rule.mu) {
                    if (mu.isZero()) continue;
                    Word t = single(fIndex(rho));
                    t.coeff = mu;
                    r.rhs.push_back(t);
                }
            }
            if (P_.target == Target::Full)
                r.bracket = bracketOf(A_.f(rule.g1).toPoly() * A_.f(rule.g2).toPoly());
            push(std::move(r));
        }
    }

    void conductorRelations() {
        for (int i = 0; i < m_; ++i)
            for (std::size_t k = 0; k < fGenCount_; ++k) {
                Relation r;
                r.kind = RelationKind::Module;
                Word w{F_.one(), zeroExp()};
                w.exps[shiftBase_ + static_cast<std::size_t>(i)] = 1;
                w.exps[k] = 1;
                r.lhs.push_back(w);
                r.bracket = bracketOf(P_.generators[shiftBase_ + static_cast<std::size_t>(i)].value *
                                      P_.generators[k].value);
                push(std::move(r));
            }
        for (int i = 0; i < m_; ++i)
            for (int j = i; j < m_; ++j) {
                Relation r;
                r.kind = RelationKind::Shift;
                Word w{F_.one(), zeroExp()};
                ++w.exps[shiftBase_ + static_cast<std::size_t>(i)];
                ++w.exps[shiftBase_ + static_cast<std::size_t>(j)];
                r.lhs.push_back(w);
                r.bracket = bracketOf(Poly::monomial(F_, static_cast<std::size_t>(2 * m_ + i + j)));
                push(std::move(r));
            }
    }

    void emptyGammaRelations() {
        addShiftGenerators();
        for (int i = 0; i < m_; ++i)
            for (int j = i; j < m_; ++j) {
                Relation r;
                r.kind = RelationKind::Shift;
                Word w{F_.one(), zeroExp()};
                ++w.exps[static_cast<std::size_t>(i)];
                ++w.exps[static_cast<std::size_t>(j)];
                r.lhs.push_back(w);
                Word rhs{F_.one(), zeroExp()};
                if (i + j < m_) {
                    rhs.exps[0] += 1;
                    rhs.exps[static_cast<std::size_t>(i + j)] += 1;
                } else {
                    rhs.exps[0] += 2;
                    rhs.exps[static_cast<std::size_t>(i + j - m_)] += 1;
                }
                r.rhs.push_back(rhs);
                push(std::move(r));
            }
    }

    const CanonicalAlgebra& A_;
    const GammaStructure* g_;
    FieldSpec F_;
    int m_;
    Presentation P_;
    std::size_t fGenCount_ = 0;
    std::size_t shiftBase_ = 0;
};

Poly evaluateKx(const Presentation& P, const std::vector<Word>& words) {
    Poly sum(P.field);
    for (const auto& w : words) {
        Poly term = Poly::monomial(P.field, 0, w.coeff);
        for (std::size_t k = 0; k < w.exps.size(); ++k)
            for (int e = 0; e < w.exps[k]; ++e) term = term * P.generators[k].value;
        sum += term;
    }
    return sum;
}

TruncPoly evaluateF(const Presentation& P, const std::vector<Word>& words) {
    const auto m = static_cast<std::size_t>(P.m);
    TruncPoly sum(P.field, m);
    for (const auto& w : words) {
        TruncPoly term = TruncPoly::one(P.field, m) * w.coeff;
        for (std::size_t k = 0; k < w.exps.size(); ++k) {
            const TruncPoly v = P.generators[k].value.truncate(m);
            for (int e = 0; e < w.exps[k]; ++e) term = mulInF(term, v);
        }
        sum += term;
    }
    return sum;
}

}  // namespace

Presentation present(const CanonicalAlgebra& A, Target target, Style style, const std::optional<GammaStructure>& g) {
    std::optional<GammaStructure> own;
    const GammaStructure* gs = nullptr;
    if (!A.gamma().empty()) {
        if (g) {
            if (!(g->gamma == A.gamma())) throw ValidationError("GammaStructure does not match the algebra");
            gs = &*g;
        } else {
            own = structure(A.gamma());
            gs = &*own;
        }
    }
    Presentation P = Builder(A, target, style, gs).build();
    for (const auto& r : P.relations)
        if (!validateRelation(P, r))
            throw InternalError("relation failed substitution: " + relationToText(P, r));
    return P;
}

bool validateRelation(const Presentation& P, const Relation& r) {
    if (P.target == Target::Bar) {
        if (r.bracket) return false;
        return evaluateF(P, r.lhs) == evaluateF(P, r.rhs);
    }
    Poly rhs = evaluateKx(P, r.rhs);
    if (r.bracket) rhs += r.bracket->expand();
    return evaluateKx(P, r.lhs) == rhs;
}

std::size_t quotientDimension(const Presentation& P) {
    if (P.target != Target::Bar) throw ValidationError("quotientDimension needs a bar presentation");
    const int bound = P.m - 2;
    const std::size_t n = P.generators.size();
    std::vector<int> weights;
    for (const auto& gen : P.generators) weights.push_back(gen.weight);
    auto weightOf = [&](const Exponent& e) {
        int w = 0;
        for (std::size_t k = 0; k < n; ++k) w += e[k] * weights[k];
        return w;
    };

    std::vector<Exponent> basis;
    Exponent cur(n, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t k, int used) {
        if (k == n) {
            basis.push_back(cur);
            return;
        }
        for (int e = 0; used + e * weights[k] <= bound; ++e) {
            cur[k] = e;
            walk(k + 1, used + e * weights[k]);
        }
        cur[k] = 0;
    };
    walk(0, 0);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    Matrix rows;
    for (const auto& r : P.relations) {
        std::map<Exponent, Scalar> poly;
        for (const auto& w : r.lhs) {
            auto [it, fresh] = poly.emplace(w.exps, w.coeff);
            if (!fresh) it->second += w.coeff;
        }
        for (const auto& w : r.rhs) {
            auto [it, fresh] = poly.emplace(w.exps, -w.coeff);
            if (!fresh) it->second -= w.coeff;
        }
        for (const auto& e : basis) {
            std::vector<Scalar> row(basis.size(), P.field.zero());
            bool any = false;
            for (const auto& [t, c] : poly) {
                if (c.isZero()) continue;
                Exponent prod = e;
                for (std::size_t k = 0; k < n; ++k) prod[k] += t[k];
                if (weightOf(prod) > bound) continue;
                row[index.at(prod)] += c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return basis.size() - rank(std::move(rows), P.field);
}

namespace {

std::string wordToText(const Presentation& P, const Word& w, bool first) {
    std::ostringstream os;
    bool negative = w.coeff.characteristic() == 0 && sgn(w.coeff.rational()) < 0;
    const Scalar mag = negative ? -w.coeff : w.coeff;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    std::vector<std::string> factors;
    if (!mag.isOne()) factors.push_back(mag.toString());
    for (std::size_t k = 0; k < w.exps.size(); ++k) {
        if (w.exps[k] == 0) continue;
        std::string f = P.generators[k].name;
        if (w.exps[k] > 1) f += "^" + std::to_string(w.exps[k]);
        factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    return os.str();
}

std::string sideToText(const Presentation& P, const std::vector<Word>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) out += wordToText(P, words[i], i == 0);
    return out;
}

}  // namespace

std::string relationToText(const Presentation& P, const Relation& r) {
    std::string lhs = sideToText(P, r.lhs);
    std::string rhs = sideToText(P, r.rhs);
    if (r.bracket) rhs += (rhs.empty() ? "" : " + ") + r.bracket->toString();
    if (rhs.empty()) rhs = "0";
    return lhs + " = " + rhs;
}

std::string toText(const Presentation& P) {
    std::ostringstream os;
    os << "# " << toString(P.target) << " " << toString(P.style) << " " << toString(P.tag) << "\n";
    os << "# generators:";
    for (const auto& g : P.generators) os << " " << g.name << "=" << g.value.toString();
    os << "\n";
    for (const auto& r : P.relations) os << relationToText(P, r) << "\n";
    return os.str();
}

}  // namespace coartin
