#include "coartin/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "coartin/autiso.hpp"
#include "coartin/families.hpp"
#include "coartin/json_io.hpp"
#include "coartin/presentation.hpp"
#include "coartin/variety.hpp"

namespace coartin {

int maxM() {
    const char* env = std::getenv("COARTIN_MAX_M");
    if (env == nullptr || *env == '\0') return 20;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 2 || v > 1000) throw ValidationError("COARTIN_MAX_M must be an integer in [2, 1000]");
    return static_cast<int>(v);
}

namespace {

enum class Format { Json, Text, Csv };

struct Common {
    std::string format = "json";
    std::uint64_t characteristic = 0;
    bool pretty = false;

    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "text") return Format::Text;
        if (format == "csv") return Format::Csv;
        throw ValidationError("--format must be json, text or csv");
    }
    FieldSpec field() const { return FieldSpec(characteristic); }
    std::optional<std::uint64_t> p() const {
        if (characteristic == 0) return std::nullopt;
        return characteristic;
    }
};

void checkM(int m, int lowest = 2) {
    if (m < lowest) throw ValidationError("--m must be >= " + std::to_string(lowest));
    const int cap = maxM();
    if (m > cap) throw ValidationError("--m " + std::to_string(m) + " exceeds COARTIN_MAX_M = " + std::to_string(cap));
}

std::vector<int> parseIntList(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string cleaned;
    for (char c : text)
        if (c != '{' && c != '}' && c != '(' && c != ')' && c != ' ') cleaned += c;
    if (cleaned.empty()) return out;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (item.empty() || pos != item.size()) throw ValidationError(what + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

Gamma parseGamma(int m, const std::string& text) { return Gamma(m, parseIntList(text, "--gamma")); }

/// "12=0,2;10=1,1".
std::map<int, Exponent> parseChoice(const std::string& text) {
    std::map<int, Exponent> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("--choice entries look like 12=0,2");
        const auto key = parseIntList(item.substr(0, eq), "--choice");
        if (key.size() != 1) throw ValidationError("--choice entries look like 12=0,2");
        out[key[0]] = parseIntList(item.substr(eq + 1), "--choice");
    }
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string joinInts(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

template <typename T>
std::string joinU(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

/// Where an algebra comes from: generator polynomials, a polynomial list file,
/// a JSON document, or a named family.
struct AlgebraSource {
    int m = 0;
    std::vector<std::string> gens;
    std::string gensFile;
    std::string jsonFile;
    std::string family;
    int l = 0;
    int i = 0;
    std::string gamma;
    int at = 0;

    void attach(CLI::App* app, const std::string& genFlag = "--gen", const std::string& prefix = "") {
        app->add_option(genFlag, gens, "generator polynomial, e.g. \"x^2 + 3/2 x^5\" (repeatable)");
        app->add_option("--" + prefix + "gens-file", gensFile, "file with one polynomial per line");
        app->add_option("--" + prefix + "algebra-json", jsonFile, "algebra as emitted by `canonical`");
        if (prefix.empty()) {
            app->add_option("--family", family, "agl, al, ai, even-extremal or odd-extremal");
            app->add_option("--l", l, "family parameter l");
            app->add_option("--i", i, "family parameter i");
            app->add_option("--gamma", gamma, "semigroup for --family agl, e.g. \"2,4\"");
            app->add_option("--at", at, "element gamma of Gamma for --family agl");
        }
    }

    CanonicalAlgebra build(const FieldSpec& F) const {
        if (!jsonFile.empty()) {
            Json j;
            try {
                j = Json::parse(readFile(jsonFile));
            } catch (const Json::parse_error& e) {
                throw ValidationError(std::string("algebra JSON: ") + e.what());
            }
            if (j.contains("algebra")) j = j.at("algebra");
            CanonicalAlgebra A = algebraFromJson(j);
            checkM(A.m());
            return A;
        }
        checkM(m);
        if (!family.empty()) {
            switch (parseFamilyKind(family)) {
                case FamilyKind::AGammaL: return familyAGammaL(F, parseGamma(m, gamma), at, l).algebra;
                case FamilyKind::AL: return familyAL(F, m, l).algebra;
                case FamilyKind::AI: return familyAI(F, m, i).algebra;
                case FamilyKind::EvenExtremal: return evenExtremal(F, m).algebra;
                case FamilyKind::OddExtremal: return oddExtremal(F, m).algebra;
            }
        }
        std::vector<Poly> polys;
        for (const auto& g : gens) polys.push_back(parsePoly(g, F));
        if (!gensFile.empty())
            for (auto& p : parsePolyList(readFile(gensFile), F)) polys.push_back(std::move(p));
        return fromGenerators(F, m, polys);
    }
};

class Runner {
public:
    Runner(std::ostream& out) : out_(out) {}

    void emit(const Json& j, const Common& c) {
        out_ << (c.pretty ? j.dump(2) : j.dump()) << "\n";
    }

    [[noreturn]] static void noCsv(const std::string& verb) {
        throw ValidationError("csv output is not available for '" + verb + "'");
    }

    void enumerate(const Common& c, int m) {
        checkM(m);
        const auto all = enumerateS(m);
        switch (c.fmt()) {
            case Format::Json: {
                Json list = Json::array();
                for (const auto& g : all) list.push_back(g.members());
                emit(Json{{"m", m}, {"count", all.size()}, {"semigroups", list}}, c);
                break;
            }
            case Format::Text:
                for (const auto& g : all) out_ << g.toString() << "\n";
                break;
            case Format::Csv:
                out_ << "m,gamma\n";
                for (const auto& g : all) out_ << m << "," << joinInts(g.members()) << "\n";
                break;
        }
    }

    void gammaInfo(const Common& c, int m, const std::string& gammaText, const std::string& choice) {
        checkM(m);
        const Gamma G = parseGamma(m, gammaText);
        Json j{{"m", m}, {"gamma", G.members()}, {"complement", G.complement()}};
        j["L"] = orderSetL(G, c.p());
        if (!G.empty()) {
            const GammaStructure g = structure(G, parseChoice(choice));
            const Json s = toJson(g);
            for (const char* k : {"ind", "dec", "dec_ge2", "rel", "a"}) j[k] = s.at(k);
            Json cig = Json::array();
            for (const auto& v : conductorIdealGenerators(g)) cig.push_back(exponentJson(v));
            j["conductor_generators"] = cig;
            j["relation_rank"] = relationLatticeRank(g);
            j["relation_basis"] = g.decGe2.empty() ? Json(nullptr) : toJson(relationBasis(g));
        }
        switch (c.fmt()) {
            case Format::Json: emit(j, c); break;
            case Format::Text:
                for (const auto& [k, v] : j.items()) out_ << k << ": " << v.dump() << "\n";
                break;
            case Format::Csv: noCsv("gamma-info");
        }
    }

    void canonical(const Common& c, const AlgebraSource& src) {
        const CanonicalAlgebra A = src.build(c.field());
        Json basis = Json::array();
        for (int g : A.gamma().members()) basis.push_back(Json{{"gamma", g}, {"f", A.f(g).toString()}});
        switch (c.fmt()) {
            case Format::Json:
                emit(Json{{"algebra", toJson(A)}, {"basis", basis}, {"dimension", A.barDimension()},
                          {"monomial", A.isMonomial()}},
                     c);
                break;
            case Format::Text:
                out_ << "m = " << A.m() << "\nGamma = " << A.gamma().toString() << "\n";
                for (int g : A.gamma().members()) out_ << "f_" << g << " = " << A.f(g).toString() << "\n";
                break;
            case Format::Csv: noCsv("canonical");
        }
    }

    void present(const Common& c, const AlgebraSource& src, const std::string& target, const std::string& style,
                 const std::string& choice) {
        const CanonicalAlgebra A = src.build(c.field());
        std::optional<GammaStructure> g;
        if (!choice.empty()) {
            if (A.gamma().empty()) throw ValidationError("--choice needs a nonempty Gamma");
            g = structure(A.gamma(), parseChoice(choice));
        }
        const Presentation P = coartin::present(A, parseTarget(target), parseStyle(style), g);
        switch (c.fmt()) {
            case Format::Json: emit(toJson(P), c); break;
            case Format::Text: out_ << toText(P); break;
            case Format::Csv: noCsv("present");
        }
    }

    void aut(const Common& c, const AlgebraSource& src) {
        const CanonicalAlgebra A = src.build(c.field());
        const AutDescription a = autGroup(A);
        switch (c.fmt()) {
            case Format::Json: emit(toJson(a), c); break;
            case Format::Text:
                if (a.kind == AutKind::FullTorus)
                    out_ << "full torus (monomial algebra)\n";
                else
                    out_ << "cyclic of order " << a.n << ", generated by " << a.generator() << "\n";
                break;
            case Format::Csv: noCsv("aut");
        }
    }

    void iso(const Common& c, const AlgebraSource& a, const AlgebraSource& b) {
        const FieldSpec F = c.field();
        const IsoWitness w = isoTest(a.build(F), b.build(F));
        const Json j = toJson(w, F);
        switch (c.fmt()) {
            case Format::Json: emit(j, c); break;
            case Format::Text:
                if (!w.solvable) {
                    out_ << "not isomorphic: " << w.reason << "\n";
                    break;
                }
                out_ << "isomorphic over the algebraic closure; every isomorphism t_lambda has lambda^" << w.g
                     << " = " << w.mu.toString() << "\n";
                out_ << "over the base field: " << j.at("base_field").get<std::string>();
                if (!j.at("base_field_lambda").is_null())
                    out_ << " (lambda = " << j.at("base_field_lambda").get<std::string>() << ")";
                out_ << "\n";
                break;
            case Format::Csv: noCsv("iso");
        }
    }

    void orders(const Common& c, int m) {
        checkM(m, 4);
        const OrderTables t = orderTables(m, c.p());
        switch (c.fmt()) {
            case Format::Json: emit(toJson(t), c); break;
            case Format::Text:
                out_ << "L: " << joinInts(t.L) << "\nB: " << joinInts(t.B) << "\nO: " << joinInts(t.O) << "\n";
                break;
            case Format::Csv:
                out_ << "m,set,l\n";
                for (const auto& [name, v] : {std::pair{"L", &t.L}, std::pair{"B", &t.B}, std::pair{"O", &t.O}})
                    for (int l : *v) out_ << m << "," << name << "," << l << "\n";
                break;
        }
    }

    void realize(const Common& c, int m, const std::string& gammaText, int tries, std::uint64_t seed) {
        checkM(m, 4);
        const FieldSpec F = c.field();
        if (!gammaText.empty()) {
            realizeForGamma(c, parseGamma(m, gammaText), tries, seed);
            return;
        }
        const auto table = realizeOrders(m, F);
        const auto orders = realizedOrders(table);
        switch (c.fmt()) {
            case Format::Json: {
                Json rows = Json::array();
                for (const auto& r : table)
                    rows.push_back(Json{{"l", r.l},
                                        {"order", r.order},
                                        {"gamma", r.gamma.members()},
                                        {"gamma_element", r.gammaElement},
                                        {"generator", r.example.generator.toString()}});
                emit(Json{{"m", m}, {"field", toJson(F)}, {"orders", orders}, {"O", orderTables(m, c.p()).O},
                          {"realizations", rows}},
                     c);
                break;
            }
            case Format::Text:
                for (const auto& r : table)
                    out_ << "l=" << r.l << " order=" << r.order << " Gamma=" << r.gamma.toString()
                         << " g=" << r.example.generator.toString() << "\n";
                break;
            case Format::Csv:
                out_ << "l,order,gamma,gamma_element,generator\n";
                for (const auto& r : table)
                    out_ << r.l << "," << r.order << "," << joinInts(r.gamma.members()) << "," << r.gammaElement << ","
                         << r.example.generator.toString() << "\n";
                break;
        }
    }

    void realizeForGamma(const Common& c, const Gamma& G, int tries, std::uint64_t seed) {
        if (G.empty()) throw ValidationError("--gamma must be nonempty");
        if (tries < 1) throw ValidationError("--tries must be >= 1");
        const FieldSpec F = c.field();
        const auto L = orderSetL(G);
        Json rows = Json::array();
        for (int l : L) {
            const auto found = searchOrderRealization(G, static_cast<std::uint64_t>(l), F, tries, seed);
            Json row{{"l", l}, {"order", reduceOrder(static_cast<std::uint64_t>(l), F)}, {"found", found.has_value()}};
            row["algebra"] = found ? toJson(*found) : Json(nullptr);
            rows.push_back(row);
        }
        switch (c.fmt()) {
            case Format::Json:
                emit(Json{{"m", G.m()}, {"gamma", G.members()}, {"L", L}, {"tries", tries}, {"seed", seed},
                          {"results", rows}},
                     c);
                break;
            case Format::Text:
                for (const auto& r : rows)
                    out_ << "l=" << r.at("l").get<int>() << (r.at("found").get<bool>() ? " realized" : " not found")
                         << "\n";
                break;
            case Format::Csv:
                out_ << "l,order,found\n";
                for (const auto& r : rows)
                    out_ << r.at("l").get<int>() << "," << r.at("order").get<std::uint64_t>() << ","
                         << (r.at("found").get<bool>() ? "true" : "false") << "\n";
                break;
        }
    }

    void varietyVerb(const Common& c, int m, const std::string& gammaText, const std::string& system,
                     const std::string& choice) {
        checkM(m);
        if (system != "xx" && system != "xy" && system != "both") throw ValidationError("--system must be xx, xy or both");
        const Gamma G = parseGamma(m, gammaText);
        VarietyPresentation V = variety(G, c.field(), parseChoice(choice));
        if (system == "xx") V.equationsXY.clear();
        if (system == "xy") V.equationsXX.clear();
        switch (c.fmt()) {
            case Format::Json: {
                Json j = toJson(V);
                if (system == "xx") j.erase("equations_xy");
                if (system == "xy") j.erase("equations_xx");
                emit(j, c);
                break;
            }
            case Format::Text: {
                const auto names = variableNames(V.variables);
                for (const auto* list : {&V.equationsXX, &V.equationsXY})
                    for (const auto& e : *list) out_ << e.poly.toString(names) << "\n";
                break;
            }
            case Format::Csv: noCsv("variety");
        }
    }

    void fixedPoints(const Common& c, int m, const std::string& gammaText, int n) {
        checkM(m);
        const Gamma G = parseGamma(m, gammaText);
        if (n < 1) throw ValidationError("--n must be >= 1");
        std::vector<VarietyVariable> all, killed;
        if (!G.empty()) {
            const GammaStructure g = structure(G);
            all = varietyVariables(g);
            killed = fixedPointEquations(g, n);
        }
        Json vanish = Json::array(), free = Json::array();
        for (const auto& v : all) {
            const bool k = std::find(killed.begin(), killed.end(), v) != killed.end();
            (k ? vanish : free).push_back(v.name());
        }
        switch (c.fmt()) {
            case Format::Json:
                emit(Json{{"m", m}, {"gamma", G.members()}, {"n", n}, {"vanishing", vanish}, {"free", free}}, c);
                break;
            case Format::Text:
                for (const auto& v : vanish) out_ << v.get<std::string>() << " = 0\n";
                break;
            case Format::Csv: noCsv("fixed-points");
        }
    }

    void sweep(const Common& c, int from, int to) {
        if (from < 4) throw ValidationError("--from must be >= 4");
        if (to < from) throw ValidationError("--to must be >= --from");
        checkM(to, 4);
        Json rows = Json::array();
        for (int m = from; m <= to; ++m) {
            const OrderTables t = orderTables(m, c.p());
            rows.push_back(Json{{"m", m},
                                {"semigroups", enumerateS(m).size()},
                                {"L", t.L},
                                {"B", t.B},
                                {"O", t.O},
                                {"B_size", t.B.size()},
                                {"max_finite_order", maxFiniteOrder(m, c.p())}});
        }
        switch (c.fmt()) {
            case Format::Json: emit(Json{{"field", toJson(c.field())}, {"rows", rows}}, c); break;
            case Format::Text:
                for (const auto& r : rows)
                    out_ << "m=" << r.at("m").get<int>() << " |S|=" << r.at("semigroups").get<std::size_t>()
                         << " |B|=" << r.at("B_size").get<std::size_t>()
                         << " max=" << r.at("max_finite_order").get<int>() << " O={"
                         << joinInts(r.at("O").get<std::vector<int>>(), ",") << "}\n";
                break;
            case Format::Csv:
                out_ << "m,semigroups,L,B,O,B_size,max_finite_order\n";
                for (const auto& r : rows)
                    out_ << r.at("m").get<int>() << "," << r.at("semigroups").get<std::size_t>() << ","
                         << joinInts(r.at("L").get<std::vector<int>>()) << ","
                         << joinInts(r.at("B").get<std::vector<int>>()) << ","
                         << joinInts(r.at("O").get<std::vector<int>>()) << "," << r.at("B_size").get<std::size_t>()
                         << "," << r.at("max_finite_order").get<int>() << "\n";
                break;
        }
    }

private:
    std::ostream& out_;
};

Json errorJson(const char* kind, const std::string& message) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Co-artin subalgebras of K[x]: canonical bases, presentations, automorphisms, isomorphisms, varieties",
                 "coartin"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--format", c.format, "json (default), text or csv");
    app.add_option("--char", c.characteristic, "field characteristic: 0 or a prime");
    app.add_flag("--pretty", c.pretty, "indent JSON output");

    int m = 0;
    std::string gammaText, choice, system = "xy", target = "bar", style = "irredundant";
    int n = 1, from = 4, to = 10, tries = 200;
    std::uint64_t seed = 1;
    AlgebraSource src, srcA, srcB;

    auto* enumerate = app.add_subcommand("enumerate-s", "list S(m)");
    enumerate->add_option("--m", m)->required();

    auto* gammaInfo = app.add_subcommand("gamma-info", "ind, dec, Rel, conductor generators, relation basis");
    gammaInfo->add_option("--m", m)->required();
    gammaInfo->add_option("--gamma", gammaText)->required();
    gammaInfo->add_option("--choice", choice, "override a(gamma), e.g. \"12=3,0\"");

    auto* canonical = app.add_subcommand("canonical", "canonical basis of the generated algebra");
    canonical->add_option("--m", src.m);
    src.attach(canonical);

    auto* present = app.add_subcommand("present", "generators and defining relations");
    present->add_option("--m", src.m);
    src.attach(present);
    present->add_option("--target", target, "bar (A mod x^m) or full (A)");
    present->add_option("--style", style, "raw, irredundant or structure");
    present->add_option("--choice", choice, "override a(gamma), e.g. \"12=3,0\"");

    auto* aut = app.add_subcommand("aut", "automorphism group");
    aut->add_option("--m", src.m);
    src.attach(aut);

    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("--m", m)->required();
    srcA.attach(iso, "--a", "a-");
    srcB.attach(iso, "--b", "b-");

    auto* orders = app.add_subcommand("orders", "the sets L(m), B(m), O(m)");
    orders->add_option("--m", m)->required();

    auto* realize = app.add_subcommand("realize-orders", "an algebra for every finite automorphism order");
    realize->add_option("--m", m)->required();
    realize->add_option("--gamma", gammaText, "search inside A(m, Gamma) instead");
    realize->add_option("--tries", tries, "random draws per order with --gamma");
    realize->add_option("--seed", seed, "seed for --gamma searches");

    auto* varietyCmd = app.add_subcommand("variety", "defining equations of A(m, Gamma)");
    varietyCmd->add_option("--m", m)->required();
    varietyCmd->add_option("--gamma", gammaText)->required();
    varietyCmd->add_option("--system", system, "xx, xy (default) or both");
    varietyCmd->add_option("--choice", choice, "override a(gamma), e.g. \"12=3,0\"");

    auto* fixed = app.add_subcommand("fixed-points", "coordinates vanishing on the C_n fixed locus");
    fixed->add_option("--m", m)->required();
    fixed->add_option("--gamma", gammaText)->required();
    fixed->add_option("--n", n)->required();

    auto* sweep = app.add_subcommand("sweep", "order tables over a range of m");
    sweep->add_option("--from", from);
    sweep->add_option("--to", to);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << errorJson("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (c.characteristic != 0 && !isPrime(c.characteristic))
            throw ValidationError("--char must be 0 or a prime");
        srcA.m = m;
        srcB.m = m;
        Runner r(out);
        if (enumerate->parsed()) r.enumerate(c, m);
        else if (gammaInfo->parsed()) r.gammaInfo(c, m, gammaText, choice);
        else if (canonical->parsed()) r.canonical(c, src);
        else if (present->parsed()) r.present(c, src, target, style, choice);
        else if (aut->parsed()) r.aut(c, src);
        else if (iso->parsed()) r.iso(c, srcA, srcB);
        else if (orders->parsed()) r.orders(c, m);
        else if (realize->parsed()) r.realize(c, m, gammaText, tries, seed);
        else if (varietyCmd->parsed()) r.varietyVerb(c, m, gammaText, system, choice);
        else if (fixed->parsed()) r.fixedPoints(c, m, gammaText, n);
        else if (sweep->parsed()) r.sweep(c, from, to);
        return 0;
    } catch (const NotInAmError& e) {
        err << errorJson("not_in_am", e.what()).dump() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << errorJson("validation", e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << errorJson("internal", e.what()).dump() << "\n";
        return 1;
    }
}

}  // namespace coartin
