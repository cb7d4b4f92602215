#include "coartin/json_io.hpp"

namespace coartin {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing key '") + key + "'");
    return j.at(key);
}

int intField(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> intList(const Json& v, const char* what) {
    require(v.is_array(), std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        require(x.is_number_integer(), std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Json polyJson(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(toJson(c));
    return arr;
}

Poly polyFromJson(const Json& v, const FieldSpec& F) {
    require(v.is_array(), "polynomial coefficients must be an array");
    std::vector<Scalar> cs;
    for (const auto& x : v) cs.push_back(scalarFromJson(x, F));
    return Poly(F, std::move(cs));
}

}  // namespace

Json toJson(const Scalar& s) { return s.toJsonString(); }

Scalar scalarFromJson(const Json& j, const FieldSpec& F) {
    if (j.is_number_integer()) return F.fromInt(j.get<long>());
    require(j.is_string(), "scalar must be a string like \"3/2\"");
    return F.parse(j.get<std::string>());
}

Json toJson(const Gamma& g) { return Json{{"m", g.m()}, {"gamma", g.members()}}; }

Gamma gammaFromJson(const Json& j) { return Gamma(intField(j, "m"), intList(field(j, "gamma"), "gamma")); }

Json toJson(const TruncPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(toJson(c));
    return Json{{"m", f.m()}, {"coeffs", arr}};
}

TruncPoly truncPolyFromJson(const Json& j, const FieldSpec& F) {
    const int m = intField(j, "m");
    require(m >= 1, "m must be positive");
    const Json& cs = field(j, "coeffs");
    require(cs.is_array() && cs.size() == static_cast<std::size_t>(m), "coeffs must have exactly m entries");
    std::vector<Scalar> v;
    for (const auto& x : cs) v.push_back(scalarFromJson(x, F));
    return TruncPoly(F, static_cast<std::size_t>(m), std::move(v));
}

Json toJson(const ConductorElement& e) {
    Json coords = Json::array();
    for (const auto& p : e.coords()) coords.push_back(polyJson(p));
    return Json{{"m", e.m()}, {"coords", coords}};
}

ConductorElement conductorFromJson(const Json& j, const FieldSpec& F) {
    const int m = intField(j, "m");
    require(m >= 1, "m must be positive");
    const Json& cs = field(j, "coords");
    require(cs.is_array() && cs.size() == static_cast<std::size_t>(m), "coords must have exactly m entries");
    std::vector<Poly> v;
    for (const auto& x : cs) v.push_back(polyFromJson(x, F));
    return ConductorElement(static_cast<std::size_t>(m), std::move(v));
}

Json toJson(const FieldSpec& f) { return Json{{"characteristic", f.characteristic()}}; }

FieldSpec fieldFromJson(const Json& j) {
    const Json& p = field(j, "characteristic");
    require(p.is_number_unsigned() || p.is_number_integer(), "characteristic must be an integer");
    require(p.get<long long>() >= 0, "characteristic must be nonnegative");
    return FieldSpec(p.get<std::uint64_t>());
}

Json toJson(const CanonicalAlgebra& A) {
    Json lambda = Json::array();
    for (const auto& [key, value] : A.lambdaTable())
        lambda.push_back(Json{{"gamma", key.first}, {"delta", key.second}, {"value", toJson(value)}});
    return Json{{"field", toJson(A.field())}, {"m", A.m()}, {"gamma", A.gamma().members()}, {"lambda", lambda}};
}

CanonicalAlgebra algebraFromJson(const Json& j) {
    const FieldSpec F = fieldFromJson(field(j, "field"));
    Gamma G(intField(j, "m"), intList(field(j, "gamma"), "gamma"));
    LambdaTable table;
    const Json& lam = field(j, "lambda");
    require(lam.is_array(), "lambda must be an array");
    for (const auto& e : lam) table[{intField(e, "gamma"), intField(e, "delta")}] = scalarFromJson(field(e, "value"), F);
    return CanonicalAlgebra::fromLambda(F, std::move(G), table);
}

Json exponentJson(const Exponent& a) { return Json(a); }

Json toJson(const GammaStructure& g) {
    Json rel = Json::object();
    for (const auto& [gam, list] : g.rel) {
        Json arr = Json::array();
        for (const auto& a : list) arr.push_back(exponentJson(a));
        rel[std::to_string(gam)] = arr;
    }
    Json a = Json::object();
    for (int gam : g.gamma.members()) a[std::to_string(gam)] = exponentJson(g.a(gam));
    return Json{{"m", g.m()}, {"gamma", g.gamma.members()}, {"ind", g.ind}, {"dec", g.dec}, {"dec_ge2", g.decGe2},
                {"rel", rel}, {"a", a}};
}

Json toJson(const RelationBasis& rb) {
    auto list = [](const std::vector<Exponent>& v) {
        Json arr = Json::array();
        for (const auto& a : v) arr.push_back(exponentJson(a));
        return arr;
    };
    return Json{{"b_all", list(rb.bAll)},       {"b_prime", list(rb.bPrime)}, {"avoidable", rb.avoidable},
                {"non_avoidable", rb.nonAvoidable}, {"b", list(rb.bList)},      {"mu", rb.muList},
                {"t", rb.t}};
}

Json toJson(const OrderTables& t) { return Json{{"L", t.L}, {"B", t.B}, {"O", t.O}}; }

Json toJson(const Presentation& P) {
    Json gens = Json::array();
    for (const auto& g : P.generators)
        gens.push_back(Json{{"name", g.name}, {"value", g.value.toString()}, {"weight", g.weight}});
    auto words = [&](const std::vector<Word>& ws) {
        Json arr = Json::array();
        for (const auto& w : ws) arr.push_back(Json{{"coeff", toJson(w.coeff)}, {"exponents", w.exps}});
        return arr;
    };
    Json rels = Json::array();
    for (const auto& r : P.relations) {
        Json jr{{"kind", toString(r.kind)}, {"text", relationToText(P, r)}, {"lhs", words(r.lhs)}, {"rhs", words(r.rhs)}};
        jr["bracket"] = r.bracket ? toJson(*r.bracket) : Json(nullptr);
        rels.push_back(jr);
    }
    Json out{{"target", toString(P.target)},
             {"style", toString(P.style)},
             {"case", toString(P.tag)},
             {"field", toJson(P.field)},
             {"m", P.m},
             {"generators", gens},
             {"relations", rels},
             {"exchange_count", P.exchangeCount}};
    if (P.target == Target::Bar) out["quotient_dimension"] = quotientDimension(P);
    return out;
}

Json toJson(const AutDescription& a) {
    Json out{{"kind", a.kind == AutKind::FullTorus ? "full-torus" : "cyclic"}};
    out["order"] = a.kind == AutKind::FullTorus ? Json(nullptr) : Json(a.n);
    out["generator"] = a.generator();
    return out;
}

Json toJson(const IsoWitness& w, const FieldSpec& F) {
    Json cs = Json::array();
    for (const auto& t : w.checkedExponents) cs.push_back(Json{{"k", t.k}, {"c", toJson(t.c)}});
    Json out{{"isomorphic", w.solvable},
             {"over", "algebraic closure"},
             {"forced_power", Json{{"g", w.g}, {"mu", toJson(w.mu)}}},
             {"constraints", cs}};
    if (!w.solvable) {
        out["reason"] = w.reason;
        return out;
    }
    const auto lam = baseFieldLambda(F, w);
    out["base_field"] = lam ? "isomorphic" : "undetermined";
    out["base_field_lambda"] = lam ? toJson(*lam) : Json(nullptr);
    if (!F.isRational()) out["base_field_root_exists"] = baseFieldSolvable(F, w);
    return out;
}

Json toJson(const VarietyEquation& e, const std::vector<VarietyVariable>& vars) {
    Json terms = Json::array();
    for (auto it = e.poly.terms().rbegin(); it != e.poly.terms().rend(); ++it)
        terms.push_back(Json{{"coeff", toJson(it->second)}, {"exponents", it->first}});
    return Json{{"poly", e.poly.toString(variableNames(vars))},
                {"j", e.j},
                {"degree", e.degree},
                {"source", e.source},
                {"terms", terms}};
}

Json toJson(const VarietyPresentation& V) {
    Json vars = Json::array();
    for (const auto& v : V.variables) vars.push_back(Json{{"name", v.name()}, {"nu", v.nu}, {"j", v.j}, {"weight", v.weight()}});
    auto eqs = [&](const std::vector<VarietyEquation>& list) {
        Json arr = Json::array();
        for (const auto& e : list) arr.push_back(toJson(e, V.variables));
        return arr;
    };
    return Json{{"kind", toString(V.kind)},
                {"field", toJson(V.field)},
                {"m", V.gamma.m()},
                {"gamma", V.gamma.members()},
                {"n", V.nVars},
                {"l", V.lXY},
                {"dim_lower_bound", V.dimLowerBound},
                {"variables", vars},
                {"equations_xx", eqs(V.equationsXX)},
                {"equations_xy", eqs(V.equationsXY)}};
}

}  // namespace coartin
