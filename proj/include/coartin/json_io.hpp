#pragma once

#include <json.hpp>

#include "coartin/autiso.hpp"
#include "coartin/presentation.hpp"
#include "coartin/semigroup.hpp"
#include "coartin/subalgebra.hpp"
#include "coartin/variety.hpp"

namespace coartin {

/// Insertion-ordered, so emitted documents keep a fixed key order.
using Json = nlohmann::ordered_json;

/// "num/den" over Q, the decimal residue over F_p.
Json toJson(const Scalar& s);
Scalar scalarFromJson(const Json& j, const FieldSpec& field);

Json toJson(const Gamma& g);
Gamma gammaFromJson(const Json& j);

Json toJson(const TruncPoly& f);
TruncPoly truncPolyFromJson(const Json& j, const FieldSpec& field);

Json toJson(const ConductorElement& e);
ConductorElement conductorFromJson(const Json& j, const FieldSpec& field);

Json toJson(const FieldSpec& f);
FieldSpec fieldFromJson(const Json& j);

Json toJson(const CanonicalAlgebra& A);
CanonicalAlgebra algebraFromJson(const Json& j);

Json toJson(const GammaStructure& g);
Json toJson(const RelationBasis& rb);
Json toJson(const OrderTables& t);
Json toJson(const Presentation& P);
Json toJson(const AutDescription& a);
/// Verdict over the algebraic closure, plus the base-field report.
Json toJson(const IsoWitness& w, const FieldSpec& field);
Json toJson(const VarietyEquation& e, const std::vector<VarietyVariable>& vars);
Json toJson(const VarietyPresentation& V);

Json exponentJson(const Exponent& a);

}  // namespace coartin
