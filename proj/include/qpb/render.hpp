#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qpb/bundle.hpp"
#include "qpb/fano.hpp"
#include "qpb/gw.hpp"
#include "qpb/quantum.hpp"

namespace qpb {

using Json = nlohmann::ordered_json;

/// Two lines "f1: h^{n+1} = ...", "f2: ... = ...". For split bundles the
/// product sides are kept factored, matching the closed form; otherwise the
/// expanded signed combination is printed, terms in lexicographic order.
std::string render_relations_text(const QuantumRelations& rel);

/// Template rendering with unfilled coefficients shown as a(i,j) / b(i,j).
std::string render_template_text(const RelationTemplate& tpl);

Json spec_json(const BundleSpec& spec);
Json relations_json(const QuantumRelations& rel);
Json template_json(const RelationTemplate& tpl);
Json hypothesis_json(const BundleSpec& spec, const HypothesisReport& rep);
Json gw_json(const GwQuery& q, const GwResult& res);

/// Canonical serialization used everywhere: two-space indentation over
/// insertion-ordered objects, so parse + re-render is byte-identical.
std::string dump_json(const Json& j);

}  // namespace qpb
