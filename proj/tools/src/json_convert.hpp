#pragma once

// nlohmann::json conversions for the library types the command line
// prints. Rationals are strings "num/den". Every to_json has a matching
// from_json, so printed results can be read back.

#include "json.hpp"

#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"
#include "monoflow/orientation.hpp"
#include "monoflow/planar.hpp"
#include "monoflow/suites.hpp"

namespace monoflow {

using nlohmann::json;

void to_json(json& j, const SignedGraph& g);
void from_json(const json& j, SignedGraph& g);

void to_json(json& j, const Arc& a);
void from_json(const json& j, Arc& a);

/// As a list of arcs; from_json needs no host graph and skips the endpoint check.
void to_json(json& j, const Orientation& d);
Orientation orientation_from_json(const json& j, const SignedGraph& g);

void to_json(json& j, const FlowKindSpec& k);
void from_json(const json& j, FlowKindSpec& k);

void to_json(json& j, const FlowAssignment& f);
void from_json(const json& j, FlowAssignment& f);

void to_json(json& j, const Cut& c);
void from_json(const json& j, Cut& c);

void to_json(json& j, const TightCutReport& t);
void from_json(const json& j, TightCutReport& t);

std::string to_string(IndexKind k);
IndexKind parse_index_kind(const std::string& name);

/// Witnesses are stored with their arcs and read back against `g`.
json index_result_to_json(const IndexResult& r);
IndexResult index_result_from_json(const json& j, const SignedGraph& g);

json flow_witness_to_json(const FlowWitness& w);
FlowWitness flow_witness_from_json(const json& j, const SignedGraph& g);

void to_json(json& j, const PlaneEmbedding& emb);
void from_json(const json& j, PlaneEmbedding& emb);

void to_json(json& j, const HomomorphismMapping& h);
void from_json(const json& j, HomomorphismMapping& h);

void to_json(json& j, const SuiteCase& c);
void from_json(const json& j, SuiteCase& c);

void to_json(json& j, const SuiteReport& r);
void from_json(const json& j, SuiteReport& r);

}  // namespace monoflow
