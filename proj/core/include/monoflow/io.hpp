#pragma once

// Text formats for flows and certificates.
//
// Flow file:
//   kind <circular-r|circular-mod-r> <r>      or   kind <pq|mod-pq> <p>/<q>
//   <edge_id> <tail> <head> <value>            one line per edge
//
// Certificate file (every line optional, order free):
//   form <name>                  Eulerian form (flow-4k, special-mod-flow, ...)
//   k <k>   ell <l>
//   o <edge_id> <tail> <head>    orientation
//   val <edge_id> <value>        edge value
//   s <edge_id> <+|->            signature used
//   part <i> <edge_id> ...       partition class
//   b <vertex> <residue> mod <m> boundary

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"
#include "monoflow/orientation.hpp"

namespace monoflow {

/// Throws ParseError on malformed text and PreconditionError when the
/// lines do not cover every edge of g exactly once or do not match it.
FlowWitness parse_flow_file(std::string_view text, const SignedGraph& g);
std::string format_flow_file(const FlowWitness& w);

/// "circular-r", "pq", ...; throws PreconditionError on an unknown name.
FlowKind parse_flow_kind(std::string_view name);

struct CertificateFile {
  std::optional<EulerianForm> form;
  std::optional<int> k;
  std::optional<int> ell;
  std::map<int, Arc> arcs;
  std::map<int, Rational> values;
  std::map<int, Sign> signs;
  std::map<int, std::vector<int>> parts;
  std::map<int, int> residues;
  std::optional<int> modulus;
};

CertificateFile parse_certificate_file(std::string_view text);
std::string format_certificate_file(const CertificateFile& c);

EulerianForm parse_eulerian_form(std::string_view name);

/// Accessors that check coverage against a graph; all throw
/// PreconditionError when something is missing or inconsistent.
Orientation certificate_orientation(const CertificateFile& c, const SignedGraph& g);
/// One optional arc per edge, for partial assignments.
std::vector<std::optional<Arc>> certificate_partial_orientation(const CertificateFile& c, const SignedGraph& g);
BoundaryFunction certificate_boundary(const CertificateFile& c, const SignedGraph& g);
EulerianCertificate certificate_eulerian(const CertificateFile& c, const SignedGraph& g);
ModOrientationCertificate certificate_mod_orientation(const CertificateFile& c, const SignedGraph& g);
PartitionCertificate certificate_partition(const CertificateFile& c, const SignedGraph& g);

CertificateFile to_certificate_file(const EulerianCertificate& cert);
CertificateFile to_certificate_file(const ModOrientationCertificate& cert);
CertificateFile to_certificate_file(const PartitionCertificate& cert);
CertificateFile to_certificate_file(const Orientation& d);
CertificateFile to_certificate_file(const BoundaryFunction& beta);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace monoflow
