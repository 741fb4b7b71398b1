#include "monoflow/io.hpp"

#include <fstream>
#include <sstream>

#include "monoflow/errors.hpp"

namespace monoflow {

namespace {

std::string str(int x) { return std::to_string(x); }

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

Rational parse_value(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const ParseError&) {
    throw ParseError(line, "bad value '" + tok + "'");
  }
}

// Calls fn(line_number, tokens) for every non-comment, non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      tokens.push_back(tok);
    }
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

void check_arc(const SignedGraph& g, int e, const Arc& a) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge " + str(e) + " is not in the graph");
  const Edge& edge = g.edge(e);
  bool ok = (a.tail == edge.u && a.head == edge.w) || (a.tail == edge.w && a.head == edge.u);
  if (!ok) {
    throw PreconditionError("arc " + str(a.tail) + "->" + str(a.head) + " does not match edge " + str(e));
  }
}

}  // namespace

FlowKind parse_flow_kind(std::string_view name) {
  if (name == "circular-r") return FlowKind::CircularR;
  if (name == "pq") return FlowKind::PQ;
  if (name == "mod-pq") return FlowKind::ModPQ;
  if (name == "circular-mod-r") return FlowKind::CircularModR;
  throw PreconditionError("unknown flow kind '" + std::string(name) + "'");
}

FlowWitness parse_flow_file(std::string_view text, const SignedGraph& g) {
  std::optional<FlowKindSpec> kind;
  std::vector<std::optional<Arc>> arcs(g.edge_count());
  std::vector<Rational> values(g.edge_count());
  for_each_line(text, [&](int line, const std::vector<std::string>& t) {
    if (t[0] == "kind") {
      if (t.size() != 3) throw ParseError(line, "expected 'kind <name> <parameter>'");
      FlowKind k;
      try {
        k = parse_flow_kind(t[1]);
      } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
      }
      if (k == FlowKind::PQ || k == FlowKind::ModPQ) {
        auto slash = t[2].find('/');
        if (slash == std::string::npos) throw ParseError(line, "integer kinds need 'p/q'");
        int p = parse_int(t[2].substr(0, slash), line);
        int q = parse_int(t[2].substr(slash + 1), line);
        kind = k == FlowKind::PQ ? FlowKindSpec::pq(p, q) : FlowKindSpec::mod_pq(p, q);
      } else {
        Rational r = parse_value(t[2], line);
        kind = k == FlowKind::CircularR ? FlowKindSpec::circular_r(r) : FlowKindSpec::circular_mod_r(r);
      }
      return;
    }
    if (t.size() != 4) throw ParseError(line, "expected '<edge_id> <tail> <head> <value>'");
    int e = parse_int(t[0], line);
    Arc a{parse_int(t[1], line), parse_int(t[2], line)};
    if (e < 0 || e >= g.edge_count()) throw ParseError(line, "edge " + str(e) + " is not in the graph");
    if (arcs[e]) throw ParseError(line, "edge " + str(e) + " listed twice");
    try {
      check_arc(g, e, a);
    } catch (const PreconditionError& err) {
      throw ParseError(line, err.what());
    }
    arcs[e] = a;
    values[e] = parse_value(t[3], line);
  });
  if (!kind) throw ParseError(0, "missing 'kind' line");
  std::vector<Arc> full;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!arcs[e]) throw PreconditionError("flow file has no line for edge " + str(e));
    full.push_back(*arcs[e]);
  }
  return FlowWitness{Orientation(g, std::move(full)), FlowAssignment{*kind, std::move(values)}};
}

std::string format_flow_file(const FlowWitness& w) {
  std::string out = "kind " + w.flow.kind.name() + " ";
  if (w.flow.kind.is_integral()) {
    out += str(w.flow.kind.p) + "/" + str(w.flow.kind.q);
  } else {
    out += to_string(w.flow.kind.r);
  }
  out += '\n';
  for (int e = 0; e < w.orientation.edge_count(); ++e) {
    const Arc& a = w.orientation.arc(e);
    out += str(e) + " " + str(a.tail) + " " + str(a.head) + " " + to_string(w.flow.values.at(e)) + "\n";
  }
  return out;
}

EulerianForm parse_eulerian_form(std::string_view name) {
  for (EulerianForm f : {EulerianForm::Flow4k, EulerianForm::SpecialModFlow, EulerianForm::BoundaryOrientation,
                         EulerianForm::Mod2kOrientation}) {
    if (to_string(f) == name) return f;
  }
  throw PreconditionError("unknown Eulerian form '" + std::string(name) + "'");
}

CertificateFile parse_certificate_file(std::string_view text) {
  CertificateFile c;
  for_each_line(text, [&](int line, const std::vector<std::string>& t) {
    auto need = [&](std::size_t n, const char* shape) {
      if (t.size() != n) throw ParseError(line, std::string("expected '") + shape + "'");
    };
    const std::string& tag = t[0];
    if (tag == "form") {
      need(2, "form <name>");
      try {
        c.form = parse_eulerian_form(t[1]);
      } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
      }
    } else if (tag == "k") {
      need(2, "k <k>");
      c.k = parse_int(t[1], line);
    } else if (tag == "ell") {
      need(2, "ell <l>");
      c.ell = parse_int(t[1], line);
    } else if (tag == "o") {
      need(4, "o <edge_id> <tail> <head>");
      int e = parse_int(t[1], line);
      if (c.arcs.count(e)) throw ParseError(line, "edge " + str(e) + " oriented twice");
      c.arcs[e] = Arc{parse_int(t[2], line), parse_int(t[3], line)};
    } else if (tag == "val") {
      need(3, "val <edge_id> <value>");
      c.values[parse_int(t[1], line)] = parse_value(t[2], line);
    } else if (tag == "s") {
      need(3, "s <edge_id> <+|->");
      Sign s;
      if (t[2] == "+") {
        s = Sign::Positive;
      } else if (t[2] == "-" || t[2] == "−") {
        s = Sign::Negative;
      } else {
        throw ParseError(line, "bad sign '" + t[2] + "'");
      }
      c.signs[parse_int(t[1], line)] = s;
    } else if (tag == "part") {
      if (t.size() < 2) throw ParseError(line, "expected 'part <i> <edge_id> ...'");
      auto& part = c.parts[parse_int(t[1], line)];
      for (std::size_t i = 2; i < t.size(); ++i) part.push_back(parse_int(t[i], line));
    } else if (tag == "b") {
      need(5, "b <vertex> <residue> mod <m>");
      if (t[3] != "mod") throw ParseError(line, "expected 'mod'");
      int m = parse_int(t[4], line);
      if (c.modulus && *c.modulus != m) throw ParseError(line, "boundary lines disagree on the modulus");
      c.modulus = m;
      c.residues[parse_int(t[1], line)] = parse_int(t[2], line);
    } else {
      throw ParseError(line, "unknown line tag '" + tag + "'");
    }
  });
  return c;
}

std::string format_certificate_file(const CertificateFile& c) {
  std::ostringstream out;
  if (c.form) out << "form " << to_string(*c.form) << '\n';
  if (c.k) out << "k " << *c.k << '\n';
  if (c.ell) out << "ell " << *c.ell << '\n';
  for (const auto& [e, a] : c.arcs) out << "o " << e << ' ' << a.tail << ' ' << a.head << '\n';
  for (const auto& [e, v] : c.values) out << "val " << e << ' ' << to_string(v) << '\n';
  for (const auto& [e, s] : c.signs) out << "s " << e << ' ' << sign_char(s) << '\n';
  for (const auto& [i, part] : c.parts) {
    out << "part " << i;
    for (int e : part) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [v, r] : c.residues) out << "b " << v << ' ' << r << " mod " << c.modulus.value_or(0) << '\n';
  return out.str();
}

Orientation certificate_orientation(const CertificateFile& c, const SignedGraph& g) {
  std::vector<Arc> arcs;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto it = c.arcs.find(e);
    if (it == c.arcs.end()) throw PreconditionError("certificate does not orient edge " + str(e));
    check_arc(g, e, it->second);
    arcs.push_back(it->second);
  }
  if (c.arcs.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("certificate orients edges that are not in the graph");
  }
  return Orientation(g, std::move(arcs));
}

std::vector<std::optional<Arc>> certificate_partial_orientation(const CertificateFile& c, const SignedGraph& g) {
  std::vector<std::optional<Arc>> out(g.edge_count());
  for (const auto& [e, a] : c.arcs) {
    check_arc(g, e, a);
    out[e] = a;
  }
  return out;
}

BoundaryFunction certificate_boundary(const CertificateFile& c, const SignedGraph& g) {
  if (!c.modulus) throw PreconditionError("certificate has no boundary lines");
  std::vector<int> residues(g.vertex_count(), 0);
  for (const auto& [v, r] : c.residues) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("boundary names vertex " + str(v) + " outside the graph");
    residues[v] = r;
  }
  return BoundaryFunction(*c.modulus, std::move(residues));
}

EulerianCertificate certificate_eulerian(const CertificateFile& c, const SignedGraph& g) {
  if (!c.form) throw PreconditionError("certificate has no 'form' line");
  if (!c.k) throw PreconditionError("certificate has no 'k' line");
  EulerianCertificate cert;
  cert.form = *c.form;
  cert.k = *c.k;
  cert.orientation = certificate_orientation(c, g);
  if (cert.form == EulerianForm::Flow4k || cert.form == EulerianForm::SpecialModFlow) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto it = c.values.find(e);
      if (it == c.values.end()) throw PreconditionError("certificate has no value for edge " + str(e));
      cert.values.push_back(it->second);
    }
  }
  if (cert.form == EulerianForm::Mod2kOrientation) {
    std::vector<Sign> signs;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto it = c.signs.find(e);
      if (it == c.signs.end()) throw PreconditionError("certificate has no sign for edge " + str(e));
      signs.push_back(it->second);
    }
    cert.signature_used = g.with_signs(signs);
  }
  return cert;
}

ModOrientationCertificate certificate_mod_orientation(const CertificateFile& c, const SignedGraph& g) {
  if (!c.ell) throw PreconditionError("certificate has no 'ell' line");
  std::vector<Sign> signs = g.signs();
  for (const auto& [e, s] : c.signs) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("sign for edge " + str(e) + " outside the graph");
    signs[e] = s;
  }
  return ModOrientationCertificate{g.with_signs(signs), certificate_orientation(c, g), *c.ell};
}

PartitionCertificate certificate_partition(const CertificateFile& c, const SignedGraph& g) {
  PartitionCertificate pc;
  for (const auto& [i, part] : c.parts) pc.parts.push_back(part);
  pc.orientation = certificate_orientation(c, g);
  return pc;
}

CertificateFile to_certificate_file(const Orientation& d) {
  CertificateFile c;
  for (int e = 0; e < d.edge_count(); ++e) c.arcs[e] = d.arc(e);
  return c;
}

CertificateFile to_certificate_file(const EulerianCertificate& cert) {
  CertificateFile c = to_certificate_file(cert.orientation);
  c.form = cert.form;
  c.k = cert.k;
  for (std::size_t e = 0; e < cert.values.size(); ++e) c.values[static_cast<int>(e)] = cert.values[e];
  if (cert.signature_used) {
    for (int e = 0; e < cert.signature_used->edge_count(); ++e) c.signs[e] = cert.signature_used->sign(e);
  }
  return c;
}

CertificateFile to_certificate_file(const ModOrientationCertificate& cert) {
  CertificateFile c = to_certificate_file(cert.orientation);
  c.ell = cert.ell;
  for (int e = 0; e < cert.signature_used.edge_count(); ++e) c.signs[e] = cert.signature_used.sign(e);
  return c;
}

CertificateFile to_certificate_file(const PartitionCertificate& cert) {
  CertificateFile c = to_certificate_file(cert.orientation);
  for (std::size_t i = 0; i < cert.parts.size(); ++i) c.parts[static_cast<int>(i)] = cert.parts[i];
  return c;
}

CertificateFile to_certificate_file(const BoundaryFunction& beta) {
  CertificateFile c;
  c.modulus = beta.modulus();
  for (int v = 0; v < beta.vertex_count(); ++v) c.residues[v] = beta.residue(v);
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace monoflow
