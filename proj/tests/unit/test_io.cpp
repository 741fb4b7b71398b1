#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "monoflow/errors.hpp"
#include "monoflow/io.hpp"
#include "monoflow/orientation.hpp"

using namespace monoflow;

namespace {

// A 4-cycle with a negative chord.
SignedGraph sample_graph() {
  return parse_signed_graph("v 4\ne 0 1 +\ne 1 2 -\ne 2 3 +\ne 3 0 +\ne 0 2 -\n");
}

}  // namespace

TEST_CASE("flow files round trip") {
  const SignedGraph g = sample_graph();
  IndexResult index = circular_flow_index(g);
  REQUIRE(index.kind == IndexKind::Finite);
  PQDecision d = decide_pq_flow(g, index.p, index.q);
  REQUIRE(d.status == SearchStatus::Found);
  const std::string text = format_flow_file(*d.witness);
  FlowWitness back = parse_flow_file(text, g);
  CHECK(back.orientation == d.witness->orientation);
  CHECK(back.flow == d.witness->flow);
  CHECK(verify_flow(g, back.orientation, back.flow).ok);

  FlowWitness circ{d.witness->orientation, pq_to_circular(d.witness->flow)};
  FlowWitness circ_back = parse_flow_file(format_flow_file(circ), g);
  CHECK(circ_back.flow == circ.flow);
  CHECK(circ_back.flow.kind.r == index.value);
}

TEST_CASE("flow file example") {
  const SignedGraph c2 = named::negative_digon();
  FlowWitness w = parse_flow_file("# C_-2\nkind pq 4/1\n0 0 1 1\n1 1 0 1\n", c2);
  CHECK(w.flow.kind == FlowKindSpec::pq(4, 1));
  CHECK(w.orientation.arc(1) == Arc{1, 0});
  CHECK(parse_flow_kind("circular-mod-r") == FlowKind::CircularModR);
  CHECK_THROWS_AS(parse_flow_kind("tension"), PreconditionError);
}

TEST_CASE("flow file errors") {
  const SignedGraph c2 = named::negative_digon();
  CHECK_THROWS_AS(parse_flow_file("0 0 1 1\n1 1 0 1\n", c2), ParseError);             // no kind
  CHECK_THROWS_AS(parse_flow_file("kind pq 4\n0 0 1 1\n1 1 0 1\n", c2), ParseError);  // no q
  CHECK_THROWS_AS(parse_flow_file("kind pq 4/1\n0 0 1 1\n0 1 0 1\n", c2), ParseError);
  CHECK_THROWS_AS(parse_flow_file("kind pq 4/1\n0 0 2 1\n1 1 0 1\n", c2), ParseError);
  CHECK_THROWS_AS(parse_flow_file("kind pq 4/1\n0 0 1 x\n1 1 0 1\n", c2), ParseError);
  CHECK_THROWS_AS(parse_flow_file("kind pq 4/1\n0 0 1 1\n", c2), PreconditionError);
  try {
    parse_flow_file("kind pq 4/1\n0 0 1 1\n7 1 0 1\n", c2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("certificate files round trip") {
  const SignedGraph g = parse_signed_graph("v 3\ne 0 1 +\ne 1 2 -\ne 2 0 +\ne 0 1 -\ne 0 1 +\n");
  for (EulerianForm form : {EulerianForm::Flow4k, EulerianForm::SpecialModFlow, EulerianForm::BoundaryOrientation,
                            EulerianForm::Mod2kOrientation}) {
    INFO(to_string(form));
    auto cert = find_eulerian_certificate(g, form, 1);
    REQUIRE(cert);
    CertificateFile file = parse_certificate_file(format_certificate_file(to_certificate_file(*cert)));
    EulerianCertificate back = certificate_eulerian(file, g);
    CHECK(back.form == cert->form);
    CHECK(back.orientation == cert->orientation);
    CHECK(back.values == cert->values);
    CHECK(verify_eulerian_certificate(back, g));
  }

  ModOrientationSearch mod = find_mod_orientation(g, 2);
  REQUIRE(mod.certificate);
  ModOrientationCertificate mod_back =
      certificate_mod_orientation(parse_certificate_file(format_certificate_file(to_certificate_file(*mod.certificate))), g);
  CHECK(mod_back.signature_used == mod.certificate->signature_used);
  CHECK(verify_mod_orientation(mod_back, g));

  PartitionCertificate pc = orientation_to_partition(*mod.certificate);
  PartitionCertificate pc_back = certificate_partition(parse_certificate_file(format_certificate_file(to_certificate_file(pc))), g);
  CHECK(pc_back.parts == pc.parts);
  CHECK(verify_partition_certificate(pc_back, g).ok);

  BoundaryFunction beta = positive_degree_boundary(g, 2, 4);
  BoundaryFunction beta_back = certificate_boundary(parse_certificate_file(format_certificate_file(to_certificate_file(beta))), g);
  CHECK(beta_back == beta);
}

TEST_CASE("certificate file errors") {
  const SignedGraph c2 = named::negative_digon();
  CHECK_THROWS_AS(parse_certificate_file("x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate_file("form flow-99\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate_file("o 0 0 1\no 0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate_file("s 0 *\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate_file("b 0 1 mod 4\nb 1 3 mod 6\n"), ParseError);
  CHECK_THROWS_AS(certificate_orientation(parse_certificate_file("o 0 0 1\n"), c2), PreconditionError);
  CHECK_THROWS_AS(certificate_orientation(parse_certificate_file("o 0 0 1\no 1 0 2\n"), c2), PreconditionError);
  CHECK_THROWS_AS(certificate_eulerian(parse_certificate_file("o 0 0 1\no 1 1 0\n"), c2), PreconditionError);
  CHECK_THROWS_AS(certificate_boundary(parse_certificate_file("o 0 0 1\n"), c2), PreconditionError);
  CHECK(certificate_partial_orientation(parse_certificate_file("o 1 1 0\n"), c2)[1] == Arc{1, 0});
}

TEST_CASE("text files") {
  const std::string path = (std::filesystem::temp_directory_path() / "monoflow_io_test.txt").string();
  write_text_file(path, "v 2\ne 0 1 -\n");
  CHECK(read_text_file(path) == "v 2\ne 0 1 -\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file(path), Error);
}
