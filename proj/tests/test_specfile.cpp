#include <doctest.h>

#include <fstream>

#include "hypoly/dataset.hpp"
#include "hypoly/report.hpp"
#include "hypoly/section.hpp"

using namespace hypoly;

TEST_CASE("scalar literals round-trip, including beyond 64 bits") {
  ExactScalar half_rt2(Rational(0), Rational(1, 2));
  CHECK(scalar_from_json(Json::parse("[0,1,1,2]")) == half_rt2);
  CHECK(scalar_from_json(scalar_to_json(half_rt2)) == half_rt2);
  Rational big = make_rational(BigInt("123456789012345678901234567891"), BigInt(7));
  ExactScalar huge(big, Rational(-3, 5));
  Json j = scalar_to_json(huge);
  CHECK(j[0].is_string());  // too large for a JSON integer
  CHECK(scalar_from_json(j) == huge);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,0,0,1]")), DivisionByZeroError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,2,3]")), InputError);
}

TEST_CASE("builtin documents round-trip through JSON") {
  for (const char* name : {"P-phi1", "P-phi2", "chain:2:12"}) {
    CAPTURE(name);
    SpecDocument doc = builtin_document(name);
    Json j = spec_to_json(doc);
    SpecDocument back = spec_from_json(j);
    CHECK(back == doc);
    // Once more through a serialized string.
    SpecDocument back2 = spec_from_json(Json::parse(j.dump()));
    CHECK(back2 == doc);
  }
}

TEST_CASE("case documents round-trip through JSON") {
  for (const char* name : {"H-z0", "H-Z1", "H-diag1", "H-diag2"}) {
    CaseDocument doc = builtin_case_document(name);
    CHECK(case_from_json(case_to_json(doc)) == doc);
  }
}

TEST_CASE("compiling an emitted document reproduces the builtin engine objects") {
  Bundle b = load_bundle("P-phi1");
  Json j = spec_to_json(b.doc);
  CompiledSpec cs = compile_spec(spec_from_json(j));
  CHECK(cs.poly.side_count() == 36);
  REQUIRE(cs.poly.side_count() == b.poly.side_count());
  for (int i = 0; i < b.poly.side_count(); ++i) {
    CHECK(cs.poly.side(i).name == b.poly.side(i).name);
    CHECK(vec_eq(cs.poly.side(i).e, b.poly.side(i).e));
  }
  for (auto [i, j2] : b.pairing.pairs()) {
    CHECK(cs.pairing.entry(i).partner == j2);
    CHECK(mat_eq(cs.pairing.entry(i).g.m, b.pairing.entry(i).g.m));
  }
}

TEST_CASE("parse errors and duplicate names are rejected") {
  SpecDocument doc = builtin_document("P-phi1");
  Json j = spec_to_json(doc);
  Json dup = j;
  dup["hyperplanes"][1]["name"] = dup["hyperplanes"][0]["name"];
  CHECK_THROWS_AS(spec_from_json(dup), InputError);
  Json missing = j;
  missing.erase("witness");
  CHECK_THROWS_AS(spec_from_json(missing), InputError);
  Json baddim = j;
  baddim["dimension"] = 7;
  CHECK_THROWS_AS(spec_from_json(baddim), InputError);
}

TEST_CASE("a sphere of non-representable radius is rejected at compile time") {
  SpecDocument doc = builtin_document("P-phi1");
  for (auto& h : doc.hyperplanes)
    if (auto* s = std::get_if<SphereDecl>(&h); s && s->name == "B1") s->radius_sq = ExactScalar(3);
  CHECK_THROWS_AS(compile_spec(doc), NotRepresentableError);
}

TEST_CASE("verification reports carry the stable golden schema") {
  for (const char* name : {"P-phi1", "P-phi2"}) {
    CAPTURE(name);
    Bundle b = load_bundle(name);
    VerificationReport rep = verify_poincare(b.poly, b.pairing);
    Json j = verification_report_json(b.poly, b.pairing, rep, name, 0.0);
    j["timing_ms"] = 0;
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name + ".json");
    REQUIRE(in.good());
    Json golden = Json::parse(in);
    golden["timing_ms"] = 0;
    CHECK(j == golden);
  }
}

TEST_CASE("sections render the expected vertex marks") {
  Bundle b = load_bundle("P-phi1");
  ExactScalar half_rt2(Rational(0), Rational(1, 2));
  auto count_marks = [&](int j) {
    std::string svg = render_section_svg(b.doc, b.poly,
                                         ExactScalar(Rational(0), Rational(j, 2)), half_rt2);
    std::size_t marks = 0, pos = 0;
    while ((pos = svg.find("crimson", pos)) != std::string::npos) {
      ++marks;
      pos += 7;
    }
    return marks;
  };
  // 12 of the 48 finite vertices live in each of the four sections.
  for (int j : {-3, -1, 1, 3}) CHECK(count_marks(j) == 12);
  std::string svg = render_section_svg(b.doc, b.poly, half_rt2, half_rt2);
  CHECK(svg.find("<svg") == 0);

  // A section above every sphere has no circles, box only.
  std::string empty_svg = render_section_svg(b.doc, b.poly, ExactScalar(0), ExactScalar(5));
  CHECK(empty_svg.find("steelblue") == std::string::npos);
  CHECK(empty_svg.find("<line") != std::string::npos);

  // Between sphere layers (z = -3*sqrt2/2) only the two adjacent layers
  // contribute: 4 A-spheres from below, 9 B/C/D-spheres from above.
  std::string low = render_section_svg(b.doc, b.poly, ExactScalar(Rational(0), Rational(-3, 2)),
                                       half_rt2);
  std::size_t circles = 0, pos = 0;
  while ((pos = low.find("steelblue", pos)) != std::string::npos) {
    ++circles;
    pos += 9;
  }
  CHECK(circles == 13);

  CHECK_THROWS_AS(render_section_svg(b.doc, b.poly, ExactScalar(0), ExactScalar(0)), InputError);
}
