#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hypoly/dataset.hpp"
#include "hypoly/invariance.hpp"
#include "hypoly/topology.hpp"

using namespace hypoly;

TEST_CASE("all four builtin invariance cases pass") {
  for (const char* name : {"H-z0", "H-Z1", "H-diag1", "H-diag2"}) {
    CAPTURE(name);
    InvarianceCase c = load_case(name);
    Bundle b = load_bundle(c.base_bundle);
    InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
    CHECK(rep.generators_preserve);
    CHECK(rep.condition1.pass);
    CHECK(rep.condition2.pass);
    CHECK(rep.condition3.pass);
    CHECK(rep.all_pass);
  }
}

TEST_CASE("conditions (2) and (3) are vacuous for the z = 0 hyperplane") {
  InvarianceCase c = load_case("H-z0");
  Bundle b = load_bundle(c.base_bundle);
  InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
  CHECK(rep.condition2.vacuous);
  CHECK(rep.condition3.vacuous);
}

TEST_CASE("the z-box case reports the worked diagnostic angle sum pi") {
  InvarianceCase c = load_case("H-Z1");
  Bundle b = load_bundle(c.base_bundle);
  const auto& lat = b.poly.lattice();
  InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
  // Condition (2) applies: the side Z1 itself lies on H and z1 moves H off itself.
  CHECK_FALSE(rep.condition2.vacuous);
  REQUIRE(rep.condition2.rows.size() == 1);
  CHECK(b.poly.side(rep.condition2.rows[0].side).name == "Z1");
  CHECK(rep.condition2.rows[0].ok);

  // Condition (3): the chase from Z1&A1 reaches H again at l = 1 with angle
  // sum exactly pi, and the matrix test holds from both starting directions.
  std::vector<int> want{b.poly.side_index("A1"), b.poly.side_index("Z1")};
  std::sort(want.begin(), want.end());
  bool saw_l1 = false;
  std::set<int> directions_ok;
  for (const auto& row : rep.condition3.rows) {
    if (lat.faces[2][row.ridge].carriers != want) continue;
    CHECK(row.ok);
    directions_ok.insert(row.direction);
    if (row.l == 1) {
      saw_l1 = true;
      REQUIRE(row.angle_sum.has_value());
      CHECK(*row.angle_sum == Rational(1));
    }
  }
  CHECK(saw_l1);
  CHECK(directions_ok == std::set<int>{0, 1});
}

TEST_CASE("diagonal cases exercise condition (3) on the box corner ridges") {
  InvarianceCase c = load_case("H-diag1");
  Bundle b = load_bundle(c.base_bundle);
  InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
  CHECK_FALSE(rep.condition3.vacuous);
  for (const auto& row : rep.condition3.rows) {
    CHECK(row.ok);
    if (row.angle_sum) {
      // The diagnostic sums are integer multiples of pi once alpha and beta
      // are folded to line angles.
      CHECK(rational_is_integer(*row.angle_sum));
    }
  }
}

TEST_CASE("the diagonal case also passes against the second pairing") {
  // Same hyperplane and stabilizer generators, read in the second pairing,
  // where the d-maps pair the corner spheres across the origin.
  Bundle b = load_bundle("P-phi2");
  InvarianceCase c;
  c.name = "H-diag1/phi2";
  c.base_bundle = "P-phi2";
  c.h = hyperplane_from_plane(Vec{ExactScalar(1), ExactScalar(-1), ExactScalar(0)},
                              ExactScalar(0), PlaneSide::Negative, "H");
  c.subgroup_gens = {parse_word({"a2"}), parse_word({"a4"}), parse_word({"a6"}),
                     parse_word({"b1"}), parse_word({"d2"}), parse_word({"d4"}),
                     parse_word({"y1", "x1"}), parse_word({"z1"})};
  c.induced = {PairingDecl{"A2", "A2'", parse_word({"a2"})},
               PairingDecl{"A4", "A4'", parse_word({"a4"})},
               PairingDecl{"A6", "A6'", parse_word({"a6"})},
               PairingDecl{"B1", "B1'", parse_word({"b1"})},
               PairingDecl{"D2", "D4'", parse_word({"d2"})},
               PairingDecl{"D4", "D2'", parse_word({"d4"})},
               PairingDecl{"X1", "X1'", parse_word({"y1", "x1"})},
               PairingDecl{"Z1", "Z1'", parse_word({"z1"})}};
  InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
  CHECK(rep.all_pass);
}

TEST_CASE("under-generated subgroup fails condition (1)") {
  InvarianceCase c = load_case("H-z0");
  c.subgroup_gens.erase(
      std::remove_if(c.subgroup_gens.begin(), c.subgroup_gens.end(),
                     [](const Word& w) { return w.size() == 1 && w[0].name == "a4"; }),
      c.subgroup_gens.end());
  c.induced.erase(std::remove_if(c.induced.begin(), c.induced.end(),
                                 [](const PairingDecl& d) { return d.from == "A4"; }),
                  c.induced.end());
  Bundle b = load_bundle(c.base_bundle);
  InvarianceReport rep = check_precisely_invariant(b.poly, b.pairing, b.gens, c);
  CHECK_FALSE(rep.condition1.pass);
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("a generator that moves the hyperplane is flagged") {
  InvarianceCase c = load_case("H-diag1");
  c.subgroup_gens.push_back(parse_word({"x1"}));  // x-translation tips the diagonal plane
  Bundle b = load_bundle(c.base_bundle);
  auto rows = check_generator_preservation(b.gens, c);
  bool x1_bad = false;
  for (const auto& r : rows)
    if (r.word == "x1" && !r.ok) x1_bad = true;
  CHECK(x1_bad);
}

TEST_CASE("condition (2) fails when a side on H is paired by a map preserving H") {
  Bundle b = load_bundle("P-phi1");
  // Pair Z1 to itself by the diagonal reflection, which preserves the z-box
  // hyperplane; every other side keeps its real pairing.
  SidePairing phi(b.poly.side_count());
  int z1 = b.poly.side_index("Z1");
  phi.set_pair(z1, z1, b.gens.get("q1"), parse_word({"q1"}));
  Hyperplane h = b.poly.side(z1);
  ConditionTwoReport rep = check_condition_2(b.poly, phi, h);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.rows.size() == 1);
  CHECK_FALSE(rep.rows[0].ok);
}

TEST_CASE("condition (3) matrix test is start-direction invariant") {
  for (const char* name : {"H-Z1", "H-diag1", "H-diag2"}) {
    InvarianceCase c = load_case(name);
    Bundle b = load_bundle(c.base_bundle);
    ConditionThreeReport rep = check_condition_3(b.poly, b.pairing, c.h);
    // Group rows by ridge: verdicts must agree across directions.
    std::map<int, std::set<bool>> verdicts;
    for (const auto& row : rep.rows) verdicts[row.ridge].insert(row.ok);
    for (const auto& [ridge, v] : verdicts) CHECK(v.size() == 1);
  }
}

TEST_CASE("chained hyperplanes are precisely invariant under conjugated subgroups") {
  // In the two-block chain the interface hyperplane is the image of the z-box
  // hyperplane under the block shift, stabilized by the shifted subgroup.
  ChainBundle chain = build_chain(make_chain_spec(2, "11"));
  InvarianceCase c;
  c.name = "interface";
  c.base_bundle = "chain:2:11";
  c.h = hyperplane_from_plane(Vec{ExactScalar(0), ExactScalar(0), ExactScalar(1)},
                              ExactScalar(Rational(0), Rational(2)), PlaneSide::Negative, "H");
  c.subgroup_gens = {parse_word({"x1"}), parse_word({"y1"}), parse_word({"a5@1"}),
                     parse_word({"a6@1"})};
  c.induced = {PairingDecl{"X1", "X1'", parse_word({"x1"})},
               PairingDecl{"Y1", "Y1'", parse_word({"y1"})},
               PairingDecl{"A5@1", "A5'@1", parse_word({"a5@1"})},
               PairingDecl{"A6@1", "A6'@1", parse_word({"a6@1"})}};
  InvarianceReport rep = check_precisely_invariant(chain.poly, chain.pairing, chain.gens, c);
  CHECK(rep.all_pass);
}
