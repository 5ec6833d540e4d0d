#include <doctest.h>

#include <set>

#include "hypoly/dataset.hpp"
#include "hypoly/topology.hpp"

using namespace hypoly;

TEST_CASE("census-derived invariants of the base polyhedron") {
  Bundle b = load_bundle("P-phi1");
  VerificationReport rep = verify_poincare(b.poly, b.pairing);
  CHECK(ends(rep.census) == 7);
  CHECK(euler_characteristic(rep.census) == 2);
  CHECK(volume_units(rep.census) == 2);

  CycleCensus three;
  three.dimension = 3;
  three.c = {1, 1, 1, 1};
  CHECK_THROWS_AS(volume_units(three), InputError);

  CycleCensus degenerate;
  degenerate.dimension = 4;
  degenerate.c = {0, 0, 0, 0, 0};
  CHECK(volume_units(degenerate) == 0);
}

TEST_CASE("chain specs parse and reject bad patterns") {
  ChainSpec s = make_chain_spec(3, "121");
  CHECK(s.pattern == std::vector<BlockType>{BlockType::Phi1, BlockType::Phi2, BlockType::Phi1});
  CHECK_THROWS_AS(make_chain_spec(2, "1"), InputError);
  CHECK_THROWS_AS(make_chain_spec(2, "13"), InputError);
  CHECK_THROWS_AS(make_chain_spec(0, ""), InputError);
}

TEST_CASE("a one-block chain has the census of the base polyhedron") {
  Bundle base = load_bundle("P-phi1");
  VerificationReport want = verify_poincare(base.poly, base.pairing);
  ChainBundle chain = build_chain(make_chain_spec(1, "1"));
  VerificationReport got = verify_poincare(chain.poly, chain.pairing);
  CHECK(got.census.c == want.census.c);
  CHECK(got.census.ideal_cycles == want.census.ideal_cycles);
  CHECK(got.ends == 7);
  CHECK(got.all_pass);
}

TEST_CASE("chain geometry: shared interface spheres and merged side count") {
  ChainBundle chain = build_chain(make_chain_spec(2, "12"));
  CHECK(chain.poly.side_count() == 62);  // 26n + 10
  // The top spheres of block 1 are the bottom spheres of block 2, and the
  // block pairing maps agree there: a5@1 pairs A5@1 -> A5'@1 while a1@2 is
  // its exact inverse on the same pair of sides.
  LorentzMap a5_1 = chain.gens.get("a5@1");
  LorentzMap a1_2 = chain.gens.get("a1@2");
  CHECK(mat_eq(compose(a1_2, a5_1).m, identity_mat(5)));
  int z1 = chain.poly.side_index("Z1");
  CHECK(chain.poly.side(chain.pairing.entry(z1).partner).name == "Z1'");
}

TEST_CASE("two-block chain verifies with ends 4 + 4n - k") {
  ChainBundle chain = build_chain(make_chain_spec(2, "12"));
  VerificationReport rep = verify_poincare(chain.poly, chain.pairing);
  CHECK(rep.all_pass);
  CHECK(rep.ends == 11);
  CHECK(rep.euler_characteristic == 4);
  CHECK(rep.volume_units.value_or(0) == 4);
}

TEST_CASE("three-block all-phi2 chain has 16 ends") {
  ChainBundle chain = build_chain(make_chain_spec(3, "222"));
  VerificationReport rep = verify_poincare(chain.poly, chain.pairing);
  CHECK(rep.all_pass);
  CHECK(rep.ends == 16);
  CHECK(rep.euler_characteristic == 6);
}

TEST_CASE("chain table for n = 2") {
  auto rows = chain_family_table(2);
  REQUIRE(rows.size() == 3);
  std::set<int> distinct;
  for (const auto& row : rows) {
    CHECK(row.pass);
    CHECK(row.ends == 12 - row.k);
    CHECK(row.euler == 4);
    CHECK(row.volume == 4);
    distinct.insert(row.ends);
  }
  CHECK(distinct.size() == 3);
}

TEST_CASE("block ordering does not change the invariants") {
  ChainBundle a = build_chain(make_chain_spec(3, "112"));
  ChainBundle b = build_chain(make_chain_spec(3, "121"));
  VerificationReport ra = verify_poincare(a.poly, a.pairing);
  VerificationReport rb = verify_poincare(b.poly, b.pairing);
  CHECK(ra.all_pass);
  CHECK(rb.all_pass);
  CHECK(ra.ends == 14);  // 4 + 12 - 2, independent of the ordering
  CHECK(rb.ends == 14);
  CHECK(ra.volume_units.value_or(0) == 6);
  CHECK(rb.volume_units.value_or(0) == 6);
  CHECK(ra.census.c == rb.census.c);
}

TEST_CASE("volume is additive over blocks") {
  VerificationReport one = verify_poincare(load_bundle("P-phi1").poly,
                                           load_bundle("P-phi1").pairing);
  ChainBundle chain = build_chain(make_chain_spec(2, "11"));
  VerificationReport two = verify_poincare(chain.poly, chain.pairing);
  CHECK(two.volume_units.value_or(0) == 2 * one.volume_units.value_or(0));
}
