#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "hypoly/dataset.hpp"
#include "hypoly/polytope.hpp"

using namespace hypoly;

namespace {

ExactScalar rt2(int num, int den = 1) { return ExactScalar(Rational(0), Rational(num, den)); }

Vec v3(ExactScalar a, ExactScalar b, ExactScalar c) { return Vec{a, b, c}; }

// Independent oracle: vertex candidates from every n-subset of sides, no
// pruning, no dedup shortcuts; returns canonical coordinate vectors.
std::vector<Vec> brute_force_vertices(const Polyhedron& p) {
  const int n = p.dim();
  const int m = p.side_count();
  std::vector<Vec> rows;
  for (const auto& s : p.sides()) {
    Vec r = s.e;
    r.back() = -r.back();
    rows.push_back(r);
  }
  std::vector<int> subset(n);
  std::vector<Vec> found;
  std::function<void(int, int)> rec = [&](int pos, int next) {
    if (pos == n) {
      Mat sys;
      for (int i : subset) sys.push_back(rows[i]);
      auto null = mat_nullspace(sys);
      if (null.size() != 1) return;
      int sg = minkowski(null[0], null[0]).sign();
      if (sg > 0) return;
      Vec canon = sg < 0 ? canonical_finite(null[0]) : canonical_ideal(null[0]);
      for (const auto& s : p.sides())
        if (minkowski(canon, s.e).sign() > 0) return;
      found.push_back(canon);
      return;
    }
    for (int i = next; i < m; ++i) {
      subset[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  std::sort(found.begin(), found.end(),
            [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Vec& a, const Vec& b) { return vec_eq(a, b); }),
              found.end());
  return found;
}

// The dim-3 fixture: box x,y in [-2,2] with four radius-sqrt2 spheres at
// (+-1, +-1); an ideal polyhedron whose whole lattice is small enough to
// check against the all-subsets oracle.
Polyhedron box_fixture() {
  std::vector<Hyperplane> sides;
  sides.push_back(hyperplane_from_plane(Vec{ExactScalar(1), ExactScalar(0)}, ExactScalar(-2),
                                        PlaneSide::Positive, "X1"));
  sides.push_back(hyperplane_from_plane(Vec{ExactScalar(1), ExactScalar(0)}, ExactScalar(2),
                                        PlaneSide::Negative, "X1'"));
  sides.push_back(hyperplane_from_plane(Vec{ExactScalar(0), ExactScalar(1)}, ExactScalar(-2),
                                        PlaneSide::Positive, "Y1"));
  sides.push_back(hyperplane_from_plane(Vec{ExactScalar(0), ExactScalar(1)}, ExactScalar(2),
                                        PlaneSide::Negative, "Y1'"));
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      std::string name = std::string("S") + (sx > 0 ? "p" : "m") + (sy > 0 ? "p" : "m");
      sides.push_back(hyperplane_from_sphere(Vec{ExactScalar(sx), ExactScalar(sy)},
                                             ExactScalar(2), SphereSide::Exterior, name));
    }
  return Polyhedron(3, std::move(sides),
                    embed_point(Vec{ExactScalar(0), ExactScalar(0)}, ExactScalar(3)));
}

}  // namespace

TEST_CASE("builtin polyhedron reproduces the full face census") {
  Bundle b = load_bundle("P-phi1");
  const auto& lat = b.poly.lattice();
  CHECK(lat.finite_count == 48);
  CHECK(lat.ideal_count() == 36);
  CHECK(lat.faces[0].size() == 48);
  CHECK(lat.faces[1].size() == 216);
  CHECK(lat.faces[2].size() == 168);
  CHECK(lat.faces[3].size() == 36);
  CHECK(lat.faces[4].size() == 1);
}

TEST_CASE("ridge dihedral angles: 24 at pi/4 and 144 at pi/2") {
  Bundle b = load_bundle("P-phi1");
  auto census = ridge_angle_census(b.poly);
  CHECK(census.size() == 2);
  CHECK(census[Rational(1, 4)] == 24);
  CHECK(census[Rational(1, 2)] == 144);
}

TEST_CASE("named vertices lie on the expected sides") {
  Bundle b = load_bundle("P-phi1");
  const auto& lat = b.poly.lattice();

  auto carriers_of = [&](const Vec& halfspace_p, ExactScalar t) {
    Vec x = embed_point(halfspace_p, t);
    int id = lat.vertex_index(x);
    REQUIRE(id >= 0);
    std::vector<std::string> names;
    for (int c : lat.vertices[id].carriers) names.push_back(b.poly.side(c).name);
    std::sort(names.begin(), names.end());
    return names;
  };

  auto n1 = carriers_of(v3(ExactScalar(0), ExactScalar(1), rt2(-3, 2)), rt2(1, 2));
  CHECK(n1 == std::vector<std::string>{"A1", "A2'", "B1", "C1"});
  auto n2 = carriers_of(v3(ExactScalar(-1), ExactScalar(2), rt2(-3, 2)), rt2(1, 2));
  CHECK(n2 == std::vector<std::string>{"A1", "C1", "D1", "Y1'"});
}

TEST_CASE("all finite vertices sit at height sqrt2/2 and carry >= 4 sides") {
  Bundle b = load_bundle("P-phi1");
  const auto& lat = b.poly.lattice();
  for (int v = 0; v < lat.finite_count; ++v) {
    const Vec& x = lat.vertices[v].p.x;
    // The height satisfies 1/t = beta - alpha; t = sqrt2/2 means 1/t = sqrt2.
    ExactScalar inv_t = x[4] - x[3];
    CHECK(inv_t == rt2(1));
    CHECK(lat.vertices[v].carriers.size() >= 4);
  }
  for (int v = lat.finite_count; v < static_cast<int>(lat.vertices.size()); ++v)
    CHECK(lat.vertices[v].carriers.size() >= 3);
}

TEST_CASE("clique-pruned enumeration agrees with the all-subsets oracle") {
  Bundle b = load_bundle("P-phi1");
  std::vector<Vec> oracle = brute_force_vertices(b.poly);
  const auto& lat = b.poly.lattice();
  std::vector<Vec> got;
  for (const auto& v : lat.vertices) got.push_back(v.p.x);
  std::sort(got.begin(), got.end(),
            [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  REQUIRE(oracle.size() == got.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(vec_eq(oracle[i], got[i]));
}

TEST_CASE("vertex enumeration is independent of side ordering") {
  Bundle b = load_bundle("P-phi1");
  std::vector<Hyperplane> sides = b.poly.sides();
  std::mt19937 rng(99);
  std::shuffle(sides.begin(), sides.end(), rng);
  Polyhedron shuffled(4, sides, b.poly.witness());
  const auto& a = b.poly.lattice();
  const auto& c = shuffled.lattice();
  REQUIRE(a.vertices.size() == c.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    CHECK(vec_eq(a.vertices[i].p.x, c.vertices[i].p.x));
  for (int d = 0; d <= 4; ++d) CHECK(a.faces[d].size() == c.faces[d].size());
}

TEST_CASE("every face's carrier rank matches its dimension") {
  Bundle b = load_bundle("P-phi1");
  const auto& lat = b.poly.lattice();
  for (int d = 0; d <= 4; ++d)
    for (const auto& f : lat.faces[d]) {
      Mat normals;
      for (int c : f.carriers) normals.push_back(b.poly.side(c).e);
      int rank = normals.empty() ? 0 : mat_rank(normals);
      CHECK(rank == 4 - d);
      if (d >= 1) CHECK(f.verts.size() >= 2);
    }
}

TEST_CASE("compactified Euler relation of the 4-polytope") {
  Bundle b = load_bundle("P-phi1");
  const auto& lat = b.poly.lattice();
  // All 84 vertices (finite and ideal) are 0-cells of the compactification.
  long sum = static_cast<long>(lat.vertices.size()) - static_cast<long>(lat.faces[1].size()) +
             static_cast<long>(lat.faces[2].size()) - static_cast<long>(lat.faces[3].size());
  CHECK(sum == 0);
}

TEST_CASE("containment predicate") {
  Bundle b = load_bundle("P-phi1");
  CHECK(b.poly.contains(
      embed_point(v3(ExactScalar(0), ExactScalar(0), ExactScalar(0)), ExactScalar(3))));
  // A point down inside one of the balls is excluded.
  CHECK_FALSE(b.poly.contains(
      embed_point(v3(ExactScalar(1), ExactScalar(1), ExactScalar(0)), ExactScalar(1))));
  const auto& lat = b.poly.lattice();
  for (const auto& v : lat.vertices) CHECK(b.poly.contains(v.p.x));
}

TEST_CASE("dim-3 fixture lattice against the all-subsets oracle") {
  Polyhedron fx = box_fixture();
  std::vector<Vec> oracle = brute_force_vertices(fx);
  const auto& lat = fx.lattice();
  std::vector<Vec> got;
  for (const auto& v : lat.vertices) got.push_back(v.p.x);
  std::sort(got.begin(), got.end(),
            [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  REQUIRE(oracle.size() == got.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(vec_eq(oracle[i], got[i]));
  CHECK(lat.finite_count == 0);
  CHECK(lat.ideal_count() == 10);
  CHECK(lat.faces[1].size() == 16);
  CHECK(lat.faces[2].size() == 8);
  // Euler relation of the compactified 3-polytope.
  int euler = static_cast<int>(lat.vertices.size()) - static_cast<int>(lat.faces[1].size()) +
              static_cast<int>(lat.faces[2].size());
  CHECK(euler == 2);
  auto angles = ridge_angle_census(fx);
  CHECK(angles[Rational(1, 2)] == 8);
  CHECK(angles[Rational(1, 4)] == 8);
}

TEST_CASE("restriction to a hyperplane") {
  Bundle b = load_bundle("P-phi1");

  Hyperplane z0 = hyperplane_from_plane(v3(0, 0, 1), ExactScalar(0), PlaneSide::Negative, "H");
  Restriction r = restrict_to_hyperplane(b.poly, z0);
  CHECK(r.poly.dim() == 3);
  std::vector<std::string> names;
  for (const auto& s : r.poly.sides()) names.push_back(s.name);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"A3", "A3'", "A4", "A4'", "X1", "X1'", "Y1", "Y1'"});

  Hyperplane hz1 = hyperplane_from_plane(v3(0, 0, 1), rt2(-2), PlaneSide::Positive, "H");
  Restriction rz = restrict_to_hyperplane(b.poly, hz1);
  names.clear();
  for (const auto& s : rz.poly.sides()) names.push_back(s.name);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"A1", "A1'", "A2", "A2'", "X1", "X1'", "Y1", "Y1'"});

  // The diagonal slice merges the X and Y traces into single sides.
  Hyperplane diag =
      hyperplane_from_plane(v3(1, -1, 0), ExactScalar(0), PlaneSide::Negative, "H");
  Restriction rd = restrict_to_hyperplane(b.poly, diag);
  CHECK(rd.poly.side_count() == 16);
  int merged = 0;
  for (const auto& src : rd.source_sides) merged += (src.size() == 2);
  CHECK(merged == 2);

  // A hyperplane missing the interior is rejected.
  Hyperplane off = hyperplane_from_plane(v3(0, 0, 1), rt2(-10), PlaneSide::Positive, "off");
  CHECK_THROWS_AS(restrict_to_hyperplane(b.poly, off), InputError);

  // Restricted maps: the z-translation does not preserve {z=0}.
  CHECK_THROWS_AS(restrict_map(r, b.gens.get("t0")), PairingError);
  LorentzMap a3r = restrict_map(r, b.gens.get("a3"));
  CHECK(is_lorentz(a3r.m));
}
