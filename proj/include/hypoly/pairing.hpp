#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypoly/polytope.hpp"
#include "hypoly/words.hpp"

namespace hypoly {

/// Declaration of one side pair: the named map carries `from` onto `to`.
struct PairingDecl {
  std::string from;
  std::string to;
  Word word;
  bool operator==(const PairingDecl&) const = default;
};

/// An involutive assignment of an isometry to every side. Entries for both
/// directions are stored; the reverse map is always the exact inverse.
class SidePairing {
 public:
  struct Entry {
    int partner = -1;
    LorentzMap g;  // sends the side onto its partner
    Word word;
  };

  SidePairing() = default;
  explicit SidePairing(int side_count) : entries_(side_count) {}

  /// Registers a pair; re-registration must agree exactly (needed when block
  /// pairings overlap on shared sides).
  void set_pair(int from, int to, const LorentzMap& g, const Word& word);

  bool has(int side) const { return entries_[side].partner >= 0; }
  const Entry& entry(int side) const { return entries_[side]; }
  int side_count() const { return static_cast<int>(entries_.size()); }

  /// Each pair once, as (from, to) with from <= to.
  std::vector<std::pair<int, int>> pairs() const;

 private:
  std::vector<Entry> entries_;
};

/// Compiles pairing declarations against a polyhedron's side names.
SidePairing build_side_pairing(const Polyhedron& p, const GeneratorSet& gens,
                               const std::vector<PairingDecl>& decls);

struct PairCheck {
  int side = -1;
  int partner = -1;
  bool ok = false;
  std::string message;
};

struct ValidationReport {
  bool pass = false;
  std::vector<PairCheck> checks;
};

/// Checks the side-pairing invariants: totality, involution, exact hyperplane
/// carriage, and that every vertex of P lands on the far side of the image
/// hyperplane (the finite form of s(int P) ∩ int P = ∅).
ValidationReport validate(const Polyhedron& p, const SidePairing& phi);

struct RidgeCycleStep {
  int ridge;   // index into lattice().faces[n-2]
  int s_side;  // carrier the chase arrived through
  int r_side;  // carrier whose pairing map is applied next
};

struct RidgeCycle {
  std::vector<RidgeCycleStep> steps;  // sigma_1 .. sigma_q
  int q = 0;                          // first cycle length
  int k = 0;                          // least power fixing the ridge pointwise
  std::vector<Rational> angles;       // dihedral angle of each step, as theta/pi
  Rational angle_sum;                 // k * sum(theta_i), in units of pi
  std::optional<long> m;              // integer with angle_sum = 2/m, when it exists
  std::vector<int> ridges;            // distinct ridges in the cycle
  LorentzMap holonomy;                // g_q ∘ ... ∘ g_1
};

/// Partitions all ridges into chase cycles; throws PairingError when a map
/// sends a ridge outside the lattice.
std::vector<RidgeCycle> chase_ridges(const Polyhedron& p, const SidePairing& phi);

struct RidgeConditionReport {
  bool pass = false;
  std::vector<std::string> failures;
};

/// The angle sum of every cycle must be 2*pi/m for a positive integer m.
RidgeConditionReport check_ridge_condition(const std::vector<RidgeCycle>& cycles);

struct CuspArc {
  int from_vertex;  // global vertex id (ideal)
  int side;
  int to_vertex;
  ExactScalar scale;  // g(rep(from)) = scale * rep(to), scale > 0
};

struct CuspGraph {
  std::vector<int> nodes;  // global ids of ideal vertices
  std::vector<CuspArc> arcs;
};

CuspGraph build_cusp_graph(const Polyhedron& p, const SidePairing& phi);

struct HorosphereReport {
  bool pass = false;
  int component_count = 0;
  std::vector<std::string> failures;
};

/// Consistent horosphere condition via multiplicative potentials: horoball
/// sizes propagate along a spanning tree and every remaining arc must agree.
HorosphereReport check_horospheres(const CuspGraph& graph);
HorosphereReport check_horospheres(const Polyhedron& p, const SidePairing& phi);

/// Orbit partition of the faces of one dimension under the face identifications
/// generated by the pairing. For dim 0 the cells are finite vertex ids.
std::vector<std::vector<int>> face_cycles(const Polyhedron& p, const SidePairing& phi, int dim);

/// Orbit partition of the ideal vertices (cells are global vertex ids).
std::vector<std::vector<int>> ideal_vertex_cycles(const Polyhedron& p, const SidePairing& phi);

/// Normalized solid angle of the cone at a face interior point, computed by
/// the orthogonal-block rule over the face's carriers. Throws
/// UnsupportedConeError when a non-orthogonality component has size >= 3.
Rational solid_angle_fraction(const Polyhedron& p, const std::vector<int>& carriers);

struct OmegaCycle {
  int dim = 0;
  std::vector<int> members;     // vertex ids (dim 0) or face indices (dim 1)
  std::vector<Rational> omegas;
  Rational sum;
  bool eligible = true;  // 1-side cycles with mixed endpoints are exempt
  bool pass = true;
};

struct TorsionReport {
  bool pass = false;
  std::vector<OmegaCycle> vertex_cycles;
  std::vector<OmegaCycle> edge_cycles;  // 1-sides; only populated in dimension 4
  bool ridge_cycles_trivial = false;    // every ridge cycle has k = 1 and m = 1
};

/// Torsion-freeness criterion: every eligible cycle's solid angles sum to 1,
/// and ridge cycles close up after a single turn.
TorsionReport check_torsion_free(const Polyhedron& p, const SidePairing& phi,
                                 const std::vector<RidgeCycle>& cycles);

/// Cycle census: number of cycles of i-faces for each i (finite vertices at
/// i = 0), plus the ideal-vertex cycles counted separately.
struct CycleCensus {
  int dimension = 0;
  std::vector<int> c;  // size dimension+1
  int ideal_cycles = 0;
  std::vector<std::vector<std::vector<int>>> members;  // per dim
  std::vector<std::vector<int>> ideal_members;
};

CycleCensus cycle_census(const Polyhedron& p, const SidePairing& phi,
                         const std::vector<RidgeCycle>& ridge_cycles);

struct VerificationReport {
  int dimension = 0;
  ValidationReport validation;
  std::vector<RidgeCycle> ridge_cycles;
  RidgeConditionReport ridge_condition;
  HorosphereReport horospheres;
  TorsionReport torsion;
  CycleCensus census;
  int ends = 0;
  int euler_characteristic = 0;
  std::optional<int> volume_units;  // multiples of 4*pi^2/3, dimension 4 only
  bool all_pass = false;
};

/// Runs the full condition set (validation, ridge cycles, horospheres,
/// torsion) and aggregates census, ends, Euler characteristic and volume.
/// Works identically in dimensions 3 and 4.
VerificationReport verify_poincare(const Polyhedron& p, const SidePairing& phi);

}  // namespace hypoly
