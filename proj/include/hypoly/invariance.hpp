#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypoly/pairing.hpp"

namespace hypoly {

/// Data of one precise-invariance check: a hyperplane meeting the polyhedron,
/// generators of the subgroup that is supposed to stabilize it, and the
/// explicit side-pairing induced on the slice.
struct InvarianceCase {
  std::string name;
  std::string base_bundle;  // catalog name of (polyhedron, pairing) this runs against
  Hyperplane h;
  std::vector<Word> subgroup_gens;
  std::vector<PairingDecl> induced;      // over slice side names
  std::optional<Vec> witness_on_h;       // optional ambient witness on h
};

struct GeneratorPreservationRow {
  std::string word;
  bool ok = false;
};

struct ConditionOneReport {
  bool pass = false;
  std::string message;
  std::optional<VerificationReport> slice;
};

struct ConditionTwoRow {
  int side = -1;
  bool ok = false;
};

struct ConditionTwoReport {
  bool pass = false;
  bool vacuous = false;  // no side of P lies on h
  std::vector<ConditionTwoRow> rows;
};

struct ConditionThreeRow {
  int ridge = -1;      // index into faces[n-2]
  int direction = 0;   // 0: carriers as sorted; 1: swapped
  int l = 0;           // position in the chase with E_{l+1} contained in h
  bool ok = false;     // composed map carries h to +-h
  std::optional<Rational> angle_sum;  // theta_1+..+theta_l + beta - alpha, over pi
};

struct ConditionThreeReport {
  bool pass = false;
  bool vacuous = false;  // no ridge of P is contained in h
  std::vector<ConditionThreeRow> rows;
};

struct InvarianceReport {
  std::vector<GeneratorPreservationRow> generator_rows;
  bool generators_preserve = false;
  ConditionOneReport condition1;
  ConditionTwoReport condition2;
  ConditionThreeReport condition3;
  bool all_pass = false;
};

/// Every subgroup generator must carry h to +-h exactly.
std::vector<GeneratorPreservationRow> check_generator_preservation(const GeneratorSet& gens,
                                                                   const InvarianceCase& c);

/// Condition (1): the slice polyhedron with the supplied induced pairing
/// passes the full fundamental-polyhedron condition set one dimension down.
ConditionOneReport check_condition_1(const Polyhedron& p, const GeneratorSet& gens,
                                     const InvarianceCase& c);

/// Condition (2): a side lying on h must be paired off h.
ConditionTwoReport check_condition_2(const Polyhedron& p, const SidePairing& phi,
                                     const Hyperplane& h);

/// Condition (3): whenever a chase from a ridge in h reaches another ridge in
/// h after l steps, the composed map must carry h to +-h; angle sums are
/// reported as diagnostics when all angles are recognized.
ConditionThreeReport check_condition_3(const Polyhedron& p, const SidePairing& phi,
                                       const Hyperplane& h);

InvarianceReport check_precisely_invariant(const Polyhedron& p, const SidePairing& phi,
                                           const GeneratorSet& gens, const InvarianceCase& c);

}  // namespace hypoly
