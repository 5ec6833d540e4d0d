#pragma once

#include <string>
#include <vector>

#include "hypoly/invariance.hpp"
#include "hypoly/specfile.hpp"
#include "hypoly/topology.hpp"

namespace hypoly {

/// A compiled catalog entry together with its source document.
struct Bundle {
  std::string name;
  SpecDocument doc;
  Polyhedron poly;
  GeneratorSet gens;
  SidePairing pairing;
};

/// Fixed catalog entries ("chain:<n>:<pattern>" entries are generated on demand).
std::vector<std::string> bundle_names();
std::vector<std::string> case_names();

/// Document of a catalog entry: "P-phi1", "P-phi2" or "chain:<n>:<pattern>".
SpecDocument builtin_document(const std::string& name);

Bundle load_bundle(const std::string& name);

/// Builtin precise-invariance cases: "H-z0", "H-Z1", "H-diag1", "H-diag2".
InvarianceCase load_case(const std::string& name);
CaseDocument builtin_case_document(const std::string& name);

// --- base block data (also used by the chain construction) -----------------

const std::vector<SphereDecl>& base_spheres();
const std::vector<PlaneDecl>& base_planes();

/// Interior witness of the base polyhedron, as an ambient vector.
Vec base_witness();

/// Primitive generator declarations shared by both pairings
/// (q0, q1, q2, s1, s2, t0, x1, y1 and the word z1 = t0 t0).
std::vector<GeneratorDecl> base_primitive_decls();

/// Named pairing-generator words of one block type (a1..a6, b1, c1..c4, d1..d4).
std::vector<GeneratorDecl> base_pairing_generator_decls(BlockType t);

/// Side-pairing declarations of one block type.
std::vector<PairingDecl> base_pairing_decls(BlockType t);

}  // namespace hypoly
