#pragma once

#include <string>
#include <vector>

#include "hypoly/pairing.hpp"

namespace hypoly {

/// Number of ends of the quotient manifold: one per ideal-vertex cycle.
int ends(const CycleCensus& census);

/// Euler characteristic of the compact core: alternating sum of cycle counts,
/// with ideal-vertex cycles ignored.
int euler_characteristic(const CycleCensus& census);

/// Hyperbolic volume as an exact integer multiple of 4*pi^2/3 (dimension 4
/// only); equals the Euler characteristic by Gauss-Bonnet.
int volume_units(const CycleCensus& census);

enum class BlockType { Phi1, Phi2 };

/// A linear chain of translated copies of the base polyhedron, each carrying
/// one of the two block pairings.
struct ChainSpec {
  int blocks = 1;
  std::vector<BlockType> pattern;
};

/// Parses a pattern string of '1'/'2' characters.
ChainSpec make_chain_spec(int blocks, const std::string& pattern);

struct SpecDocument;  // specfile.hpp

/// Document of the chain polyhedron: translated block copies with the two
/// interface hyperplanes of each junction dropped, shared sides merged, and
/// the outer z-sides paired by the full-chain translation.
SpecDocument chain_document(const ChainSpec& spec);

struct ChainBundle {
  ChainSpec spec;
  Polyhedron poly;
  GeneratorSet gens;
  SidePairing pairing;
};

ChainBundle build_chain(const ChainSpec& spec);

struct ChainFamilyRow {
  int k = 0;  // number of Phi1 blocks
  std::string pattern;
  int ends = 0;
  int euler = 0;
  int volume = 0;
  bool pass = false;  // full verification passed and ends match 4 + 4n - k
};

/// One representative chain per k = 0..n; verifies each and tabulates ends.
std::vector<ChainFamilyRow> chain_family_table(int n);

}  // namespace hypoly
