#include "hypoly/topology.hpp"

#include <algorithm>
#include <map>

#include "hypoly/dataset.hpp"
#include "hypoly/specfile.hpp"

namespace hypoly {

int ends(const CycleCensus& census) { return census.ideal_cycles; }

int euler_characteristic(const CycleCensus& census) {
  int chi = 0;
  for (std::size_t i = 0; i < census.c.size(); ++i)
    chi += (i % 2 == 0) ? census.c[i] : -census.c[i];
  return chi;
}

int volume_units(const CycleCensus& census) {
  if (census.dimension != 4)
    throw InputError("volume in units of 4*pi^2/3 is defined in dimension 4 only");
  return euler_characteristic(census);
}

ChainSpec make_chain_spec(int blocks, const std::string& pattern) {
  if (blocks < 1) throw InputError("chain needs at least one block");
  if (static_cast<int>(pattern.size()) != blocks)
    throw InputError("pattern length must equal the block count");
  ChainSpec spec;
  spec.blocks = blocks;
  for (char c : pattern) {
    if (c == '1')
      spec.pattern.push_back(BlockType::Phi1);
    else if (c == '2')
      spec.pattern.push_back(BlockType::Phi2);
    else
      throw InputError("pattern characters must be '1' or '2'");
  }
  return spec;
}

namespace {

std::string block_suffix(int i) { return "@" + std::to_string(i); }

// Rewrites a base-block word for block i, conjugating by the block shift
// t0^(2(i-1)): z-level-sensitive primitives are wrapped in t0 powers and side
// references go through the alias map (inversion in the shifted sphere).
Word rewrite_block_word(const Word& w, int block,
                        const std::map<std::string, std::string>& alias) {
  Word out;
  int tpow = 2 * (block - 1);
  for (const auto& tok : w) {
    if (tok.name == "q0" || tok.name == "s1" || tok.name == "s2") {
      for (int r = 0; r < tpow; ++r) out.push_back(WordToken{"t0", false});
      out.push_back(tok);
      for (int r = 0; r < tpow; ++r) out.push_back(WordToken{"t0", true});
    } else if (tok.name.rfind("inv:", 0) == 0) {
      std::string side = tok.name.substr(4) + block_suffix(block);
      auto it = alias.find(side);
      if (it == alias.end()) throw Error("chain construction lost side " + side);
      out.push_back(WordToken{"inv:" + it->second, tok.inverse});
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace

SpecDocument chain_document(const ChainSpec& spec) {
  const int n = spec.blocks;
  if (n < 1 || static_cast<int>(spec.pattern.size()) != n)
    throw InputError("malformed chain spec");

  SpecDocument doc;
  doc.dimension = 4;
  doc.witness = base_witness();

  // Sphere sides of all blocks; interface-level spheres coincide between
  // consecutive blocks and are kept once under the earlier block's name.
  std::map<Vec, std::string, bool (*)(const Vec&, const Vec&)> by_center(
      [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  std::map<std::string, std::string> alias;  // "<base name>@<block>" -> document name
  for (int i = 1; i <= n; ++i) {
    ExactScalar dz(Rational(0), Rational(4 * (i - 1)));
    for (const auto& s : base_spheres()) {
      Vec center = s.center;
      center[2] += dz;
      std::string block_name = s.name + block_suffix(i);
      auto it = by_center.find(center);
      if (it != by_center.end()) {
        alias[block_name] = it->second;
        continue;
      }
      by_center.emplace(center, block_name);
      alias[block_name] = block_name;
      doc.hyperplanes.push_back(SphereDecl{block_name, center, s.radius_sq, s.side});
    }
  }
  // Box planes are common to every block; the chain keeps the bottom Z side
  // of block 1 and stretches the top one to the end of block n.
  for (const auto& p : base_planes()) {
    PlaneDecl decl = p;
    if (p.name == "Z1'") decl.offset = p.offset + ExactScalar(Rational(0), Rational(4 * (n - 1)));
    doc.hyperplanes.push_back(decl);
  }

  doc.generators = base_primitive_decls();
  std::vector<PairingDecl> pair_decls;
  std::map<std::string, bool> side_paired;
  for (int i = 1; i <= n; ++i) {
    BlockType t = spec.pattern[i - 1];
    for (const auto& g : base_pairing_generator_decls(t)) {
      GeneratorDecl decl;
      decl.name = g.name + block_suffix(i);
      decl.word = rewrite_block_word(g.word, i, alias);
      doc.generators.push_back(std::move(decl));
    }
    for (const auto& pd : base_pairing_decls(t)) {
      if (pd.from == "X1" || pd.from == "Y1" || pd.from == "Z1") continue;  // handled globally
      std::string from = alias.at(pd.from + block_suffix(i));
      std::string to = alias.at(pd.to + block_suffix(i));
      if (side_paired.count(from)) continue;  // shared interface side, already paired
      side_paired[from] = side_paired[to] = true;
      Word w;
      for (const auto& tok : pd.word) w.push_back(WordToken{tok.name + block_suffix(i), tok.inverse});
      pair_decls.push_back(PairingDecl{from, to, std::move(w)});
    }
  }
  pair_decls.push_back(PairingDecl{"X1", "X1'", parse_word({"x1"})});
  pair_decls.push_back(PairingDecl{"Y1", "Y1'", parse_word({"y1"})});
  Word zword;
  for (int r = 0; r < 2 * n; ++r) zword.push_back(WordToken{"t0", false});
  pair_decls.push_back(PairingDecl{"Z1", "Z1'", std::move(zword)});
  doc.pairings = std::move(pair_decls);
  return doc;
}

ChainBundle build_chain(const ChainSpec& spec) {
  SpecDocument doc = chain_document(spec);
  CompiledSpec cs = compile_spec(doc);
  return ChainBundle{spec, std::move(cs.poly), std::move(cs.gens), std::move(cs.pairing)};
}

std::vector<ChainFamilyRow> chain_family_table(int n) {
  if (n < 1 || n > 8) throw InputError("chain table supported for 1 <= n <= 8");
  std::vector<ChainFamilyRow> rows;
  for (int k = 0; k <= n; ++k) {
    std::string pattern(k, '1');
    pattern.append(n - k, '2');
    ChainBundle chain = build_chain(make_chain_spec(n, pattern));
    VerificationReport rep = verify_poincare(chain.poly, chain.pairing);
    ChainFamilyRow row;
    row.k = k;
    row.pattern = pattern;
    row.ends = rep.ends;
    row.euler = rep.euler_characteristic;
    row.volume = rep.volume_units.value_or(0);
    row.pass = rep.all_pass && rep.ends == 4 + 4 * n - k && rep.euler_characteristic == 2 * n;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypoly
