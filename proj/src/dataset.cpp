#include "hypoly/dataset.hpp"


namespace hypoly {

namespace {

ExactScalar rt2(int k) { return ExactScalar(Rational(0), Rational(k)); }

Vec v3(ExactScalar x, ExactScalar y, ExactScalar z) { return Vec{std::move(x), std::move(y), std::move(z)}; }

Word W(std::initializer_list<const char*> tokens) {
  std::vector<std::string> t;
  for (const char* s : tokens) t.emplace_back(s);
  return parse_word(t);
}

}  // namespace

// Sphere sides: 12 at the three z-levels 0, +-2*sqrt2 centered (+-1, +-1, .),
// and 18 at z = +-sqrt2 centered over the lattice {-2, 0, 2}^2. All have
// radius sqrt2 and bound the polyhedron from outside the balls. The letter
// assignment is pinned by the incidences of the two reference vertices
// (0, 1, -3sqrt2/2) and (-1, 2, -3sqrt2/2) at height sqrt2/2, by the pairing
// words below acting correctly, and by the stabilizer data of the builtin
// invariance cases; the remaining freedom is a documented arbitrary choice.
const std::vector<SphereDecl>& base_spheres() {
  static const std::vector<SphereDecl> spheres = [] {
    std::vector<SphereDecl> s;
    ExactScalar r2(2);
    auto add = [&](const char* name, int x, int y, int zk) {
      s.push_back(SphereDecl{name, v3(ExactScalar(x), ExactScalar(y), rt2(zk)),
                             r2, SphereSide::Exterior});
    };
    add("A1", -1, 1, -2);
    add("A1'", 1, -1, -2);
    add("A2", -1, -1, -2);
    add("A2'", 1, 1, -2);
    add("A3", -1, 1, 0);
    add("A3'", 1, -1, 0);
    add("A4", -1, -1, 0);
    add("A4'", 1, 1, 0);
    add("A5", 1, -1, 2);
    add("A5'", -1, 1, 2);
    add("A6", 1, 1, 2);
    add("A6'", -1, -1, 2);
    add("B1", 0, 0, -1);
    add("B1'", 0, 0, 1);
    add("C1", 0, 2, -1);
    add("C1'", 0, 2, 1);
    add("C2", 0, -2, -1);
    add("C2'", 0, -2, 1);
    add("C3", 2, 0, -1);
    add("C3'", 2, 0, 1);
    add("C4", -2, 0, -1);
    add("C4'", -2, 0, 1);
    add("D1", -2, 2, -1);
    add("D1'", 2, -2, 1);
    add("D2", 2, 2, -1);
    add("D2'", 2, 2, 1);
    add("D3", 2, -2, -1);
    add("D3'", -2, 2, 1);
    add("D4", -2, -2, -1);
    add("D4'", -2, -2, 1);
    return s;
  }();
  return spheres;
}

const std::vector<PlaneDecl>& base_planes() {
  static const std::vector<PlaneDecl> planes = [] {
    std::vector<PlaneDecl> p;
    p.push_back(PlaneDecl{"X1", v3(1, 0, 0), ExactScalar(-2), PlaneSide::Positive});
    p.push_back(PlaneDecl{"X1'", v3(1, 0, 0), ExactScalar(2), PlaneSide::Negative});
    p.push_back(PlaneDecl{"Y1", v3(0, 1, 0), ExactScalar(-2), PlaneSide::Positive});
    p.push_back(PlaneDecl{"Y1'", v3(0, 1, 0), ExactScalar(2), PlaneSide::Negative});
    p.push_back(PlaneDecl{"Z1", v3(0, 0, 1), rt2(-2), PlaneSide::Positive});
    p.push_back(PlaneDecl{"Z1'", v3(0, 0, 1), rt2(2), PlaneSide::Negative});
    return p;
  }();
  return planes;
}

Vec base_witness() {
  // The point above every sphere: half-space coordinates (0, 0, 0, t = 3).
  return embed_point(v3(0, 0, 0), ExactScalar(3));
}

std::vector<GeneratorDecl> base_primitive_decls() {
  std::vector<GeneratorDecl> g;
  auto reflect = [&](const char* name, Vec normal) {
    PrimitiveOp op;
    op.kind = PrimitiveOp::Kind::ReflectPlane;
    op.vector = std::move(normal);
    op.scalar = ExactScalar(0);
    g.push_back(GeneratorDecl{name, op, {}});
  };
  auto linear = [&](const char* name, Mat m) {
    PrimitiveOp op;
    op.kind = PrimitiveOp::Kind::LinearOrthogonal;
    op.matrix = std::move(m);
    g.push_back(GeneratorDecl{name, op, {}});
  };
  auto translate = [&](const char* name, Vec t) {
    PrimitiveOp op;
    op.kind = PrimitiveOp::Kind::Translate;
    op.vector = std::move(t);
    g.push_back(GeneratorDecl{name, op, {}});
  };
  reflect("q0", v3(0, 0, 1));
  reflect("q1", v3(1, -1, 0));
  reflect("q2", v3(1, 1, 0));
  linear("s1", Mat{v3(0, -1, 0), v3(-1, 0, 0), v3(0, 0, -1)});
  linear("s2", Mat{v3(0, 1, 0), v3(1, 0, 0), v3(0, 0, -1)});
  translate("t0", v3(0, 0, rt2(2)));
  translate("x1", v3(4, 0, 0));
  translate("y1", v3(0, 4, 0));
  g.push_back(GeneratorDecl{"z1", std::nullopt, W({"t0", "t0"})});
  return g;
}

std::vector<GeneratorDecl> base_pairing_generator_decls(BlockType t) {
  std::vector<GeneratorDecl> g;
  auto word = [&](const char* name, Word w) {
    g.push_back(GeneratorDecl{name, std::nullopt, std::move(w)});
  };
  word("a1", W({"q1", "inv:A1"}));
  word("a2", W({"q2", "inv:A2"}));
  word("a3", W({"q1", "inv:A3"}));
  word("a4", W({"q2", "inv:A4"}));
  word("a5", W({"q1", "inv:A5"}));
  word("a6", W({"q2", "inv:A6"}));
  if (t == BlockType::Phi1) {
    word("b1", W({"q1", "t0", "inv:B1"}));
    word("c1", W({"q0", "inv:C1"}));
    word("c2", W({"q0", "inv:C2"}));
    word("c3", W({"q0", "inv:C3"}));
    word("c4", W({"q0", "inv:C4"}));
    word("d1", W({"q1", "t0", "inv:D1"}));
    word("d2", W({"q1", "t0", "inv:D2"}));
    word("d3", W({"q1", "t0", "inv:D3"}));
    word("d4", W({"q1", "t0", "inv:D4"}));
  } else {
    word("b1", W({"q0", "inv:B1"}));
    word("c1", W({"q1", "t0", "inv:C1"}));
    word("c2", W({"q1", "t0", "inv:C2"}));
    word("c3", W({"q1", "t0", "inv:C3"}));
    word("c4", W({"q1", "t0", "inv:C4"}));
    word("d1", W({"s1", "q1", "inv:D1"}));
    word("d2", W({"s2", "q2", "inv:D2"}));
    word("d3", W({"s1", "q1", "inv:D3"}));
    word("d4", W({"s2", "q2", "inv:D4"}));
  }
  return g;
}

std::vector<PairingDecl> base_pairing_decls(BlockType t) {
  std::vector<PairingDecl> p;
  auto pair = [&](const char* from, const char* to, const char* gen) {
    p.push_back(PairingDecl{from, to, W({gen})});
  };
  pair("X1", "X1'", "x1");
  pair("Y1", "Y1'", "y1");
  pair("Z1", "Z1'", "z1");
  pair("A1", "A1'", "a1");
  pair("A2", "A2'", "a2");
  pair("A3", "A3'", "a3");
  pair("A4", "A4'", "a4");
  pair("A5", "A5'", "a5");
  pair("A6", "A6'", "a6");
  pair("B1", "B1'", "b1");
  if (t == BlockType::Phi1) {
    pair("C1", "C1'", "c1");
    pair("C2", "C2'", "c2");
    pair("C3", "C3'", "c3");
    pair("C4", "C4'", "c4");
    pair("D1", "D1'", "d1");
    pair("D2", "D2'", "d2");
    pair("D3", "D3'", "d3");
    pair("D4", "D4'", "d4");
  } else {
    pair("C1", "C3'", "c1");
    pair("C2", "C4'", "c2");
    pair("C3", "C1'", "c3");
    pair("C4", "C2'", "c4");
    pair("D1", "D1'", "d1");
    pair("D2", "D4'", "d2");
    pair("D3", "D3'", "d3");
    pair("D4", "D2'", "d4");
  }
  return p;
}

std::vector<std::string> bundle_names() { return {"P-phi1", "P-phi2"}; }

std::vector<std::string> case_names() { return {"H-z0", "H-Z1", "H-diag1", "H-diag2"}; }

SpecDocument builtin_document(const std::string& name) {
  BlockType t;
  if (name == "P-phi1") {
    t = BlockType::Phi1;
  } else if (name == "P-phi2") {
    t = BlockType::Phi2;
  } else if (name.rfind("chain:", 0) == 0) {
    std::string rest = name.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("chain name must be chain:<n>:<pattern>");
    int n = 0;
    try {
      n = std::stoi(rest.substr(0, colon));
    } catch (...) {
      throw InputError("bad block count in '" + name + "'");
    }
    return chain_document(make_chain_spec(n, rest.substr(colon + 1)));
  } else {
    throw InputError("unknown builtin '" + name + "'");
  }
  SpecDocument doc;
  doc.dimension = 4;
  for (const auto& s : base_spheres()) doc.hyperplanes.push_back(s);
  for (const auto& p : base_planes()) doc.hyperplanes.push_back(p);
  doc.generators = base_primitive_decls();
  for (auto& g : base_pairing_generator_decls(t)) doc.generators.push_back(std::move(g));
  doc.pairings = base_pairing_decls(t);
  doc.witness = base_witness();
  return doc;
}

Bundle load_bundle(const std::string& name) {
  SpecDocument doc = builtin_document(name);
  CompiledSpec cs = compile_spec(doc);
  return Bundle{name, std::move(doc), std::move(cs.poly), std::move(cs.gens),
                std::move(cs.pairing)};
}

CaseDocument builtin_case_document(const std::string& name) {
  CaseDocument c;
  c.base = std::string("P-phi1");
  if (name == "H-z0") {
    c.hyperplane = PlaneDecl{"H", v3(0, 0, 1), ExactScalar(0), PlaneSide::Negative};
    c.subgroup = {W({"x1"}), W({"y1"}), W({"a3"}), W({"a4"})};
    c.induced = {PairingDecl{"X1", "X1'", W({"x1"})}, PairingDecl{"Y1", "Y1'", W({"y1"})},
                 PairingDecl{"A3", "A3'", W({"a3"})}, PairingDecl{"A4", "A4'", W({"a4"})}};
  } else if (name == "H-Z1") {
    c.hyperplane = PlaneDecl{"H", v3(0, 0, 1), rt2(-2), PlaneSide::Negative};
    c.subgroup = {W({"x1"}), W({"y1"}), W({"a1"}), W({"a2"})};
    c.induced = {PairingDecl{"X1", "X1'", W({"x1"})}, PairingDecl{"Y1", "Y1'", W({"y1"})},
                 PairingDecl{"A1", "A1'", W({"a1"})}, PairingDecl{"A2", "A2'", W({"a2"})}};
  } else if (name == "H-diag1") {
    c.hyperplane = PlaneDecl{"H", v3(1, -1, 0), ExactScalar(0), PlaneSide::Negative};
    // z1 is required: the slice has two sides on the z-box hyperplanes and
    // only the z-translation pairs them; it is not a product of the others
    // (the z1-exponent of every slice cycle relation vanishes, so exponent
    // count is a homomorphism to Z separating z1 from the rest).
    c.subgroup = {W({"a2"}), W({"a4"}), W({"a6"}), W({"b1"}),
                  W({"d2"}), W({"d4"}), W({"y1", "x1"}), W({"z1"})};
    c.induced = {PairingDecl{"A2", "A2'", W({"a2"})},  PairingDecl{"A4", "A4'", W({"a4"})},
                 PairingDecl{"A6", "A6'", W({"a6"})},  PairingDecl{"B1", "B1'", W({"b1"})},
                 PairingDecl{"D2", "D2'", W({"d2"})},  PairingDecl{"D4", "D4'", W({"d4"})},
                 PairingDecl{"X1", "X1'", W({"y1", "x1"})},
                 PairingDecl{"Z1", "Z1'", W({"z1"})}};
  } else if (name == "H-diag2") {
    c.hyperplane = PlaneDecl{"H", v3(1, 1, 0), ExactScalar(0), PlaneSide::Negative};
    c.subgroup = {W({"a1"}), W({"a3"}), W({"a5"}), W({"b1"}),
                  W({"d1"}), W({"d3"}), W({"y1^-1", "x1"}), W({"z1"})};
    c.induced = {PairingDecl{"A1", "A1'", W({"a1"})},  PairingDecl{"A3", "A3'", W({"a3"})},
                 PairingDecl{"A5", "A5'", W({"a5"})},  PairingDecl{"B1", "B1'", W({"b1"})},
                 PairingDecl{"D1", "D1'", W({"d1"})},  PairingDecl{"D3", "D3'", W({"d3"})},
                 PairingDecl{"X1", "X1'", W({"y1^-1", "x1"})},
                 PairingDecl{"Z1", "Z1'", W({"z1"})}};
  } else {
    throw InputError("unknown builtin case '" + name + "'");
  }
  return c;
}

InvarianceCase load_case(const std::string& name) {
  CaseDocument doc = builtin_case_document(name);
  InvarianceCase c;
  c.name = name;
  c.base_bundle = std::get<std::string>(doc.base);
  c.h = compile_hyperplane(doc.hyperplane, 4);
  c.subgroup_gens = doc.subgroup;
  c.induced = doc.induced;
  c.witness_on_h = doc.witness;
  return c;
}

}  // namespace hypoly
