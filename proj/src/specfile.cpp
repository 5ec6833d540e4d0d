#include "hypoly/specfile.hpp"

#include <fstream>
#include <set>

namespace hypoly {

namespace {

Json int_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

BigInt int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InputError("scalar literal entries must be integers or integer strings");
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(vec_to_json(r));
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  Mat m;
  for (const auto& r : j) m.push_back(vec_from_json(r));
  return m;
}

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (const auto& t : word_tokens(w)) arr.push_back(t);
  return arr;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("word must be an array of generator tokens");
  std::vector<std::string> tokens;
  for (const auto& t : j) {
    if (!t.is_string()) throw InputError("word tokens must be strings");
    tokens.push_back(t.get<std::string>());
  }
  return parse_word(tokens);
}

const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

Json hyperplane_to_json(const HyperplaneDecl& decl) {
  Json j;
  if (const auto* s = std::get_if<SphereDecl>(&decl)) {
    j["name"] = s->name;
    j["sphere"] = Json{{"center", vec_to_json(s->center)},
                       {"radius_sq", scalar_to_json(s->radius_sq)}};
    j["side"] = s->side == SphereSide::Exterior ? "exterior" : "interior";
  } else {
    const auto& p = std::get<PlaneDecl>(decl);
    j["name"] = p.name;
    j["plane"] = Json{{"normal", vec_to_json(p.normal)}, {"offset", scalar_to_json(p.offset)}};
    j["side"] = p.side == PlaneSide::Negative ? "negative" : "positive";
  }
  return j;
}

HyperplaneDecl hyperplane_from_json(const Json& j) {
  std::string name = require(j, "name").get<std::string>();
  std::string side = require(j, "side").get<std::string>();
  if (j.contains("sphere")) {
    const Json& s = j["sphere"];
    SphereSide ss;
    if (side == "exterior")
      ss = SphereSide::Exterior;
    else if (side == "interior")
      ss = SphereSide::Interior;
    else
      throw InputError("sphere side must be 'exterior' or 'interior'");
    return SphereDecl{name, vec_from_json(require(s, "center")),
                      scalar_from_json(require(s, "radius_sq")), ss};
  }
  if (j.contains("plane")) {
    const Json& p = j["plane"];
    PlaneSide ps;
    if (side == "negative")
      ps = PlaneSide::Negative;
    else if (side == "positive")
      ps = PlaneSide::Positive;
    else
      throw InputError("plane side must be 'negative' or 'positive'");
    return PlaneDecl{name, vec_from_json(require(p, "normal")),
                     scalar_from_json(require(p, "offset")), ps};
  }
  throw InputError("hyperplane '" + name + "' must declare a sphere or a plane");
}

Json generator_to_json(const GeneratorDecl& g) {
  Json j;
  j["name"] = g.name;
  if (!g.op) {
    j["word"] = word_to_json(g.word);
    return j;
  }
  switch (g.op->kind) {
    case PrimitiveOp::Kind::ReflectPlane:
      j["reflect-plane"] = Json{{"normal", vec_to_json(g.op->vector)},
                                {"offset", scalar_to_json(g.op->scalar)}};
      break;
    case PrimitiveOp::Kind::InvertSphere:
      j["invert-sphere"] = Json{{"center", vec_to_json(g.op->vector)},
                                {"radius_sq", scalar_to_json(g.op->scalar)}};
      break;
    case PrimitiveOp::Kind::Translate:
      j["translate"] = Json{{"vector", vec_to_json(g.op->vector)}};
      break;
    case PrimitiveOp::Kind::LinearOrthogonal:
      j["linear-orthogonal"] = Json{{"matrix", mat_to_json(g.op->matrix)}};
      break;
  }
  return j;
}

GeneratorDecl generator_from_json(const Json& j) {
  GeneratorDecl g;
  g.name = require(j, "name").get<std::string>();
  if (j.contains("word")) {
    g.word = word_from_json(j["word"]);
    return g;
  }
  PrimitiveOp op;
  if (j.contains("reflect-plane")) {
    op.kind = PrimitiveOp::Kind::ReflectPlane;
    op.vector = vec_from_json(require(j["reflect-plane"], "normal"));
    op.scalar = scalar_from_json(require(j["reflect-plane"], "offset"));
  } else if (j.contains("invert-sphere")) {
    op.kind = PrimitiveOp::Kind::InvertSphere;
    op.vector = vec_from_json(require(j["invert-sphere"], "center"));
    op.scalar = scalar_from_json(require(j["invert-sphere"], "radius_sq"));
  } else if (j.contains("translate")) {
    op.kind = PrimitiveOp::Kind::Translate;
    op.vector = vec_from_json(require(j["translate"], "vector"));
  } else if (j.contains("linear-orthogonal")) {
    op.kind = PrimitiveOp::Kind::LinearOrthogonal;
    op.matrix = mat_from_json(require(j["linear-orthogonal"], "matrix"));
  } else {
    throw InputError("generator '" + g.name + "' must declare a word or a primitive");
  }
  g.op = std::move(op);
  return g;
}

Json pairing_to_json(const PairingDecl& p) {
  return Json{{"from", p.from}, {"to", p.to}, {"word", word_to_json(p.word)}};
}

PairingDecl pairing_from_json(const Json& j) {
  return PairingDecl{require(j, "from").get<std::string>(), require(j, "to").get<std::string>(),
                     word_from_json(require(j, "word"))};
}

LorentzMap compile_primitive(const PrimitiveOp& op, int n, const std::string& name) {
  switch (op.kind) {
    case PrimitiveOp::Kind::ReflectPlane: {
      LorentzMap g = reflection(hyperplane_from_plane(op.vector, op.scalar,
                                                      PlaneSide::Negative, name));
      g.word = {name};
      return g;
    }
    case PrimitiveOp::Kind::InvertSphere: {
      LorentzMap g = reflection(hyperplane_from_sphere(op.vector, op.scalar,
                                                       SphereSide::Exterior, name));
      g.word = {name};
      return g;
    }
    case PrimitiveOp::Kind::Translate:
      return euclidean_translation(op.vector, name);
    case PrimitiveOp::Kind::LinearOrthogonal:
      return euclidean_extension(op.matrix, zero_vec(n - 1), name);
  }
  throw Error("unreachable primitive kind");
}

}  // namespace

Json scalar_to_json(const ExactScalar& x) {
  return Json::array({int_to_json(x.rational_part().get_num()),
                      int_to_json(x.rational_part().get_den()),
                      int_to_json(x.sqrt2_part().get_num()),
                      int_to_json(x.sqrt2_part().get_den())});
}

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InputError("scalar literal must be [a_num, a_den, b_num, b_den]");
  return ExactScalar(make_rational(int_from_json(j[0]), int_from_json(j[1])),
                     make_rational(int_from_json(j[2]), int_from_json(j[3])));
}

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array of scalar literals");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

SpecDocument spec_from_json(const Json& j) {
  SpecDocument doc;
  doc.dimension = require(j, "dimension").get<int>();
  if (doc.dimension != 3 && doc.dimension != 4) throw InputError("dimension must be 3 or 4");
  std::set<std::string> names;
  for (const auto& h : require(j, "hyperplanes")) {
    HyperplaneDecl decl = hyperplane_from_json(h);
    std::string name = std::visit([](const auto& d) { return d.name; }, decl);
    if (!names.insert(name).second) throw InputError("duplicate hyperplane name '" + name + "'");
    doc.hyperplanes.push_back(std::move(decl));
  }
  std::set<std::string> gnames;
  for (const auto& g : require(j, "generators")) {
    GeneratorDecl decl = generator_from_json(g);
    if (!gnames.insert(decl.name).second)
      throw InputError("duplicate generator name '" + decl.name + "'");
    doc.generators.push_back(std::move(decl));
  }
  for (const auto& p : require(j, "pairings")) doc.pairings.push_back(pairing_from_json(p));
  doc.witness = vec_from_json(require(j, "witness"));
  return doc;
}

Json spec_to_json(const SpecDocument& doc) {
  Json j;
  j["dimension"] = doc.dimension;
  j["hyperplanes"] = Json::array();
  for (const auto& h : doc.hyperplanes) j["hyperplanes"].push_back(hyperplane_to_json(h));
  j["generators"] = Json::array();
  for (const auto& g : doc.generators) j["generators"].push_back(generator_to_json(g));
  j["pairings"] = Json::array();
  for (const auto& p : doc.pairings) j["pairings"].push_back(pairing_to_json(p));
  j["witness"] = vec_to_json(doc.witness);
  return j;
}

SpecDocument load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("JSON parse error in '" + path + "': " + e.what());
  }
  return spec_from_json(j);
}

Hyperplane compile_hyperplane(const HyperplaneDecl& decl, int dimension) {
  if (const auto* s = std::get_if<SphereDecl>(&decl)) {
    if (static_cast<int>(s->center.size()) != dimension - 1)
      throw InputError("sphere '" + s->name + "' center has wrong dimension");
    return hyperplane_from_sphere(s->center, s->radius_sq, s->side, s->name);
  }
  const auto& p = std::get<PlaneDecl>(decl);
  if (static_cast<int>(p.normal.size()) != dimension - 1)
    throw InputError("plane '" + p.name + "' normal has wrong dimension");
  return hyperplane_from_plane(p.normal, p.offset, p.side, p.name);
}

CompiledSpec compile_spec(const SpecDocument& doc) {
  const int n = doc.dimension;
  std::vector<Hyperplane> sides;
  sides.reserve(doc.hyperplanes.size());
  for (const auto& h : doc.hyperplanes) sides.push_back(compile_hyperplane(h, n));
  Polyhedron poly(n, std::move(sides), doc.witness);

  GeneratorSet gens(n);
  for (const auto& s : poly.sides()) gens.define("inv:" + s.name, reflection(s));
  for (const auto& g : doc.generators) {
    if (g.op)
      gens.define(g.name, compile_primitive(*g.op, n, g.name));
    else
      gens.define(g.name, gens.compile(g.word));
  }
  SidePairing pairing = build_side_pairing(poly, gens, doc.pairings);
  return CompiledSpec{std::move(poly), std::move(gens), std::move(pairing)};
}

CaseDocument case_from_json(const Json& j) {
  CaseDocument c;
  const Json& base = require(j, "base");
  if (base.is_string())
    c.base = base.get<std::string>();
  else
    c.base = spec_from_json(base);
  c.hyperplane = hyperplane_from_json(require(j, "hyperplane"));
  for (const auto& w : require(j, "subgroup")) c.subgroup.push_back(word_from_json(w));
  for (const auto& p : require(j, "induced")) c.induced.push_back(pairing_from_json(p));
  if (j.contains("witness")) c.witness = vec_from_json(j["witness"]);
  return c;
}

Json case_to_json(const CaseDocument& doc) {
  Json j;
  if (const auto* s = std::get_if<std::string>(&doc.base))
    j["base"] = *s;
  else
    j["base"] = spec_to_json(std::get<SpecDocument>(doc.base));
  j["hyperplane"] = hyperplane_to_json(doc.hyperplane);
  j["subgroup"] = Json::array();
  for (const auto& w : doc.subgroup) j["subgroup"].push_back(word_to_json(w));
  j["induced"] = Json::array();
  for (const auto& p : doc.induced) j["induced"].push_back(pairing_to_json(p));
  if (doc.witness) j["witness"] = vec_to_json(*doc.witness);
  return j;
}

}  // namespace hypoly
