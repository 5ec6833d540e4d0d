#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypoly/pairing.hpp"

namespace hypoly {

using Json = nlohmann::ordered_json;

// Scalar literal used in all file formats: [a_num, a_den, b_num, b_den]
// meaning a_num/a_den + (b_num/b_den)*sqrt2. Entries may be JSON integers or
// decimal strings (for values beyond 64 bits).
Json scalar_to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

struct SphereDecl {
  std::string name;
  Vec center;
  ExactScalar radius_sq;
  SphereSide side = SphereSide::Exterior;
  bool operator==(const SphereDecl&) const = default;
};

struct PlaneDecl {
  std::string name;
  Vec normal;
  ExactScalar offset;
  PlaneSide side = PlaneSide::Negative;
  bool operator==(const PlaneDecl&) const = default;
};

using HyperplaneDecl = std::variant<SphereDecl, PlaneDecl>;

/// A primitive isometry a generator may be declared as.
struct PrimitiveOp {
  enum class Kind { ReflectPlane, InvertSphere, Translate, LinearOrthogonal };
  Kind kind = Kind::Translate;
  Vec vector;         // plane normal / sphere center / translation vector
  ExactScalar scalar; // plane offset / sphere radius_sq
  Mat matrix;         // LinearOrthogonal only
  bool operator==(const PrimitiveOp&) const = default;
};

/// A named generator: either a primitive op or a word over earlier names
/// (side reflections are referenced as "inv:<side>").
struct GeneratorDecl {
  std::string name;
  std::optional<PrimitiveOp> op;
  Word word;  // used when op is absent
  bool operator==(const GeneratorDecl&) const = default;
};

struct SpecDocument {
  int dimension = 4;
  std::vector<HyperplaneDecl> hyperplanes;
  std::vector<GeneratorDecl> generators;
  std::vector<PairingDecl> pairings;
  Vec witness;  // ambient future-timelike vector, n+1 literals
  bool operator==(const SpecDocument&) const = default;
};

SpecDocument spec_from_json(const Json& j);
Json spec_to_json(const SpecDocument& doc);

SpecDocument load_spec_file(const std::string& path);

struct CompiledSpec {
  Polyhedron poly;
  GeneratorSet gens;
  SidePairing pairing;
};

/// Builds the engine objects: sides in declaration order, side reflections
/// registered as "inv:<name>", then generators in order, then the pairing.
CompiledSpec compile_spec(const SpecDocument& doc);

/// Hyperplane compiled from a single declaration.
Hyperplane compile_hyperplane(const HyperplaneDecl& decl, int dimension);

/// Declarations of one case for the precise-invariance checker, as stored in
/// case files: the base bundle (builtin name or inline document), the
/// hyperplane, subgroup generator words and the induced slice pairing.
struct CaseDocument {
  std::variant<std::string, SpecDocument> base;
  HyperplaneDecl hyperplane;
  std::vector<Word> subgroup;
  std::vector<PairingDecl> induced;
  std::optional<Vec> witness;
  bool operator==(const CaseDocument&) const = default;
};

CaseDocument case_from_json(const Json& j);
Json case_to_json(const CaseDocument& doc);

}  // namespace hypoly
