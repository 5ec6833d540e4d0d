#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypoly/linalg.hpp"

namespace hypoly {

// Vectors of length n+1 against the bilinear form
//   <(v, alpha, beta), (v', alpha', beta')> = v.v' + alpha alpha' - beta beta'
// where v has n-1 entries. Hyperbolic n-space is the future sheet of <x,x> = -1.

/// Minkowski inner product on R^{n,1}; both vectors must have equal length.
ExactScalar minkowski(const Vec& u, const Vec& v);

enum class PointKind { Finite, Ideal };

/// A point of hyperbolic space (unit timelike, future) or an ideal point
/// (null, scaled so the last coordinate is 1).
struct PointRep {
  Vec x;
  PointKind kind = PointKind::Finite;
};

/// A unit spacelike vector housing an oriented hyperplane; the associated
/// half-space is { x : <x, e> <= 0 }.
struct Hyperplane {
  Vec e;
  std::string name;
};

/// An isometry of the Minkowski model, with the generator word it was
/// compiled from kept for reporting. Equality of isometries is always matrix
/// equality, never word equality.
struct LorentzMap {
  Mat m;
  std::vector<std::string> word;
};

/// Boundary point p in R^{n-1} lifted to a null vector (p, (|p|^2-1)/2, (|p|^2+1)/2).
Vec embed_boundary(const Vec& p);

/// Upper-half-space point (p, t), t > 0, lifted to the unit hyperboloid.
Vec embed_point(const Vec& p, const ExactScalar& t);

/// The distinguished ideal point (0, ..., 0, 1, 1).
Vec infinity_rep(int n);

/// Scales a null vector so its last coordinate is 1 (lands in the future cone).
Vec canonical_ideal(const Vec& x);

/// Scales a timelike vector onto the future unit sheet; requires the scale
/// factor to stay in Q(sqrt2).
Vec canonical_finite(const Vec& x);

PointRep make_point(const Vec& raw);

enum class SphereSide { Exterior, Interior };
enum class PlaneSide { Negative, Positive };

/// Hyperplane over the sphere |p - center| = sqrt(radius_sq); the selected
/// side of the boundary sphere becomes { <., e> <= 0 }.
Hyperplane hyperplane_from_sphere(const Vec& center, const ExactScalar& radius_sq,
                                  SphereSide side, const std::string& name);

/// Hyperplane over the Euclidean plane { p . normal = offset }.
Hyperplane hyperplane_from_plane(const Vec& normal, const ExactScalar& offset,
                                 PlaneSide side, const std::string& name);

/// Reflection x -> x - 2 <x,e> e in the hyperplane of e.
LorentzMap reflection(const Hyperplane& h);

/// Extension of the Euclidean isometry p -> U p + u of R^{n-1} to an isometry
/// of H^n; U must be orthogonal with entries in Q(sqrt2).
LorentzMap euclidean_extension(const Mat& linear, const Vec& translation,
                               const std::string& word_name = "");

LorentzMap euclidean_translation(const Vec& translation, const std::string& word_name = "");

LorentzMap identity_map(int n);

LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner);

/// Inverse via J M^T J.
LorentzMap inverse(const LorentzMap& g);

Vec apply_vec(const LorentzMap& g, const Vec& x);
PointRep apply_point(const LorentzMap& g, const PointRep& p);

/// Raw image of the hyperplane vector; callers compare the result up to sign.
Vec apply_hyperplane(const LorentzMap& g, const Hyperplane& h);

/// M^T J M = J, verified exactly, plus a future-cone spot check.
bool is_lorentz(const Mat& m);

enum class AngleKind { Intersecting, Tangent, Disjoint };

/// Classification of the relative position of two oriented hyperplanes via
/// gamma = -<e1, e2>: |gamma| < 1 intersecting (cos of the dihedral angle),
/// |gamma| = 1 tangent or identical, |gamma| > 1 disjoint.
struct AngleClass {
  AngleKind kind;
  ExactScalar cos_gamma;
  // Present for intersecting angles in the recognized table; the dihedral
  // angle is (angle_over_pi) * pi.
  std::optional<Rational> angle_over_pi;
};

/// Classifies without consulting the angle table (never throws).
AngleClass classify_position(const Hyperplane& a, const Hyperplane& b);

/// Classifies and, for intersecting pairs, resolves the angle against the
/// recognized-cosine table; throws UnrecognizedAngleError otherwise.
AngleClass classify_angle(const Hyperplane& a, const Hyperplane& b);

/// Table lookup for cos(theta) -> theta/pi; nullopt when not recognized.
std::optional<Rational> recognize_cosine(const ExactScalar& c);

}  // namespace hypoly
