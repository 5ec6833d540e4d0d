#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypoly/lorentz.hpp"

namespace hypoly {

struct VertexRecord {
  PointRep p;
  std::vector<int> carriers;  // sorted side indices i with <p, e_i> = 0
};

struct Face {
  int dim = 0;
  std::vector<int> verts;     // sorted vertex ids, finite and ideal
  std::vector<int> carriers;  // sorted side indices containing the face
};

/// Complete combinatorial skeleton of a finite-volume polyhedron: vertices
/// (finite and ideal) plus all faces of every dimension, identified by their
/// vertex sets.
struct FaceLattice {
  std::vector<VertexRecord> vertices;  // finite vertices first, then ideal
  int finite_count = 0;

  std::vector<std::vector<Face>> faces;  // faces[d], d = 0..n; faces[0] are finite vertices

  bool is_ideal(int vertex_id) const { return vertex_id >= finite_count; }
  int ideal_count() const { return static_cast<int>(vertices.size()) - finite_count; }

  /// Index of the face at `dim` with exactly this (sorted) vertex set; -1 if absent.
  int face_index(int dim, const std::vector<int>& verts) const;

  /// Vertex id for a canonical point representative; -1 if absent.
  int vertex_index(const Vec& canonical) const;

  std::vector<std::map<std::vector<int>, int>> face_lookup;  // per dim
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> vertex_lookup{
      [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; }};
};

/// Convex finite-volume polyhedron given by oriented unit half-space normals.
/// The face lattice is computed on demand and cached immutably.
class Polyhedron {
 public:
  Polyhedron(int n, std::vector<Hyperplane> sides, Vec interior_witness);

  int dim() const { return n_; }
  const std::vector<Hyperplane>& sides() const { return sides_; }
  const Hyperplane& side(int i) const { return sides_[i]; }
  int side_count() const { return static_cast<int>(sides_.size()); }

  /// Index of a named side; throws InputError for unknown names.
  int side_index(const std::string& name) const;

  /// A future-timelike vector strictly interior to every half-space.
  const Vec& witness() const { return witness_; }

  const FaceLattice& lattice() const;

  /// True iff <x, e_i> <= 0 for every side.
  bool contains(const Vec& x) const;

 private:
  int n_;
  std::vector<Hyperplane> sides_;
  Vec witness_;
  mutable std::shared_ptr<const FaceLattice> lattice_;
};

/// Dihedral angle census over all ridges (codimension-2 faces): pairs of
/// (angle as a fraction of pi, ridge count). Throws UnrecognizedAngleError if
/// some ridge angle is outside the table.
std::map<Rational, int> ridge_angle_census(const Polyhedron& p);

/// Angle fraction at one ridge.
Rational ridge_angle(const Polyhedron& p, const Face& ridge);

/// A polyhedron sliced by a hyperplane, with everything needed to transport
/// ambient isometries into the slice.
struct Restriction {
  Polyhedron poly;  // dimension n-1, sides named after their ambient sources
  Hyperplane h;
  Mat basis;  // rows: n-1 spacelike unit vectors, then one future timelike
  std::vector<std::vector<int>> source_sides;  // ambient side indices per restricted side
};

/// Builds the polyhedron H ∩ P inside the hyperplane h. A witness point on h
/// interior to P is found by reflecting the stored witness unless one is
/// supplied. Throws when h misses the interior or a normalization leaves
/// Q(sqrt2).
Restriction restrict_to_hyperplane(const Polyhedron& p, const Hyperplane& h,
                                   const Vec* witness_on_h = nullptr);

/// Transports an ambient isometry preserving h into slice coordinates;
/// throws PairingError when g does not preserve h.
LorentzMap restrict_map(const Restriction& r, const LorentzMap& g);

/// Coordinates of an ambient vector lying in span(h) w.r.t. the slice basis.
Vec restrict_coords(const Restriction& r, const Vec& x);

}  // namespace hypoly
