#include "hypoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>

namespace hypoly {

namespace {

// Vertex-set bitsets keyed into maps during lattice construction.
struct VBits {
  std::vector<std::uint64_t> w;
  explicit VBits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  bool operator<(const VBits& o) const { return w < o.w; }
  bool operator==(const VBits& o) const { return w == o.w; }
  VBits operator&(const VBits& o) const {
    VBits r;
    r.w.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  bool subset_of(const VBits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  std::vector<int> to_list() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int b = __builtin_ctzll(x);
        r.push_back(static_cast<int>(i * 64 + b));
        x &= x - 1;
      }
    }
    return r;
  }
};

Vec form_row(const Vec& e) {
  Vec r = e;
  r.back() = -r.back();
  return r;
}

// Enumerates all k-cliques of the compatibility graph.
void for_each_clique(const std::vector<VBits>& adj, int m, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, const VBits&)> grow = [&](int next_min, const VBits& cands) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int i = next_min; i < m; ++i) {
      if (!cands.test(i)) continue;
      cur.push_back(i);
      grow(i + 1, cands & adj[i]);
      cur.pop_back();
    }
  };
  VBits all(m);
  for (int i = 0; i < m; ++i) all.set(i);
  grow(0, all);
}

}  // namespace

int FaceLattice::face_index(int dim, const std::vector<int>& verts) const {
  if (dim < 0 || dim >= static_cast<int>(face_lookup.size())) return -1;
  auto it = face_lookup[dim].find(verts);
  return it == face_lookup[dim].end() ? -1 : it->second;
}

int FaceLattice::vertex_index(const Vec& canonical) const {
  auto it = vertex_lookup.find(canonical);
  return it == vertex_lookup.end() ? -1 : it->second;
}

Polyhedron::Polyhedron(int n, std::vector<Hyperplane> sides, Vec interior_witness)
    : n_(n), sides_(std::move(sides)), witness_(std::move(interior_witness)) {
  if (n_ != 3 && n_ != 4) throw InputError("polyhedron dimension must be 3 or 4");
  for (const auto& s : sides_)
    if (minkowski(s.e, s.e) != ExactScalar(1))
      throw InputError("side '" + s.name + "' is not a unit spacelike vector");
  for (std::size_t i = 0; i < sides_.size(); ++i)
    for (std::size_t j = i + 1; j < sides_.size(); ++j)
      if (vec_eq(sides_[i].e, sides_[j].e) || vec_eq_neg(sides_[i].e, sides_[j].e))
        throw InputError("sides '" + sides_[i].name + "' and '" + sides_[j].name +
                         "' lie on the same hyperplane");
  if (minkowski(witness_, witness_).sign() >= 0)
    throw InputError("interior witness is not timelike");
  if (witness_.back().sign() <= 0) throw InputError("interior witness is not future-pointing");
  for (const auto& s : sides_)
    if (minkowski(witness_, s.e).sign() >= 0)
      throw InputError("witness is not strictly interior to side '" + s.name + "'");
}

int Polyhedron::side_index(const std::string& name) const {
  for (std::size_t i = 0; i < sides_.size(); ++i)
    if (sides_[i].name == name) return static_cast<int>(i);
  throw InputError("unknown side name '" + name + "'");
}

bool Polyhedron::contains(const Vec& x) const {
  for (const auto& s : sides_)
    if (minkowski(x, s.e).sign() > 0) return false;
  return true;
}

const FaceLattice& Polyhedron::lattice() const {
  if (lattice_) return *lattice_;
  auto lat = std::make_shared<FaceLattice>();
  const int m = side_count();
  const int n = n_;

  // --- vertices -----------------------------------------------------------
  // Candidates come from n-subsets of pairwise non-disjoint sides whose
  // normals have rank n; the one-dimensional solution of <x, e_i> = 0 is a
  // vertex candidate classified by the sign of <x, x>.
  std::vector<VBits> adj(m, VBits(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      AngleClass pos = classify_position(sides_[i], sides_[j]);
      if (pos.kind == AngleKind::Disjoint) continue;
      adj[i].set(j);
      adj[j].set(i);
    }

  std::vector<Vec> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = form_row(sides_[i].e);

  std::map<Vec, PointRep, bool (*)(const Vec&, const Vec&)> candidates(
      [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });

  for_each_clique(adj, m, n, [&](const std::vector<int>& subset) {
    Mat sys;
    sys.reserve(n);
    for (int i : subset) sys.push_back(rows[i]);
    auto null = mat_nullspace(sys);
    if (null.size() != 1) return;
    const Vec& v = null[0];
    int s = minkowski(v, v).sign();
    if (s > 0) return;
    PointRep p;
    if (s < 0)
      p = PointRep{canonical_finite(v), PointKind::Finite};
    else
      p = PointRep{canonical_ideal(v), PointKind::Ideal};
    candidates.emplace(p.x, p);
  });

  std::vector<VertexRecord> finite, ideal;
  for (auto& [key, p] : candidates) {
    std::vector<int> carriers;
    bool inside = true;
    for (int i = 0; i < m; ++i) {
      int sg = minkowski(p.x, sides_[i].e).sign();
      if (sg > 0) {
        inside = false;
        break;
      }
      if (sg == 0) carriers.push_back(i);
    }
    if (!inside) continue;
    VertexRecord rec{p, std::move(carriers)};
    (rec.p.kind == PointKind::Finite ? finite : ideal).push_back(std::move(rec));
  }
  auto by_coords = [](const VertexRecord& a, const VertexRecord& b) {
    return vec_compare(a.p.x, b.p.x) < 0;
  };
  std::sort(finite.begin(), finite.end(), by_coords);
  std::sort(ideal.begin(), ideal.end(), by_coords);
  lat->finite_count = static_cast<int>(finite.size());
  lat->vertices = std::move(finite);
  lat->vertices.insert(lat->vertices.end(), std::make_move_iterator(ideal.begin()),
                       std::make_move_iterator(ideal.end()));
  for (std::size_t i = 0; i < lat->vertices.size(); ++i)
    lat->vertex_lookup.emplace(lat->vertices[i].p.x, static_cast<int>(i));

  // --- faces ----------------------------------------------------------------
  // Downward closure from the top cell: intersecting a face's vertex set with
  // one more facet always yields a face; the dimension is n - rank(carriers).
  const std::size_t nv = lat->vertices.size();
  std::vector<VBits> side_verts(m, VBits(nv));
  for (std::size_t v = 0; v < nv; ++v)
    for (int c : lat->vertices[v].carriers) side_verts[c].set(v);

  struct Rec {
    int dim;
    std::vector<int> carriers;
  };
  std::map<VBits, Rec> seen;
  std::deque<VBits> queue;

  auto classify_set = [&](const VBits& vs) -> Rec {
    Rec r;
    for (int i = 0; i < m; ++i)
      if (vs.subset_of(side_verts[i])) r.carriers.push_back(i);
    Mat normals;
    normals.reserve(r.carriers.size());
    for (int i : r.carriers) normals.push_back(sides_[i].e);
    int rank = normals.empty() ? 0 : mat_rank(normals);
    r.dim = n - rank;
    // The common vertex set must span a flat of matching dimension.
    Mat span;
    for (int v : vs.to_list()) span.push_back(lat->vertices[v].p.x);
    if (mat_rank(span) != r.dim + 1)
      throw LatticeError("face vertex span does not match carrier rank");
    return r;
  };

  VBits top(nv);
  for (std::size_t v = 0; v < nv; ++v) top.set(v);
  seen.emplace(top, classify_set(top));
  queue.push_back(top);

  while (!queue.empty()) {
    VBits cur = queue.front();
    queue.pop_front();
    const Rec& info = seen.at(cur);
    if (info.dim <= 0) continue;
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(info.carriers.begin(), info.carriers.end(), i)) continue;
      VBits child = cur & side_verts[i];
      if (!child.any()) continue;
      if (seen.count(child)) continue;
      Rec r = classify_set(child);
      int cnt = child.count();
      if (r.dim >= 1 && cnt < 2)
        throw LatticeError("face of dimension >= 1 with fewer than 2 vertices");
      seen.emplace(child, std::move(r));
      queue.push_back(child);
    }
  }

  lat->faces.assign(n + 1, {});
  for (const auto& [vs, rec] : seen) {
    if (rec.dim == 0) {
      auto vl = vs.to_list();
      if (vl.size() != 1) throw LatticeError("zero-dimensional face with several vertices");
      if (lat->is_ideal(vl[0])) continue;  // ideal vertices are not 0-faces
    }
    Face f;
    f.dim = rec.dim;
    f.verts = vs.to_list();
    f.carriers = rec.carriers;
    lat->faces[rec.dim].push_back(std::move(f));
  }
  for (auto& level : lat->faces)
    std::sort(level.begin(), level.end(), [](const Face& a, const Face& b) {
      if (a.carriers != b.carriers) return a.carriers < b.carriers;
      return a.verts < b.verts;
    });
  lat->face_lookup.assign(n + 1, {});
  for (int d = 0; d <= n; ++d)
    for (std::size_t i = 0; i < lat->faces[d].size(); ++i)
      lat->face_lookup[d].emplace(lat->faces[d][i].verts, static_cast<int>(i));

  lattice_ = std::move(lat);
  return *lattice_;
}

Rational ridge_angle(const Polyhedron& p, const Face& ridge) {
  if (ridge.dim != p.dim() - 2) throw Error("ridge_angle: face is not a ridge");
  if (ridge.carriers.size() != 2)
    throw LatticeError("ridge carried by " + std::to_string(ridge.carriers.size()) +
                       " sides; expected exactly 2");
  AngleClass ac = classify_angle(p.side(ridge.carriers[0]), p.side(ridge.carriers[1]));
  if (ac.kind != AngleKind::Intersecting || !ac.angle_over_pi)
    throw UnrecognizedAngleError(ac.cos_gamma.str());
  return *ac.angle_over_pi;
}

std::map<Rational, int> ridge_angle_census(const Polyhedron& p) {
  std::map<Rational, int> census;
  for (const auto& ridge : p.lattice().faces[p.dim() - 2]) census[ridge_angle(p, ridge)]++;
  return census;
}

namespace {
Vec coords_in_basis(const Mat& basis, const Vec& x) {
  std::size_t d = basis.size();
  Vec out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    ExactScalar c = minkowski(x, basis[i]);
    out.push_back(i + 1 == d ? -c : c);  // the last basis vector is timelike
  }
  return out;
}
}  // namespace

Vec restrict_coords(const Restriction& r, const Vec& x) { return coords_in_basis(r.basis, x); }

Restriction restrict_to_hyperplane(const Polyhedron& p, const Hyperplane& h,
                                   const Vec* witness_on_h) {
  const int n = p.dim();
  if (minkowski(h.e, h.e) != ExactScalar(1))
    throw InputError("restriction hyperplane is not unit spacelike");

  // Witness on h: either supplied, or the reflection midpoint of the stored
  // interior witness.
  Vec wit;
  if (witness_on_h) {
    wit = *witness_on_h;
  } else {
    LorentzMap refl = reflection(h);
    wit = vec_add(p.witness(), apply_vec(refl, p.witness()));
  }
  if (minkowski(wit, h.e) != ExactScalar(0))
    throw InputError("restriction witness does not lie on the hyperplane");
  if (minkowski(wit, wit).sign() >= 0 || wit.back().sign() <= 0)
    throw InputError("restriction witness is not a future timelike vector");
  for (const auto& s : p.sides()) {
    if (vec_eq(s.e, h.e) || vec_eq_neg(s.e, h.e)) continue;
    if (minkowski(wit, s.e).sign() >= 0)
      throw InputError("hyperplane does not meet the polyhedron interior (blocked by side '" +
                       s.name + "')");
  }

  // Orthonormal-for-the-form basis of the subspace <x, e_h> = 0.
  Mat row{form_row(h.e)};
  std::vector<Vec> raw = mat_nullspace(row);
  std::vector<Vec> ortho;       // unit vectors
  std::vector<int> signs;       // +1 spacelike, -1 timelike
  auto project = [&](Vec v) {
    for (std::size_t i = 0; i < ortho.size(); ++i) {
      ExactScalar c = minkowski(v, ortho[i]);
      if (signs[i] < 0) c = -c;
      v = vec_sub(v, vec_scale(c, ortho[i]));
    }
    return v;
  };
  auto push_unit = [&](const Vec& v, const ExactScalar& norm) {
    auto s = (norm.sign() > 0 ? norm : -norm).sqrt();
    if (!s) throw NotRepresentableError("slice basis normalization leaves Q(sqrt2)");
    ortho.push_back(vec_scale(s->inverse(), v));
    signs.push_back(norm.sign());
  };
  while (static_cast<int>(ortho.size()) < n) {
    std::vector<Vec> cands;
    for (const auto& v : raw) {
      Vec pv = project(v);
      if (!vec_is_zero(pv)) cands.push_back(std::move(pv));
    }
    if (cands.empty()) throw Error("slice basis construction failed");
    bool placed = false;
    for (const auto& v : cands) {
      ExactScalar q = minkowski(v, v);
      if (q.sign() > 0) {
        push_unit(v, q);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    // All candidates null or timelike: combine two null ones if possible.
    for (std::size_t i = 0; !placed && i < cands.size(); ++i)
      for (std::size_t j = i + 1; !placed && j < cands.size(); ++j) {
        if (minkowski(cands[i], cands[i]).sign() != 0) continue;
        if (minkowski(cands[j], cands[j]).sign() != 0) continue;
        ExactScalar c = minkowski(cands[i], cands[j]);
        if (c.is_zero()) continue;
        Vec sum = c.sign() > 0 ? vec_add(cands[i], cands[j]) : vec_sub(cands[i], cands[j]);
        push_unit(sum, minkowski(sum, sum));
        placed = true;
      }
    if (placed) continue;
    for (const auto& v : cands) {
      ExactScalar q = minkowski(v, v);
      if (q.sign() < 0) {
        push_unit(v, q);
        placed = true;
        break;
      }
    }
    if (!placed) throw Error("slice basis construction failed (degenerate subspace)");
  }
  int timelike = 0;
  for (int s : signs) timelike += (s < 0);
  if (timelike != 1) throw Error("slice basis has wrong signature");
  Mat basis;
  for (std::size_t i = 0; i < ortho.size(); ++i)
    if (signs[i] > 0) basis.push_back(ortho[i]);
  for (std::size_t i = 0; i < ortho.size(); ++i)
    if (signs[i] < 0) {
      Vec t = ortho[i];
      if (t.back().sign() < 0)
        for (auto& c : t) c = -c;
      basis.push_back(t);
    }

  // Sides of the slice: traces of the ambient sides that genuinely cross h.
  std::vector<Hyperplane> cut_sides;
  std::vector<std::vector<int>> sources;
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> dedup(
      [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  for (int i = 0; i < p.side_count(); ++i) {
    const Hyperplane& s = p.side(i);
    if (vec_eq(s.e, h.e) || vec_eq_neg(s.e, h.e)) continue;
    ExactScalar gamma = minkowski(s.e, h.e);
    ExactScalar one_minus = ExactScalar(1) - gamma * gamma;
    if (one_minus.sign() <= 0) continue;  // tangent or disjoint from h
    Vec perp = vec_sub(s.e, vec_scale(gamma, h.e));
    auto norm = one_minus.sqrt();
    if (!norm) throw NotRepresentableError("restricted side normalization leaves Q(sqrt2)");
    Vec trace = coords_in_basis(basis, vec_scale(norm->inverse(), perp));
    Vec neg = trace;
    for (auto& c : neg) c = -c;
    if (dedup.count(neg))
      throw LatticeError("two sides cut the hyperplane in opposite half-spaces");
    auto it = dedup.find(trace);
    if (it != dedup.end()) {
      sources[it->second].push_back(i);
      continue;
    }
    dedup.emplace(trace, static_cast<int>(cut_sides.size()));
    cut_sides.push_back(Hyperplane{std::move(trace), s.name});
    sources.push_back({i});
  }

  Polyhedron sliced(n - 1, std::move(cut_sides), coords_in_basis(basis, wit));
  return Restriction{std::move(sliced), h, std::move(basis), std::move(sources)};
}

LorentzMap restrict_map(const Restriction& r, const LorentzMap& g) {
  Vec image = mat_apply(g.m, r.h.e);
  if (!vec_eq(image, r.h.e) && !vec_eq_neg(image, r.h.e))
    throw PairingError("isometry does not preserve the slicing hyperplane");
  std::size_t d = r.basis.size();
  Mat m(d, zero_vec(d));
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = restrict_coords(r, mat_apply(g.m, r.basis[j]));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  if (!is_lorentz(m)) throw PairingError("restricted map is not an isometry of the slice");
  return LorentzMap{std::move(m), g.word};
}

}  // namespace hypoly
