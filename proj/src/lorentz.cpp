#include "hypoly/lorentz.hpp"

namespace hypoly {

ExactScalar minkowski(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || u.size() < 2) throw Error("minkowski: dimension mismatch");
  ExactScalar s(0);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) s += u[i] * v[i];
  s -= u.back() * v.back();
  return s;
}

Vec embed_boundary(const Vec& p) {
  ExactScalar n2(0);
  for (const auto& c : p) n2 += c * c;
  Vec x = p;
  ExactScalar half = ExactScalar(Rational(1, 2));
  x.push_back((n2 - 1) * half);
  x.push_back((n2 + 1) * half);
  return x;
}

Vec embed_point(const Vec& p, const ExactScalar& t) {
  if (t.sign() <= 0) throw InputError("embed_point: height must be positive");
  ExactScalar n2 = t * t;
  for (const auto& c : p) n2 += c * c;
  ExactScalar it = t.inverse();
  ExactScalar half = ExactScalar(Rational(1, 2));
  Vec x;
  x.reserve(p.size() + 2);
  for (const auto& c : p) x.push_back(c * it);
  x.push_back((n2 - 1) * half * it);
  x.push_back((n2 + 1) * half * it);
  return x;
}

Vec infinity_rep(int n) {
  Vec x = zero_vec(n + 1);
  x[n - 1] = ExactScalar(1);
  x[n] = ExactScalar(1);
  return x;
}

Vec canonical_ideal(const Vec& x) {
  const ExactScalar& beta = x.back();
  if (beta.is_zero()) throw Error("canonical_ideal: null vector with zero last coordinate");
  return vec_scale(beta.inverse(), x);
}

Vec canonical_finite(const Vec& x) {
  ExactScalar q = minkowski(x, x);
  if (q.sign() >= 0) throw Error("canonical_finite: vector is not timelike");
  auto scale = (-q).sqrt();
  if (!scale) throw NotRepresentableError("point normalization leaves Q(sqrt2)");
  Vec u = vec_scale(scale->inverse(), x);
  if (u.back().sign() < 0)
    for (auto& c : u) c = -c;
  return u;
}

PointRep make_point(const Vec& raw) {
  int s = minkowski(raw, raw).sign();
  if (s < 0) return PointRep{canonical_finite(raw), PointKind::Finite};
  if (s == 0 && !vec_is_zero(raw)) return PointRep{canonical_ideal(raw), PointKind::Ideal};
  throw Error("make_point: vector is neither timelike nor null");
}

Hyperplane hyperplane_from_sphere(const Vec& center, const ExactScalar& radius_sq,
                                  SphereSide side, const std::string& name) {
  if (radius_sq.sign() <= 0) throw InputError("sphere '" + name + "': radius^2 must be positive");
  auto r = radius_sq.sqrt();
  if (!r) throw NotRepresentableError("sphere '" + name + "': radius not in Q(sqrt2)");
  ExactScalar c2(0);
  for (const auto& c : center) c2 += c * c;
  ExactScalar ir = r->inverse();
  ExactScalar half = ExactScalar(Rational(1, 2));
  Vec e;
  e.reserve(center.size() + 2);
  for (const auto& c : center) e.push_back(c * ir);
  e.push_back((c2 - radius_sq - 1) * half * ir);
  e.push_back((c2 - radius_sq + 1) * half * ir);
  // With this scaling, <pi(p), e> < 0 exactly for boundary points p outside
  // the ball, so Exterior keeps e and Interior flips it.
  if (side == SphereSide::Interior)
    for (auto& c : e) c = -c;
  return Hyperplane{std::move(e), name};
}

Hyperplane hyperplane_from_plane(const Vec& normal, const ExactScalar& offset,
                                 PlaneSide side, const std::string& name) {
  ExactScalar n2(0);
  for (const auto& c : normal) n2 += c * c;
  if (n2.sign() <= 0) throw InputError("plane '" + name + "': zero normal");
  auto len = n2.sqrt();
  if (!len) throw NotRepresentableError("plane '" + name + "': |normal| not in Q(sqrt2)");
  ExactScalar il = len->inverse();
  ExactScalar d = offset * il;
  Vec e;
  e.reserve(normal.size() + 2);
  for (const auto& c : normal) e.push_back(c * il);
  e.push_back(d);
  e.push_back(d);
  // <pi(p), e> = p.nhat - d, so Negative keeps e and Positive flips it.
  if (side == PlaneSide::Positive)
    for (auto& c : e) c = -c;
  return Hyperplane{std::move(e), name};
}

LorentzMap reflection(const Hyperplane& h) {
  std::size_t m = h.e.size();
  Mat r = identity_mat(m);
  // x -> x - 2 <x,e> e ; the row form uses J e.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ExactScalar je = (j + 1 == m) ? -h.e[j] : h.e[j];
      r[i][j] -= 2 * (h.e[i] * je);
    }
  return LorentzMap{std::move(r), {"inv:" + h.name}};
}

LorentzMap euclidean_extension(const Mat& linear, const Vec& translation,
                               const std::string& word_name) {
  std::size_t d = translation.size();
  if (linear.size() != d) throw InputError("euclidean_extension: dimension mismatch");
  // Orthogonality check U^T U = I.
  Mat utu = mat_mul(mat_transpose(linear), linear);
  if (!mat_eq(utu, identity_mat(d)))
    throw InputError("euclidean_extension: linear part is not orthogonal");
  ExactScalar q(0);
  for (const auto& c : translation) q += c * c;
  ExactScalar half = ExactScalar(Rational(1, 2));
  Mat m(d + 2, zero_vec(d + 2));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = linear[i][j];
    m[i][d] = -translation[i];
    m[i][d + 1] = translation[i];
  }
  Vec utU = mat_apply(mat_transpose(linear), translation);  // row u^T U
  for (std::size_t j = 0; j < d; ++j) {
    m[d][j] = utU[j];
    m[d + 1][j] = utU[j];
  }
  m[d][d] = ExactScalar(1) - q * half;
  m[d][d + 1] = q * half;
  m[d + 1][d] = -q * half;
  m[d + 1][d + 1] = ExactScalar(1) + q * half;
  std::vector<std::string> word;
  if (!word_name.empty()) word.push_back(word_name);
  return LorentzMap{std::move(m), std::move(word)};
}

LorentzMap euclidean_translation(const Vec& translation, const std::string& word_name) {
  return euclidean_extension(identity_mat(translation.size()), translation, word_name);
}

LorentzMap identity_map(int n) { return LorentzMap{identity_mat(n + 1), {}}; }

LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner) {
  LorentzMap r;
  r.m = mat_mul(outer.m, inner.m);
  r.word = outer.word;
  r.word.insert(r.word.end(), inner.word.begin(), inner.word.end());
  return r;
}

LorentzMap inverse(const LorentzMap& g) {
  std::size_t m = g.m.size();
  Mat t = mat_transpose(g.m);
  // J M^T J : flip the last row and last column signs.
  for (std::size_t i = 0; i < m; ++i) {
    t[i][m - 1] = -t[i][m - 1];
    t[m - 1][i] = -t[m - 1][i];
  }
  LorentzMap r;
  r.m = std::move(t);
  r.word.reserve(g.word.size());
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
    const std::string& w = *it;
    if (w.size() > 3 && w.compare(w.size() - 3, 3, "^-1") == 0)
      r.word.push_back(w.substr(0, w.size() - 3));
    else
      r.word.push_back(w + "^-1");
  }
  return r;
}

Vec apply_vec(const LorentzMap& g, const Vec& x) { return mat_apply(g.m, x); }

PointRep apply_point(const LorentzMap& g, const PointRep& p) {
  Vec y = mat_apply(g.m, p.x);
  if (p.kind == PointKind::Ideal) return PointRep{canonical_ideal(y), PointKind::Ideal};
  return PointRep{canonical_finite(y), PointKind::Finite};
}

Vec apply_hyperplane(const LorentzMap& g, const Hyperplane& h) { return mat_apply(g.m, h.e); }

bool is_lorentz(const Mat& m) {
  std::size_t k = m.size();
  Mat t = mat_transpose(m);
  // Compute M^T J M and compare with J.
  Mat jm = m;
  for (std::size_t j = 0; j < k; ++j) jm[k - 1][j] = -jm[k - 1][j];
  Mat prod = mat_mul(t, jm);
  Mat j = identity_mat(k);
  j[k - 1][k - 1] = ExactScalar(-1);
  if (!mat_eq(prod, j)) return false;
  // Future cone preserved: check the image of (0,...,0,1).
  Vec probe = zero_vec(k);
  probe[k - 1] = ExactScalar(1);
  return mat_apply(m, probe).back().sign() > 0;
}

std::optional<Rational> recognize_cosine(const ExactScalar& c) {
  static const std::pair<ExactScalar, Rational> table[] = {
      {ExactScalar(0), Rational(1, 2)},
      {ExactScalar(Rational(0), Rational(1, 2)), Rational(1, 4)},
      {ExactScalar(Rational(0), Rational(-1, 2)), Rational(3, 4)},
      {ExactScalar(Rational(1, 2)), Rational(1, 3)},
      {ExactScalar(Rational(-1, 2)), Rational(2, 3)},
  };
  for (const auto& [cosv, frac] : table)
    if (c == cosv) return frac;
  return std::nullopt;
}

AngleClass classify_position(const Hyperplane& a, const Hyperplane& b) {
  ExactScalar gamma = -minkowski(a.e, b.e);
  ExactScalar g2 = gamma * gamma;
  int cmp1 = g2.compare(ExactScalar(1));
  AngleClass r;
  r.cos_gamma = gamma;
  if (cmp1 < 0)
    r.kind = AngleKind::Intersecting;
  else if (cmp1 == 0)
    r.kind = AngleKind::Tangent;
  else
    r.kind = AngleKind::Disjoint;
  return r;
}

AngleClass classify_angle(const Hyperplane& a, const Hyperplane& b) {
  AngleClass r = classify_position(a, b);
  if (r.kind == AngleKind::Intersecting) {
    auto frac = recognize_cosine(r.cos_gamma);
    if (!frac) throw UnrecognizedAngleError(r.cos_gamma.str());
    r.angle_over_pi = *frac;
  }
  return r;
}

}  // namespace hypoly
