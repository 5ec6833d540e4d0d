#include "hypoly/invariance.hpp"

#include <algorithm>

namespace hypoly {

namespace {

bool preserves_hyperplane(const Mat& m, const Hyperplane& h) {
  Vec img = mat_apply(m, h.e);
  return vec_eq(img, h.e) || vec_eq_neg(img, h.e);
}

// Angle between h and the line of another hyperplane in the normal plane of a
// ridge, for condition-3 diagnostics: 0 when the hyperplanes coincide, the
// table angle folded to [0, pi/2] (lines carry no orientation), nullopt when
// unrecognized.
std::optional<Rational> angle_to(const Hyperplane& h, const Hyperplane& s) {
  if (vec_eq(h.e, s.e) || vec_eq_neg(h.e, s.e)) return Rational(0);
  AngleClass ac = classify_position(h, s);
  if (ac.kind != AngleKind::Intersecting) return std::nullopt;
  auto frac = recognize_cosine(ac.cos_gamma);
  if (!frac) return std::nullopt;
  return *frac <= Rational(1, 2) ? *frac : Rational(Rational(1) - *frac);
}

std::string word_str(const Word& w) {
  std::string s;
  for (const auto& t : word_tokens(w)) {
    if (!s.empty()) s += " ";
    s += t;
  }
  return s;
}

}  // namespace

std::vector<GeneratorPreservationRow> check_generator_preservation(const GeneratorSet& gens,
                                                                   const InvarianceCase& c) {
  std::vector<GeneratorPreservationRow> rows;
  for (const auto& w : c.subgroup_gens) {
    LorentzMap g = gens.compile(w);
    rows.push_back(GeneratorPreservationRow{word_str(w), preserves_hyperplane(g.m, c.h)});
  }
  return rows;
}

ConditionOneReport check_condition_1(const Polyhedron& p, const GeneratorSet& gens,
                                     const InvarianceCase& c) {
  ConditionOneReport rep;
  try {
    Restriction r = restrict_to_hyperplane(p, c.h,
                                           c.witness_on_h ? &*c.witness_on_h : nullptr);
    SidePairing phi(r.poly.side_count());
    for (const auto& d : c.induced) {
      int from = r.poly.side_index(d.from);
      int to = r.poly.side_index(d.to);
      LorentzMap ambient = gens.compile(d.word);
      phi.set_pair(from, to, restrict_map(r, ambient), d.word);
    }
    rep.slice = verify_poincare(r.poly, phi);
    rep.pass = rep.slice->all_pass;
    if (!rep.pass) rep.message = "slice verification failed";
  } catch (const Error& e) {
    rep.pass = false;
    rep.message = e.what();
  }
  return rep;
}

ConditionTwoReport check_condition_2(const Polyhedron& p, const SidePairing& phi,
                                     const Hyperplane& h) {
  ConditionTwoReport rep;
  rep.pass = true;
  for (int i = 0; i < p.side_count(); ++i) {
    if (!vec_eq(p.side(i).e, h.e) && !vec_eq_neg(p.side(i).e, h.e)) continue;
    ConditionTwoRow row;
    row.side = i;
    if (!phi.has(i)) throw PairingError("side on the hyperplane is unpaired");
    // The side-pairing of a side lying on h must move h off itself.
    row.ok = !preserves_hyperplane(phi.entry(i).g.m, h);
    if (!row.ok) rep.pass = false;
    rep.rows.push_back(row);
  }
  rep.vacuous = rep.rows.empty();
  return rep;
}

ConditionThreeReport check_condition_3(const Polyhedron& p, const SidePairing& phi,
                                       const Hyperplane& h) {
  ConditionThreeReport rep;
  rep.pass = true;
  const auto& lat = p.lattice();
  const int rd = p.dim() - 2;
  const auto& ridges = lat.faces[rd];

  auto contained = [&](const Face& f) {
    for (int v : f.verts)
      if (!minkowski(lat.vertices[v].p.x, h.e).is_zero()) return false;
    return true;
  };
  std::vector<bool> in_h(ridges.size());
  for (std::size_t i = 0; i < ridges.size(); ++i) in_h[i] = contained(ridges[i]);

  // Reuse the chase machinery: walk the cycle from both starting directions
  // of each contained ridge and test the composed map at every return to h.
  for (std::size_t start = 0; start < ridges.size(); ++start) {
    if (!in_h[start]) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const Face& e1 = ridges[start];
      if (e1.carriers.size() != 2) throw LatticeError("ridge carried by more than two sides");
      int s1 = e1.carriers[dir == 0 ? 0 : 1];
      int r1 = e1.carriers[dir == 0 ? 1 : 0];
      int cur = static_cast<int>(start), s = s1, r = r1;
      LorentzMap hol = identity_map(p.dim());
      std::vector<Rational> thetas;
      int guard = 0;
      while (true) {
        if (++guard > 100000) throw PairingError("ridge chase does not close up");
        thetas.push_back(ridge_angle(p, ridges[cur]));
        const auto& ent = phi.entry(r);
        if (ent.partner < 0) throw PairingError("ridge chase hit an unpaired side");
        hol = compose(ent.g, hol);
        // Image ridge via vertex images.
        std::vector<int> img;
        for (int v : ridges[cur].verts) {
          PointRep pr = apply_point(ent.g, lat.vertices[v].p);
          int id = lat.vertex_index(pr.x);
          if (id < 0) throw PairingError("image vertex not found in condition (3) chase");
          img.push_back(id);
        }
        std::sort(img.begin(), img.end());
        int next = lat.face_index(rd, img);
        if (next < 0) throw PairingError("image face not found in condition (3) chase");
        const Face& ef = ridges[next];
        int s_next = ent.partner;
        int r_next;
        if (ef.carriers[0] == s_next)
          r_next = ef.carriers[1];
        else if (ef.carriers[1] == s_next)
          r_next = ef.carriers[0];
        else
          throw PairingError("chase image ridge is not carried by the partner side");
        cur = next;
        s = s_next;
        r = r_next;
        int l = static_cast<int>(thetas.size());
        if (in_h[cur]) {
          ConditionThreeRow row;
          row.ridge = static_cast<int>(start);
          row.direction = dir;
          row.l = l;
          row.ok = preserves_hyperplane(hol.m, h);
          auto alpha = angle_to(h, p.side(s1));
          auto beta = angle_to(h, p.side(s));
          if (alpha && beta) {
            Rational sum = *beta - *alpha;
            bool known = true;
            for (const auto& t : thetas) sum += t;
            if (known) row.angle_sum = sum;
          }
          if (!row.ok) rep.pass = false;
          rep.rows.push_back(std::move(row));
        }
        if (cur == static_cast<int>(start) && s == s1 && r == r1) break;
      }
    }
  }
  rep.vacuous = rep.rows.empty();
  return rep;
}

InvarianceReport check_precisely_invariant(const Polyhedron& p, const SidePairing& phi,
                                           const GeneratorSet& gens, const InvarianceCase& c) {
  InvarianceReport rep;
  rep.generator_rows = check_generator_preservation(gens, c);
  rep.generators_preserve = std::all_of(rep.generator_rows.begin(), rep.generator_rows.end(),
                                        [](const auto& r) { return r.ok; });
  rep.condition1 = check_condition_1(p, gens, c);
  rep.condition2 = check_condition_2(p, phi, c.h);
  rep.condition3 = check_condition_3(p, phi, c.h);
  rep.all_pass = rep.generators_preserve && rep.condition1.pass && rep.condition2.pass &&
                 rep.condition3.pass;
  return rep;
}

}  // namespace hypoly
