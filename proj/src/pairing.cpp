#include "hypoly/pairing.hpp"

#include <algorithm>
#include <map>

#include "hypoly/topology.hpp"

namespace hypoly {

// ---------------------------------------------------------------------------
// words

Word parse_word(const std::vector<std::string>& tokens) {
  Word w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0)
      w.push_back(WordToken{t.substr(0, t.size() - 3), true});
    else
      w.push_back(WordToken{t, false});
  }
  return w;
}

std::vector<std::string> word_tokens(const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back(t.inverse ? t.name + "^-1" : t.name);
  return out;
}

void GeneratorSet::define(const std::string& name, LorentzMap g) {
  if (!is_lorentz(g.m))
    throw InputError("generator '" + name + "' is not a future-preserving isometry");
  if (g.word.empty()) g.word = {name};
  auto [it, inserted] = gens_.emplace(name, std::move(g));
  if (!inserted) throw InputError("generator '" + name + "' defined twice");
}

const LorentzMap& GeneratorSet::get(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw InputError("unknown generator '" + name + "'");
  return it->second;
}

LorentzMap GeneratorSet::compile(const Word& w) const {
  LorentzMap acc = identity_map(n_);
  for (const auto& tok : w) {
    const LorentzMap& g = get(tok.name);
    acc = compose(acc, tok.inverse ? inverse(g) : g);
  }
  return acc;
}

std::vector<std::string> GeneratorSet::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : gens_) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// side pairings

void SidePairing::set_pair(int from, int to, const LorentzMap& g, const Word& word) {
  auto& fwd = entries_[from];
  if (fwd.partner >= 0) {
    if (fwd.partner != to || !mat_eq(fwd.g.m, g.m))
      throw InputError("conflicting pairing assignments for one side");
    return;
  }
  fwd.partner = to;
  fwd.g = g;
  fwd.word = word;
  auto& rev = entries_[to];
  LorentzMap ginv = inverse(g);
  if (rev.partner >= 0) {
    if (rev.partner != from || !mat_eq(rev.g.m, ginv.m))
      throw InputError("conflicting pairing assignments for one side");
    return;
  }
  rev.partner = from;
  rev.g = std::move(ginv);
  Word rw;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    rw.push_back(WordToken{it->name, !it->inverse});
  rev.word = std::move(rw);
}

std::vector<std::pair<int, int>> SidePairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < side_count(); ++i) {
    if (entries_[i].partner < 0) continue;
    if (entries_[i].partner >= i) out.emplace_back(i, entries_[i].partner);
  }
  return out;
}

SidePairing build_side_pairing(const Polyhedron& p, const GeneratorSet& gens,
                               const std::vector<PairingDecl>& decls) {
  SidePairing phi(p.side_count());
  for (const auto& d : decls) {
    int from = p.side_index(d.from);
    int to = p.side_index(d.to);
    phi.set_pair(from, to, gens.compile(d.word), d.word);
  }
  return phi;
}

ValidationReport validate(const Polyhedron& p, const SidePairing& phi) {
  ValidationReport rep;
  rep.pass = true;
  if (phi.side_count() != p.side_count())
    throw InputError("pairing built for a different side count");
  const auto& lat = p.lattice();
  for (int i = 0; i < p.side_count(); ++i) {
    PairCheck chk;
    chk.side = i;
    if (!phi.has(i)) {
      chk.ok = false;
      chk.message = "side '" + p.side(i).name + "' has no pairing";
      rep.pass = false;
      rep.checks.push_back(std::move(chk));
      continue;
    }
    const auto& e = phi.entry(i);
    chk.partner = e.partner;
    chk.ok = true;
    // Involution: the partner's map must be the exact inverse.
    const auto& back = phi.entry(e.partner);
    if (back.partner != i || !mat_eq(compose(back.g, e.g).m, identity_mat(p.dim() + 1))) {
      chk.ok = false;
      chk.message = "pairing is not involutive on side '" + p.side(i).name + "'";
    }
    // The map must carry the hyperplane of the side onto the partner's.
    if (chk.ok) {
      Vec img = apply_hyperplane(e.g, p.side(i));
      if (!vec_eq(img, p.side(e.partner).e) && !vec_eq_neg(img, p.side(e.partner).e)) {
        chk.ok = false;
        chk.message = "map of side '" + p.side(i).name + "' does not carry its hyperplane onto '" +
                      p.side(e.partner).name + "'";
      }
    }
    // Interior disjointness: every vertex of P lands on the far side of the
    // partner hyperplane, which by convexity pushes the whole image there.
    if (chk.ok) {
      for (const auto& v : lat.vertices) {
        Vec img = apply_vec(e.g, v.p.x);
        if (minkowski(img, p.side(e.partner).e).sign() < 0) {
          chk.ok = false;
          chk.message = "image of the polyhedron crosses back over side '" +
                        p.side(e.partner).name + "'";
          break;
        }
      }
    }
    if (!chk.ok) rep.pass = false;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// face images under pairing maps

namespace {

// Per-side table: image vertex id for every vertex incident to that side's
// image computations; computed lazily per side.
struct VertexImages {
  const Polyhedron& p;
  const SidePairing& phi;
  std::vector<std::vector<int>> table;  // [side][vertex] -> image id or -1
  VertexImages(const Polyhedron& pp, const SidePairing& ph)
      : p(pp), phi(ph), table(pp.side_count()) {}

  int image(int side, int v) {
    auto& row = table[side];
    const auto& lat = p.lattice();
    if (row.empty()) row.assign(lat.vertices.size(), -2);
    if (row[v] != -2) return row[v];
    Vec img = apply_vec(phi.entry(side).g, lat.vertices[v].p.x);
    PointRep pr = make_point(img);
    row[v] = lat.vertex_index(pr.x);
    return row[v];
  }
};

std::vector<int> face_image_verts(VertexImages& vi, int side, const std::vector<int>& verts) {
  std::vector<int> out;
  out.reserve(verts.size());
  for (int v : verts) {
    int id = vi.image(side, v);
    if (id < 0) throw PairingError("pairing map sends a vertex outside the vertex set");
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<std::vector<int>> groups() {
    std::map<int, std::vector<int>> g;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) g[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : g) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::vector<RidgeCycle> chase_ridges(const Polyhedron& p, const SidePairing& phi) {
  const auto& lat = p.lattice();
  const int rd = p.dim() - 2;
  const auto& ridges = lat.faces[rd];
  VertexImages vi(p, phi);

  std::vector<bool> visited(ridges.size(), false);
  std::vector<RidgeCycle> cycles;

  for (std::size_t start = 0; start < ridges.size(); ++start) {
    if (visited[start]) continue;
    const Face& e1 = ridges[start];
    if (e1.carriers.size() != 2)
      throw LatticeError("ridge carried by more than two sides");

    RidgeCycle cyc;
    RidgeCycleStep sigma{static_cast<int>(start), e1.carriers[0], e1.carriers[1]};
    LorentzMap hol = identity_map(p.dim());
    int guard = 0;
    while (true) {
      if (++guard > 100000) throw PairingError("ridge chase does not close up");
      cyc.steps.push_back(sigma);
      visited[sigma.ridge] = true;
      cyc.angles.push_back(ridge_angle(p, ridges[sigma.ridge]));
      const auto& ent = phi.entry(sigma.r_side);
      if (ent.partner < 0) throw PairingError("ridge chase hit an unpaired side");
      hol = compose(ent.g, hol);
      std::vector<int> img = face_image_verts(vi, sigma.r_side, ridges[sigma.ridge].verts);
      int next = lat.face_index(rd, img);
      if (next < 0) throw PairingError("image face not found during ridge chase");
      const Face& ef = ridges[next];
      if (ef.carriers.size() != 2) throw LatticeError("ridge carried by more than two sides");
      int s_next = ent.partner;
      int r_next;
      if (ef.carriers[0] == s_next)
        r_next = ef.carriers[1];
      else if (ef.carriers[1] == s_next)
        r_next = ef.carriers[0];
      else
        throw PairingError("chase image ridge is not carried by the partner side");
      sigma = RidgeCycleStep{next, s_next, r_next};
      if (sigma.ridge == static_cast<int>(start) && sigma.s_side == e1.carriers[0] &&
          sigma.r_side == e1.carriers[1])
        break;
    }
    cyc.q = static_cast<int>(cyc.steps.size());
    cyc.holonomy = hol;

    // Least k with the k-th power of the holonomy fixing the ridge pointwise.
    Mat span;
    for (int v : e1.verts) span.push_back(lat.vertices[v].p.x);
    Mat basis;
    for (const auto& row : span) {
      Mat probe = basis;
      probe.push_back(row);
      if (mat_rank(probe) > static_cast<int>(basis.size())) basis.push_back(row);
    }
    if (static_cast<int>(basis.size()) != p.dim() - 1)
      throw LatticeError("ridge subspace has unexpected dimension");
    Mat power = hol.m;
    int k = 1;
    for (;; ++k) {
      bool fixes = true;
      for (const auto& b : basis)
        if (!vec_eq(mat_apply(power, b), b)) {
          fixes = false;
          break;
        }
      if (fixes) break;
      if (k >= 64) throw PairingError("cycle holonomy does not fix the ridge at any small power");
      power = mat_mul(power, hol.m);
    }
    cyc.k = k;

    Rational total(0);
    for (const auto& a : cyc.angles) total += a;
    cyc.angle_sum = Rational(k) * total;

    std::vector<int> distinct;
    for (const auto& st : cyc.steps) distinct.push_back(st.ridge);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    cyc.ridges = std::move(distinct);

    // angle_sum = 2/m for a positive integer m?
    if (sgn(cyc.angle_sum) > 0) {
      Rational m = Rational(2) / cyc.angle_sum;
      if (rational_is_integer(m) && sgn(m) > 0) cyc.m = m.get_num().get_si();
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

RidgeConditionReport check_ridge_condition(const std::vector<RidgeCycle>& cycles) {
  RidgeConditionReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].m) {
      rep.pass = false;
      rep.failures.push_back("cycle " + std::to_string(i) + " has angle sum " +
                             rational_str(cycles[i].angle_sum) +
                             "*pi, not of the form 2*pi/m");
    }
  }
  return rep;
}

CuspGraph build_cusp_graph(const Polyhedron& p, const SidePairing& phi) {
  const auto& lat = p.lattice();
  CuspGraph g;
  for (std::size_t v = lat.finite_count; v < lat.vertices.size(); ++v)
    g.nodes.push_back(static_cast<int>(v));
  for (int v : g.nodes) {
    for (int side : lat.vertices[v].carriers) {
      if (!phi.has(side)) throw PairingError("cusp graph hit an unpaired side");
      Vec img = apply_vec(phi.entry(side).g, lat.vertices[v].p.x);
      ExactScalar scale = img.back();
      if (scale.sign() <= 0) throw PairingError("cusp image left the future cone");
      int target = lat.vertex_index(canonical_ideal(img));
      if (target < 0 || !lat.is_ideal(target))
        throw PairingError("pairing map sends an ideal vertex off the vertex set");
      g.arcs.push_back(CuspArc{v, side, target, scale});
    }
  }
  return g;
}

HorosphereReport check_horospheres(const CuspGraph& graph) {
  HorosphereReport rep;
  rep.pass = true;
  // Horoball sizes as multiplicative potentials: an arc with scale s forces
  // size(to) = size(from) / s. Propagate over a spanning forest, then every
  // arc must agree.
  std::map<int, ExactScalar> potential;
  std::map<int, std::vector<std::pair<int, ExactScalar>>> adjacent;
  for (const auto& a : graph.arcs) {
    adjacent[a.from_vertex].push_back({a.to_vertex, a.scale});
    adjacent[a.to_vertex].push_back({a.from_vertex, a.scale.inverse()});
  }
  for (int root : graph.nodes) {
    if (potential.count(root)) continue;
    ++rep.component_count;
    potential.emplace(root, ExactScalar(1));
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, s] : adjacent[u]) {
        if (potential.count(w)) continue;
        potential.emplace(w, potential.at(u) * s.inverse());
        stack.push_back(w);
      }
    }
  }
  for (const auto& a : graph.arcs) {
    ExactScalar expect = potential.at(a.from_vertex) * a.scale.inverse();
    if (expect != potential.at(a.to_vertex)) {
      rep.pass = false;
      rep.failures.push_back("horoball sizes are inconsistent around a loop through vertices " +
                             std::to_string(a.from_vertex) + " -> " +
                             std::to_string(a.to_vertex));
    }
  }
  return rep;
}

HorosphereReport check_horospheres(const Polyhedron& p, const SidePairing& phi) {
  return check_horospheres(build_cusp_graph(p, phi));
}

std::vector<std::vector<int>> face_cycles(const Polyhedron& p, const SidePairing& phi, int dim) {
  const auto& lat = p.lattice();
  VertexImages vi(p, phi);
  if (dim == 0) {
    UnionFind uf(lat.finite_count);
    for (int v = 0; v < lat.finite_count; ++v)
      for (int side : lat.vertices[v].carriers) {
        int img = vi.image(side, v);
        if (img < 0 || img >= lat.finite_count)
          throw PairingError("pairing map sends a finite vertex off the vertex set");
        uf.unite(v, img);
      }
    return uf.groups();
  }
  const auto& faces = lat.faces[dim];
  UnionFind uf(static_cast<int>(faces.size()));
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int side : faces[f].carriers) {
      if (!phi.has(side)) throw PairingError("face orbit hit an unpaired side");
      std::vector<int> img = face_image_verts(vi, side, faces[f].verts);
      int g = lat.face_index(dim, img);
      if (g < 0) throw PairingError("image face not found while forming cycles");
      uf.unite(static_cast<int>(f), g);
    }
  return uf.groups();
}

std::vector<std::vector<int>> ideal_vertex_cycles(const Polyhedron& p, const SidePairing& phi) {
  const auto& lat = p.lattice();
  int nideal = lat.ideal_count();
  VertexImages vi(p, phi);
  UnionFind uf(nideal);
  for (int i = 0; i < nideal; ++i) {
    int v = lat.finite_count + i;
    for (int side : lat.vertices[v].carriers) {
      int img = vi.image(side, v);
      if (img < lat.finite_count) throw PairingError("ideal vertex mapped to a finite vertex");
      uf.unite(i, img - lat.finite_count);
    }
  }
  auto groups = uf.groups();
  for (auto& grp : groups)
    for (auto& v : grp) v += lat.finite_count;
  return groups;
}

Rational solid_angle_fraction(const Polyhedron& p, const std::vector<int>& carriers) {
  const std::size_t n = carriers.size();
  // Join carriers whose normals are not orthogonal; the cone factorizes over
  // the components, which must be singletons or pairs.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = static_cast<int>(components.size());
    std::vector<std::size_t> members;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] >= 0) continue;
        if (!minkowski(p.side(carriers[u]).e, p.side(carriers[j]).e).is_zero()) {
          comp[j] = comp[i];
          stack.push_back(j);
        }
      }
    }
    components.push_back(std::move(members));
  }
  Rational omega(1);
  for (const auto& members : components) {
    if (members.size() == 1) {
      omega *= Rational(1, 2);
    } else if (members.size() == 2) {
      AngleClass ac = classify_angle(p.side(carriers[members[0]]), p.side(carriers[members[1]]));
      if (ac.kind != AngleKind::Intersecting || !ac.angle_over_pi)
        throw UnrecognizedAngleError(ac.cos_gamma.str());
      omega *= *ac.angle_over_pi / 2;  // theta / (2 pi)
    } else {
      throw UnsupportedConeError("carrier cone with a non-orthogonal block of size " +
                                 std::to_string(members.size()));
    }
  }
  return omega;
}

TorsionReport check_torsion_free(const Polyhedron& p, const SidePairing& phi,
                                 const std::vector<RidgeCycle>& cycles) {
  TorsionReport rep;
  const auto& lat = p.lattice();

  rep.ridge_cycles_trivial = true;
  for (const auto& c : cycles)
    if (c.k != 1 || !c.m || *c.m != 1) rep.ridge_cycles_trivial = false;

  bool ok = rep.ridge_cycles_trivial;

  for (const auto& grp : face_cycles(p, phi, 0)) {
    OmegaCycle oc;
    oc.dim = 0;
    oc.members = grp;
    oc.sum = Rational(0);
    for (int v : grp) {
      Rational w = solid_angle_fraction(p, lat.vertices[v].carriers);
      oc.omegas.push_back(w);
      oc.sum += w;
    }
    oc.pass = (oc.sum == Rational(1));
    if (!oc.pass) ok = false;
    rep.vertex_cycles.push_back(std::move(oc));
  }

  if (p.dim() == 4) {
    for (const auto& grp : face_cycles(p, phi, 1)) {
      OmegaCycle oc;
      oc.dim = 1;
      oc.members = grp;
      oc.sum = Rational(0);
      // A 1-side joining a finite and an ideal vertex is exempt; endpoint
      // kinds are pairing-invariant, so eligibility is a cycle property.
      bool eligible = true;
      for (int f : grp) {
        const Face& face = lat.faces[1][f];
        if (face.verts.size() != 2) throw LatticeError("1-side without exactly two endpoints");
        bool i0 = lat.is_ideal(face.verts[0]);
        bool i1 = lat.is_ideal(face.verts[1]);
        if (i0 != i1) eligible = false;
      }
      oc.eligible = eligible;
      for (int f : grp) {
        Rational w = solid_angle_fraction(p, lat.faces[1][f].carriers);
        oc.omegas.push_back(w);
        oc.sum += w;
      }
      oc.pass = !eligible || (oc.sum == Rational(1));
      if (!oc.pass) ok = false;
      rep.edge_cycles.push_back(std::move(oc));
    }
  }
  rep.pass = ok;
  return rep;
}

CycleCensus cycle_census(const Polyhedron& p, const SidePairing& phi,
                         const std::vector<RidgeCycle>& ridge_cycles) {
  CycleCensus census;
  const int n = p.dim();
  census.dimension = n;
  census.c.assign(n + 1, 0);
  census.members.assign(n + 1, {});
  const auto& lat = p.lattice();

  for (int d = 0; d < n; ++d) {
    census.members[d] = face_cycles(p, phi, d);
    census.c[d] = static_cast<int>(census.members[d].size());
    // Sanity: the cycles partition the faces of this dimension.
    std::size_t total = 0;
    for (const auto& g : census.members[d]) total += g.size();
    std::size_t expect = (d == 0) ? static_cast<std::size_t>(lat.finite_count)
                                  : lat.faces[d].size();
    if (total != expect) throw LatticeError("cycle partition does not cover all faces");
  }
  census.members[n] = {{0}};
  census.c[n] = 1;

  if (census.c[n - 2] != static_cast<int>(ridge_cycles.size()))
    throw LatticeError("ridge chase partition disagrees with the orbit partition");
  for (const auto& grp : census.members[n - 1])
    if (grp.size() > 2) throw LatticeError("facet cycle with more than two members");

  census.ideal_members = ideal_vertex_cycles(p, phi);
  census.ideal_cycles = static_cast<int>(census.ideal_members.size());
  return census;
}

VerificationReport verify_poincare(const Polyhedron& p, const SidePairing& phi) {
  VerificationReport rep;
  rep.dimension = p.dim();
  rep.validation = validate(p, phi);
  if (!rep.validation.pass) {
    rep.all_pass = false;
    return rep;
  }
  rep.ridge_cycles = chase_ridges(p, phi);
  rep.ridge_condition = check_ridge_condition(rep.ridge_cycles);
  rep.horospheres = check_horospheres(p, phi);
  rep.torsion = check_torsion_free(p, phi, rep.ridge_cycles);
  rep.census = cycle_census(p, phi, rep.ridge_cycles);
  rep.ends = ends(rep.census);
  rep.euler_characteristic = euler_characteristic(rep.census);
  if (p.dim() == 4) rep.volume_units = volume_units(rep.census);
  rep.all_pass = rep.validation.pass && rep.ridge_condition.pass && rep.horospheres.pass &&
                 rep.torsion.pass;
  return rep;
}

}  // namespace hypoly
