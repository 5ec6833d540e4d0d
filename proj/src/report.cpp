#include "hypoly/report.hpp"

#include <sstream>

namespace hypoly {

namespace {

Json carrier_names(const Polyhedron& p, const std::vector<int>& carriers) {
  Json arr = Json::array();
  for (int c : carriers) arr.push_back(p.side(c).name);
  return arr;
}

std::string frac_str(const Rational& q) { return rational_str(q); }

Json omega_cycles_json(const std::vector<OmegaCycle>& cycles) {
  Json arr = Json::array();
  for (const auto& oc : cycles) {
    Json j;
    j["size"] = oc.members.size();
    j["members"] = oc.members;
    Json om = Json::array();
    for (const auto& w : oc.omegas) om.push_back(frac_str(w));
    j["omegas"] = om;
    j["sum"] = frac_str(oc.sum);
    j["eligible"] = oc.eligible;
    j["pass"] = oc.pass;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json census_json(const Polyhedron& p, const CycleCensus& census) {
  const auto& lat = p.lattice();
  Json j;
  j["cycles_by_dim"] = census.c;
  j["ideal_cycles"] = census.ideal_cycles;
  Json counts = Json::array();
  counts.push_back(lat.finite_count);
  for (int d = 1; d <= census.dimension; ++d) counts.push_back(lat.faces[d].size());
  j["face_counts"] = counts;
  j["ideal_vertices"] = lat.ideal_count();
  Json members;
  for (int d = 0; d <= census.dimension; ++d)
    members[std::to_string(d)] = census.members[d];
  j["memberships"] = std::move(members);
  j["ideal_memberships"] = census.ideal_members;
  return j;
}

}  // namespace

Json verification_report_json(const Polyhedron& p, const SidePairing& phi,
                              const VerificationReport& rep, const std::string& input,
                              double timing_ms) {
  const auto& lat = p.lattice();
  Json j;
  j["input"] = input;
  j["dimension"] = rep.dimension;
  j["all_pass"] = rep.all_pass;

  Json validation;
  validation["pass"] = rep.validation.pass;
  Json pairs = Json::array();
  for (const auto& chk : rep.validation.checks) {
    Json c;
    c["side"] = p.side(chk.side).name;
    c["partner"] = chk.partner >= 0 ? Json(p.side(chk.partner).name) : Json(nullptr);
    if (phi.has(chk.side)) {
      Json w = Json::array();
      for (const auto& t : word_tokens(phi.entry(chk.side).word)) w.push_back(t);
      c["word"] = std::move(w);
    }
    c["ok"] = chk.ok;
    if (!chk.message.empty()) c["message"] = chk.message;
    pairs.push_back(std::move(c));
  }
  validation["pairs"] = std::move(pairs);
  j["validation"] = std::move(validation);

  Json ridges;
  ridges["pass"] = rep.ridge_condition.pass;
  ridges["cycle_count"] = rep.ridge_cycles.size();
  Json cycles = Json::array();
  for (const auto& cyc : rep.ridge_cycles) {
    Json c;
    c["q"] = cyc.q;
    c["k"] = cyc.k;
    c["angle_sum_over_pi"] = frac_str(cyc.angle_sum);
    c["m"] = cyc.m ? Json(*cyc.m) : Json(nullptr);
    Json angs = Json::array();
    for (const auto& a : cyc.angles) angs.push_back(frac_str(a));
    c["angles_over_pi"] = std::move(angs);
    Json members = Json::array();
    for (int r : cyc.ridges)
      members.push_back(carrier_names(p, lat.faces[rep.dimension - 2][r].carriers));
    c["ridges"] = std::move(members);
    cycles.push_back(std::move(c));
  }
  ridges["cycles"] = std::move(cycles);
  j["ridges"] = std::move(ridges);

  Json horo;
  horo["pass"] = rep.horospheres.pass;
  horo["components"] = rep.horospheres.component_count;
  if (!rep.horospheres.failures.empty()) horo["failures"] = rep.horospheres.failures;
  j["horospheres"] = std::move(horo);

  Json torsion;
  torsion["pass"] = rep.torsion.pass;
  torsion["ridge_cycles_trivial"] = rep.torsion.ridge_cycles_trivial;
  torsion["vertex_cycles"] = omega_cycles_json(rep.torsion.vertex_cycles);
  torsion["one_side_cycles"] = omega_cycles_json(rep.torsion.edge_cycles);
  j["torsion"] = std::move(torsion);

  if (rep.validation.pass) j["census"] = census_json(p, rep.census);
  j["ends"] = rep.ends;
  j["euler_characteristic"] = rep.euler_characteristic;
  j["volume_units"] = rep.volume_units ? Json(*rep.volume_units) : Json(nullptr);
  j["timing_ms"] = timing_ms;
  return j;
}

std::string verification_report_text(const Polyhedron& p, const VerificationReport& rep,
                                     const std::string& input) {
  const auto& lat = p.lattice();
  std::ostringstream os;
  os << "== " << input << " (dimension " << rep.dimension << ") ==\n";
  os << "sides: " << p.side_count() << ", finite vertices: " << lat.finite_count
     << ", ideal vertices: " << lat.ideal_count() << "\n";
  os << "face counts:";
  os << " " << lat.finite_count;
  for (int d = 1; d <= rep.dimension; ++d) os << " " << lat.faces[d].size();
  os << "\n";
  os << "side-pairing valid:        " << (rep.validation.pass ? "pass" : "FAIL") << "\n";
  for (const auto& chk : rep.validation.checks)
    if (!chk.ok) os << "  ! " << chk.message << "\n";
  if (!rep.validation.pass) {
    os << "verification aborted after validation failure\n";
    return os.str();
  }
  os << "ridge cycle condition:     " << (rep.ridge_condition.pass ? "pass" : "FAIL") << " ("
     << rep.ridge_cycles.size() << " cycles)\n";
  os << "consistent horospheres:    " << (rep.horospheres.pass ? "pass" : "FAIL") << "\n";
  os << "torsion-free (omega sums): " << (rep.torsion.pass ? "pass" : "FAIL") << "\n";
  os << "cycle census:";
  for (int d = 0; d <= rep.dimension; ++d) os << " " << rep.census.c[d];
  os << "  (ideal cycles: " << rep.census.ideal_cycles << ")\n";
  os << "ends: " << rep.ends << "\n";
  os << "euler characteristic: " << rep.euler_characteristic << "\n";
  if (rep.volume_units)
    os << "volume: " << *rep.volume_units << " x (4*pi^2/3)\n";
  os << "result: " << (rep.all_pass ? "ALL CONDITIONS PASS" : "CONDITIONS FAILED") << "\n";
  return os.str();
}

Json invariance_report_json(const Polyhedron& p, const InvarianceCase& c,
                            const InvarianceReport& rep, const std::string& input,
                            double timing_ms) {
  Json j;
  j["input"] = input;
  j["base"] = c.base_bundle;
  j["all_pass"] = rep.all_pass;
  Json gens = Json::array();
  for (const auto& row : rep.generator_rows)
    gens.push_back(Json{{"word", row.word}, {"preserves", row.ok}});
  j["generators"] = std::move(gens);

  Json c1;
  c1["pass"] = rep.condition1.pass;
  if (!rep.condition1.message.empty()) c1["message"] = rep.condition1.message;
  if (rep.condition1.slice) {
    // The slice polyhedron is not available here; summarize the verification.
    const auto& s = *rep.condition1.slice;
    Json sj;
    sj["dimension"] = s.dimension;
    sj["all_pass"] = s.all_pass;
    sj["validation_pass"] = s.validation.pass;
    sj["ridge_pass"] = s.ridge_condition.pass;
    sj["horosphere_pass"] = s.horospheres.pass;
    sj["torsion_pass"] = s.torsion.pass;
    sj["cycles_by_dim"] = s.census.c;
    sj["ends"] = s.ends;
    c1["slice"] = std::move(sj);
  }
  j["condition1"] = std::move(c1);

  Json c2;
  c2["pass"] = rep.condition2.pass;
  c2["vacuous"] = rep.condition2.vacuous;
  Json rows2 = Json::array();
  for (const auto& r : rep.condition2.rows)
    rows2.push_back(Json{{"side", p.side(r.side).name}, {"ok", r.ok}});
  c2["rows"] = std::move(rows2);
  j["condition2"] = std::move(c2);

  Json c3;
  c3["pass"] = rep.condition3.pass;
  c3["vacuous"] = rep.condition3.vacuous;
  Json rows3 = Json::array();
  const auto& lat = p.lattice();
  for (const auto& r : rep.condition3.rows) {
    Json row;
    row["ridge"] = carrier_names(p, lat.faces[p.dim() - 2][r.ridge].carriers);
    row["direction"] = r.direction;
    row["l"] = r.l;
    row["ok"] = r.ok;
    row["angle_sum_over_pi"] = r.angle_sum ? Json(frac_str(*r.angle_sum)) : Json(nullptr);
    rows3.push_back(std::move(row));
  }
  c3["rows"] = std::move(rows3);
  j["condition3"] = std::move(c3);
  j["timing_ms"] = timing_ms;
  return j;
}

std::string invariance_report_text(const Polyhedron& p, const InvarianceCase& c,
                                   const InvarianceReport& rep, const std::string& input) {
  std::ostringstream os;
  os << "== precise invariance: " << input << " (base " << c.base_bundle << ") ==\n";
  os << "generators preserve H:  " << (rep.generators_preserve ? "pass" : "FAIL") << "\n";
  for (const auto& row : rep.generator_rows)
    if (!row.ok) os << "  ! generator " << row.word << " moves H\n";
  os << "condition (1) slice:    " << (rep.condition1.pass ? "pass" : "FAIL");
  if (!rep.condition1.message.empty()) os << "  [" << rep.condition1.message << "]";
  os << "\n";
  os << "condition (2) sides:    " << (rep.condition2.pass ? "pass" : "FAIL")
     << (rep.condition2.vacuous ? " (vacuous)" : "") << "\n";
  os << "condition (3) ridges:   " << (rep.condition3.pass ? "pass" : "FAIL")
     << (rep.condition3.vacuous ? " (vacuous)" : "") << "\n";
  const auto& lat = p.lattice();
  for (const auto& r : rep.condition3.rows) {
    const auto& carriers = lat.faces[p.dim() - 2][r.ridge].carriers;
    os << "    ridge " << p.side(carriers[0]).name << "&" << p.side(carriers[1]).name
       << " dir " << r.direction << " l=" << r.l << ": " << (r.ok ? "ok" : "FAIL");
    if (r.angle_sum) os << "  angle sum " << rational_str(*r.angle_sum) << "*pi";
    os << "\n";
  }
  os << "result: " << (rep.all_pass ? "PRECISELY INVARIANT" : "CHECK FAILED");
  if (rep.all_pass) os << "  (H/J embeds as a totally geodesic hypersurface)";
  os << "\n";
  return os.str();
}

}  // namespace hypoly
