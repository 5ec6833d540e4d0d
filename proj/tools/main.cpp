#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "hypoly/dataset.hpp"
#include "hypoly/report.hpp"
#include "hypoly/section.hpp"
#include "hypoly/topology.hpp"

namespace {

using namespace hypoly;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

Bundle load_input(const std::string& builtin, const std::string& input) {
  if (!builtin.empty() && !input.empty())
    throw InputError("use either --builtin or --input, not both");
  if (!builtin.empty()) return load_bundle(builtin);
  if (input.empty()) throw InputError("one of --builtin or --input is required");
  SpecDocument doc = load_spec_file(input);
  CompiledSpec cs = compile_spec(doc);
  return Bundle{input, std::move(doc), std::move(cs.poly), std::move(cs.gens),
                std::move(cs.pairing)};
}

ExactScalar parse_literal(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad scalar literal: ") + e.what());
  }
  return scalar_from_json(j);
}

int run_verify(const std::string& builtin, const std::string& input, const std::string& format,
               const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  Bundle b = load_input(builtin, input);
  VerificationReport rep = verify_poincare(b.poly, b.pairing);
  if (format == "json")
    write_out(out, verification_report_json(b.poly, b.pairing, rep, b.name, ms_since(t0)).dump(2) + "\n");
  else
    write_out(out, verification_report_text(b.poly, rep, b.name));
  return rep.all_pass ? 0 : 1;
}

int run_chain(int blocks, const std::string& pattern, const std::string& format,
              const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  ChainSpec spec = make_chain_spec(blocks, pattern);
  ChainBundle chain = build_chain(spec);
  VerificationReport rep = verify_poincare(chain.poly, chain.pairing);
  int k = 0;
  for (BlockType t : spec.pattern) k += (t == BlockType::Phi1);
  int expected_ends = 4 + 4 * blocks - k;
  bool ok = rep.all_pass && rep.ends == expected_ends;
  std::string name = "chain:" + std::to_string(blocks) + ":" + pattern;
  if (format == "json") {
    Json j = verification_report_json(chain.poly, chain.pairing, rep, name, ms_since(t0));
    j["expected_ends"] = expected_ends;
    j["ends_match_formula"] = (rep.ends == expected_ends);
    write_out(out, j.dump(2) + "\n");
  } else {
    std::string text = verification_report_text(chain.poly, rep, name);
    text += "expected ends 4+4n-k = " + std::to_string(expected_ends) + ": " +
            (rep.ends == expected_ends ? "match" : "MISMATCH") + "\n";
    write_out(out, text);
  }
  return ok ? 0 : 1;
}

int run_invariance(const std::string& builtin, const std::string& input,
                   const std::string& format, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  if (!builtin.empty() && !input.empty())
    throw InputError("use either --builtin or --input, not both");
  InvarianceCase c;
  Bundle base = [&]() -> Bundle {
    if (!builtin.empty()) {
      c = load_case(builtin);
      return load_bundle(c.base_bundle);
    }
    if (input.empty()) throw InputError("one of --builtin or --input is required");
    std::ifstream in(input);
    if (!in) throw InputError("cannot open '" + input + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw InputError(std::string("JSON parse error: ") + e.what());
    }
    CaseDocument doc = case_from_json(j);
    Bundle b = [&]() {
      if (const auto* s = std::get_if<std::string>(&doc.base)) return load_bundle(*s);
      SpecDocument inline_doc = std::get<SpecDocument>(doc.base);
      CompiledSpec cs = compile_spec(inline_doc);
      return Bundle{"(inline)", std::move(inline_doc), std::move(cs.poly), std::move(cs.gens),
                    std::move(cs.pairing)};
    }();
    c.name = input;
    c.base_bundle = b.name;
    c.h = compile_hyperplane(doc.hyperplane, b.poly.dim());
    c.subgroup_gens = doc.subgroup;
    c.induced = doc.induced;
    c.witness_on_h = doc.witness;
    return b;
  }();
  InvarianceReport rep = check_precisely_invariant(base.poly, base.pairing, base.gens, c);
  if (format == "json")
    write_out(out, invariance_report_json(base.poly, c, rep, c.name, ms_since(t0)).dump(2) + "\n");
  else
    write_out(out, invariance_report_text(base.poly, c, rep, c.name));
  return rep.all_pass ? 0 : 1;
}

int run_section(const std::string& builtin, const std::string& input, const std::string& z,
                const std::string& t, const std::string& out) {
  Bundle b = load_input(builtin, input);
  std::string svg = render_section_svg(b.doc, b.poly, parse_literal(z), parse_literal(t));
  write_out(out, svg);
  return 0;
}

int run_faces(const std::string& builtin, const std::string& input, const std::string& format,
              const std::string& out) {
  Bundle b = load_input(builtin, input);
  const auto& lat = b.poly.lattice();
  auto angles = ridge_angle_census(b.poly);
  if (format == "json") {
    Json j;
    j["input"] = b.name;
    j["dimension"] = b.poly.dim();
    j["finite_vertices"] = lat.finite_count;
    j["ideal_vertices"] = lat.ideal_count();
    Json counts = Json::array();
    counts.push_back(lat.finite_count);
    for (int d = 1; d <= b.poly.dim(); ++d) counts.push_back(lat.faces[d].size());
    j["face_counts"] = counts;
    Json ang;
    for (const auto& [frac, count] : angles) ang[rational_str(frac) + "*pi"] = count;
    j["ridge_angles"] = ang;
    write_out(out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "== " << b.name << " ==\n";
    os << "finite vertices: " << lat.finite_count << "\n";
    os << "ideal vertices:  " << lat.ideal_count() << "\n";
    for (int d = 1; d <= b.poly.dim(); ++d)
      os << d << "-faces: " << lat.faces[d].size() << "\n";
    os << "ridge angles:";
    for (const auto& [frac, count] : angles)
      os << "  " << rational_str(frac) << "*pi x" << count;
    os << "\n";
    write_out(out, os.str());
  }
  return 0;
}

int run_cycles(const std::string& builtin, const std::string& input, int dim,
               const std::string& format, const std::string& out) {
  Bundle b = load_input(builtin, input);
  if (dim < 0 || dim > b.poly.dim()) throw InputError("--dim out of range");
  const auto& lat = b.poly.lattice();
  std::ostringstream os;
  Json j;
  j["input"] = b.name;
  j["dim"] = dim;
  if (dim == b.poly.dim()) {
    j["cycles"] = Json::array({Json::array({0})});
    os << "1 cycle (top cell)\n";
  } else {
    auto groups = face_cycles(b.poly, b.pairing, dim);
    Json arr = Json::array();
    for (const auto& g : groups) arr.push_back(g);
    j["cycles"] = arr;
    j["count"] = groups.size();
    os << groups.size() << " cycles of " << dim << "-faces";
    if (dim == 0) {
      auto ideal = ideal_vertex_cycles(b.poly, b.pairing);
      Json iarr = Json::array();
      for (const auto& g : ideal) iarr.push_back(g);
      j["ideal_cycles"] = iarr;
      j["ideal_count"] = ideal.size();
      os << "; " << ideal.size() << " cycles of ideal vertices";
    }
    os << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
      os << "  cycle " << i << " (size " << groups[i].size() << "):";
      for (int f : groups[i]) {
        if (dim == 0) {
          os << " v" << f;
        } else {
          os << " {";
          const auto& carriers = lat.faces[dim][f].carriers;
          for (std::size_t c = 0; c < carriers.size(); ++c)
            os << (c ? "&" : "") << b.poly.side(carriers[c]).name;
          os << "}";
        }
      }
      os << "\n";
    }
  }
  write_out(out, format == "json" ? j.dump(2) + "\n" : os.str());
  return 0;
}

int run_emit(const std::string& builtin, const std::string& case_name, const std::string& out) {
  if (!builtin.empty() && !case_name.empty())
    throw InputError("use either --builtin or --case");
  if (!builtin.empty()) {
    write_out(out, spec_to_json(builtin_document(builtin)).dump(2) + "\n");
    return 0;
  }
  if (!case_name.empty()) {
    write_out(out, case_to_json(builtin_case_document(case_name)).dump(2) + "\n");
    return 0;
  }
  throw InputError("one of --builtin or --case is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of finite-volume hyperbolic polyhedra and side-pairings"};
  app.require_subcommand(1);

  std::string builtin, input, format = "text", out, pattern, zlit, tlit, case_name;
  int blocks = 1, dim = 0;

  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--builtin", builtin, "builtin catalog entry");
    cmd->add_option("--input", input, "input document file");
    if (with_format)
      cmd->add_option("--format", format, "output format: text|json")
          ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out, "output path (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "run the full condition set on a polyhedron");
  add_io(verify);
  auto* chain = app.add_subcommand("chain", "build and verify a chain of blocks");
  chain->add_option("--blocks", blocks, "number of blocks")->required();
  chain->add_option("--pattern", pattern, "block types, e.g. 12")->required();
  chain->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  chain->add_option("--out", out, "output path (default stdout)");
  auto* inv = app.add_subcommand("invariance", "check precise invariance of a hyperplane");
  add_io(inv);
  auto* section = app.add_subcommand("section", "render a planar section as SVG");
  section->add_option("--builtin", builtin, "builtin catalog entry");
  section->add_option("--input", input, "input document file");
  section->add_option("--z", zlit, "section z as a scalar literal, e.g. [0,1,1,2]")->required();
  section->add_option("--t", tlit, "section height t as a scalar literal")->required();
  section->add_option("--out", out, "output path (default stdout)");
  auto* faces = app.add_subcommand("faces", "print the face census");
  add_io(faces);
  auto* cycles = app.add_subcommand("cycles", "print face cycles at one dimension");
  cycles->add_option("--dim", dim, "face dimension")->required();
  add_io(cycles);
  auto* emit = app.add_subcommand("emit", "write a builtin catalog entry as a document");
  emit->add_option("--builtin", builtin, "builtin catalog entry");
  emit->add_option("--case", case_name, "builtin invariance case");
  emit->add_option("--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return run_verify(builtin, input, format, out);
    if (app.got_subcommand(chain)) return run_chain(blocks, pattern, format, out);
    if (app.got_subcommand(inv)) return run_invariance(builtin, input, format, out);
    if (app.got_subcommand(section)) return run_section(builtin, input, zlit, tlit, out);
    if (app.got_subcommand(faces)) return run_faces(builtin, input, format, out);
    if (app.got_subcommand(cycles)) return run_cycles(builtin, input, dim, format, out);
    if (app.got_subcommand(emit)) return run_emit(builtin, case_name, out);
  } catch (const hypoly::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hypoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
