// coxrefl: decide, construct and verify finite-index reflection subgroups of
// odd-angled Coxeter groups; draw rank-3 tessellations.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxrefl/certificate_io.hpp"
#include "coxrefl/constructor.hpp"
#include "coxrefl/render.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace coxrefl;

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int thread_count_from_env() {
  const char* raw = std::getenv("COXREFL_THREADS");
  if (!raw) return 1;
  int value = std::atoi(raw);
  return value >= 1 ? value : 1;
}

struct Reporter {
  json report;
  bool as_json = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Reporter(const std::string& command, bool json_flag) : as_json(json_flag) {
    report["tool"] = "coxrefl";
    report["version"] = kVersion;
    report["command"] = command;
    report["threads"] = thread_count_from_env();
  }

  void finish_ok() {
    report["status"] = "ok";
    stamp();
  }

  void finish_error(const std::string& code, const std::string& message) {
    report["status"] = "error";
    report["error"] = {{"code", code}, {"message", message}};
    stamp();
  }

  void stamp() {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

  void emit_json() { std::cout << report.dump(2) << "\n"; }
};

json verdict_to_json(const Verdict& verdict) {
  json out;
  out["answer"] = to_string(verdict.answer);
  if (verdict.answer == Answer::HasSubgroup) {
    out["component"] = *verdict.component_index + 1;
    out["reason"] = to_string(verdict.reason->kind);
    if (!verdict.reason->triple.empty()) out["triple"] = verdict.reason->triple;
  } else {
    out["forbidden"] = json::array();
    for (const auto& f : verdict.forbidden) {
      json entry;
      entry["vertices"] = f.vertices;
      json labels = json::array();
      for (int i = 1; i <= f.diagram.order(); ++i)
        for (int j = i + 1; j <= f.diagram.order(); ++j)
          if (auto l = f.diagram.label(i, j))
            labels.push_back({f.vertices[i - 1], f.vertices[j - 1], *l});
      entry["labels"] = labels;
      out["forbidden"].push_back(entry);
    }
  }
  return out;
}

std::string verdict_to_text(const Verdict& verdict) {
  std::ostringstream out;
  if (verdict.answer == Answer::HasSubgroup) {
    out << "HAS a finite-index proper reflection subgroup (component "
        << *verdict.component_index + 1 << ", type "
        << to_string(verdict.reason->kind);
    if (!verdict.reason->triple.empty()) {
      out << " on {";
      for (std::size_t t = 0; t < verdict.reason->triple.size(); ++t)
        out << (t ? "," : "") << verdict.reason->triple[t];
      out << "}";
    }
    out << ")";
  } else {
    out << "NO finite-index proper reflection subgroup;";
    for (const auto& f : verdict.forbidden) {
      out << " minimal forbidden subdiagram {";
      for (std::size_t t = 0; t < f.vertices.size(); ++t)
        out << (t ? "," : "") << f.vertices[t];
      out << "} labels (";
      bool first = true;
      for (int i = 1; i <= f.diagram.order(); ++i)
        for (int j = i + 1; j <= f.diagram.order(); ++j)
          if (auto l = f.diagram.label(i, j)) {
            out << (first ? "" : ",") << *l;
            first = false;
          }
      out << ");";
    }
  }
  return out.str();
}

json certificate_to_json(const Certificate& cert) {
  json out;
  out["index"] = cert.index;
  out["provenance"] = to_string(cert.provenance);
  out["chambers"] = cert.chambers.size();
  out["generators"] = cert.generators.size();
  json v;
  v["convex"] = cert.verification.convex;
  v["coxeter_polytope"] = cert.verification.polytope;
  v["tiling_ok"] = cert.verification.tiling_ok;
  v["tiling_mode"] =
      cert.verification.tiling_mode == TilingMode::Full ? "full" : "local";
  v["tiling_radius"] = cert.verification.tiling_radius;
  out["verification"] = v;
  return out;
}

int run_classify(const std::string& path, bool as_json) {
  Reporter reporter("classify", as_json);
  reporter.report["input"] = path;
  CoxeterMatrix system = parse_coxeter_matrix(read_file(path));
  Verdict verdict = classify(system);
  reporter.report["system"] = system.describe();
  reporter.report["verdict"] = verdict_to_json(verdict);
  reporter.finish_ok();
  if (as_json)
    reporter.emit_json();
  else
    std::cout << system.describe() << "\n" << verdict_to_text(verdict) << "\n";
  return 0;
}

int run_construct(const std::string& path, const std::string& out_path,
                  bool as_json, std::size_t tiling_budget) {
  Reporter reporter("construct", as_json);
  reporter.report["input"] = path;
  CoxeterMatrix system = parse_coxeter_matrix(read_file(path));
  ConstructOptions options;
  options.tiling_node_budget = tiling_budget;
  ConstructResult result = construct(system, options);
  reporter.report["system"] = system.describe();

  if (std::holds_alternative<Verdict>(result)) {
    const Verdict& verdict = std::get<Verdict>(result);
    reporter.report["verdict"] = verdict_to_json(verdict);
    reporter.finish_ok();
    if (as_json)
      reporter.emit_json();
    else
      std::cout << verdict_to_text(verdict) << "\n";
    return 0;
  }

  const Certificate& cert = std::get<Certificate>(result);
  reporter.report["certificate"] = certificate_to_json(cert);
  if (!out_path.empty()) {
    write_file(out_path, format_certificate(cert));
    reporter.report["out"] = out_path;
  }
  reporter.finish_ok();
  if (as_json) {
    reporter.emit_json();
  } else {
    std::cout << "constructed a verified fundamental domain: index "
              << cert.index << ", " << cert.generators.size()
              << " bounding reflections, provenance "
              << to_string(cert.provenance) << "\n";
    if (!out_path.empty())
      std::cout << "certificate written to " << out_path << "\n";
    else
      std::cout << format_certificate(cert);
  }
  return 0;
}

int run_verify(const std::string& system_path, const std::string& cert_path,
               int radius, bool as_json, std::size_t budget) {
  Reporter reporter("verify", as_json);
  reporter.report["system"] = system_path;
  reporter.report["certificate"] = cert_path;
  CoxeterMatrix system = parse_coxeter_matrix(read_file(system_path));
  ParsedCertificate cert = parse_certificate(read_file(cert_path));

  WordEngine engine(system);
  std::vector<Elt> members;
  for (const Word& w : cert.chambers) members.push_back(element_of(engine, w));
  ChamberSet set(engine, members);

  json checks;
  std::string first_violation;
  bool pass = true;
  auto fail = [&](const std::string& what) {
    if (pass) first_violation = what;
    pass = false;
  };

  checks["chamber_count"] = set.size() == cert.chambers.size() &&
                            static_cast<int>(set.size()) == cert.index;
  if (!checks["chamber_count"]) fail("duplicate chambers or index mismatch");
  checks["contains_identity"] = set.contains_identity();
  if (!checks["contains_identity"]) fail("identity chamber missing");
  checks["connected"] = is_connected(engine, set);
  if (!checks["connected"]) fail("chamber set not connected");

  if (pass) {
    auto convexity = is_convex(engine, set, 2 * set.max_length());
    checks["convex"] = convexity.convex;
    if (!convexity.convex)
      fail("not convex: geodesic chamber " +
           format_word_literal(from_letters(engine.word(*convexity.counterexample))) +
           " missing");
  }
  if (pass) {
    auto polytope = is_coxeter_polytope(engine, set);
    checks["coxeter_polytope"] = polytope.ok;
    if (!polytope.ok) {
      const auto& v = polytope.violations.front();
      fail("residue arc at (" + std::to_string(v.i) + "," + std::to_string(v.j) +
           ") size " + std::to_string(v.arc_size) +
           (v.contiguous ? " does not divide " : " split around order ") +
           std::to_string(v.order));
    }
  }
  if (pass) {
    auto walls = bounding_reflections(engine, set);
    bool generators_match = walls.size() == cert.generators.size();
    if (generators_match) {
      std::unordered_set<Elt> expected;
      for (const auto& r : walls) expected.insert(r.word);
      for (const Word& w : cert.generators)
        if (!expected.count(element_of(engine, w))) generators_match = false;
    }
    checks["generators_match"] = generators_match;
    if (!generators_match) fail("generator list does not match the bounding walls");
  }
  if (pass) {
    int used_radius = radius > 0 ? radius : 2 * set.max_length() + 2;
    reporter.report["radius"] = used_radius;
    TilingReport tiling = verify_tiling(engine, set, used_radius, budget);
    checks["tiling_covered"] = tiling.covered;
    checks["tiling_no_overlap"] = !tiling.overlap;
    checks["tiling_complete"] = !tiling.truncated;
    if (tiling.truncated)
      fail("tiling development exceeded the node budget; raise --budget");
    else if (!tiling.ok())
      fail(tiling.overlap ? "translates overlap" : "ball not fully covered");
    reporter.report["ball_size"] = tiling.ball_size;
  }

  reporter.report["checks"] = checks;
  reporter.report["pass"] = pass;
  if (!pass) reporter.report["first_violation"] = first_violation;
  reporter.finish_ok();
  if (as_json)
    reporter.emit_json();
  else if (pass)
    std::cout << "PASS: certificate verifies (index " << cert.index << ")\n";
  else
    std::cout << "FAIL: " << first_violation << "\n";
  return pass ? 0 : 2;
}

int run_search(const std::string& path, int max_size, int radius, bool as_json,
               std::size_t budget) {
  Reporter reporter("search", as_json);
  reporter.report["input"] = path;
  CoxeterMatrix system = parse_coxeter_matrix(read_file(path));
  WordEngine engine(system);
  SearchReport result = search_coxeter_polytopes(engine, max_size, radius, budget);

  json found = json::array();
  for (const ChamberSet& set : result.found) {
    json entry;
    entry["size"] = set.size();
    json chambers = json::array();
    for (Elt e : set.members())
      chambers.push_back(format_word_literal(from_letters(engine.word(e))));
    entry["chambers"] = chambers;
    found.push_back(entry);
  }
  reporter.report["found"] = found;
  reporter.report["complete"] = result.complete;

  std::string note;
  if (!result.found.empty()) {
    Verdict verdict = classify(system);
    if (verdict.answer == Answer::HasSubgroup) {
      ConstructResult built = construct(system);
      if (std::holds_alternative<Certificate>(built)) {
        int constructed_index = std::get<Certificate>(built).index;
        if (static_cast<int>(result.found.front().size()) < constructed_index)
          note = "smallest found domain (" +
                 std::to_string(result.found.front().size()) +
                 " chambers) is smaller than the constructed index " +
                 std::to_string(constructed_index);
      }
    }
  }
  if (!note.empty()) reporter.report["note"] = note;
  reporter.finish_ok();

  if (as_json) {
    reporter.emit_json();
  } else {
    if (result.found.empty())
      std::cout << "no Coxeter polytopes with 2.." << max_size
                << " chambers inside ball(" << radius << ") ("
                << (result.complete ? "complete" : "truncated") << ")\n";
    else {
      std::cout << result.found.size() << " Coxeter polytopes ("
                << (result.complete ? "complete" : "truncated") << ")\n";
      for (const ChamberSet& set : result.found) {
        std::cout << "  size " << set.size() << ":";
        for (Elt e : set.members())
          std::cout << " [" << format_word_literal(from_letters(engine.word(e)))
                    << "]";
        std::cout << "\n";
      }
    }
    if (!note.empty()) std::cout << "note: " << note << "\n";
  }
  return 0;
}

int run_render(const std::string& path, int depth, const std::string& highlight_path,
               const std::string& out_path, int canvas, bool as_json) {
  Reporter reporter("render", as_json);
  reporter.report["input"] = path;
  CoxeterMatrix system = parse_coxeter_matrix(read_file(path));
  SceneParams params;
  params.model = rank3_model(system);
  params.depth = depth;
  params.canvas = canvas;
  if (!highlight_path.empty()) {
    std::string text = read_file(highlight_path);
    // Accept either a certificate or a bare chamber list.
    try {
      params.highlight = parse_certificate(text).chambers;
    } catch (const std::exception&) {
      params.highlight = parse_chamber_list(text);
    }
  }
  std::string svg = render_rank3(system, params);
  write_file(out_path, svg);
  reporter.report["out"] = out_path;
  reporter.report["bytes"] = svg.size();
  reporter.report["model"] =
      params.model == SceneModel::PoincareDisk ? "poincare-disk" : "euclidean";
  reporter.finish_ok();
  if (as_json)
    reporter.emit_json();
  else
    std::cout << "wrote " << out_path << " (" << svg.size() << " bytes)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-index reflection subgroups of odd-angled Coxeter groups"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string input, out_path, cert_path, highlight_path;
  int radius = 0, max_size = 6, depth = 4, canvas = 800;
  std::size_t budget = 2'000'000, search_budget = 10'000'000;

  auto* classify_cmd = app.add_subcommand("classify", "decide existence");
  classify_cmd->add_option("input", input, "system file")->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "build a verified certificate");
  construct_cmd->add_option("input", input, "system file")->required();
  construct_cmd->add_option("--out", out_path, "certificate output path");
  construct_cmd->add_option("--tiling-budget", budget,
                            "node budget for the tiling development");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("system", input, "system file")->required();
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
  verify_cmd->add_option("--radius", radius,
                         "tiling ball radius (default 2*max length + 2)");
  verify_cmd->add_option("--budget", budget, "tiling node budget");

  auto* search_cmd =
      app.add_subcommand("search", "enumerate small Coxeter polytopes");
  search_cmd->add_option("input", input, "system file")->required();
  search_cmd->add_option("--max-size", max_size, "largest chamber count");
  search_cmd->add_option("--radius", radius, "ball radius")->required();
  search_cmd->add_option("--budget", search_budget, "expansion budget");

  auto* render_cmd = app.add_subcommand("render", "draw a rank-3 tessellation");
  render_cmd->add_option("input", input, "system file")->required();
  render_cmd->add_option("--depth", depth, "max word length to draw");
  render_cmd->add_option("--highlight", highlight_path,
                         "certificate or chamber list to fill");
  render_cmd->add_option("--out", out_path, "SVG output path")->required();
  render_cmd->add_option("--canvas", canvas, "pixel size of the square canvas");

  for (auto* sub : {classify_cmd, construct_cmd, verify_cmd, search_cmd, render_cmd})
    sub->add_flag("--json", as_json, "emit a JSON report on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return run_classify(input, as_json);
    if (construct_cmd->parsed())
      return run_construct(input, out_path, as_json, budget);
    if (verify_cmd->parsed())
      return run_verify(input, cert_path, radius, as_json, budget);
    if (search_cmd->parsed())
      return run_search(input, max_size, radius, as_json, search_budget);
    if (render_cmd->parsed())
      return run_render(input, depth, highlight_path, out_path, canvas, as_json);
  } catch (const ConstructionError& error) {
    std::cerr << "internal verification failure: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
