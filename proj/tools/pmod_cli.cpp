// Command-line front end: barcode validation, distance computation,
// stability verification, example generation, and SVG rendering.
//
// Exit codes: 0 success, 1 validation/input failure, 2 inconclusive,
// 3 stability violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pmod/barcode_io.hpp"
#include "pmod/constructions.hpp"
#include "pmod/distances.hpp"
#include "pmod/render_svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitViolation = 3;

struct module_ref {
  std::string path;
  std::string module_name;  // empty = first module
};

module_ref parse_ref(const std::string& arg) {
  auto hash = arg.find('#');
  if (hash == std::string::npos) return {arg, ""};
  return {arg.substr(0, hash), arg.substr(hash + 1)};
}

pmod::barcode load_ref(const module_ref& ref) {
  pmod::barcode_file file = pmod::load_barcode_file(ref.path);
  const pmod::module_entry& entry = pmod::select_module(file, ref.module_name);
  return pmod::materialize(entry, file.dim);
}

int run_check(const std::string& path) {
  pmod::barcode_file file = pmod::load_barcode_file(path);
  for (const auto& entry : file.modules) {
    pmod::barcode bars;
    for (std::size_t k = 0; k < entry.intervals.size(); ++k) {
      try {
        bars.push_back(pmod::materialize(entry.intervals[k], file.dim));
      } catch (const pmod::error& e) {
        std::cout << "FAIL " << entry.name << "[" << k << "]: " << e.what() << "\n";
        return kExitValidation;
      }
    }
    pmod::closure_report closure = pmod::is_intersection_closed(bars);
    if (!closure.closed) {
      std::cout << "FAIL " << entry.name << ": intersection of intervals " << closure.violating->first
                << " and " << closure.violating->second << " has 2 or more components\n";
      return kExitValidation;
    }
    std::cout << "ok " << entry.name << ": " << bars.size()
              << " interval(s), intersection-closed\n";
  }
  return kExitOk;
}

void print_witness(const pmod::interleaving_witness& w) {
  auto dump = [](const char* label, const pmod::morphism_matrix& mm) {
    std::cout << "  " << label << ":";
    if (mm.entries().empty()) std::cout << " 0";
    for (const auto& [key, omega] : mm.entries())
      std::cout << " (" << key.first << "->" << key.second << ")=" << omega;
    std::cout << "\n";
  };
  dump("f", w.f);
  dump("g", w.g);
}

int run_dist(const std::string& metric, const module_ref& ra, const module_ref& rb,
             unsigned field_char, std::size_t budget) {
  pmod::barcode a = load_ref(ra), b = load_ref(rb);
  if (metric == "hausdorff") {
    std::cout << "hausdorff = " << pmod::hausdorff(a, b) << " (grid units)\n";
    return kExitOk;
  }
  if (metric == "bottleneck") {
    std::cout << "bottleneck = " << pmod::bottleneck(a, b) << " (grid units)\n";
    return kExitOk;
  }
  pmod::oracle_options opts;
  opts.field = pmod::prime_field(field_char);
  opts.entry_budget = budget;
  try {
    pmod::epsilon_t d = pmod::oracle_module_distance(a, b, opts);
    std::cout << "interleaving = " << d << " (grid units, field F" << field_char << ")\n";
    auto witness = pmod::oracle_interleaving_exists(a, b, d, opts);
    if (witness.witness) print_witness(*witness.witness);
    return kExitOk;
  } catch (const pmod::budget_exceeded&) {
    std::cout << "interleaving in [0, " << pmod::bottleneck(a, b)
              << "] (oracle budget exceeded; bracket from bottleneck)\n";
    return kExitInconclusive;
  }
}

int run_verify(const module_ref& ra, const module_ref& rb, unsigned field_char,
               std::size_t budget) {
  pmod::barcode a = load_ref(ra), b = load_ref(rb);
  pmod::oracle_options opts;
  opts.field = pmod::prime_field(field_char);
  opts.entry_budget = budget;
  pmod::stability_report rep = pmod::verify_stability(a, b, opts);
  std::cout << "d_H = " << rep.hausdorff << " (grid units)\n";
  if (rep.interleaving)
    std::cout << "d_I = " << *rep.interleaving << " (grid units)\n";
  else
    std::cout << "d_I in [" << rep.interleaving_lower << ", " << rep.interleaving_upper
              << "] (oracle budget exceeded)\n";
  std::cout << "ratio = " << rep.ratio << "\n";
  std::cout << pmod::to_string(rep.status) << "\n";
  switch (rep.status) {
    case pmod::stability_status::pass: return kExitOk;
    case pmod::stability_status::inconclusive: return kExitInconclusive;
    default: return kExitViolation;
  }
}

pmod::interval_spec points_form(const pmod::interval_set& bar) {
  return pmod::points_spec{bar.points().points()};
}

int write_example(const pmod::module_pair& pair, const std::string& out_path,
                  unsigned field_char, const std::string& note) {
  pmod::barcode_file file;
  file.dim = 2;
  pmod::module_entry m{"M", {}}, n{"N", {}};
  for (const auto& bar : pair.m) m.intervals.push_back(points_form(bar));
  for (const auto& bar : pair.n) n.intervals.push_back(points_form(bar));
  file.modules = {m, n};
  pmod::save_barcode_file(file, out_path);
  std::cout << "wrote " << out_path << " (" << note << ")\n";

  pmod::oracle_options opts;
  opts.field = pmod::prime_field(field_char);
  pmod::stability_report rep = pmod::verify_stability(pair.m, pair.n, opts);
  std::cout << "d_H = " << rep.hausdorff;
  if (rep.interleaving)
    std::cout << ", d_I = " << *rep.interleaving;
  else
    std::cout << ", d_I in [" << rep.interleaving_lower << ", " << rep.interleaving_upper << "]";
  std::cout << ", ratio = " << rep.ratio << ", " << pmod::to_string(rep.status) << "\n";
  return rep.status == pmod::stability_status::pass
             ? kExitOk
             : (rep.status == pmod::stability_status::inconclusive ? kExitInconclusive
                                                                   : kExitViolation);
}

int run_render(const std::string& path, const std::string& svg_out,
               const std::string& module_name) {
  pmod::barcode_file file = pmod::load_barcode_file(path);
  if (file.dim != 2) {
    std::cout << "FAIL: rendering requires dimension 2\n";
    return kExitValidation;
  }
  std::vector<std::pair<std::string, pmod::barcode>> modules;
  for (const auto& entry : file.modules) {
    if (!module_name.empty() && entry.name != module_name) continue;
    modules.emplace_back(entry.name, pmod::materialize(entry, file.dim));
  }
  if (!module_name.empty() && modules.empty()) {
    std::cout << "FAIL: no module named '" << module_name << "'\n";
    return kExitValidation;
  }
  std::ofstream out(svg_out);
  if (!out) {
    std::cout << "FAIL: cannot write " << svg_out << "\n";
    return kExitValidation;
  }
  out << pmod::render_svg(modules);
  std::cout << "wrote " << svg_out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Interval-decomposable persistence modules on the integer grid:\n"
      "morphism and interleaving criteria, Hausdorff/bottleneck distances,\n"
      "and the stability check d_H <= 2 * d_I.\n"
      "Distances are integers in grid units; model fractional shifts by\n"
      "refining the grid (e.g. the tightness example's --scale)."};
  app.require_subcommand(1);

  std::string path_a, path_b, out_path = "example.json", svg_path, module_name, metric = "hausdorff";
  unsigned field_char = 2;
  std::size_t budget = 24;
  pmod::coord_t a_param = 4;
  std::string delta = "1/1";
  pmod::coord_t scale = 2;

  auto* check = app.add_subcommand("check", "validate every interval and intersection-closure");
  check->add_option("file", path_a, "barcode file")->required();

  auto* dist = app.add_subcommand("dist", "distance between two modules");
  dist->add_option("--metric", metric, "interleaving | hausdorff | bottleneck")
      ->check(CLI::IsMember({"interleaving", "hausdorff", "bottleneck"}));
  dist->add_option("a", path_a, "fileA#module")->required();
  dist->add_option("b", path_b, "fileB#module")->required();
  dist->add_option("--field", field_char, "prime field characteristic (2, 3, 5, 7)");
  dist->add_option("--budget", budget, "oracle entry budget");

  auto* verify = app.add_subcommand("verify-stability", "check d_H <= 2 * d_I");
  verify->add_option("a", path_a, "fileA#module")->required();
  verify->add_option("b", path_b, "fileB#module")->required();
  verify->add_option("--field", field_char, "prime field characteristic (2, 3, 5, 7)");
  verify->add_option("--budget", budget, "oracle entry budget");

  auto* example = app.add_subcommand("example", "generate a named example and report distances");
  auto* instability = example->add_subcommand("instability", "two squares vs. their staircase join");
  instability->add_option("--a", a_param, "square side (>= 1)");
  instability->add_option("--out", out_path, "output barcode file");
  auto* tightness = example->add_subcommand("tightness", "body-plus-tail family approaching ratio 2");
  tightness->add_option("--delta", delta, "rational in (0,2), as p/q");
  tightness->add_option("--scale", scale, "grid units per unit length");
  tightness->add_option("--out", out_path, "output barcode file");
  example->require_subcommand(1);

  auto* render = app.add_subcommand("render", "draw a 2-D barcode file as SVG");
  render->add_option("file", path_a, "barcode file")->required();
  render->add_option("--svg", svg_path, "output SVG path")->required();
  render->add_option("--module", module_name, "render only this module");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return run_check(path_a);
    if (app.got_subcommand(dist))
      return run_dist(metric, parse_ref(path_a), parse_ref(path_b), field_char, budget);
    if (app.got_subcommand(verify))
      return run_verify(parse_ref(path_a), parse_ref(path_b), field_char, budget);
    if (app.got_subcommand(example)) {
      if (example->got_subcommand(instability)) {
        return write_example(pmod::instability_instance(a_param), out_path, field_char,
                             "instability, a = " + std::to_string(a_param));
      }
      auto slash = delta.find('/');
      pmod::tightness_params params;
      params.delta_num = std::stoll(delta.substr(0, slash));
      params.delta_den = slash == std::string::npos ? 1 : std::stoll(delta.substr(slash + 1));
      params.scale = scale;
      return write_example(pmod::tightness_instance(params), out_path, field_char,
                           "tightness, delta = " + delta + ", scale = " + std::to_string(scale));
    }
    if (app.got_subcommand(render)) return run_render(path_a, svg_path, module_name);
  } catch (const pmod::error& e) {
    std::cout << "FAIL: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
