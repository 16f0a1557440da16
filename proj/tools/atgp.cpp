#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "atgp/generator.hpp"
#include "atgp/instance_io.hpp"
#include "atgp/oracle.hpp"
#include "atgp/profiler.hpp"
#include "atgp/solver.hpp"
#include "atgp/svg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInvalidInstance = 2;
constexpr int kCertificationFailed = 3;

void print_error(const std::string& code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw atgp::InvalidInstance("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

struct LoadedInstance {
  atgp::Instance instance;
  std::optional<atgp::PolygonReduction> reduction;  // polygon inputs only
};

LoadedInstance load(const std::string& path) {
  atgp::ParsedInput in = atgp::parse_instance_text(read_input(path));
  if (in.instance) return {*in.instance, std::nullopt};
  atgp::PolygonReduction red = atgp::from_monotone_mountain(*in.polygon);
  atgp::Instance inst{red.terrain, red.altitude};
  return {std::move(inst), std::move(red)};
}

std::vector<atgp::Rational> parse_rational_list(const std::string& csv) {
  std::vector<atgp::Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(atgp::Rational::parse(item));
  }
  return out;
}

int run_solve(const std::string& input, const std::string& out_path,
              const std::string& render_path, bool require_certificate, bool show_events) {
  LoadedInstance loaded = load(input);
  atgp::Solution sol = atgp::solve(loaded.instance.terrain, loaded.instance.altitude);
  atgp::Certificate cert = atgp::certify(sol, loaded.instance.terrain, loaded.instance.altitude);

  std::optional<std::vector<atgp::Point>> polygon_guards;
  if (loaded.reduction) {
    polygon_guards.emplace();
    for (const auto& g : sol.guards)
      polygon_guards->push_back(loaded.reduction->guard_to_polygon(g));
  }
  write_output(out_path,
               atgp::serialize_solution(sol, cert, polygon_guards ? &*polygon_guards : nullptr));
  if (!render_path.empty()) {
    atgp::RenderOptions opt;
    opt.show_events = show_events;
    std::ofstream f(render_path);
    if (!f) throw std::runtime_error("cannot write '" + render_path + "'");
    f << atgp::render_svg(loaded.instance, &sol, opt);
  }
  std::cerr << "guards=" << sol.guards.size() << " witnesses=" << sol.witnesses.size()
            << " certificate=" << (cert.valid() ? "valid" : "INVALID") << "\n";
  if (require_certificate && !cert.valid()) {
    print_error("certification_failed", "the optimality certificate did not validate");
    return kCertificationFailed;
  }
  return kOk;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  LoadedInstance loaded = load(instance_path);
  atgp::SolutionDocument doc;
  try {
    doc = atgp::parse_solution_text(read_input(solution_path));
  } catch (const atgp::InvalidInstance& e) {
    print_error("certification_failed", std::string("unreadable solution: ") + e.what());
    return kCertificationFailed;
  }
  atgp::Solution sol{doc.guards, doc.witnesses, {}};
  atgp::Certificate cert = atgp::certify(sol, loaded.instance.terrain, loaded.instance.altitude);
  bool flags_match = cert.counts_match == doc.counts_match &&
                     cert.pairwise_disjoint == doc.pairwise_disjoint &&
                     cert.coverage_ok == doc.coverage_ok && cert.valid() == doc.valid;
  if (!cert.valid() || !flags_match) {
    print_error("certification_failed",
                !flags_match ? "embedded certificate flags do not reproduce"
                             : "solution does not certify on this instance");
    return kCertificationFailed;
  }
  nlohmann::ordered_json j;
  j["verified"] = true;
  j["guards"] = doc.guards.size();
  std::cout << j.dump() << "\n";
  return kOk;
}

int run_bench(const std::string& sizes_csv, std::uint64_t seed, const std::string& profile_name) {
  auto profile = atgp::profile_from_string(profile_name);
  if (!profile) throw atgp::InvalidInstance("unknown profile '" + profile_name + "'");
  double prev_ms = 0;
  std::cout << "# n\tsolve_ms\tratio\tguards\n";
  for (const auto& size : parse_rational_list(sizes_csv)) {
    auto n = static_cast<std::size_t>(size.to_double());
    atgp::Instance inst = atgp::generate(n, seed, *profile);
    auto start = std::chrono::steady_clock::now();
    atgp::Solution sol = atgp::solve(inst.terrain, inst.altitude);
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    std::cout << n << "\t" << ms << "\t" << (prev_ms > 0 ? ms / prev_ms : 0.0) << "\t"
              << sol.guards.size() << "\n";
    prev_ms = ms;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum guard sets for terrains seen from an altitude line"};
  app.require_subcommand(1);

  std::string input, out_path, render_path, solution_path;
  bool require_certificate = false, show_events = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and emit the solution JSON");
  solve_cmd->add_option("input", input, "instance file (atgp-v1 or polygon-v1), '-' for stdin")
      ->required();
  solve_cmd->add_option("--out", out_path, "solution output path (default stdout)");
  solve_cmd->add_option("--render", render_path, "write an SVG rendering to this path");
  solve_cmd->add_flag("--certify", require_certificate,
                      "fail (exit 3) unless the certificate validates");
  solve_cmd->add_flag("--show-events", show_events, "include per-edge event markers in the SVG");

  auto* verify_cmd = app.add_subcommand("verify", "Re-certify a solution file against an instance");
  verify_cmd->add_option("instance", input)->required();
  verify_cmd->add_option("solution", solution_path)->required();

  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_profile = "random-walk", gen_margin, gen_name;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "vertex count (>= 2)")->required();
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--profile", gen_profile, "peaks | plateau | sawtooth | random-walk");
  gen_cmd->add_option("--altitude-margin", gen_margin, "exact rational margin above the summit");
  gen_cmd->add_option("--name", gen_name);
  gen_cmd->add_option("--out", out_path);

  std::string heights_csv;
  auto* profile_cmd = app.add_subcommand("profile", "Guard count at sampled altitude heights");
  profile_cmd->add_option("input", input)->required();
  profile_cmd->add_option("--heights", heights_csv, "comma-separated heights")->required();

  std::string bench_sizes = "1000,2000,4000", bench_profile = "random-walk";
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on generated instances");
  bench_cmd->add_option("--sizes", bench_sizes);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--profile", bench_profile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return run_solve(input, out_path, render_path, require_certificate, show_events);
    if (verify_cmd->parsed()) return run_verify(input, solution_path);
    if (gen_cmd->parsed()) {
      auto profile = atgp::profile_from_string(gen_profile);
      if (!profile) throw atgp::InvalidInstance("unknown profile '" + gen_profile + "'");
      atgp::Rational margin =
          gen_margin.empty() ? atgp::Rational(-1) : atgp::Rational::parse(gen_margin);
      atgp::Instance inst = atgp::generate(gen_n, gen_seed, *profile, margin);
      atgp::InstanceMetadata meta;
      meta.name = gen_name;
      meta.seed = gen_seed;
      write_output(out_path, atgp::serialize_instance(inst, meta));
      return kOk;
    }
    if (profile_cmd->parsed()) {
      LoadedInstance loaded = load(input);
      auto rows =
          atgp::profile_altitudes(loaded.instance.terrain, parse_rational_list(heights_csv));
      std::cout << "# height\tguards\n";
      for (const auto& row : rows)
        std::cout << row.height.to_string() << "\t" << row.guard_count << "\n";
      return kOk;
    }
    if (bench_cmd->parsed()) return run_bench(bench_sizes, bench_seed, bench_profile);
  } catch (const atgp::InvalidInstance& e) {
    print_error("invalid_instance", e.what());
    return kInvalidInstance;
  } catch (const std::invalid_argument& e) {
    print_error("invalid_instance", e.what());
    return kInvalidInstance;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kError;
  }
  return kError;
}
