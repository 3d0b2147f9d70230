// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: mesh generation, certified enclosure runs, shift
// sweeps, convergence studies, the pollution demo and field export.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mxe/assembly.hpp"
#include "mxe/enclosure.hpp"
#include "mxe/fespace.hpp"
#include "mxe/io.hpp"
#include "mxe/mesh.hpp"
#include "mxe/reference.hpp"
#include "mxe/runtime.hpp"
#include "mxe/study.hpp"

namespace fs = std::filesystem;
using namespace mxe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlags = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRuntime = 4;

struct CommonFlags {
  std::string domain = "square";
  int n = 0;  // 0: per-domain default
  int r = 1;
  double grade = 1.0;
  double grade_x = M_PI / 2.0, grade_y = M_PI / 2.0;
  double jitter = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> eps;
  int threads = 0;
  int dense_cap = 8000;
  std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_order = true) {
  cmd->add_option("--domain", f.domain, "square|lshape|slit|square4")
      ->check(CLI::IsMember({"square", "lshape", "slit", "square4"}));
  cmd->add_option("--n", f.n, "base subdivisions per side (default 4, slit 8)");
  if (with_order) cmd->add_option("--r", f.r, "polynomial order")->check(CLI::Range(1, 5));
  cmd->add_option("--grade", f.grade, "grading factor RF in (0,1]");
  cmd->add_option("--grade-x", f.grade_x, "grading point x (default pi/2)");
  cmd->add_option("--grade-y", f.grade_y, "grading point y (default pi/2)");
  cmd->add_option("--jitter", f.jitter, "interior-node jitter fraction");
  cmd->add_option("--seed", f.seed, "jitter RNG seed");
  cmd->add_option("--eps", f.eps, "per-quadrant permittivities (square4)")->expected(0, 4);
  cmd->add_option("--threads", f.threads, "worker thread cap");
  cmd->add_option("--dense-cap", f.dense_cap, "max DOFs for the dense eigensolver");
  cmd->add_option("--out-dir", f.out_dir, "output directory");
}

DomainSpec domain_spec(const CommonFlags& f) {
  DomainSpec spec;
  spec.kind = domain_kind_from_string(f.domain);
  spec.n = f.n > 0 ? f.n : (spec.kind == DomainKind::slit ? 8 : 4);
  if (f.grade < 1.0) spec.grading = Grading{{f.grade_x, f.grade_y}, f.grade};
  spec.jitter = f.jitter;
  spec.seed = f.seed;
  return spec;
}

MaterialCoefficients materials(const CommonFlags& f) {
  if (f.eps.empty()) {
    if (domain_kind_from_string(f.domain) == DomainKind::square4)
      return MaterialCoefficients::transmission_quadrants();
    return MaterialCoefficients::uniform();
  }
  if (f.eps.size() != 4)
    throw std::invalid_argument("--eps expects exactly 4 per-quadrant values");
  MaterialCoefficients mat = MaterialCoefficients::uniform();
  for (int q = 0; q < 4; ++q) mat.eps[q + 1] = f.eps[q];
  return mat;
}

void echo_config(const CommonFlags& f, const std::string& command,
                 const std::vector<std::pair<std::string, std::string>>& extra) {
  fs::create_directories(f.out_dir);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("command", json_quote(command));
  kv.emplace_back("domain", json_quote(f.domain));
  kv.emplace_back("n", std::to_string(domain_spec(f).n));
  kv.emplace_back("r", std::to_string(f.r));
  kv.emplace_back("grade", format_double(f.grade));
  kv.emplace_back("grade_x", format_double(f.grade_x));
  kv.emplace_back("grade_y", format_double(f.grade_y));
  kv.emplace_back("jitter", format_double(f.jitter));
  kv.emplace_back("seed", std::to_string(f.seed));
  {
    std::string eps = "[";
    for (std::size_t i = 0; i < f.eps.size(); ++i)
      eps += std::string(i ? ", " : "") + format_double(f.eps[i]);
    kv.emplace_back("eps", eps + "]");
  }
  kv.emplace_back("threads", std::to_string(f.threads));
  kv.emplace_back("dense_cap", std::to_string(f.dense_cap));
  for (const auto& e : extra) kv.push_back(e);
  write_json_object(kv, f.out_dir + "/config.json");
}

std::vector<double> reference_for(const DomainSpec& spec) {
  if (spec.kind == DomainKind::square) return square_exact(40).expanded();
  return literature_reference(spec.kind).expanded();
}

int cmd_mesh(const CommonFlags& f, bool do_validate) {
  echo_config(f, "mesh", {{"validate", do_validate ? "true" : "false"}});
  const Mesh mesh = generate(domain_spec(f));
  write_mesh_json(mesh, f.out_dir + "/mesh.json");
  std::printf("mesh: %zu vertices, %zu triangles, %zu boundary edges, %zu crack pairs\n",
              mesh.n_vertices(), mesh.n_triangles(), mesh.boundary_edges.size(),
              mesh.crack_pairs.size());
  if (do_validate) {
    const MeshDiagnostics diag = validate(mesh);
    std::printf("%s", diag.summary().c_str());
    std::ofstream rep(f.out_dir + "/validate.txt");
    rep << diag.summary();
    if (!diag.all_pass()) return kExitRuntime;
  }
  return kExitOk;
}

int cmd_enclose(const CommonFlags& f, double t_up, double t_low, double delta, int budget) {
  echo_config(f, "enclose",
              {{"t_up", format_double(t_up)},
               {"t_low", format_double(t_low)},
               {"delta", format_double(delta)},
               {"budget", std::to_string(budget)}});
  ProcedureOptions opts;
  opts.budget = budget;
  opts.dense_cap = f.dense_cap;
  const EnclosureReport report =
      run_procedure(domain_spec(f), materials(f), f.r, t_up, t_low, delta, opts);
  write_report_json(report, f.out_dir + "/report.json");
  write_report_csv(report, f.out_dir + "/report.csv");
  std::printf("enclose: %s, m_tilde=%d, %zu enclosure(s), final %d DOFs (h=%g)\n",
              report.terminated == Termination::converged ? "converged" : "budget exhausted",
              report.m_tilde, report.enclosures.size(), report.final_n_dofs, report.final_h);
  for (const auto& e : report.enclosures)
    std::printf("  j=%d  [%.12g, %.12g]  width=%.3e%s\n", e.j, e.lower, e.upper, e.width,
                e.converged ? "" : "  (not converged)");
  return report.terminated == Termination::converged ? kExitOk : kExitBudget;
}

int cmd_sweep(const CommonFlags& f, int j, const std::string& side_name,
              const std::vector<double>& ts) {
  std::string tlist = "[";
  for (std::size_t i = 0; i < ts.size(); ++i)
    tlist += std::string(i ? ", " : "") + format_double(ts[i]);
  echo_config(f, "sweep",
              {{"j", std::to_string(j)},
               {"side", json_quote(side_name)},
               {"t", tlist + "]"}});
  const DomainSpec spec = domain_spec(f);
  const Mesh mesh = generate(spec);
  const FESpace space(mesh, f.r);
  const FormMatrices fm = assemble(space, materials(f));
  const Side side = side_name == "lower" ? Side::lower : Side::upper;
  SolveOptions sopts;
  sopts.dense_cap = f.dense_cap;
  const auto rows = sweep_t(fm, j, side, ts, reference_for(spec), sopts);
  write_sweep_csv(rows, f.out_dir + "/sweep.csv");
  for (const auto& row : rows)
    std::printf("t=%-10.6g j=%-3d rho=%-16.10g %s%s\n", row.t, row.j_used, row.rho,
                row.valid ? "" : "invalid ", row.note.c_str());
  return kExitOk;
}

int cmd_converge(const CommonFlags& f, int levels, double t_up, double t_low) {
  echo_config(f, "converge",
              {{"levels", std::to_string(levels)},
               {"t_up", format_double(t_up)},
               {"t_low", format_double(t_low)}});
  ProcedureOptions opts;
  opts.dense_cap = f.dense_cap;
  const ConvergenceStudy study =
      convergence_study(domain_spec(f), materials(f), f.r, levels, t_up, t_low, opts);
  write_study_csv(study, f.out_dir + "/study.csv");
  write_study_loglog(study, f.out_dir + "/study_loglog.dat");
  std::printf("converge: tracked %d eigenvalue(s) over %zu level(s)\n", study.m,
              study.levels.size());
  for (int jj = 1; jj <= study.m; ++jj)
    std::printf("  j=%d slope=%.3f\n", jj, study.slopes[jj - 1]);
  return kExitOk;
}

int cmd_demo(const CommonFlags& f, double win_lo, double win_hi, double delta,
             bool no_crack) {
  echo_config(f, "demo",
              {{"window_lo", format_double(win_lo)},
               {"window_hi", format_double(win_hi)},
               {"delta", format_double(delta)},
               {"no_crack", no_crack ? "true" : "false"}});
  ProcedureOptions opts;
  opts.dense_cap = f.dense_cap;
  const PollutionReport report = pollution_demo(domain_spec(f), materials(f), f.r, win_lo,
                                                win_hi, delta, no_crack, opts);
  write_pollution_json(report, f.out_dir + "/pollution.json");
  std::printf("demo: window %s, %zu naive value(s), %d spurious, %zu enclosure(s) missed\n",
              report.window_certified ? "certified" : "not certified", report.naive.size(),
              report.n_spurious, report.missing.size());
  for (const auto& e : report.naive) {
    if (e.enclosure_index > 0)
      std::printf("  naive %.10g -> enclosure %d\n", e.value, e.enclosure_index);
    else
      std::printf("  naive %.10g -> spurious\n", e.value);
  }
  return kExitOk;
}

int cmd_export_field(const CommonFlags& f, int mode, bool raw) {
  echo_config(f, "export-field",
              {{"mode", std::to_string(mode)}, {"normalize", raw ? "false" : "true"}});
  const DomainSpec spec = domain_spec(f);
  if (spec.kind != DomainKind::square)
    throw std::invalid_argument(
        "export-field renders the analytic square modes; other domains export via "
        "'enclose' report data");
  const ReferenceSpectrum exact = square_exact(4 * mode + 8);
  const double target = exact.distinct(mode);
  int pick_l = -1, pick_m = -1;
  for (int l = 0; l < 64 && pick_l < 0; ++l)
    for (int m = 0; m < 64; ++m) {
      if (l == 0 && m == 0) continue;
      if (std::abs(std::sqrt(double(l * l + m * m)) - target) < 1e-12) {
        pick_l = l;
        pick_m = m;
        break;
      }
    }
  const Mesh mesh = generate(spec);
  const FESpace space(mesh, f.r);
  const CoefficientVector u = interpolate(space, square_mode(pick_l, pick_m));
  write_vtk(field_grid(space, u, !raw), f.out_dir + "/field.vtk");
  std::printf("export-field: mode %d (l=%d, m=%d, omega=%.12g) -> %s/field.vtk\n", mode,
              pick_l, pick_m, target, f.out_dir.c_str());
  return kExitOk;
}

// Replay support: the config echo is a flat JSON object; turn it back into a
// flag list and re-parse.
std::vector<std::string> args_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  auto find_string = [&](const std::string& key) -> std::string {
    const std::string needle = "\"" + key + "\": \"";
    const auto pos = text.find(needle);
    if (pos == std::string::npos) return "";
    const auto start = pos + needle.size();
    return text.substr(start, text.find('"', start) - start);
  };
  auto find_token = [&](const std::string& key) -> std::string {
    const std::string needle = "\"" + key + "\": ";
    const auto pos = text.find(needle);
    if (pos == std::string::npos) return "";
    const auto start = pos + needle.size();
    return text.substr(start, text.find_first_of(",\n}", start) - start);
  };

  std::vector<std::string> args;
  const std::string command = find_string("command");
  if (command.empty()) throw std::runtime_error("config echo lacks a command");
  args.push_back(command);
  for (const char* key : {"domain"}) {
    const std::string v = find_string(key);
    if (!v.empty()) args.push_back("--" + std::string(key) + "=" + v);
  }
  for (const char* key : {"n", "r", "grade", "grade_x", "grade_y", "jitter", "seed",
                          "threads", "dense_cap", "t_up", "t_low", "delta", "budget", "j",
                          "levels", "mode"}) {
    std::string v = find_token(key);
    if (v.empty()) continue;
    std::string flag = key;
    for (auto& c : flag)
      if (c == '_') c = '-';
    args.push_back("--" + flag + "=" + v);
  }
  const std::string side = find_string("side");
  if (!side.empty()) args.push_back("--side=" + side);
  const std::string validate_flag = find_token("validate");
  if (validate_flag == "true") args.push_back("--validate");
  const std::string no_crack = find_token("no_crack");
  if (no_crack == "true") args.push_back("--no-crack");
  const std::string tgrid = find_token("t");
  if (!tgrid.empty() && tgrid.front() == '[') {
    std::string list = tgrid.substr(1, tgrid.find(']') - 1);
    for (auto& c : list)
      if (c == ' ') c = '\0';
    std::string clean;
    for (char c : list)
      if (c != '\0') clean += c;
    if (!clean.empty()) args.push_back("--t=" + clean);
  }
  const std::string wlo = find_token("window_lo"), whi = find_token("window_hi");
  if (!wlo.empty() && !whi.empty()) args.push_back("--window=" + wlo + "," + whi);
  return args;
}

int run(int argc, char** argv);

int run_with_args(std::vector<std::string> args) {
  std::vector<char*> argv;
  static std::vector<std::string> storage;
  storage = std::move(args);
  storage.insert(storage.begin(), "mxe");
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, char** argv) {
  CLI::App app{"certified eigenvalue enclosures for the 2D Maxwell cavity"};
  app.require_subcommand(0, 1);

  CommonFlags f;
  double t_up = 0.5, t_low = 1.2, delta = 1e-2;
  int budget = 6, sweep_j = 1, levels = 3, mode = 1;
  double win_lo = 0.5, win_hi = 1.2;
  bool do_validate = false, no_crack = false, raw = false;
  std::string side_name = "lower";
  std::vector<double> sweep_ts;
  std::string config_path;

  app.add_option("--config", config_path, "replay a config echo file");

  auto* mesh_cmd = app.add_subcommand("mesh", "generate and serialize a mesh");
  add_common(mesh_cmd, f, false);
  mesh_cmd->add_flag("--validate", do_validate, "run the invariant checks");

  auto* enclose_cmd = app.add_subcommand("enclose", "run the certified enclosure loop");
  add_common(enclose_cmd, f);
  enclose_cmd->add_option("--t-up", t_up, "shift for the upper bounds");
  enclose_cmd->add_option("--t-low", t_low, "shift for the lower bounds");
  enclose_cmd->add_option("--delta", delta, "target enclosure width");
  enclose_cmd->add_option("--budget", budget, "max uniform refinements");

  auto* sweep_cmd = app.add_subcommand("sweep", "bound vs shift for one eigenvalue");
  add_common(sweep_cmd, f);
  sweep_cmd->add_option("--j", sweep_j, "1-based index into the reference spectrum");
  sweep_cmd->add_option("--side", side_name, "lower|upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  sweep_cmd->add_option("--t", sweep_ts, "shift grid")->delimiter(',');

  auto* conv_cmd = app.add_subcommand("converge", "enclosure-width convergence study");
  add_common(conv_cmd, f);
  conv_cmd->add_option("--levels", levels, "number of nested meshes (>= 3)");
  conv_cmd->add_option("--t-up", t_up, "shift for the upper bounds");
  conv_cmd->add_option("--t-low", t_low, "shift for the lower bounds");

  auto* demo_cmd = app.add_subcommand("demo", "naive Galerkin vs certified enclosures");
  add_common(demo_cmd, f);
  demo_cmd->add_option(
      "--window",
      [&win_lo, &win_hi](const CLI::results_t& res) {
        std::stringstream ss(res[0]);
        char comma = 0;
        return static_cast<bool>(ss >> win_lo >> comma >> win_hi) && comma == ',';
      },
      "window a,b");
  demo_cmd->add_option("--delta", delta, "certified-side tolerance");
  demo_cmd->add_flag("--no-crack", no_crack, "run the naive side on the uncut mesh");

  auto* export_cmd = app.add_subcommand("export-field", "write |E| and H as legacy VTK");
  add_common(export_cmd, f);
  export_cmd->add_option("--mode", mode, "distinct eigenvalue index (square)");
  export_cmd->add_flag("--raw", raw, "skip the max=1 rescaling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitFlags;
  }

  try {
    if (!config_path.empty()) return run_with_args(args_from_config(config_path));
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kExitFlags;
    }
    if (f.threads > 0) set_thread_count(f.threads);

    if (enclose_cmd->parsed()) {
      if (delta <= 0.0) {
        std::cerr << "enclose: --delta must be positive\n" << enclose_cmd->help();
        return kExitFlags;
      }
      if (!(0.0 < t_up && t_up < t_low)) {
        std::cerr << "enclose: need 0 < --t-up < --t-low\n";
        return kExitFlags;
      }
      if (budget < 1) {
        std::cerr << "enclose: --budget must be >= 1\n";
        return kExitFlags;
      }
      return cmd_enclose(f, t_up, t_low, delta, budget);
    }
    if (conv_cmd->parsed()) {
      if (levels < 3) {
        std::cerr << "converge: --levels must be >= 3\n";
        return kExitFlags;
      }
      return cmd_converge(f, levels, t_up, t_low);
    }
    if (mesh_cmd->parsed()) return cmd_mesh(f, do_validate);
    if (sweep_cmd->parsed()) return cmd_sweep(f, sweep_j, side_name, sweep_ts);
    if (demo_cmd->parsed()) return cmd_demo(f, win_lo, win_hi, delta, no_crack);
    if (export_cmd->parsed()) return cmd_export_field(f, mode, raw);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFlags;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
