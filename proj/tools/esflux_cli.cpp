#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "esflux/checks.hpp"
#include "esflux/experiments.hpp"
#include "esflux/plot.hpp"
#include "esflux/scheme2d.hpp"

#ifndef ESFLUX_VERSION
#define ESFLUX_VERSION "dev"
#endif

namespace fs = std::filesystem;
using namespace esflux;

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

struct Options {
  std::string out = "out";
  bool svg = false;

  int p = 0;
  int q = 0;
  std::vector<int> n;
  double cfl = 0.0;
  double t_end = 0.0;
  std::string alpha = "none";
  double alpha_const = 0.0;
  std::vector<double> times;

  std::string format = "both";
  int n_ref = 16384;
  std::string cache = "reference_cache";
};

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  f << std::setprecision(17);
  return f;
}

fs::path prepare_out(const Options& o) {
  fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_manifest(const CLI::App& sub, const fs::path& dir) {
  auto f = open_out(dir / "manifest.ini");
  f << "; esflux " << ESFLUX_VERSION << "\n"
    << "; rerun with: esflux --config " << (dir / "manifest.ini").string() << "\n"
    << "[" << sub.get_name() << "]\n"
    << sub.config_to_str(true, false);
}

int resolve_q(int p, int q) {
  if (q == 0) q = 2 * p - 1;
  if (q < 1 || q > 2 * p - 1) {
    throw ConfigError("--q = " + std::to_string(q) + " must lie in [1, 2p-1] = [1, " +
                      std::to_string(2 * p - 1) + "]");
  }
  return q;
}

AlphaProvider make_alpha(const Options& o) {
  if (o.alpha == "const") return AlphaProvider::constant(o.alpha_const);
  if (o.alpha == "jump") return AlphaProvider::jump_sensor();
  return AlphaProvider::constant(0.0);
}

std::string time_tag(double t) {
  std::ostringstream s;
  s << t;
  return s.str();
}

// ---------------------------------------------------------------------------

int cmd_matrices(const Options& o) {
  const int q = resolve_q(o.p, o.q);
  const auto dir = prepare_out(o);
  const auto fam = boundary_matrices(o.p, q);
  const std::string stem = "A_p" + std::to_string(o.p) + "_q" + std::to_string(q);
  std::ofstream tex;
  if (o.format != "csv") tex = open_out(dir / (stem + ".tex"));
  for (int idx = -o.p; idx <= o.p; ++idx) {
    if (o.format != "latex") {
      auto f = open_out(dir / (stem + "_" + std::to_string(idx) + ".csv"));
      f << to_csv(fam[idx]);
    }
    if (tex.is_open()) tex << to_latex(fam[idx]) << "\n\n";
  }
  auto c = open_out(dir / (stem + "_conditions.csv"));
  c << "step,condition\n";
  const auto& cond = fam.condition_numbers();
  for (std::size_t s = 0; s < cond.size(); ++s) c << s + 1 << ',' << cond[s] << '\n';

  auto g = open_out(dir / "condition_growth.csv");
  g << "p,max_condition\n";
  std::cout << "max construction condition number (q = 2p-1):\n";
  for (int pp = 1; pp <= std::max(o.p, 4); ++pp) {
    const double k = construction_condition_number(pp);
    g << pp << ',' << k << '\n';
    std::cout << "  p=" << pp << "  " << std::scientific << std::setprecision(3) << k << '\n';
  }
  std::cout << "wrote " << 2 * o.p + 1 << " matrices A^{" << o.p << ",-" << o.p << ".." << o.p
            << "} (q=" << q << ") to " << dir.string() << '\n';
  return 0;
}

int cmd_burgers_bc(const Options& o) {
  const int q = resolve_q(o.p, o.q);
  const auto dir = prepare_out(o);
  const auto prob = burgers_bc_problem();
  ScalarRunConfig cfg;
  cfg.p = o.p;
  cfg.q = q;
  cfg.n = o.n.empty() ? 100 : o.n.front();
  cfg.cfl = o.cfl;
  cfg.t_end = o.t_end;
  cfg.alpha = make_alpha(o);
  cfg.dissipative = o.alpha != "none";
  cfg.sample_times = o.times;
  if (cfg.sample_times.empty()) {
    for (int t = 0; t <= static_cast<int>(std::floor(o.t_end)); ++t) cfg.sample_times.push_back(t);
  }
  const auto run = run_scalar_problem(prob, cfg);

  auto snaps = open_out(dir / "snapshots.csv");
  snaps << "t,x,u\n";
  for (const auto& s : run.snapshots) {
    for (std::size_t k = 0; k < s.x.size(); ++k) snaps << s.t << ',' << s.x[k] << ',' << s.u[k] << '\n';
  }
  auto ent = open_out(dir / "entropy.csv");
  write_entropy_csv(ent, run.entropy);

  double worst = 0.0;
  for (const auto& e : run.entropy) worst = std::max(worst, e.max_abs / e.scale);
  std::cout << "steps " << run.steps << ", max |entropy residual|/scale " << std::scientific
            << std::setprecision(3) << worst << '\n';

  if (o.svg) {
    std::vector<Series> profiles;
    for (const auto& s : run.snapshots) profiles.push_back({"t=" + time_tag(s.t), s.x, s.u, false});
    write_line_plot(dir / "snapshots.svg", profiles, {"Burgers with boundary data", "x", "u"});
    Series r{"max |r|", {}, {}, false};
    for (const auto& e : run.entropy) {
      r.x.push_back(e.t);
      r.y.push_back(std::max(e.max_abs, 1e-300));
    }
    write_line_plot(dir / "entropy.svg", {r}, {"Entropy residual", "t", "max |r|", false, true});
  }
  return 0;
}

int cmd_converge(const Options& o) {
  const int q = resolve_q(o.p, o.q);
  const auto dir = prepare_out(o);
  if (o.n_ref < 64) throw ConfigError("--n-ref must be at least 64");
  const auto prob = pulse_problem();
  ConvergenceConfig cfg;
  cfg.p = o.p;
  cfg.q = q;
  if (!o.n.empty()) cfg.sizes = o.n;
  cfg.t_end = o.t_end;
  cfg.cfl_scale = o.cfl;
  cfg.n_reference = o.n_ref;
  ReferenceOptions ro;
  ro.cache_dir = o.cache;
  std::cout << "reference: ENO2 N=" << o.n_ref << " (cache " << o.cache << ")" << std::endl;
  const auto ref = reference_solution(prob, o.n_ref, o.t_end, ro);
  auto table = run_convergence(prob, cfg, ref, [](int n, const ErrorNorms& e) {
    std::cout << "  N=" << std::setw(4) << n << "  L1 " << std::scientific << std::setprecision(4)
              << e.l1 << std::endl;
  });
  table.metadata["cfl_scale"] = std::to_string(o.cfl);
  const std::string stem = "convergence_p" + std::to_string(o.p) + "_q" + std::to_string(q);
  auto f = open_out(dir / (stem + ".csv"));
  write_convergence_csv(f, table);
  if (table.rows.size() >= 2) {
    std::cout << "global L1 EOC " << std::fixed << std::setprecision(3) << eoc(table).global
              << '\n';
  }
  if (o.svg) write_convergence_plot(dir / (stem + ".svg"), {{"p=" + std::to_string(o.p), table}});
  return 0;
}

int cmd_ffs(const Options& o) {
  const int q = resolve_q(o.p, o.q);
  const auto dir = prepare_out(o);
  FfsConfig cfg;
  cfg.ny = o.n.empty() ? 80 : o.n.front();
  cfg.nx = 3 * cfg.ny;
  cfg.p = o.p;
  cfg.q = q;
  cfg.cfl = o.cfl;
  cfg.t_end = o.t_end;
  cfg.alpha = make_alpha(o);
  cfg.snapshot_times = o.times;
  if (o.alpha == "none") cfg.alpha = AlphaProvider::constant(0.0);
  const auto r = run_ffs(cfg, [](const StepInfo& s) {
    if (s.step % 500 == 0) std::cout << "  step " << s.step << "  t=" << s.t << std::endl;
  });

  auto emit = [&](double t, const std::vector<EulerState>& field) {
    const std::string tag = time_tag(t);
    auto f = open_out(dir / ("field_t" + tag + ".csv"));
    write_field_csv(f, r.grid, field);
    if (o.svg) {
      const auto rho = density_field(r.grid, field);
      write_contour_plot(dir / ("density_t" + tag + ".svg"), rho, contour_levels(rho, 30),
                         "density, t = " + tag);
      const auto p = pressure_field(r.grid, field);
      write_contour_plot(dir / ("pressure_t" + tag + ".svg"), p, contour_levels(p, 30),
                         "pressure, t = " + tag);
    }
  };
  bool final_written = false;
  for (const auto& s : r.snapshots) {
    emit(s.t, s.field);
    final_written = final_written || s.t == r.t;
  }
  if (!final_written) emit(r.t, r.field);
  std::cout << "steps " << r.steps << ", min rho " << r.min_density << ", min p "
            << r.min_pressure << ", max rho upstream of the step "
            << max_density_upstream(r.grid, r.field, 0.6) << '\n';
  return 0;
}

int cmd_check() {
  bool ok = true;
  for (const auto& r : run_all_checks()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : kNumericalError;
}

void order_flags(CLI::App* sub, Options& o, int p) {
  o.p = p;
  sub->add_option("--p", o.p, "half stencil width p (interior order 2p)")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  sub->add_option("--q", o.q, "boundary order, 0 selects 2p-1")->capture_default_str();
  sub->add_option("--out", o.out, "output directory")->capture_default_str();
  sub->configurable();
}

void run_flags(CLI::App* sub, Options& o, double cfl, double t_end) {
  o.cfl = cfl;
  o.t_end = t_end;
  sub->add_option("--cfl", o.cfl, "CFL number")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--tend", o.t_end, "end time")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_flag("--svg", o.svg, "also write SVG plots");
}

void alpha_flags(CLI::App* sub, Options& o, const std::string& def) {
  o.alpha = def;
  sub->add_option("--alpha", o.alpha, "dissipation steering: none, const or jump")
      ->check(CLI::IsMember({"none", "const", "jump"}))
      ->capture_default_str();
  sub->add_option("--alpha-const", o.alpha_const, "blend weight for --alpha const")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy conservative and entropy stable flux experiments"};
  app.set_version_flag("--version", std::string("esflux ") + ESFLUX_VERSION);
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.set_config("--config", "", "read options from an INI file (sections per subcommand)");
  app.require_subcommand(1);

  Options mat, bbc, conv, ffs;

  auto* m = app.add_subcommand("matrices", "export the boundary matrix family A^{p,-p..p}");
  order_flags(m, mat, 2);
  m->add_option("--format", mat.format, "csv, latex or both")
      ->check(CLI::IsMember({"csv", "latex", "both"}))
      ->capture_default_str();
  m->footer(
      "Files: A_p<p>_q<q>_<idx>.csv with rows row_offset,col_offset,numerator,denominator;\n"
      "A_p<p>_q<q>.tex; A_p<p>_q<q>_conditions.csv (step,condition);\n"
      "condition_growth.csv (p,max_condition).");

  auto* b = app.add_subcommand("burgers-bc", "Burgers on [-10,10] with time dependent boundary data");
  order_flags(b, bbc, 3);
  run_flags(b, bbc, 0.25, 10.0);
  alpha_flags(b, bbc, "none");
  b->add_option("--n", bbc.n, "number of grid points")->expected(1)->capture_default_str();
  b->add_option("--times", bbc.times, "sample times (default 0,1,...,tend)")->delimiter(',');
  b->footer(
      "Files: snapshots.csv (t,x,u); entropy.csv "
      "(t,max_abs_residual,max_positive_residual,total_entropy,scale).");

  auto* c = app.add_subcommand("converge", "convergence study on the pulse problem");
  order_flags(c, conv, 2);
  run_flags(c, conv, 0.5, 10.0);
  c->get_option("--cfl")->description("CFL scale s, the run uses cfl = s*64/N");
  c->add_option("--n", conv.n, "grid sizes (default 64,78,96,116,142,172,210,256)")
      ->delimiter(',');
  c->add_option("--n-ref", conv.n_ref, "reference grid size")->capture_default_str();
  c->add_option("--cache", conv.cache, "reference cache directory")->capture_default_str();
  c->footer(
      "Files: convergence_p<p>_q<q>.csv: '# key=value' metadata lines, then\n"
      "n,l1,l2,linf,eoc_l1,eoc_l2,eoc_linf and a final 'global' row of least-squares orders.");

  auto* f = app.add_subcommand("ffs", "forward facing step, Mach 3");
  order_flags(f, ffs, 2);
  run_flags(f, ffs, 0.3, 3.0);
  alpha_flags(f, ffs, "jump");
  f->add_option("--n", ffs.n, "cells across the channel height ny (nx = 3 ny)")->expected(1);
  f->add_option("--times", ffs.times, "snapshot times (the final field is always written)")
      ->delimiter(',');
  f->footer(
      "Files: field_t<t>.csv with i,j,x,y,solid,rho,vx,vy,p for all nx*ny cells\n"
      "(primitive columns empty in the step); density/pressure_t<t>.svg with --svg.");

  auto* k = app.add_subcommand("check", "run the property suites");
  k->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    auto run = [&](CLI::App* sub, Options& o, int (*fn)(const Options&)) {
      const int rc = fn(o);
      write_manifest(*sub, fs::path(o.out));
      return rc;
    };
    if (*m) return run(m, mat, cmd_matrices);
    if (*b) return run(b, bbc, cmd_burgers_bc);
    if (*c) return run(c, conv, cmd_converge);
    if (*f) return run(f, ffs, cmd_ffs);
    if (*k) return cmd_check();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidOrder& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const GridTooSmall& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const MisalignedStep& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
