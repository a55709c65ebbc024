// qdicc: single-point solves, force-plane sweeps and regime maps for the
// Coulomb-coupled double quantum dot.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qdicc/config.hpp"
#include "qdicc/error.hpp"
#include "qdicc/report.hpp"

namespace {

struct Options {
  std::string config;
  std::string out = "-";
  int threads = 0;
  double tol_sign = 1e-10;
};

// Output goes through a buffer so a failing command never leaves a partial
// file behind.
void emit(const Options& opt, const std::string& text) {
  if (opt.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw qdicc::ParseError("cannot open output file `" + opt.out + "`");
  f << text;
  if (!f) throw qdicc::NumericalError("failed writing `" + opt.out + "`");
}

qdicc::ClassifyTolerances tolerances(const Options& opt) {
  if (!(opt.tol_sign >= 0.0)) throw qdicc::ParseError("--tol-sign must be non-negative");
  qdicc::ClassifyTolerances tol;
  tol.tol_sign = opt.tol_sign;
  return tol;
}

int cmd_solve(const Options& opt) {
  const qdicc::Config cfg = qdicc::Config::load(opt.config);
  const qdicc::FixedParams fp = cfg.fixed();
  const auto [fe, fn] = cfg.point();
  const qdicc::PointRecord rec = qdicc::solve_point(fp, fe, fn, tolerances(opt));
  std::ostringstream buf;
  qdicc::write_point(buf, rec);
  emit(opt, buf.str());
  for (const std::string& w : rec.warnings) std::cerr << "warning: " << w << '\n';
  if (rec.status == qdicc::PointStatus::Flagged) {
    std::cerr << "diagnostics out of tolerance: " << rec.message << '\n';
    return qdicc::exit_code(qdicc::ErrorKind::Numerical);
  }
  return 0;
}

int report_failures(const std::vector<qdicc::PointRecord>& rows) {
  size_t bad = 0;
  for (const auto& r : rows)
    if (r.status != qdicc::PointStatus::Ok) ++bad;
  if (bad) std::cerr << bad << " of " << rows.size() << " points not ok; see status column\n";
  return 0;
}

int cmd_sweep(const Options& opt) {
  const qdicc::SweepSpec spec = qdicc::Config::load(opt.config).sweep();
  const auto rows = qdicc::run_sweep(spec, opt.threads, tolerances(opt));
  std::ostringstream buf;
  qdicc::write_csv(buf, rows);
  emit(opt, buf.str());
  return report_failures(rows);
}

int cmd_classify_map(const Options& opt) {
  const qdicc::SweepSpec spec = qdicc::Config::load(opt.config).sweep();
  const auto rows = qdicc::run_sweep(spec, opt.threads, tolerances(opt));
  std::ostringstream buf;
  qdicc::write_regime_map(buf, spec, rows);
  emit(opt, buf.str());
  return report_failures(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state transport and inverse-current regimes of a three-terminal "
               "Coulomb-coupled double quantum dot"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "key = value configuration file")->required();
    sub->add_option("--out", opt.out, "output path, - for stdout");
    sub->add_option("--threads", opt.threads, "worker threads; 1 runs the serial reference, 0 uses all")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tol-sign", opt.tol_sign, "current magnitude treated as zero");
  };
  CLI::App* solve = app.add_subcommand("solve", "solve one parameter point");
  CLI::App* sweep = app.add_subcommand("sweep", "CSV over the (F_E, F_N) grid");
  CLI::App* map = app.add_subcommand("classify-map", "regime code per grid cell");
  for (CLI::App* sub : {solve, sweep, map}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qdicc::exit_code(qdicc::ErrorKind::Parse);
  }

  try {
    if (*solve) return cmd_solve(opt);
    if (*sweep) return cmd_sweep(opt);
    return cmd_classify_map(opt);
  } catch (const qdicc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qdicc::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qdicc::exit_code(qdicc::ErrorKind::Numerical);
  }
}
