#include "qdicc/report.hpp"

#include <cmath>
#include <cstdio>

namespace qdicc {

namespace {

constexpr int kUnclassifiedCode = 8;
constexpr int kFailedCode = 9;

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : "NA";
}

bool failed(const PointRecord& rec) {
  return rec.status == PointStatus::PhysicsError || rec.status == PointStatus::NumericalError;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string regime_label(const PointRecord& rec) {
  if (failed(rec)) return "NA";
  return rec.regime ? std::string(name(*rec.regime)) : "Unclassified";
}

std::string csv_row(const PointRecord& rec) {
  const CurrentSet& c = rec.currents;
  std::string row;
  auto put = [&](const std::string& field) {
    if (!row.empty()) row += ',';
    row += field;
  };
  for (double x : {rec.F_E, rec.F_N, rec.beta, rec.mu_l}) put(format_number(x));
  for (const auto* arr : {&c.J_E, &c.J_N, &c.J_Q})
    for (double x : *arr) put(format_number(x));
  for (double x : {rec.gamma_cw, rec.X, rec.Y, rec.M, rec.N}) put(format_number(x));
  put(format_optional(rec.PQ));
  put(format_number(rec.sigma_macro));
  put(format_number(rec.sigma_micro));
  put(regime_label(rec));
  put(format_optional(rec.cop));
  put(format_optional(rec.eta));
  put(format_number(rec.res_JE));
  put(format_number(rec.res_JN));
  put(std::string(name(rec.status)));
  return row;
}

void write_csv(std::ostream& out, const std::vector<PointRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const PointRecord& rec : rows) out << csv_row(rec) << '\n';
}

void write_point(std::ostream& out, const PointRecord& rec) {
  const std::string header = kCsvHeader;
  const std::string row = csv_row(rec);
  size_t hpos = 0;
  size_t rpos = 0;
  while (hpos != std::string::npos) {
    const size_t hnext = header.find(',', hpos);
    const size_t rnext = row.find(',', rpos);
    out << header.substr(hpos, hnext == std::string::npos ? hnext : hnext - hpos) << " = "
        << row.substr(rpos, rnext == std::string::npos ? rnext : rnext - rpos) << '\n';
    hpos = hnext == std::string::npos ? hnext : hnext + 1;
    rpos = rnext == std::string::npos ? rnext : rnext + 1;
  }
  out << "F_E_u = " << format_number(rec.forces.F_E_u) << '\n';
  out << "F_E_r = " << format_number(rec.forces.F_E_r) << '\n';
  out << "F_N_r = " << format_number(rec.forces.F_N_r) << '\n';
  out << "phi_micro = " << format_number(rec.phi_micro) << '\n';
  out << "res_JN_u = " << format_number(rec.JN_u) << '\n';
  out << "cycle_deviation = " << format_number(rec.cycle_deviation) << '\n';
  if (!rec.message.empty()) out << "message = " << rec.message << '\n';
  for (const std::string& w : rec.warnings) out << "warning = " << w << '\n';
}

int regime_code(const PointRecord& rec) {
  if (failed(rec)) return kFailedCode;
  if (!rec.regime) return kUnclassifiedCode;
  return static_cast<int>(*rec.regime);
}

void write_regime_map(std::ostream& out, const SweepSpec& spec,
                      const std::vector<PointRecord>& rows) {
  out << "# regime map: rows F_E from " << format_number(spec.F_E.min) << " to "
      << format_number(spec.F_E.max) << " (" << spec.F_E.steps << " steps), columns F_N from "
      << format_number(spec.F_N.min) << " to " << format_number(spec.F_N.max) << " ("
      << spec.F_N.steps << " steps)\n";
  for (int r = 0; r <= static_cast<int>(Regime::IccParticle); ++r)
    out << "# " << r << " " << name(static_cast<Regime>(r)) << '\n';
  out << "# " << kUnclassifiedCode << " Unclassified\n";
  out << "# " << kFailedCode << " Failed\n";
  size_t k = 0;
  for (int i = 0; i < spec.F_E.steps; ++i) {
    for (int j = 0; j < spec.F_N.steps; ++j, ++k) {
      if (j) out << ' ';
      out << regime_code(rows[k]);
    }
    out << '\n';
  }
}

}  // namespace qdicc
