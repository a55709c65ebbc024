#include "qdicc/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

double Axis::value(int i) const {
  if (i == steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const SweepSpec& spec) {
  if (spec.fixed.setup == Setup::Raw)
    throw ParseError("raw setup has no force plane to sweep; use icc or thermoelectric");
  if (spec.F_E.steps < 2 || spec.F_N.steps < 2)
    throw ParseError("sweep axes need at least 2 steps each");
  const double lowest = std::min(spec.F_E.min, spec.F_E.max);
  if (spec.fixed.setup == Setup::Icc && !(spec.fixed.beta_r + lowest > 0.0)) {
    std::ostringstream msg;
    msg << "beta_r + F_E_min must be positive (got " << spec.fixed.beta_r + lowest << ")";
    throw PhysicsError(msg.str());
  }
  if (spec.fixed.setup == Setup::Thermoelectric) {
    const double highest = std::max(spec.F_E.min, spec.F_E.max);
    if (!(spec.fixed.beta_r - highest > 0.0))
      throw PhysicsError("beta - F_E_max must be positive in the thermoelectric setup");
  }
}

std::vector<PointRecord> sweep_serial(const SweepSpec& spec, ClassifyTolerances tol) {
  validate(spec);
  std::vector<PointRecord> out;
  out.reserve(spec.size());
  for (int i = 0; i < spec.F_E.steps; ++i)
    for (int j = 0; j < spec.F_N.steps; ++j)
      out.push_back(solve_point_recorded(spec.fixed, spec.F_E.value(i), spec.F_N.value(j), tol));
  return out;
}

std::vector<PointRecord> sweep_parallel(const SweepSpec& spec, int threads,
                                        ClassifyTolerances tol) {
  validate(spec);
  const long n_fn = spec.F_N.steps;
  const long total = static_cast<long>(spec.size());
  std::vector<PointRecord> out(spec.size());
  const int n_threads = threads > 0 ? threads : omp_get_max_threads();
  // Each worker writes only its own slot, so the merged order is fixed.
#pragma omp parallel for schedule(dynamic, 16) num_threads(n_threads)
  for (long k = 0; k < total; ++k) {
    const int i = static_cast<int>(k / n_fn);
    const int j = static_cast<int>(k % n_fn);
    out[static_cast<size_t>(k)] =
        solve_point_recorded(spec.fixed, spec.F_E.value(i), spec.F_N.value(j), tol);
  }
  return out;
}

std::vector<PointRecord> run_sweep(const SweepSpec& spec, int threads, ClassifyTolerances tol) {
  if (threads == 1) return sweep_serial(spec, tol);
  return sweep_parallel(spec, threads, tol);
}

}  // namespace qdicc
