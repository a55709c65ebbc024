// Two-dimensional sweeps over the force plane. The serial version is the
// reference; the OpenMP version must return identical records.
#pragma once

#include <vector>

#include "qdicc/point.hpp"

namespace qdicc {

struct Axis {
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
  /// Evenly spaced, both ends included.
  double value(int i) const;
};

struct SweepSpec {
  FixedParams fixed;
  Axis F_E;
  Axis F_N;
  size_t size() const { return static_cast<size_t>(F_E.steps) * static_cast<size_t>(F_N.steps); }
};

/// Throws ParseError for fewer than two steps per axis or a raw setup, and
/// PhysicsError when the lower end of the F_E axis cannot be inverted.
void validate(const SweepSpec& spec);

/// Row-major records: F_E outer, F_N inner.
std::vector<PointRecord> sweep_serial(const SweepSpec& spec, ClassifyTolerances tol = {});

/// Same output as sweep_serial, computed by `threads` OpenMP workers
/// (0 = runtime default).
std::vector<PointRecord> sweep_parallel(const SweepSpec& spec, int threads,
                                        ClassifyTolerances tol = {});

/// Dispatches to the serial reference when threads == 1.
std::vector<PointRecord> run_sweep(const SweepSpec& spec, int threads,
                                   ClassifyTolerances tol = {});

}  // namespace qdicc
