// Flat `key = value` configuration files with `#` comments.
//
// Recognised keys: eps_b, eps_u, kappa, kappa_c, kappa_s, beta_r, mu_r, mu_u,
// gamma, F_E, F_N, F_E_min, F_E_max, F_E_steps, F_N_min, F_N_max, F_N_steps,
// setup (icc | thermoelectric | raw), and for the raw setup beta_l, mu_l,
// beta_u.
#pragma once

#include <istream>
#include <map>
#include <string>

#include "qdicc/sweep.hpp"

namespace qdicc {

class Config {
 public:
  /// Throws ParseError on syntax errors, unknown or repeated keys.
  static Config parse(std::istream& in, const std::string& source = "<config>");
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  int integer(const std::string& key) const;
  std::string text(const std::string& key) const;

  /// System, reservoirs and setup. kappa and (kappa_c, kappa_s) are mutually
  /// exclusive. mu_u defaults to mu_r and gamma to 1.
  FixedParams fixed() const;
  /// F_E and F_N of a single point; raw configs need neither.
  std::pair<double, double> point() const;
  SweepSpec sweep() const;

 private:
  std::string source_;
  std::map<std::string, std::string> values_;
};

}  // namespace qdicc
