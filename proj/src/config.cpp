#include "qdicc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "eps_b",   "eps_u",   "kappa",     "kappa_c", "kappa_s", "beta_r",    "mu_r",
      "mu_u",    "gamma",   "F_E",       "F_N",     "F_E_min", "F_E_max",   "F_E_steps",
      "F_N_min", "F_N_max", "F_N_steps", "setup",   "beta_l",  "mu_l",      "beta_u"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Physics errors raised while building parameters keep their kind; only the
// message gains the config source.
template <typename F>
auto with_source(const std::string& source, F&& f) {
  try {
    return f();
  } catch (const PhysicsError& e) {
    throw PhysicsError(source + ": " + e.what());
  }
}

}  // namespace

Config Config::parse(std::istream& in, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    auto fail = [&](const std::string& why) {
      std::ostringstream msg;
      msg << source << ":" << lineno << ": " << why;
      throw ParseError(msg.str());
    };
    if (eq == std::string::npos) fail("expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("missing key");
    if (value.empty()) fail("missing value for `" + key + "`");
    if (!known_keys().count(key)) fail("unknown key `" + key + "`");
    if (!cfg.values_.emplace(key, value).second) fail("duplicate key `" + key + "`");
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file `" + path + "`");
  return parse(in, path);
}

std::string Config::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ParseError(source_ + ": missing required key `" + key + "`");
  return it->second;
}

double Config::number(const std::string& key) const {
  const std::string v = text(key);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ParseError(source_ + ": `" + key + "` is not a finite number: " + v);
  return out;
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int Config::integer(const std::string& key) const {
  const std::string v = text(key);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(source_ + ": `" + key + "` is not an integer: " + v);
  return out;
}

FixedParams Config::fixed() const {
  FixedParams fp;
  if (has("setup")) {
    const std::string s = text("setup");
    if (s == "icc") fp.setup = Setup::Icc;
    else if (s == "thermoelectric") fp.setup = Setup::Thermoelectric;
    else if (s == "raw") fp.setup = Setup::Raw;
    else throw ParseError(source_ + ": setup must be icc, thermoelectric or raw, got " + s);
  }

  const double eps_b = number("eps_b");
  const double eps_u = number("eps_u");
  const bool direct = has("kappa");
  const bool parts = has("kappa_c") || has("kappa_s");
  if (direct && parts)
    throw ParseError(source_ + ": give either kappa or kappa_c/kappa_s, not both");
  if (!direct && !parts) throw ParseError(source_ + ": missing kappa (or kappa_c/kappa_s)");
  fp.sys = with_source(source_, [&] {
    return direct ? SystemParams::from_kappa(eps_b, eps_u, number("kappa"))
                  : SystemParams::from_components(eps_b, eps_u, number_or("kappa_c", 0.0),
                                                  number_or("kappa_s", 0.0));
  });

  fp.beta_r = number("beta_r");
  fp.mu_r = number("mu_r");
  fp.mu_u = number_or("mu_u", fp.mu_r);
  fp.gamma = number_or("gamma", 1.0);

  const bool raw_keys = has("beta_l") || has("mu_l") || has("beta_u");
  if (fp.setup == Setup::Raw) {
    fp.beta_l = number("beta_l");
    fp.mu_l = number("mu_l");
    fp.beta_u = number("beta_u");
  } else if (raw_keys) {
    throw ParseError(source_ + ": beta_l, mu_l and beta_u are only valid with setup = raw");
  }
  return fp;
}

std::pair<double, double> Config::point() const {
  if (fixed().setup == Setup::Raw) return {number_or("F_E", 0.0), number_or("F_N", 0.0)};
  return {number("F_E"), number("F_N")};
}

SweepSpec Config::sweep() const {
  SweepSpec spec;
  spec.fixed = fixed();
  spec.F_E = {number("F_E_min"), number("F_E_max"), integer("F_E_steps")};
  spec.F_N = {number("F_N_min"), number("F_N_max"), integer("F_N_steps")};
  with_source(source_, [&] {
    validate(spec);
    return 0;
  });
  return spec;
}

}  // namespace qdicc
