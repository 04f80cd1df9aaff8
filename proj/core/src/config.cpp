#include "cavitybec/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cavitybec/error.hpp"
#include "cavitybec/sweep.hpp"

namespace cavitybec {

double SweepSpec::value(int i) const {
  if (i == steps - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

ModelParams RunConfig::params_at(double swept) const {
  const double u = sweep.axis == SweepAxis::U ? swept : fixed_coupling;
  const double y = sweep.axis == SweepAxis::Y ? swept : fixed_coupling;
  return ModelParams::make(omega_R, delta_C, u, y, n_cutoff);
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::MalformedConfig, msg); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Entry {
  std::string value;
  int line = 0;
};

double as_double(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  if (!e.value.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    fail("line " + std::to_string(e.line) + ": field '" + key + "' expects a finite number, got '" +
         e.value + "'");
  return v;
}

int as_int(const std::string& key, const Entry& e) {
  int v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    fail("line " + std::to_string(e.line) + ": field '" + key + "' expects an integer, got '" +
         e.value + "'");
  return v;
}

const std::set<std::string> kTopKeys = {"omega_R", "delta_C", "u",        "y",       "n_cutoff",
                                        "N_c",     "output",  "tol",      "max_iter", "damping",
                                        "seed_alpha"};
const std::set<std::string> kSweepKeys = {"axis", "start", "stop", "steps"};

}  // namespace

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> top;
  std::map<std::string, Entry> sweep;
  bool in_sweep = false;
  bool saw_sweep = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view sv(raw);
    if (const auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    const std::string line = trim(sv);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (line.front() == '[') {
      if (line.back() != ']') fail(where + "unterminated section header '" + line + "'");
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name != "sweep") fail(where + "unknown section '" + name + "'");
      if (saw_sweep) fail(where + "duplicate [sweep] section");
      in_sweep = saw_sweep = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(where + "expected 'key = value', got '" + line + "'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) fail(where + "missing key");
    if (value.empty()) fail(where + "missing value for '" + key + "'");

    auto& target = in_sweep ? sweep : top;
    const auto& allowed = in_sweep ? kSweepKeys : kTopKeys;
    if (!allowed.count(key))
      fail(where + "unknown key '" + key + "'" + (in_sweep ? " in [sweep]" : ""));
    if (target.count(key)) fail(where + "duplicate key '" + key + "'");
    target[key] = Entry{value, line_no};
  }

  if (!saw_sweep) fail("missing [sweep] section");
  for (const char* k : {"axis", "start", "stop", "steps"})
    if (!sweep.count(k)) fail("[sweep] is missing required field '" + std::string(k) + "'");

  RunConfig cfg;
  const Entry& axis = sweep.at("axis");
  if (axis.value == "y") {
    cfg.sweep.axis = SweepAxis::Y;
  } else if (axis.value == "u") {
    cfg.sweep.axis = SweepAxis::U;
  } else {
    fail("line " + std::to_string(axis.line) + ": field 'axis' must be 'y' or 'u', got '" +
         axis.value + "'");
  }
  const std::string swept = cfg.sweep.axis == SweepAxis::Y ? "y" : "u";
  const std::string fixed = cfg.sweep.axis == SweepAxis::Y ? "u" : "y";
  if (top.count(swept))
    fail("line " + std::to_string(top.at(swept).line) + ": field '" + swept +
         "' is the swept axis and must not be set");
  for (const std::string k : {"omega_R", "delta_C", "n_cutoff", fixed.c_str()})
    if (!top.count(k)) fail("missing required field '" + k + "'");

  cfg.omega_R = as_double("omega_R", top.at("omega_R"));
  cfg.delta_C = as_double("delta_C", top.at("delta_C"));
  cfg.n_cutoff = as_int("n_cutoff", top.at("n_cutoff"));
  cfg.fixed_coupling = as_double(fixed, top.at(fixed));
  cfg.sweep.start = as_double("start", sweep.at("start"));
  cfg.sweep.stop = as_double("stop", sweep.at("stop"));
  cfg.sweep.steps = as_int("steps", sweep.at("steps"));
  if (top.count("N_c")) cfg.N_c = as_double("N_c", top.at("N_c"));
  if (top.count("output")) cfg.output = top.at("output").value;
  if (top.count("tol")) cfg.solver.tol = as_double("tol", top.at("tol"));
  if (top.count("max_iter")) cfg.solver.max_iter = as_int("max_iter", top.at("max_iter"));
  if (top.count("damping")) cfg.solver.damping = as_double("damping", top.at("damping"));
  if (top.count("seed_alpha")) cfg.solver.seed_alpha = as_double("seed_alpha", top.at("seed_alpha"));

  if (cfg.sweep.steps < 2) fail("field 'steps' must be at least 2");
  if (cfg.sweep.start == cfg.sweep.stop) fail("fields 'start' and 'stop' must differ");
  if (!(cfg.omega_R > 0.0)) fail("field 'omega_R' must be positive");
  if (cfg.n_cutoff < 2) fail("field 'n_cutoff' must be at least 2");
  if (cfg.N_c && !(*cfg.N_c > 0.0)) fail("field 'N_c' must be positive");
  if (!(cfg.solver.tol > 0.0)) fail("field 'tol' must be positive");
  if (cfg.solver.max_iter < 1) fail("field 'max_iter' must be positive");
  if (!(cfg.solver.damping > 0.0 && cfg.solver.damping <= 1.0))
    fail("field 'damping' must lie in (0, 1]");
  if (cfg.solver.seed_alpha == 0.0) fail("field 'seed_alpha' must be nonzero");
  const double y_min = cfg.sweep.axis == SweepAxis::Y ? std::min(cfg.sweep.start, cfg.sweep.stop)
                                                      : cfg.fixed_coupling;
  if (y_min < 0.0) fail("pump strength y must be nonnegative");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedConfig, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string RunConfig::echo() const {
  std::ostringstream os;
  os << "omega_R=" << shortest(omega_R) << " delta_C=" << shortest(delta_C);
  os << (sweep.axis == SweepAxis::Y ? " u=" : " y=") << shortest(fixed_coupling);
  os << " n_cutoff=" << n_cutoff;
  os << " N_c=" << (N_c ? shortest(*N_c) : std::string("none"));
  os << " output=" << (output.empty() ? std::string("none") : output);
  os << " tol=" << shortest(solver.tol) << " max_iter=" << solver.max_iter
     << " damping=" << shortest(solver.damping) << " seed_alpha=" << shortest(solver.seed_alpha);
  os << " sweep.axis=" << (sweep.axis == SweepAxis::Y ? "y" : "u")
     << " sweep.start=" << shortest(sweep.start) << " sweep.stop=" << shortest(sweep.stop)
     << " sweep.steps=" << sweep.steps;
  return os.str();
}

}  // namespace cavitybec
