#include "mtc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace mtc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw ConfigError("config: " + key + ": " + why);
}

double as_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    bad(key, "expected a number, got '" + v + "'");
  }
}

int as_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    bad(key, "expected an integer, got '" + v + "'");
  }
}

bool as_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad(key, "expected true or false, got '" + v + "'");
}

std::vector<double> as_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) bad(key, "empty list element");
    out.push_back(as_double(key, item));
  }
  if (out.empty()) bad(key, "expected a comma-separated list");
  return out;
}

// Published defaults per example; everything else in RunConfig keeps its
// constructor value.
void apply_example_defaults(RunConfig& c) {
  switch (c.example) {
    case 0:
      break;
    case 1:
    case 2:
      c.params = {1.0, 1.0, 1.0, 1.0};
      c.p = 64;
      c.stepper.tau = 2e-2;
      c.stepper.T = 2.0;
      c.initial.kind = c.example == 1 ? InitialSpec::Kind::LorentzianEven
                                      : InitialSpec::Kind::LorentzianOdd;
      c.initial.r = {2.0, 1.0, 3.0};
      c.initial.a = {1.0, 1.0, 2.0};
      c.initial.x0 = {-1.0, 1.0, 0.0};
      c.initial.c = {1.0, -2.0, 0.0};
      c.initial.forced = true;
      break;
    case 3:
    case 4:
      c.params = {0.0, 0.0, -1.0, -3.0};
      c.p = 64;
      c.stepper.tau = 1e-2;
      c.stepper.T = 5.0;
      c.initial.kind = InitialSpec::Kind::Soliton;
      if (c.example == 3) {
        c.initial.v = {1.5, 0.5};
        c.initial.phase = {-3.0, 0.0};
      } else {
        c.initial.v = {1.0, 1.0, 0.5};
        c.initial.phase = {-4.0, -2.0, 0.0};
      }
      break;
    case 5:
    case 6:
      c.params = {1.0, 0.0, 1.0, 1.0};  // beta derived from sigma downstream
      c.p = 2048;
      c.stepper.tau = 2e-2;
      c.stepper.T = 80.0;
      c.tw_sigma = 0.95;
      c.tw_c = c.example == 5 ? 0.5 : 0.75;
      break;
    default:
      bad("example", "must be 1..6");
  }
}

void validate(const RunConfig& c) {
  if (c.p < 1) bad("grid.p", "must be >= 1");
  if (!(c.ell > 0.0)) bad("grid.ell", "must be > 0");
  if (!(c.stepper.tau > 0.0)) bad("stepper.tau", "must be > 0");
  if (!(c.stepper.T >= 0.0)) bad("stepper.T", "must be >= 0");
  if (c.stepper.tau > c.stepper.T && c.stepper.T > 0.0)
    bad("stepper.tau", "must not exceed stepper.T");
  if (!(c.stepper.fp_tol > 0.0)) bad("stepper.fp_tol", "must be > 0");
  if (c.stepper.fp_max_iters < 1) bad("stepper.fp_max_iters", "must be >= 1");
  if (c.stepper.snapshot_stride < 1)
    bad("stepper.snapshot_stride", "must be >= 1");
  if (c.refine < 2) bad("output.refine", "must be >= 2");
  if (!(c.tw_sigma >= 0.0 && c.tw_sigma < 1.0))
    bad("travelwave.sigma", "must be in [0, 1)");
  if (c.tw_stages < 1) bad("travelwave.stages", "must be >= 1");
  if (c.tw_newton_max_iters < 1)
    bad("travelwave.newton_max_iters", "must be >= 1");

  const auto& in = c.initial;
  if (in.kind == InitialSpec::Kind::LorentzianEven ||
      in.kind == InitialSpec::Kind::LorentzianOdd) {
    const size_t nb = in.r.size();
    if (nb == 0) bad("initial.r", "Lorentzian family needs at least one bump");
    if (in.a.size() != nb || in.x0.size() != nb || in.c.size() != nb)
      bad("initial.a", "bump lists r, a, x0, c must have equal length");
    for (double a : in.a)
      if (!(a > 0.0)) bad("initial.a", "bump widths must be > 0");
  } else if (in.kind == InitialSpec::Kind::Soliton) {
    if (in.v.empty()) bad("initial.v", "soliton family needs speeds");
    if (in.phase.size() != in.v.size())
      bad("initial.phase", "must match the length of initial.v");
    for (double v : in.v)
      if (!(v > 0.0)) bad("initial.v", "soliton speeds must be > 0");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("config: line " + std::to_string(lineno) +
                        ": empty key or value");
    if (kv.count(key)) bad(key, "duplicate key");
    kv[key] = val;
    order.push_back(key);
  }

  RunConfig c;
  if (auto it = kv.find("example"); it != kv.end()) {
    c.example = as_int("example", it->second);
    apply_example_defaults(c);
  }

  for (const std::string& key : order) {
    const std::string& v = kv[key];
    if (key == "example") {
      // consumed above
    } else if (key == "equation.alpha") {
      c.params.alpha = as_double(key, v);
    } else if (key == "equation.beta") {
      c.params.beta = as_double(key, v);
    } else if (key == "equation.gamma") {
      c.params.gamma = as_double(key, v);
    } else if (key == "equation.delta") {
      c.params.delta = as_double(key, v);
    } else if (key == "grid.p") {
      c.p = as_int(key, v);
    } else if (key == "grid.ell") {
      c.ell = as_double(key, v);
    } else if (key == "stepper.tau") {
      c.stepper.tau = as_double(key, v);
    } else if (key == "stepper.T") {
      c.stepper.T = as_double(key, v);
    } else if (key == "stepper.fp_tol") {
      c.stepper.fp_tol = as_double(key, v);
    } else if (key == "stepper.fp_max_iters") {
      c.stepper.fp_max_iters = as_int(key, v);
    } else if (key == "stepper.snapshot_stride") {
      c.stepper.snapshot_stride = as_int(key, v);
    } else if (key == "output.refine") {
      c.refine = as_int(key, v);
    } else if (key == "travelwave.c") {
      c.tw_c = as_double(key, v);
    } else if (key == "travelwave.sigma") {
      c.tw_sigma = as_double(key, v);
    } else if (key == "travelwave.stages") {
      c.tw_stages = as_int(key, v);
    } else if (key == "travelwave.newton_max_iters") {
      c.tw_newton_max_iters = as_int(key, v);
    } else if (key == "initial.kind") {
      if (v == "lorentzian_even")
        c.initial.kind = InitialSpec::Kind::LorentzianEven;
      else if (v == "lorentzian_odd")
        c.initial.kind = InitialSpec::Kind::LorentzianOdd;
      else if (v == "soliton")
        c.initial.kind = InitialSpec::Kind::Soliton;
      else if (v == "sech2")
        c.initial.kind = InitialSpec::Kind::Sech2;
      else
        bad(key, "unknown kind '" + v + "'");
    } else if (key == "initial.r") {
      c.initial.r = as_list(key, v);
    } else if (key == "initial.a") {
      c.initial.a = as_list(key, v);
    } else if (key == "initial.x0") {
      c.initial.x0 = as_list(key, v);
    } else if (key == "initial.c") {
      c.initial.c = as_list(key, v);
    } else if (key == "initial.v") {
      c.initial.v = as_list(key, v);
    } else if (key == "initial.phase") {
      c.initial.phase = as_list(key, v);
    } else if (key == "initial.forced") {
      c.initial.forced = as_bool(key, v);
    } else {
      bad(key, "unknown key");
    }
  }

  validate(c);
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace mtc
