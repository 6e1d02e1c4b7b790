#include "croftonlab/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace croftonlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Vec read_csv_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open support gauge file: " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    for (const std::string& cell : split(line, ',')) {
      std::string t = trim(cell);
      if (!t.empty()) vals.push_back(std::stod(t));
    }
  }
  return Eigen::Map<Vec>(vals.data(), static_cast<long>(vals.size()));
}

}  // namespace

Norm parse_norm_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("empty norm spec");
  const std::string& kind = parts[0];
  try {
    if (kind == "euclidean" && parts.size() == 2) return Norm::euclidean(std::stoi(parts[1]));
    if (kind == "lp" && parts.size() == 3)
      return Norm::lp(std::stod(parts[1]), std::stoi(parts[2]));
    if (kind == "linf" && parts.size() == 2) {
      int dim = std::stoi(parts[1]);
      if (dim != 2)
        throw std::invalid_argument("linf norm spec: only dimension 2 is supported");
      return Norm::support_sampled_from_gauge(
          [](const Vec& v) { return v.cwiseAbs().maxCoeff(); }, 2048);
    }
    if (kind == "linf-smooth" && parts.size() == 2) {
      int dim = std::stoi(parts[1]);
      if (dim != 2)
        throw std::invalid_argument("linf-smooth norm spec: only dimension 2 is supported");
      return smoothed_linf_norm(dim);
    }
    if (kind == "support" && parts.size() == 2)
      return Norm::support_sampled(read_csv_column(parts[1]));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad norm spec '" + spec + "': " + e.what());
  }
  throw std::invalid_argument("unrecognized norm spec: " + spec);
}

Norm smoothed_linf_norm(int dim, double smoothing, int grid) {
  if (dim != 2) throw std::invalid_argument("smoothed_linf_norm: dimension 2 only");
  const double s = smoothing;
  // Support function of (1-s)*B_inf + s*B_2 is (1-s)*l1 + s*l2; the gauge
  // is recovered by bipolar maximization over a fine direction fan.
  const int fan = 4096;
  Mat xi(2, fan);
  Vec hval(fan);
  for (int i = 0; i < fan; ++i) {
    double a = 2.0 * std::numbers::pi * i / fan;
    xi(0, i) = std::cos(a);
    xi(1, i) = std::sin(a);
    hval[i] = (1.0 - s) * (std::abs(xi(0, i)) + std::abs(xi(1, i))) + s;
  }
  auto gauge = [xi, hval, fan](const Vec& v) {
    double best = 0.0;
    for (int i = 0; i < fan; ++i) {
      double num = xi(0, i) * v[0] + xi(1, i) * v[1];
      if (num > best * hval[i]) best = num / hval[i];
    }
    return best;
  };
  return Norm::support_sampled_from_gauge(gauge, grid);
}

std::vector<FunctionSpaceOnX> Scenario::build_spaces() const {
  if (static_cast<int>(factors.size()) != chart.n)
    throw std::invalid_argument("scenario '" + name + "': factor count must equal chart dimension");
  std::vector<FunctionSpaceOnX> spaces;
  for (const FactorSpec& f : factors) {
    std::vector<BasisFunction> basis;
    if (f.family == "trig")
      basis = trig_basis(f.coord, f.orders, chart.n);
    else if (f.family == "monomial")
      basis = monomial_basis(f.coord, f.orders, chart.n);
    else
      throw std::invalid_argument("scenario '" + name + "': unknown basis family " + f.family);
    spaces.emplace_back(std::move(basis), parse_norm_spec(f.norm_spec), chart);
  }
  return spaces;
}

namespace {

Scenario make_circle(const std::string& name, int freq, const std::string& norm_spec,
                     double u_lo, double u_hi) {
  Scenario sc;
  sc.name = name;
  sc.chart = ManifoldChart::circle();
  FactorSpec f;
  f.family = "trig";
  f.coord = 0;
  f.orders = {freq};
  f.norm_spec = norm_spec;
  sc.factors = {f};
  sc.mode = Mode::Theorem2;
  sc.U.lo = Vec::Constant(1, u_lo);
  sc.U.hi = Vec::Constant(1, u_hi);
  sc.samples = 100000;
  sc.grid = 1000;
  sc.seed = 1;
  return sc;
}

}  // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {
      "circle-euclidean", "circle-euclidean-t1", "circle-k2",       "circle-k3",
      "circle-half",      "circle-linf",         "torus-decoupled",
  };
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  const double tau = 2.0 * std::numbers::pi;
  if (name == "circle-euclidean") return make_circle(name, 1, "euclidean:2", 0.0, tau);
  if (name == "circle-euclidean-t1") {
    Scenario sc = make_circle(name, 1, "euclidean:2", 0.0, tau);
    sc.mode = Mode::Theorem1;
    return sc;
  }
  if (name == "circle-k2") return make_circle(name, 2, "euclidean:2", 0.0, tau);
  if (name == "circle-k3") return make_circle(name, 3, "euclidean:2", 0.0, tau);
  if (name == "circle-half") return make_circle(name, 1, "euclidean:2", 0.0, tau / 2.0);
  if (name == "circle-linf") {
    Scenario sc = make_circle(name, 1, "linf-smooth:2", 0.0, tau);
    sc.rhs_rel_tol = 1e-2;
    return sc;
  }
  if (name == "torus-decoupled") {
    Scenario sc;
    sc.name = name;
    sc.chart = ManifoldChart::torus();
    FactorSpec f0, f1;
    f0.coord = 0;
    f1.coord = 1;
    sc.factors = {f0, f1};
    sc.mode = Mode::Theorem2;
    sc.U.lo = Vec::Zero(2);
    sc.U.hi = Vec::Constant(2, tau);
    sc.samples = 1000000;
    sc.grid = 16;
    sc.root_grid = 96;
    sc.seed = 1;
    return sc;
  }
  throw std::invalid_argument("unknown built-in scenario: " + name);
}

Scenario load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  Scenario sc;
  bool have_chart = false;
  std::string section;
  FactorSpec* current_factor = nullptr;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  std::vector<double> u_lo, u_hi;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail("malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section == "factor") {
        sc.factors.emplace_back();
        current_factor = &sc.factors.back();
      } else if (section != "scenario") {
        fail("unknown section [" + section + "]");
      }
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    try {
      if (section == "scenario") {
        if (key == "name")
          sc.name = val;
        else if (key == "chart") {
          auto parts = split(val, ':');
          if (parts[0] == "circle")
            sc.chart = ManifoldChart::circle();
          else if (parts[0] == "torus")
            sc.chart = ManifoldChart::torus();
          else if (parts[0] == "interval" && parts.size() == 3)
            sc.chart = ManifoldChart::interval(std::stod(parts[1]), std::stod(parts[2]));
          else
            fail("unknown chart spec: " + val);
          have_chart = true;
        } else if (key == "mode") {
          if (val == "theorem-1")
            sc.mode = Mode::Theorem1;
          else if (val == "theorem-2")
            sc.mode = Mode::Theorem2;
          else
            fail("mode must be theorem-1 or theorem-2");
        } else if (key == "samples")
          sc.samples = std::stol(val);
        else if (key == "grid")
          sc.grid = std::stoi(val);
        else if (key == "root_grid")
          sc.root_grid = std::stoi(val);
        else if (key == "seed")
          sc.seed = std::stoull(val);
        else if (key == "symmetrize_resolution")
          sc.symmetrize_resolution = std::stoi(val);
        else if (key == "rhs_rel_tol")
          sc.rhs_rel_tol = std::stod(val);
        else if (key == "u_lo") {
          u_lo.clear();
          for (const auto& c : split(val, ',')) u_lo.push_back(std::stod(trim(c)));
        } else if (key == "u_hi") {
          u_hi.clear();
          for (const auto& c : split(val, ',')) u_hi.push_back(std::stod(trim(c)));
        } else
          fail("unknown key '" + key + "' in [scenario]");
      } else if (section == "factor") {
        if (!current_factor) fail("key outside any section");
        if (key == "family")
          current_factor->family = val;
        else if (key == "coord")
          current_factor->coord = std::stoi(val);
        else if (key == "orders") {
          current_factor->orders.clear();
          for (const auto& c : split(val, ','))
            current_factor->orders.push_back(std::stoi(trim(c)));
        } else if (key == "norm")
          current_factor->norm_spec = val;
        else
          fail("unknown key '" + key + "' in [factor]");
      } else {
        fail("key before any section");
      }
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()).rfind(path, 0) == 0) throw;
      fail(std::string("bad value: ") + e.what());
    }
  }
  if (!have_chart) throw std::invalid_argument(path + ": missing chart in [scenario]");
  if (sc.factors.empty()) throw std::invalid_argument(path + ": no [factor] sections");
  if (static_cast<int>(sc.factors.size()) != sc.chart.n)
    throw std::invalid_argument(path + ": factor count must equal chart dimension");
  sc.U.lo = sc.chart.lo;
  sc.U.hi = sc.chart.hi;
  if (!u_lo.empty()) {
    if (static_cast<int>(u_lo.size()) != sc.chart.n)
      throw std::invalid_argument(path + ": u_lo size mismatch");
    sc.U.lo = Eigen::Map<Vec>(u_lo.data(), sc.chart.n);
  }
  if (!u_hi.empty()) {
    if (static_cast<int>(u_hi.size()) != sc.chart.n)
      throw std::invalid_argument(path + ": u_hi size mismatch");
    sc.U.hi = Eigen::Map<Vec>(u_hi.data(), sc.chart.n);
  }
  if (sc.name.empty()) sc.name = "config";
  return sc;
}

}  // namespace croftonlab
