// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "hssnt/json_report.hpp"
#include "hssnt/sampling.hpp"
#include "hssnt/suites.hpp"

using namespace hssnt;

namespace {

std::map<std::string, Space> cache;

const Space& space(const std::string& s) {
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, make_space(SpaceSpec::parse(s))).first;
  return it->second;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

double gap(const AlgVec& a, const AlgVec& b) { return (a.coeffs - b.coeffs).norm() / std::max(1.0, b.coeffs.norm()); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

template <typename Fn>
double worst_over(int n, std::uint64_t seed, Fn fn) {
  double w = 0.0;
  for (int i = 0; i < n; ++i) {
    Rng rng = sample_rng(seed, std::uint64_t(i));
    const double r = fn(rng);
    w = std::max(w, std::isnan(r) ? kInf : r);
  }
  return w;
}

AlgVec chart_point(const Space& s, Rng& rng, double hi) {
  return random_point(s, rng, random_principal(s.roots, rng, 1e-3, hi));
}

Outcome classification() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"su11", "C1"}, {"su:2,2", "C2"}, {"su:1,2", "BC1"}, {"su:2,3", "BC2"}, {"sp:2", "C2"}, {"sp:3", "C3"}};
  bool ok = true;
  std::string got;
  for (const auto& [spec, type] : rows) {
    const auto j = describe_json(make_space(SpaceSpec::parse(spec)));
    const std::string t = j["type"];
    const int rank = j["rank"];
    ok = ok && t == type && rank == std::stoi(type.substr(type.find_first_of("0123456789")));
    got += " " + spec + "=" + t;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {ok && secs < 5.0, got + " in " + sci(secs) + " s"};
}

Outcome structure() {
  double worst = 0.0;
  for (const char* name : {"su:2,2", "sp:2"}) {
    const Space& s = space(name);
    const RootChecks rc = root_checks(s.model, s.roots);
    worst = std::max(worst, rc.orthogonality);
    for (const auto& list : {kahler_checks(s.model, s.roots, s.kahler), verify_J_mapping(s.model, s.roots, s.kahler),
                             polydisk_checks(s.model, s.roots, s.kahler, s.poly)})
      for (const Residual& r : list)
        if (r.name.find("1/min") == std::string::npos) worst = std::max(worst, r.value);
  }
  return {worst < 1e-10, "max residual " + sci(worst)};
}

double block_identity(const Space& s, const OddMap& eta, bool G, bool dual, int n, std::uint64_t seed) {
  const RootDatum& d = s.roots;
  return worst_over(n, seed, [&](Rng& rng) {
    const Vec x = random_principal(d, rng, 1e-3, dual ? M_PI / 2 - 0.1 : 2.0);
    double w = 0.0;
    for (size_t k = 0; k < d.positive.size(); ++k) {
      if (d.positive[k].kind == RootKind::lambda_bar) continue;
      const int ik = int(k);
      const double v = dual ? (G ? evaluate_G_star(d, eta, ik, x) : evaluate_F_star(d, eta, ik, x))
                            : (G ? evaluate_G(d, eta, ik, x) : evaluate_F(d, eta, ik, x));
      w = std::max(w, std::abs(v - 1.0));
    }
    return w;
  });
}

Outcome analytic_form() {
  double g = 0.0, f = 0.0;
  for (const char* name : {"su:2,2", "su:2,3", "sp:2"}) {
    g = std::max(g, block_identity(space(name), builtin_odd("tanh"), true, false, 100, 301));
    f = std::max(f, block_identity(space(name), builtin_odd("sinh"), false, false, 100, 302));
  }
  return {g <= 1e-9 && f <= 1e-9, "|G_tanh - 1| " + sci(g) + ", |F_sinh - 1| " + sci(f)};
}

Outcome numerical_form() {
  const Space& s = space("su:2,2");
  const SampleOptions o{20, 401, 1e-5};
  const PMap psi = [&](const AlgVec& X) { return harish_chandra(s, X); };
  const PMap phi = [&](const AlgVec& X) { return symplecto(s, X); };
  const VerifyReport h = check_holomorphic(s, psi, "Psi", o), y = check_symplectic(s, phi, "Phi", o);
  const VerifyReport hn = check_symplectic(s, psi, "Psi", o), yn = check_holomorphic(s, phi, "Phi", o);
  return {h.pass() && y.pass() && !hn.pass() && !yn.pass(),
          "Psi holo " + sci(h.checks[0].max_residual) + ", Phi symp " + sci(y.checks[0].max_residual) +
              "; controls Psi symp " + sci(hn.checks[0].max_residual) + ", Phi holo " +
              sci(yn.checks[0].max_residual)};
}

Outcome dual_form() {
  const Space& s = space("su:2,2");
  const double g = block_identity(s, builtin_odd("tan"), true, true, 100, 501);
  const double f = block_identity(s, builtin_odd("sin"), false, true, 100, 502);
  return {g <= 1e-9 && f <= 1e-9, "|G*_tan - 1| " + sci(g) + ", |F*_sin - 1| " + sci(f)};
}

Outcome bergman() {
  const Space& s = space("su:2,2");
  const OddMap sa = builtin_odd("sinh_artanh");
  const double w = worst_over(50, 601, [&](Rng& rng) {
    const AlgVec z = chart_point(s, rng, 0.95);
    return (dsl_roos_map(s, z).coeffs - odd_calculus(s, z, sa).coeffs).norm();
  });
  return {w <= 1e-8, "max |B^(-1/4) z - z/sqrt(1-z^2)| " + sci(w)};
}

Outcome duality() {
  double a = 0.0, b = 0.0;
  for (const char* name : {"su:2,2", "su:2,3", "sp:2"}) {
    const Space& s = space(name);
    a = std::max(a, worst_over(50, 701, [&](Rng& rng) {
      const AlgVec X = chart_point(s, rng, 2.0);
      return gap(omega_eta_star(s, gudermann_composite(s, X), builtin_odd("tan")), iota(symplecto(s, X)));
    }));
    b = std::max(b, worst_over(50, 702, [&](Rng& rng) {
      const AlgVec X = chart_point(s, rng, 2.0);
      return gap(omega_eta_star(s, gudermann_composite(s, X), builtin_odd("sin")), iota(harish_chandra(s, X)));
    }));
  }
  return {a <= 1e-9 && b <= 1e-9, "tan(gd) = sinh " + sci(a) + ", sin(gd) = tanh " + sci(b)};
}

Outcome diastatic() {
  const Space& s = space("su:2,2");
  const double a = worst_over(50, 801, [&](Rng& rng) {
    const AlgVec z = chart_point(s, rng, 0.95);
    return gap(diastatic_exp(s, diastatic_log(s, z)), z);
  });
  const double b = worst_over(50, 802, [&](Rng& rng) {
    const AlgVec X = iota(chart_point(s, rng, M_PI / 2 - 0.1));
    return gap(diastatic_exp_star(s, diastatic_log_star(s, X)), X);
  });
  return {a <= 1e-9 && b <= 1e-9, "DE o DL " + sci(a) + ", DE* o DL* " + sci(b)};
}

Outcome subspaces() {
  int cells = 0, disagree = 0;
  std::string lines;
  bool four = true;
  for (const char* name : {"su:2,2", "sp:2", "su:2,3"}) {
    const GridSummary g = rank2_grid(space(name), {builtin_odd("sinh"), builtin_odd("tanh"), builtin_odd("loi_mossa")},
                                     {8, 901, 1e-9});
    cells += int(g.cells.size());
    disagree += g.route_disagreements + g.restriction_disagreements;
    four = four && g.clts_lines.size() == 4;
  }
  return {disagree == 0 && four,
          std::to_string(cells) + " subspaces over 3 spaces, " + std::to_string(disagree) + " disagreements"};
}

Outcome equivariance() {
  const Space& s = space("su:2,2");
  const SampleOptions o{100, 1001, 1e-9};
  const OddMap lm = builtin_odd("loi_mossa"), tan = builtin_odd("tan"), sin = builtin_odd("sin");
  struct Named {
    std::string name;
    PMap f;
    double hi;
    bool dual;
  };
  const std::vector<Named> maps = {
      {"harish_chandra", [&](const AlgVec& X) { return harish_chandra(s, X); }, 2.0, false},
      {"symplecto", [&](const AlgVec& X) { return symplecto(s, X); }, 2.0, false},
      {"loi_mossa", [&](const AlgVec& X) { return odd_calculus(s, X, lm); }, 2.0, false},
      {"diastatic_log", [&](const AlgVec& X) { return diastatic_log(s, X); }, 0.95, false},
      {"diastatic_exp", [&](const AlgVec& X) { return diastatic_exp(s, X); }, 2.0, false},
      {"dsl_roos_map", [&](const AlgVec& X) { return dsl_roos_map(s, X); }, 0.95, false},
      {"gudermann_composite", [&](const AlgVec& X) { return gudermann_composite(s, X); }, 2.0, false},
      {"omega*_tan", [&](const AlgVec& X) { return omega_eta_star(s, X, tan); }, M_PI / 2 - 0.1, true},
      {"omega*_sin", [&](const AlgVec& X) { return omega_eta_star(s, X, sin); }, M_PI / 2 - 0.1, true},
  };
  double worst = 0.0;
  bool ok = true;
  for (const Named& n : maps) {
    const VerifyReport r = check_equivariance(s, n.f, n.name, o, n.hi, n.dual);
    ok = ok && r.pass();
    worst = std::max(worst, r.checks[0].max_residual);
  }
  const GeneralHMap bad{[](const Vec& x) { return x(0) + x(1); }, 2};
  const VerifyReport w = check_weyl_equivariance(s, bad, "x1 + x2", o);
  return {ok && !w.pass(), std::to_string(maps.size()) + " maps, max " + sci(worst) +
                               "; h = x1 + x2 Weyl residual " + sci(w.checks[0].max_residual)};
}

Outcome uniqueness() {
  bool ok = true;
  std::string vanish;
  for (const std::string& n : builtin_names()) {
    const UniquenessResiduals u = uniqueness_residuals(builtin_odd(n));
    const bool h = u.holomorphic < 1e-12, y = u.symplectic < 1e-12;
    ok = ok && h == (n == "tanh") && y == (n == "sinh");
    if (!h) ok = ok && u.holomorphic >= 1e-3;
    if (!y) ok = ok && u.symplectic >= 1e-3;
    if (h) vanish += " holo:" + n;
    if (y) vanish += " symp:" + n;
  }
  return {ok, "vanishing:" + vanish};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"classification", classification},
      {"root and Kahler structure", structure},
      {"G_tanh = 1, F_sinh = 1", analytic_form},
      {"holomorphic Psi, symplectic Phi", numerical_form},
      {"dual G*_tan = 1, F*_sin = 1", dual_form},
      {"Bergman map", bergman},
      {"Gudermannian duality", duality},
      {"diastatic inverse pairs", diastatic},
      {"abelian subspace equivalences", subspaces},
      {"K-equivariance", equivariance},
      {"uniqueness ODE", uniqueness},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  return failed ? 1 : 0;
}
