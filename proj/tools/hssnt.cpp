// hssnt: describe, realize, verify and grid over SU(p,q) and Sp(n,R) models.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hssnt/json_report.hpp"
#include "hssnt/sampling.hpp"
#include "hssnt/suites.hpp"

using namespace hssnt;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kUsage = 2, kModel = 3, kDomain = 4 };

struct Config {
  std::string space;
  std::string eta;
  std::string eta_file;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int samples = 20;
  std::string out;
  std::string format = "json";
  std::string point;
  std::string plane = "1,2";
  int resolution = 61;
  double range = 3.0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::UnknownName:
    case ErrorCode::NoSeriesAvailable:
    case ErrorCode::RankMismatch:
    case ErrorCode::DependentInput:
      return kUsage;
    case ErrorCode::DomainExceeded:
    case ErrorCode::OutsideCutLocus:
    case ErrorCode::NotPositiveDefinite:
      return kDomain;
    default:
      return kModel;
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return v;
}

std::optional<OddMap> chosen_eta(const Config& c) {
  if (!c.eta.empty() && !c.eta_file.empty()) throw UsageError("--eta and --eta-file are exclusive");
  if (!c.eta_file.empty()) return read_series_file(c.eta_file);
  if (!c.eta.empty()) return builtin_odd(c.eta);
  return std::nullopt;
}

void write(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

void require_format(const Config& c, std::initializer_list<const char*> ok) {
  for (const char* f : ok)
    if (c.format == f) return;
  throw UsageError("format '" + c.format + "' is not available for this command");
}

Space load(const Config& c) {
  if (c.space.empty()) throw UsageError("no space given (e.g. su:2,2, sp:3, su11)");
  return make_space(SpaceSpec::parse(c.space));
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

int cmd_describe(const Config& c) {
  require_format(c, {"json"});
  const Space s = load(c);
  write(c, dump17(describe_json(s)));
  std::cerr << s.model.spec.str() << ": rank " << s.roots.rank << ", type " << s.roots.type_name() << "\n";
  return kOk;
}

int cmd_realize(const Config& c) {
  require_format(c, {"json"});
  const Space s = load(c);
  const OddMap eta = chosen_eta(c).value_or(builtin_odd("id"));
  const Model& m = s.model;
  AlgVec X;
  if (c.point == "random") {
    Rng rng = sample_rng(c.seed, 0);
    X = random_p(m, rng);
  } else {
    const std::vector<double> v = c.point.empty() ? std::vector<double>(size_t(s.roots.rank), 0.0) : parse_list(c.point);
    const Vec pv = Eigen::Map<const Vec>(v.data(), Eigen::Index(v.size()));
    if (int(v.size()) == s.roots.rank)
      X = s.roots.from_a_coords(pv);
    else if (int(v.size()) == m.dim_p)
      X = m.from_p(pv);
    else
      throw UsageError("point needs " + std::to_string(s.roots.rank) + " a-coefficients or " +
                       std::to_string(m.dim_p) + " p-coefficients");
  }
  const SpectralDecomp sd = spectral_decompose(s, X);
  const Certificate cert = certify(s, X, sd);
  const AlgVec W = odd_calculus(sd, eta, X);

  json j;
  j["schema"] = kReportSchema;
  j["command"] = "realize";
  j["space"] = m.spec.str();
  j["eta"] = eta.name;
  j["input"] = {{"p_coefficients", vec_json(m.p_coords(X))}};
  json tri = json::array();
  for (const AlgVec& t : sd.tripotents) tri.push_back(vec_json(m.p_coords(t)));
  j["spectral"] = {{"values", sd.values},
                   {"tripotents", tri},
                   {"certificate",
                    {{"reconstruction", cert.reconstruction},
                     {"tripotent", cert.tripotent},
                     {"orthogonality", cert.orthogonality}}}};
  json out = {{"p_coefficients", vec_json(m.p_coords(W))}, {"in_domain", domain_membership(s, W, eta)}};
  // a-coordinates only when the input lies in a
  const AlgVec back = s.roots.from_a_coords(s.roots.a_coords(m, X));
  if ((back.coeffs - X.coeffs).norm() <= 1e-12 * std::max(1.0, X.coeffs.norm())) {
    j["input"]["a_coefficients"] = vec_json(s.roots.a_coords(m, X));
    out["a_coefficients"] = vec_json(s.roots.a_coords(m, W));
  }
  j["output"] = out;
  write(c, dump17(j));
  return kOk;
}

int cmd_verify(const Config& c) {
  require_format(c, {"json", "csv"});
  const Space s = load(c);
  SuiteOptions o;
  o.eta = chosen_eta(c);
  o.samples = c.samples;
  o.seed = c.seed;
  o.tol = c.tol;
  const VerifyReport r = run_suite(s, c.suite, o);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "name,max_residual,tol,pass\n";
    char buf[64];
    for (const Check& ch : r.checks) {
      std::string name = ch.name;
      for (char& x : name)
        if (x == ',') x = ';';
      os << name << ",";
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", ch.max_residual, ch.tol);
      os << buf << "," << (ch.pass ? "true" : "false") << "\n";
    }
    write(c, os.str());
  } else {
    json j = report_json(r, s.model.spec.str());
    if (o.eta) j["eta"] = o.eta->name;
    write(c, dump17(j));
  }
  int failed = 0;
  for (const Check& ch : r.checks)
    if (!ch.pass) {
      ++failed;
      std::cerr << "FAIL " << ch.name << ": " << ch.max_residual << " > " << ch.tol << "\n";
    }
  std::cerr << c.suite << " on " << s.model.spec.str() << ": " << r.checks.size() - size_t(failed) << "/"
            << r.checks.size() << " checks pass\n";
  return failed ? kChecksFailed : kOk;
}

int cmd_grid(const Config& c) {
  require_format(c, {"csv", "json"});
  const Space s = load(c);
  const OddMap eta = chosen_eta(c).value_or(builtin_odd("tanh"));
  const int r = s.roots.rank;
  std::vector<int> axes;
  for (double a : parse_list(c.plane)) {
    if (a != std::floor(a) || a < 1 || a > r) throw UsageError("plane axis out of range 1.." + std::to_string(r));
    axes.push_back(int(a) - 1);
  }
  if (axes.empty() || axes.size() > 2 || (axes.size() == 2 && axes[0] == axes[1]) || (r >= 2 && axes.size() != 2))
    throw UsageError("plane must name two distinct axes (or one axis on a rank-1 space)");
  if (c.resolution < 1) throw UsageError("resolution must be positive");
  const int n = c.resolution;
  auto coord = [&](int i) { return n == 1 ? 0.0 : -c.range + 2.0 * c.range * double(i) / double(n - 1); };

  std::ostringstream os;
  json rows = json::array();
  os << "x1,x2,y1,y2,in_domain\n";
  char buf[128];
  const int n2 = axes.size() == 2 ? n : 1;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n2; ++k) {
      Vec x = Vec::Zero(r);
      x(axes[0]) = coord(i);
      if (axes.size() == 2) x(axes[1]) = coord(k);
      const double x1 = x(axes[0]), x2 = axes.size() == 2 ? x(axes[1]) : 0.0;
      double y1 = std::nan(""), y2 = std::nan("");
      bool inside = std::abs(x1) < eta.radius && std::abs(x2) < eta.radius;
      if (inside) {
        y1 = eta(x1);
        y2 = axes.size() == 2 ? eta(x2) : 0.0;
        Vec y = Vec::Zero(r);
        y(axes[0]) = y1;
        if (axes.size() == 2) y(axes[1]) = y2;
        inside = domain_membership(s, s.roots.from_a_coords(y), eta);
      }
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,", x1, x2, y1, y2);
      os << buf << (inside ? "true" : "false") << "\n";
      rows.push_back({{"x", {x1, x2}}, {"y", {y1, y2}}, {"in_domain", inside}});
    }
  if (c.format == "csv") {
    write(c, os.str());
  } else {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "grid";
    j["space"] = s.model.spec.str();
    j["eta"] = eta.name;
    j["rows"] = rows;
    write(c, dump17(j));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly diagonal realizations of Hermitian symmetric spaces"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--space,space", c.space, "su:p,q | sp:n | su11");
    sub->add_option("--eta", c.eta, "builtin odd function");
    sub->add_option("--eta-file", c.eta_file, "power-series file (a_k per line, 'radius R')");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--samples", c.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "write output to a file");
    sub->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  };
  CLI::App* describe = app.add_subcommand("describe", "rank, root type, multiplicities and constants");
  common(describe);
  CLI::App* realize = app.add_subcommand("realize", "spectral decomposition and Omega_eta of a point");
  common(realize);
  realize->add_option("--point,point", c.point, "a-coefficients, full p-coefficients or 'random'");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite,suite", c.suite, "roots | kahler | polydisk | holo | symp | dual | bergman | duality | tgeo | all");
  verify->add_option("--tol", c.tol, "tolerance for sampled differential checks");
  CLI::App* grid = app.add_subcommand("grid", "CSV of the section map x -> eta(x) on a coordinate plane");
  common(grid);
  grid->add_option("--plane", c.plane, "two axes, e.g. 1,2 (one axis for rank 1)");
  grid->add_option("--resolution", c.resolution, "points per axis");
  grid->add_option("--range", c.range, "half-width of the square")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (grid->parsed() && grid->count("--format") == 0) c.format = "csv";

  try {
    if (describe->parsed()) return cmd_describe(c);
    if (realize->parsed()) return cmd_realize(c);
    if (verify->parsed()) return cmd_verify(c);
    return cmd_grid(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kModel;
  }
}
