#include "hssnt/odd_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hssnt {

namespace {

const double kHalfPi = M_PI / 2;

double sgn(double x) { return x < 0 ? -1.0 : 1.0; }

// log cosh x without overflow or cancellation
double log_cosh(double x) {
  const double a = std::abs(x);
  if (a > 20) return a + std::log1p(std::exp(-2 * a)) - std::log(2.0);
  const double s = std::sinh(a / 2);
  return std::log1p(2 * s * s);
}

// -log cos x on |x| < pi/2
double neg_log_cos(double x) {
  const double s = std::sin(x / 2);
  return -std::log1p(-2 * s * s);
}

double sinh_artanh(double x) { return x / std::sqrt((1 - x) * (1 + x)); }

OddMap make(std::string name, std::function<double(double)> f, std::function<double(double)> df,
            std::function<double(double)> inv, double R, double s, std::string dual) {
  OddMap e;
  e.name = std::move(name);
  e.eval = std::move(f);
  e.deriv = std::move(df);
  e.inverse = std::move(inv);
  e.radius = R;
  e.saturation = s;
  e.dual_name = std::move(dual);
  return e;
}

std::vector<double> sinh_series(bool alternating) {
  std::vector<double> a;
  double f = 1.0;
  for (int k = 0; k < 12; ++k) {
    if (k > 0) f *= double(2 * k) * double(2 * k + 1);
    a.push_back((alternating && k % 2 ? -1.0 : 1.0) / f);
  }
  return a;
}

// x / sqrt(1 - x^2) = sum binom(2k, k) / 4^k x^(2k+1)
std::vector<double> sinh_artanh_series(bool alternating) {
  std::vector<double> a;
  double c = 1.0;
  for (int k = 0; k < 40; ++k) {
    if (k > 0) c *= double(2 * k - 1) / double(2 * k);
    a.push_back((alternating && k % 2 ? -1.0 : 1.0) * c);
  }
  return a;
}

OddMap lookup(const std::string& n) {
  if (n == "id")
    return make(n, [](double x) { return x; }, [](double) { return 1.0; }, [](double y) { return y; },
                kInf, kInf, "id");
  if (n == "tanh")
    return make(n, [](double x) { return std::tanh(x); },
                [](double x) { const double c = std::cosh(x); return 1.0 / (c * c); },
                [](double y) { return std::atanh(y); }, kInf, 1.0, "tan");
  if (n == "sinh")
    return make(n, [](double x) { return std::sinh(x); }, [](double x) { return std::cosh(x); },
                [](double y) { return std::asinh(y); }, kInf, kInf, "sin");
  if (n == "tan")
    return make(n, [](double x) { return std::tan(x); },
                [](double x) { const double c = std::cos(x); return 1.0 / (c * c); },
                [](double y) { return std::atan(y); }, kHalfPi, kInf, "tanh");
  if (n == "sin")
    return make(n, [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
                [](double y) { return std::asin(y); }, kHalfPi, 1.0, "sinh");
  if (n == "gd")
    return make(n, [](double x) { return std::asin(std::tanh(x)); },
                [](double x) { return 1.0 / std::cosh(x); },
                [](double y) { return std::asinh(std::tan(y)); }, kInf, kHalfPi, "gd_dual");
  if (n == "gd_dual")
    return make(n, [](double x) { return std::asinh(std::tan(x)); },
                [](double x) { return 1.0 / std::cos(x); },
                [](double y) { return std::asin(std::tanh(y)); }, kHalfPi, kInf, "gd");
  if (n == "arcsinh")
    return make(n, [](double x) { return std::asinh(x); }, [](double x) { return 1.0 / std::sqrt(1 + x * x); },
                [](double y) { return std::sinh(y); }, kInf, kInf, "arcsin");
  if (n == "artanh")
    return make(n, [](double x) { return std::atanh(x); }, [](double x) { return 1.0 / ((1 - x) * (1 + x)); },
                [](double y) { return std::tanh(y); }, 1.0, kInf, "arctan");
  if (n == "arcsin")
    return make(n, [](double x) { return std::asin(x); },
                [](double x) { return 1.0 / std::sqrt((1 - x) * (1 + x)); },
                [](double y) { return std::sin(y); }, 1.0, kHalfPi, "arcsinh");
  if (n == "arctan")
    return make(n, [](double x) { return std::atan(x); }, [](double x) { return 1.0 / (1 + x * x); },
                [](double y) { return std::tan(y); }, kInf, kHalfPi, "artanh");
  if (n == "sinh_artanh") {
    OddMap e = make(n, sinh_artanh, [](double x) { return std::pow((1 - x) * (1 + x), -1.5); },
                    [](double y) { return y / std::sqrt(1 + y * y); }, 1.0, kInf, "sinh_artanh_dual");
    e.series = sinh_artanh_series(false);
    return e;
  }
  if (n == "sinh_artanh_dual") {
    OddMap e = make(n, [](double x) { return x / std::sqrt(1 + x * x); },
                    [](double x) { return std::pow(1 + x * x, -1.5); }, sinh_artanh, 1.0, 1.0 / std::sqrt(2.0),
                    "sinh_artanh");
    e.series = sinh_artanh_series(true);
    return e;
  }
  if (n == "loi_mossa")
    return make(
        n, [](double x) { return sgn(x) * std::sqrt(2 * log_cosh(x)); },
        [](double x) {
          if (std::abs(x) < 1e-3) return 1 - x * x / 4;
          return std::tanh(std::abs(x)) / std::sqrt(2 * log_cosh(x));
        },
        [](double y) {
          const double t = std::expm1(y * y / 2);
          return sgn(y) * std::log1p(t + std::sqrt(t * (t + 2)));
        },
        kInf, kInf, "loi_mossa_dual");
  if (n == "loi_mossa_dual")
    return make(
        n, [](double x) { return sgn(x) * std::sqrt(2 * neg_log_cos(x)); },
        [](double x) {
          if (std::abs(x) < 1e-3) return 1 + x * x / 4;
          return std::tan(std::abs(x)) / std::sqrt(2 * neg_log_cos(x));
        },
        [](double y) { return sgn(y) * 2 * std::asin(std::sqrt(-std::expm1(-y * y / 2) / 2)); }, kHalfPi, kInf,
        "loi_mossa");
  throw Error(ErrorCode::UnknownName, "no builtin odd function '" + n + "'");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"id",     "tanh",   "sinh",   "tan",         "sin",
                                                 "gd",     "arcsinh", "artanh", "arcsin",     "arctan",
                                                 "sinh_artanh", "loi_mossa", "loi_mossa_dual"};
  return names;
}

OddMap builtin_odd(const std::string& name) {
  OddMap e = lookup(name);
  if (name == "id") e.series = {1.0};
  if (name == "sinh") e.series = sinh_series(false);
  if (name == "sin") e.series = sinh_series(true);
  return e;
}

OddMap series_odd(const std::string& name, std::vector<double> coeffs, double radius) {
  if (coeffs.empty()) throw Error(ErrorCode::NoSeriesAvailable, "empty coefficient list");
  OddMap e;
  e.name = name;
  e.series = coeffs;
  e.radius = radius;
  e.eval = [coeffs](double x) {
    const double x2 = x * x;
    double s = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) s = s * x2 + coeffs[k];
    return s * x;
  };
  e.deriv = [coeffs](double x) {
    const double x2 = x * x;
    double s = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) s = s * x2 + double(2 * k + 1) * coeffs[k];
    return s;
  };
  e.injective = false;
  // sup over [0, R) by sampling when R is finite
  if (std::isfinite(radius)) {
    double sup = 0.0;
    for (int i = 1; i < 2000; ++i) sup = std::max(sup, e.eval(radius * i / 2000.0));
    e.saturation = sup;
  }
  return e;
}

OddMap read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NoSeriesAvailable, "cannot open '" + path + "'");
  std::vector<double> a;
  double radius = std::nan("");
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "radius") {
      std::string v;
      ss >> v;
      radius = (v == "inf" || v == "infinity") ? kInf : std::stod(v);
    } else {
      a.push_back(std::stod(tok));
    }
  }
  if (std::isnan(radius)) throw Error(ErrorCode::NoSeriesAvailable, "missing radius line in '" + path + "'");
  return series_odd("series:" + path, a, radius);
}

OddMap dual_function(const OddMap& eta) {
  if (!eta.dual_name.empty()) {
    OddMap d = lookup(eta.dual_name);
    if (d.name == "id") d.series = {1.0};
    if (d.name == "sin") d.series = sinh_series(true);
    if (d.name == "sinh") d.series = sinh_series(false);
    return d;
  }
  if (eta.series.empty()) throw Error(ErrorCode::NoSeriesAvailable, "'" + eta.name + "' has no series");
  std::vector<double> b = eta.series;
  for (size_t k = 1; k < b.size(); k += 2) b[k] = -b[k];
  return series_odd(eta.name + "*", b, std::min(eta.radius, M_PI / 2));
}

OddMap compose(const OddMap& outer, const OddMap& inner) {
  OddMap e;
  e.name = outer.name + "o" + inner.name;
  e.eval = [outer, inner](double x) { return outer.eval(inner.eval(x)); };
  e.deriv = [outer, inner](double x) { return outer.deriv(inner.eval(x)) * inner.deriv(x); };
  if (outer.inverse && inner.inverse)
    e.inverse = [outer, inner](double y) { return inner.inverse(outer.inverse(y)); };
  e.radius = inner.radius;
  if (std::isfinite(outer.radius) && inner.saturation >= outer.radius) {
    // inner values may leave the domain of outer: restrict to the preimage
    e.radius = inner.inverse ? std::min(inner.radius, inner.inverse(outer.radius)) : inner.radius;
  }
  e.saturation = std::isfinite(inner.saturation) ? outer.eval(std::min(inner.saturation, outer.radius))
                                                 : outer.saturation;
  e.injective = outer.injective && inner.injective;
  return e;
}

OddMapChecks check_odd_map(const OddMap& eta, int samples) {
  OddMapChecks c;
  c.at_zero = std::abs(eta(0.0));
  const double top = std::isfinite(eta.radius) ? 0.95 * eta.radius : 3.0;
  for (int i = 1; i <= samples; ++i) {
    const double x = top * i / samples;
    c.oddness = std::max(c.oddness, std::abs(eta(-x) + eta(x)));
    if (eta.inverse && eta.injective)
      c.inverse = std::max(c.inverse, std::abs(eta.inverse(eta(x)) - x) / std::max(1.0, x));
  }
  return c;
}

}  // namespace hssnt
