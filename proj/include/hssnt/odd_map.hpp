#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hssnt/config.hpp"

namespace hssnt {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Odd scalar function eta : (-R, R) -> R with its derivative and (partial) inverse.
struct OddMap {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::function<double(double)> inverse;  // empty when not provided
  double radius = kInf;
  double saturation = kInf;  // sup of eta on [0, R)
  std::string dual_name;     // builtin dual, if wired
  std::vector<double> series;  // a_k for x^(2k+1); empty when unknown
  bool injective = true;

  double operator()(double x) const { return eval(x); }
};

const std::vector<std::string>& builtin_names();
OddMap builtin_odd(const std::string& name);

// Power series sum a_k x^(2k+1) with the given radius.
OddMap series_odd(const std::string& name, std::vector<double> coeffs, double radius);
// Reads a coefficient file: one a_k per line and a line "radius <R>" ('#' starts a comment).
OddMap read_series_file(const std::string& path);

// eta*(x) = -i eta(i x): wired builtin dual when available, otherwise the sign-flipped series.
OddMap dual_function(const OddMap& eta);

// outer o inner
OddMap compose(const OddMap& outer, const OddMap& inner);

struct OddMapChecks {
  double oddness = 0.0;
  double at_zero = 0.0;
  double inverse = 0.0;
};

OddMapChecks check_odd_map(const OddMap& eta, int samples = 64);

}  // namespace hssnt
