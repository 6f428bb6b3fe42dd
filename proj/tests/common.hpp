#pragma once

#include <doctest.h>

#include <map>
#include <mutex>
#include <string>

#include "hssnt/suites.hpp"
#include "hssnt/sampling.hpp"

namespace test {

inline const hssnt::Space& space(const std::string& spec) {
  static std::map<std::string, hssnt::Space> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, hssnt::make_space(hssnt::SpaceSpec::parse(spec))).first;
  return it->second;
}

inline double gap(const hssnt::AlgVec& a, const hssnt::AlgVec& b) { return (a.coeffs - b.coeffs).norm(); }

inline hssnt::Vec vec(std::initializer_list<double> xs) {
  hssnt::Vec v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline Eigen::VectorXi ivec(std::initializer_list<int> xs) {
  Eigen::VectorXi v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

}  // namespace test
