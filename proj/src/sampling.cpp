#include "hssnt/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hssnt {

Rng sample_rng(std::uint64_t seed, std::uint64_t i) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(i), std::uint32_t(i >> 32)};
  return Rng(seq);
}

Vec gaussian(Rng& rng, int n) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = nd(rng);
  return v;
}

AlgVec random_k(const Model& m, Rng& rng, double scale) { return m.from_k(scale * gaussian(rng, m.dim_k)); }

AlgVec random_p(const Model& m, Rng& rng, double scale) { return m.from_p(scale * gaussian(rng, m.dim_p)); }

bool is_principal(const RootDatum& d, const Vec& x, double rel) {
  const double top = x.cwiseAbs().maxCoeff();
  if (top == 0.0) return false;
  for (const Root& a : d.positive)
    if (std::abs(a.at(x)) <= rel * top) return false;
  return true;
}

Vec random_principal(const RootDatum& d, Rng& rng, double lo, double hi, double rel) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    Vec x(d.rank);
    for (int i = 0; i < d.rank; ++i) x(i) = (coin(rng) ? -1.0 : 1.0) * u(rng);
    if (is_principal(d, x, rel)) return x;
  }
}

AlgVec random_point(const Space& s, Rng& rng, const Vec& x) {
  const AlgVec Z = random_k(s.model, rng);
  return adjoint_action(s.model, Z, s.roots.from_a_coords(x));
}

int thread_count() {
  int n = int(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("HSSNT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int t = std::min(thread_count(), n);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hssnt
