#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "hssnt/space.hpp"

namespace hssnt {

using Rng = std::mt19937_64;

// Independent deterministic stream for sample i of a run seeded with seed.
Rng sample_rng(std::uint64_t seed, std::uint64_t i);

Vec gaussian(Rng& rng, int n);
AlgVec random_k(const Model& m, Rng& rng, double scale = 1.0);
AlgVec random_p(const Model& m, Rng& rng, double scale = 1.0);

// H~-coordinates with |x_i| in (lo, hi], random signs, principal (min |alpha(x)| > rel * max|x_i|).
Vec random_principal(const RootDatum& d, Rng& rng, double lo, double hi, double rel = 1e-3);
bool is_principal(const RootDatum& d, const Vec& x, double rel = 1e-3);

// Ad(exp Z) sum x_i H~_i for random Z in k.
AlgVec random_point(const Space& s, Rng& rng, const Vec& x);

// Runs fn(i) for i in [0, n) on up to HSSNT_THREADS threads.
void parallel_for(int n, const std::function<void(int)>& fn);
int thread_count();

}  // namespace hssnt
