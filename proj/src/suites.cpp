#include "hssnt/suites.hpp"

#include <cmath>

#include "hssnt/sampling.hpp"

namespace hssnt {

namespace {

constexpr double kAlg = 1e-10;    // algebraic identities
constexpr double kExact = 1e-9;   // closed-form scalar identities and round trips

// Residual lists carry a few "1/min eigenvalue" conditioning entries; those pass below 1e8.
void add_residuals(VerifyReport& r, const std::vector<Residual>& rs, double tol) {
  for (const Residual& x : rs) {
    const bool conditioning = x.name.find("1/min") != std::string::npos;
    r.add(x.name, x.value, conditioning ? 1e8 : tol);
  }
}

VerifyReport start(const std::string& name, const SuiteOptions& o) {
  VerifyReport r;
  r.name = name;
  r.samples = o.samples;
  r.seed = o.seed;
  return r;
}

SampleOptions sampled(const SuiteOptions& o, double tol) { return {o.samples, o.seed, o.tol.value_or(tol)}; }

// Max over samples of fn(rng); samples are independent streams of the run seed.
template <typename Fn>
double over_samples(int n, std::uint64_t seed, Fn fn) {
  std::vector<double> res(size_t(std::max(0, n)), 0.0);
  parallel_for(n, [&](int i) {
    Rng rng = sample_rng(seed, std::uint64_t(i));
    res[size_t(i)] = fn(rng);
  });
  double worst = 0.0;
  for (double v : res) worst = std::max(worst, std::isnan(v) ? kInf : v);
  return worst;
}

double rel_gap(const AlgVec& a, const AlgVec& b) {
  return (a.coeffs - b.coeffs).norm() / std::max(1.0, b.coeffs.norm());
}

std::string expected_type(const SpaceSpec& spec) {
  if (spec.family == Family::SP_N_R) return "C" + std::to_string(spec.p);
  const int r = std::min(spec.p, spec.q);
  return (spec.p == spec.q ? "C" : "BC") + std::to_string(r);
}

int expected_multiplicity(const SpaceSpec& spec, const Root& a) {
  if (spec.family == Family::SP_N_R || a.kind == RootKind::gamma) return 1;
  if (a.kind == RootKind::eps) return 2 * std::abs(spec.q - spec.p);
  return 2;
}

VerifyReport suite_roots(const Space& s, const SuiteOptions& o) {
  const Model& m = s.model;
  const RootDatum& d = s.roots;
  VerifyReport r = start("roots", o);
  r.add("Jacobi identity", jacobi_residual(m), 1e-12);
  r.add("[k,k] in k, [k,p] in p, [p,p] in k", grading_residual(m), 1e-12);
  r.add("theta automorphism", theta_residual(m), 1e-12);
  r.add("ad(k) skew, ad(p) symmetric", ad_self_adjoint_residual(m), 1e-12);
  const RootChecks rc = root_checks(m, d);
  r.add("p = a + sum p_alpha", rc.reconstruction, kAlg);
  r.add("<H_i, H_j> = C delta_ij", rc.orthogonality, kAlg);
  r.add("H_alpha from root vectors = covector dual", rc.root_vector_vs_covector, kAlg);
  r.add("|X^k| = |X^p|", rc.kp_norms, kAlg);
  r.add("[k_a, p_b] in p_(a+b) + p_(a-b)", rc.grading, kAlg);
  r.add("type " + d.type_name() + " (expected " + expected_type(m.spec) + ")",
        d.type_name() == expected_type(m.spec) ? 0.0 : 1.0, 0.0);
  double mult = 0.0;
  for (const Root& a : d.positive) mult = std::max(mult, double(std::abs(a.multiplicity - expected_multiplicity(m.spec, a))));
  r.add("multiplicities", mult, 0.0);
  double weyl = 0.0;
  for (const Root& a : d.positive) weyl = std::max(weyl, weyl_signed_permutation(m, d, {a.e}).residual);
  r.add("root reflections act as signed permutations of H~", weyl, kAlg);
  return r;
}

VerifyReport suite_kahler(const Space& s, const SuiteOptions& o) {
  VerifyReport r = start("kahler", o);
  add_residuals(r, kahler_checks(s.model, s.roots, s.kahler), kAlg);
  add_residuals(r, verify_J_mapping(s.model, s.roots, s.kahler), kAlg);
  return r;
}

VerifyReport suite_polydisk(const Space& s, const SuiteOptions& o) {
  VerifyReport r = start("polydisk", o);
  add_residuals(r, polydisk_checks(s.model, s.roots, s.kahler, s.poly), kAlg);
  double trip = 0.0, orth = 0.0;
  for (int i = 0; i < s.roots.rank; ++i) {
    const AlgVec& H = s.roots.H_tilde[size_t(i)];
    trip = std::max(trip, norm(s.model, triple_product(s, H, H, H) - 2.0 * H));
    for (int j = 0; j < s.roots.rank; ++j)
      if (i != j) orth = std::max(orth, D_operator(s, H, s.roots.H_tilde[size_t(j)]).cwiseAbs().maxCoeff());
  }
  r.add("{H~_i, H~_i, H~_i} = 2 H~_i", trip, kAlg);
  r.add("D(H~_i, H~_j) = 0", orth, kAlg);
  return r;
}

double block_identity(const Space& s, const OddMap& eta, int n, std::uint64_t seed, bool G, bool dual) {
  const RootDatum& d = s.roots;
  const double hi = dual ? M_PI / 2 - 0.1 : 2.0;
  return over_samples(n, seed, [&](Rng& rng) {
    const Vec x = random_principal(d, rng, 1e-3, hi);
    double worst = 0.0;
    for (size_t k = 0; k < d.positive.size(); ++k) {
      if (d.positive[k].kind == RootKind::lambda_bar) continue;
      const int ik = int(k);
      const double v = dual ? (G ? evaluate_G_star(d, eta, ik, x) : evaluate_F_star(d, eta, ik, x))
                            : (G ? evaluate_G(d, eta, ik, x) : evaluate_F(d, eta, ik, x));
      worst = std::max(worst, std::abs(v - 1.0));
    }
    return worst;
  });
}

VerifyReport suite_holo(const Space& s, const SuiteOptions& o) {
  const OddMap eta = o.eta.value_or(builtin_odd("tanh"));
  VerifyReport r = start("holo", o);
  const int n = std::max(o.samples, 100);
  r.add("G_eta,alpha = 1 (" + eta.name + ")", block_identity(s, eta, n, o.seed, true, false), kExact);
  const PMap f = [&](const AlgVec& X) { return odd_calculus(s, X, eta); };
  r.append(check_holomorphic(s, f, "Omega_" + eta.name, sampled(o, 1e-5)));
  r.append(check_block_scalars(s, eta, sampled(o, 1e-5)));
  r.append(check_equivariance(s, f, "Omega_" + eta.name, sampled(o, 1e-9)));
  return r;
}

VerifyReport suite_symp(const Space& s, const SuiteOptions& o) {
  const OddMap eta = o.eta.value_or(builtin_odd("sinh"));
  VerifyReport r = start("symp", o);
  const int n = std::max(o.samples, 100);
  r.add("F_eta,alpha = 1 (" + eta.name + ")", block_identity(s, eta, n, o.seed, false, false), kExact);
  const PMap f = [&](const AlgVec& X) { return odd_calculus(s, X, eta); };
  r.append(check_symplectic(s, f, "Omega_" + eta.name, sampled(o, 1e-5)));
  r.append(check_block_scalars(s, eta, sampled(o, 1e-5)));
  r.append(check_equivariance(s, f, "Omega_" + eta.name, sampled(o, 1e-9)));
  return r;
}

VerifyReport suite_dual(const Space& s, const SuiteOptions& o) {
  VerifyReport r = start("dual", o);
  const DualSpace d = build_dual(s);
  add_residuals(r, dual_checks(s, d), kAlg);
  const OddMap tan = builtin_odd("tan"), sin = builtin_odd("sin");
  const int n = std::max(o.samples, 100);
  r.add("G*_tan = 1", block_identity(s, tan, n, o.seed, true, true), kExact);
  r.add("F*_sin = 1", block_identity(s, sin, n, o.seed, false, true), kExact);
  const PMap ftan = [&](const AlgVec& X) { return omega_eta_star(s, X, tan); };
  const PMap fsin = [&](const AlgVec& X) { return omega_eta_star(s, X, sin); };
  r.append(check_holomorphic(s, d, ftan, "Omega*_tan", sampled(o, 1e-5)));
  r.append(check_symplectic(s, d, fsin, "Omega*_sin", sampled(o, 1e-5)));
  r.append(check_equivariance(s, ftan, "Omega*_tan", sampled(o, 1e-9), M_PI / 2 - 0.1, true));
  const double diastatic = over_samples(o.samples, o.seed, [&](Rng& rng) {
    const Vec x = random_principal(s.roots, rng, 1e-3, M_PI / 2 - 0.1);
    const AlgVec X = iota(random_point(s, rng, x));
    return rel_gap(diastatic_exp_star(s, diastatic_log_star(s, X)), X);
  });
  r.add("DE*(DL*(X)) = X", diastatic, kExact);
  Vec edge = Vec::Constant(s.roots.rank, M_PI / 2);
  r.add("cut cube excludes |x| = pi/2", cut_cube_membership(edge) ? 1.0 : 0.0, 0.0);
  return r;
}

VerifyReport suite_bergman(const Space& s, const SuiteOptions& o) {
  const Model& m = s.model;
  VerifyReport r = start("bergman", o);
  const OddMap sa = builtin_odd("sinh_artanh");
  const int n = std::max(o.samples, 50);
  auto in_domain = [&](Rng& rng) { return random_point(s, rng, random_principal(s.roots, rng, 1e-3, 0.95)); };
  r.add("B(z,z)^(-1/4) z = z/sqrt(1-z^2)", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec z = in_domain(rng);
          return rel_gap(dsl_roos_map(s, z), odd_calculus(s, z, sa));
        }), 1e-8);
  r.add("B(z,z) self-adjoint", over_samples(n, o.seed, [&](Rng& rng) {
          const Mat GB = m.inner_gram_p * bergman_operator(s, in_domain(rng));
          return (GB - GB.transpose()).cwiseAbs().maxCoeff();
        }), kAlg);
  r.add("DSL o Psi = Phi", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec X = random_point(s, rng, random_principal(s.roots, rng, 1e-3, 2.0));
          return rel_gap(dsl_roos_map(s, harish_chandra(s, X)), symplecto(s, X));
        }), 1e-8);
  r.add("DE(DL(z)) = z", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec z = in_domain(rng);
          return rel_gap(diastatic_exp(s, diastatic_log(s, z)), z);
        }), kExact);
  const double lam = 0.6;
  const AlgVec z = lam * s.roots.H_tilde[0];
  const Mat GB = m.inner_gram_p * bergman_operator(s, z);
  const Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(0.5 * (GB + GB.transpose()), m.inner_gram_p);
  const double target = std::pow(1 - lam * lam, 2);
  r.add("(1-l^2)^2 in spectrum of B(l H~_1, l H~_1)", (es.eigenvalues().array() - target).abs().minCoeff(), kAlg);
  return r;
}

VerifyReport suite_duality(const Space& s, const SuiteOptions& o) {
  VerifyReport r = start("duality", o);
  const OddMap asin_tanh = compose(builtin_odd("arcsin"), builtin_odd("tanh"));
  const OddMap atan_sinh = compose(builtin_odd("arctan"), builtin_odd("sinh"));
  const OddMap tan = builtin_odd("tan"), sin = builtin_odd("sin");
  const int n = std::max(o.samples, 50);
  auto point = [&](Rng& rng) { return random_point(s, rng, random_principal(s.roots, rng, 1e-3, 2.0)); };
  r.add("arcsin(tanh X) = arctan(sinh X)", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec X = point(rng);
          return rel_gap(odd_calculus(s, X, asin_tanh), odd_calculus(s, X, atan_sinh));
        }), 1e-10);
  r.add("tan(gd X) = sinh X", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec X = point(rng);
          return rel_gap(omega_eta_star(s, gudermann_composite(s, X), tan), iota(symplecto(s, X)));
        }), kExact);
  r.add("sin(gd X) = tanh X", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec X = point(rng);
          return rel_gap(omega_eta_star(s, gudermann_composite(s, X), sin), iota(harish_chandra(s, X)));
        }), kExact);
  r.add("gd X inside the cut cube", over_samples(n, o.seed, [&](Rng& rng) {
          const SpectralDecomp sd = spectral_decompose(s, gudermann_composite(s, point(rng)));
          return sd.values.empty() || sd.values.front() < M_PI / 2 ? 0.0 : 1.0;
        }), 0.0);
  r.add("Omega_tanh o Omega_artanh = id", over_samples(n, o.seed, [&](Rng& rng) {
          const AlgVec z = random_point(s, rng, random_principal(s.roots, rng, 1e-3, 0.95));
          return rel_gap(harish_chandra(s, odd_calculus(s, z, builtin_odd("artanh"))), z);
        }), kExact);
  return r;
}

VerifyReport suite_tgeo(const Space& s, const SuiteOptions& o) {
  VerifyReport r = start("tgeo", o);
  const int rank = s.roots.rank;
  const Mat I = Mat::Identity(rank, rank);
  const std::vector<AlgVec> a = subspace_vectors(s, canonical_basis(I));
  r.add("a + J0 a is a Lie triple system", lts_residual(s, complexified(s, a)), 1e-9);
  std::vector<AlgVec> p;
  for (int i = 0; i < s.model.dim_p; ++i) p.push_back(s.model.from_p(Vec::Unit(s.model.dim_p, i)));
  r.add("p is a Lie triple system", lts_residual(s, p), 1e-9);
  r.add("bracket relations on {H~_i}", abra_residual(s, a), 1e-9);
  if (rank >= 2) {
    Mat bad = Mat::Zero(1, rank);
    bad(0, 0) = 1.0;
    bad(0, 1) = 2.0;
    const AbelianSubspace sub = canonical_basis(bad);
    const std::vector<AlgVec> V = subspace_vectors(s, sub);
    r.add("H~_1 + 2H~_2 rejected by has_clts", has_clts(sub) ? 1.0 : 0.0, 0.0);
    r.add("H~_1 + 2H~_2 rejected by verify_lts", verify_lts(s, complexified(s, V)) ? 1.0 : 0.0, 0.0);
    r.add("H~_1 + 2H~_2 rejected by abra_check", abra_check(s, V) ? 1.0 : 0.0, 0.0);
  }
  if (rank == 2) {
    const GridSummary g = rank2_grid(s, {builtin_odd("sinh"), builtin_odd("tanh"), builtin_odd("loi_mossa")},
                                     {std::min(o.samples, 8), o.seed, 1e-9});
    r.add("grid: has_clts = verify_lts = abra_check (" + std::to_string(g.cells.size()) + " subspaces)",
          g.route_disagreements, 0.0);
    r.add("grid: restriction holds exactly on CLTS subspaces", g.restriction_disagreements, 0.0);
    r.add("grid: four CLTS lines", std::abs(double(g.clts_lines.size()) - 4.0), 0.0);
  } else {
    Mat all = Mat::Ones(1, rank);
    const AbelianSubspace diag = canonical_basis(all);
    for (const char* name : {"sinh", "tanh", "loi_mossa"})
      r.append(restriction_check(s, diag, builtin_odd(name), {o.samples, o.seed, 1e-9}));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roots", "kahler",  "polydisk", "holo", "symp",
                                                 "dual",  "bergman", "duality",  "tgeo", "all"};
  return names;
}

VerifyReport run_suite(const Space& s, const std::string& suite, const SuiteOptions& o) {
  if (suite == "roots") return suite_roots(s, o);
  if (suite == "kahler") return suite_kahler(s, o);
  if (suite == "polydisk") return suite_polydisk(s, o);
  if (suite == "holo") return suite_holo(s, o);
  if (suite == "symp") return suite_symp(s, o);
  if (suite == "dual") return suite_dual(s, o);
  if (suite == "bergman") return suite_bergman(s, o);
  if (suite == "duality") return suite_duality(s, o);
  if (suite == "tgeo") return suite_tgeo(s, o);
  if (suite == "all") {
    VerifyReport r = start("all", o);
    for (const std::string& name : suite_names())
      if (name != "all") r.append(run_suite(s, name, o));
    return r;
  }
  throw Error(ErrorCode::UnknownName, "unknown suite '" + suite + "'");
}

}  // namespace hssnt
