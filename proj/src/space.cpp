#include "hssnt/space.hpp"

namespace hssnt {

Space make_space(const SpaceSpec& spec) {
  Space s;
  s.model = build_model(spec);
  s.roots = restricted_roots(s.model);
  s.kahler.zeta = central_element(s.model);
  std::tie(s.kahler.J0, s.kahler.omega0) = complex_structure(s.model, s.kahler.zeta);
  z_basis(s.model, s.roots, s.kahler);
  s.poly = polydisk(s.model, s.roots, s.kahler);
  const CMat H = s.model.to_matrix(s.roots.H_tilde[0]);
  s.tripotent_scale = Eigen::SelfAdjointEigenSolver<CMat>(H).eigenvalues().cwiseAbs().maxCoeff();
  return s;
}

}  // namespace hssnt
