#pragma once

#include <stdexcept>
#include <string>

namespace hssnt {

enum class ErrorCode {
  InvalidSpec,
  ModelMismatch,
  DegenerateAbelian,
  ClusteringAmbiguity,
  NotHermitianType,
  NotSignedPermutation,
  CenterDimensionError,
  DecompositionFailure,
  BracketRelationFailure,
  UnknownName,
  NoSeriesAvailable,
  CertificateFailure,
  DomainExceeded,
  NotPositiveDefinite,
  NonPrincipalPoint,
  OutsideCutLocus,
  SingularJacobi,
  RankMismatch,
  DependentInput,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Every numerical threshold used by the library lives here.
struct ToleranceConfig {
  double structural = 1e-12;   // Jacobi, theta-automorphism, centrality
  double isometry = 1e-10;     // orthogonality, norms, projection residuals
  double cluster_gap = 1e-7;   // relative gap separating root values
  double spectral_merge = 1e-8;
  double reconstruction = 1e-9;
  double tripotent = 1e-8;
  double eigen_floor = 1e-12;
  double principal = 1e-3;     // min |alpha(v)| relative to |v|
  double clts = 1e-10;
  double lts = 1e-9;
};

const ToleranceConfig& default_tolerances();

}  // namespace hssnt
