#include "hssnt/config.hpp"

namespace hssnt {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::DegenerateAbelian: return "DegenerateAbelian";
    case ErrorCode::ClusteringAmbiguity: return "ClusteringAmbiguity";
    case ErrorCode::NotHermitianType: return "NotHermitianType";
    case ErrorCode::NotSignedPermutation: return "NotSignedPermutation";
    case ErrorCode::CenterDimensionError: return "CenterDimensionError";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::BracketRelationFailure: return "BracketRelationFailure";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NoSeriesAvailable: return "NoSeriesAvailable";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NonPrincipalPoint: return "NonPrincipalPoint";
    case ErrorCode::OutsideCutLocus: return "OutsideCutLocus";
    case ErrorCode::SingularJacobi: return "SingularJacobi";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::DependentInput: return "DependentInput";
  }
  return "Error";
}

const ToleranceConfig& default_tolerances() {
  static const ToleranceConfig t{};
  return t;
}

}  // namespace hssnt
