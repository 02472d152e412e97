#include "tetramax/error.hpp"

namespace tetramax {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MetricInfeasible: return "MetricInfeasible";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::NonConvexPolygon: return "NonConvexPolygon";
    case ErrorCode::DepthInsufficient: return "DepthInsufficient";
    case ErrorCode::NonGenericPosition: return "NonGenericPosition";
    case ErrorCode::MalformedVoronoi: return "MalformedVoronoi";
    case ErrorCode::UnclassifiableTree: return "UnclassifiableTree";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InapplicableCensus: return "InapplicableCensus";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AngleExcess: return "AngleExcess";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::WrongConeCount: return "WrongConeCount";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tetramax
