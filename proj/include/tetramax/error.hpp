#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tetramax {

enum class ErrorCode {
  DegenerateInput,
  MetricInfeasible,
  SamplerExhausted,
  NonConvexPolygon,
  DepthInsufficient,
  NonGenericPosition,
  MalformedVoronoi,
  UnclassifiableTree,
  BudgetExhausted,
  InapplicableCensus,
  LengthMismatch,
  AngleExcess,
  NotASphere,
  WrongConeCount,
  ParamOutOfRange,
  SolveFailed,
  EmptyInput,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and machine readable.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tetramax
