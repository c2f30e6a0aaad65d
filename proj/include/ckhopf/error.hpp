#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ckhopf {

enum class ErrorCode {
  // graph validation
  NonPairEdge,
  OverlappingPartition,
  ExternalNotUnivalent,
  DanglingHalfEdge,
  // graph operations
  NotInternalEdge,
  EmptySubgraph,
  NotInternalVertex,
  ValencyMismatch,
  // algebra
  WindowTooSmall,
  PreconditionViolated,
  ResourceBound,
  // chord/tensor side
  DimensionTooSmall,
  DimensionMismatch,
  LengthMismatch,
  ShapeMismatch,
  EmptyVertexUnsupported,
  InhomogeneousInput,
  NotInLPlus,
  // io
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code)
{
  switch (code) {
  case ErrorCode::NonPairEdge: return "NonPairEdge";
  case ErrorCode::OverlappingPartition: return "OverlappingPartition";
  case ErrorCode::ExternalNotUnivalent: return "ExternalNotUnivalent";
  case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
  case ErrorCode::NotInternalEdge: return "NotInternalEdge";
  case ErrorCode::EmptySubgraph: return "EmptySubgraph";
  case ErrorCode::NotInternalVertex: return "NotInternalVertex";
  case ErrorCode::ValencyMismatch: return "ValencyMismatch";
  case ErrorCode::WindowTooSmall: return "WindowTooSmall";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::ResourceBound: return "ResourceBound";
  case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::LengthMismatch: return "LengthMismatch";
  case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  case ErrorCode::EmptyVertexUnsupported: return "EmptyVertexUnsupported";
  case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
  case ErrorCode::NotInLPlus: return "NotInLPlus";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace ckhopf
