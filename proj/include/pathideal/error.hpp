#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathideal {

enum class ErrorCode {
    CycleDetected,
    DuplicateEdge,
    VertexOutOfRange,
    EdgeNotPresent,
    EmptySet,
    EmptyEdge,
    NotAntichain,
    VertexCountMismatch,
    BudgetExceeded,
    EmptyMonomial,
    NotIndependent,
    EdgeNotInSet,
    NotMaximal,
    NotSubtreeClutter,
    InternalContradiction,
    NotConnected,
    HypothesisViolated,
    EmptyComplex,
    NotSimplicialTree,
    CapExceeded,
    Mismatch,
    InvalidArgument,
    FileFormat,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyMonomial: return "EmptyMonomial";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::EdgeNotInSet: return "EdgeNotInSet";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotSubtreeClutter: return "NotSubtreeClutter";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::NotSimplicialTree: return "NotSimplicialTree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FileFormat: return "FileFormat";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pathideal
