#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypereig {

enum class Errc {
  EdgeWrongSize,
  VertexOutOfRange,
  DuplicateEdge,
  EdgeIndexOutOfRange,
  DisconnectedInput,
  NoEdges,
  InfeasibleParameters,
  InvalidParameters,
  DimensionMismatch,
  NotNormalized,
  MaxIterationsExceeded,
  NotConverged,
  NonPositiveDenominator,
  Inapplicable,
  ParseError,
};

constexpr std::string_view to_string(Errc c) noexcept {
  switch (c) {
    case Errc::EdgeWrongSize: return "EdgeWrongSize";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::EdgeIndexOutOfRange: return "EdgeIndexOutOfRange";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::NoEdges: return "NoEdges";
    case Errc::InfeasibleParameters: return "InfeasibleParameters";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case Errc::NotConverged: return "NotConverged";
    case Errc::NonPositiveDenominator: return "NonPositiveDenominator";
    case Errc::Inapplicable: return "Inapplicable";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the text reader; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hypereig
