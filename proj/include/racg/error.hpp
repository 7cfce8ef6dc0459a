#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace racg {

enum class ErrorCode {
  DuplicateVertex,
  UnknownEndpoint,
  SelfLoop,
  UnknownVertex,
  TooManyVertices,
  SIsWholeGraph,
  Disconnected,
  CompleteGraph,
  EmptyGraph,
  NotPlanar,
  ContainsK4,
  TriangleNotFillable,
  EmbeddingSearchExceeded,
  InvalidEmbedding,
  NotInducedFourCycle,
  NotPrime,
  NotStronglySeparating,
  StandingAssumptionsViolated,
  NonSpecialVertexComplex,
  NotCFS,
  IsJoin,
  PartialMap,
  HypothesisViolated,
  NotInducedMember,
  ClosureNotThick,
  CapraceVerificationFailed,
  PreconditionViolated,
  NoSeparatingSubgraph,
  TypeUnassigned,
  ParseError,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps onto exit statuses; the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& expectation)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  expectation),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace racg
