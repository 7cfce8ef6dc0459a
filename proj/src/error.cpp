#include "racg/error.hpp"

namespace racg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::SIsWholeGraph: return "SIsWholeGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CompleteGraph: return "CompleteGraph";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::ContainsK4: return "ContainsK4";
    case ErrorCode::TriangleNotFillable: return "TriangleNotFillable";
    case ErrorCode::EmbeddingSearchExceeded: return "EmbeddingSearchExceeded";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::NotInducedFourCycle: return "NotInducedFourCycle";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotStronglySeparating: return "NotStronglySeparating";
    case ErrorCode::StandingAssumptionsViolated: return "StandingAssumptionsViolated";
    case ErrorCode::NonSpecialVertexComplex: return "NonSpecialVertexComplex";
    case ErrorCode::NotCFS: return "NotCFS";
    case ErrorCode::IsJoin: return "IsJoin";
    case ErrorCode::PartialMap: return "PartialMap";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotInducedMember: return "NotInducedMember";
    case ErrorCode::ClosureNotThick: return "ClosureNotThick";
    case ErrorCode::CapraceVerificationFailed: return "CapraceVerificationFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoSeparatingSubgraph: return "NoSeparatingSubgraph";
    case ErrorCode::TypeUnassigned: return "TypeUnassigned";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace racg
