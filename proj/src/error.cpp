#include "leibniz/error.hpp"

namespace leibniz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SubspaceNotContained: return "SubspaceNotContained";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BracketNotWellDefined: return "BracketNotWellDefined";
    case ErrorCode::RelationNotKilled: return "RelationNotKilled";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::IdealNotCentral: return "IdealNotCentral";
    case ErrorCode::NotAComplement: return "NotAComplement";
    case ErrorCode::NotCentralInPair: return "NotCentralInPair";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace leibniz
