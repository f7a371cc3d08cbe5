#include "qlab/error.hpp"

namespace qlab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::IndexOut: return "IndexOut";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::SubsetViolation: return "SubsetViolation";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::BoundsViolation: return "BoundsViolation";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::NumeratorOverflow: return "NumeratorOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qlab
