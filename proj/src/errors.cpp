#include "pdcoh/errors.hpp"

namespace pdcoh {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidCartanSpec: return "InvalidCartanSpec";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::NotDominant: return "NotDominant";
        case ErrorKind::MuNotGaloisStable: return "MuNotGaloisStable";
        case ErrorKind::FrameMismatch: return "FrameMismatch";
        case ErrorKind::InvalidMu: return "InvalidMu";
        case ErrorKind::NotBasic: return "NotBasic";
        case ErrorKind::DenominatorNotDividing: return "DenominatorNotDividing";
        case ErrorKind::EmptyPeriodDomain: return "EmptyPeriodDomain";
        case ErrorKind::GaloisIncompatible: return "GaloisIncompatible";
        case ErrorKind::DualBasisViolation: return "DualBasisViolation";
        case ErrorKind::BadSubset: return "BadSubset";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::EmptyBoundary: return "EmptyBoundary";
        case ErrorKind::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
        case ErrorKind::UnknownIndex: return "UnknownIndex";
        case ErrorKind::OrbitInconsistency: return "OrbitInconsistency";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

}  // namespace pdcoh
