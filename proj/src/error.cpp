#include "tsharp/error.hpp"

namespace tsharp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadB1: return "BadB1";
    case ErrorKind::IncompatibleExtremal: return "IncompatibleExtremal";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::EmptyScan: return "EmptyScan";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tsharp
