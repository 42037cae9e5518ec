#pragma once

#include <stdexcept>
#include <string>

namespace annuli {

// Failure taxonomy. Domain errors mean the request is outside the object's
// domain of validity; numerical errors mean an algorithm failed to converge
// on a valid input.
enum class ErrorKind {
  NonRectangular,
  RootFailure,
  PoleProximity,
  DomainError,
  ConservationBreach,
  NotOmega0,
  NoBracket,
  OutOfRange,
  MuNotFound,
  DegenerateV0,
  VertexHit,
  NoSignChange,
  StepFailure,
  GridTooCoarse,
  Degenerate,
  IoError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonRectangular: return "NonRectangular";
    case ErrorKind::RootFailure: return "RootFailure";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConservationBreach: return "ConservationBreach";
    case ErrorKind::NotOmega0: return "NotOmega0";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MuNotFound: return "MuNotFound";
    case ErrorKind::DegenerateV0: return "DegenerateV0";
    case ErrorKind::VertexHit: return "VertexHit";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // True for errors caused by arguments outside the supported domain
  // (as opposed to a numerical method failing on a valid input).
  bool is_domain() const {
    switch (kind_) {
      case ErrorKind::NonRectangular:
      case ErrorKind::DomainError:
      case ErrorKind::NotOmega0:
      case ErrorKind::OutOfRange:
      case ErrorKind::NoSignChange:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace annuli
