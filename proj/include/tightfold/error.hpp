#pragma once

#include <stdexcept>
#include <string>

namespace tightfold {

enum class ErrorKind {
  NonManifold,
  NotThreeConnected,
  EulerViolation,
  FaceNotPlanar,
  NotTight,
  EdgeNotOnFace,
  PatternMismatch,
  InvalidRecombination,
  NotInteriorToTriangles,
  NotFlippable,
  NotTriangulation,
  PropagationOverrun,
  NoValidDiagonal,
  DesignationInvalid,
  NoConnectedRewiring,
  NotLongestPair,
  DegenerateTriangle,
  ArcMismatch,
  SyntaxError,
  IndexOutOfRange,
  UnknownShape,
  InstanceTooLarge,
  IoError,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonManifold: return "NonManifold";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::FaceNotPlanar: return "FaceNotPlanar";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::EdgeNotOnFace: return "EdgeNotOnFace";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::InvalidRecombination: return "InvalidRecombination";
    case ErrorKind::NotInteriorToTriangles: return "NotInteriorToTriangles";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::NotTriangulation: return "NotTriangulation";
    case ErrorKind::PropagationOverrun: return "PropagationOverrun";
    case ErrorKind::NoValidDiagonal: return "NoValidDiagonal";
    case ErrorKind::DesignationInvalid: return "DesignationInvalid";
    case ErrorKind::NoConnectedRewiring: return "NoConnectedRewiring";
    case ErrorKind::NotLongestPair: return "NotLongestPair";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::ArcMismatch: return "ArcMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownShape: return "UnknownShape";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

// Single exception type; the kind discriminates the spec-level error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Always-on invariant check (independent of NDEBUG).
#define TF_CHECK(cond, kind, msg) \
  do {                            \
    if (!(cond)) ::tightfold::fail((kind), (msg)); \
  } while (0)

}  // namespace tightfold
