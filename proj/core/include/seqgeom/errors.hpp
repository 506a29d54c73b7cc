#pragma once

#include <stdexcept>
#include <string>

namespace seqgeom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateCrossRatio : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct InvalidSequence : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct UnsatisfiedWitness : Error { using Error::Error; };
struct NotConstructible : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ConstructionFailure : Error { using Error::Error; };
struct InvalidScene : Error { using Error::Error; };
struct AdaptationFailed : Error { using Error::Error; };
struct TargetInvalid : Error { using Error::Error; };

}  // namespace seqgeom
