#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* structure constant / unit validation */
struct AssociativityViolation : Error {
  std::size_t i, j, k;
  AssociativityViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error("associativity fails at basis triple (" + std::to_string(i_) + ", " +
              std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct UnitViolation : Error {
  using Error::Error;
};

/* radical computation */
struct CharPUnsupported : Error {
  using Error::Error;
};
struct VerificationFailed : Error {
  using Error::Error;
};

/* module decomposition */
struct NotSplit : Error {
  using Error::Error;
};

/* cochain bookkeeping */
struct IndexMismatch : Error {
  using Error::Error;
};

/* test rings and deformations */
struct StructuralMapViolation : Error {
  using Error::Error;
};
struct RadicalNotNilpotent : Error {
  using Error::Error;
};
struct NilpotencyTooDeep : Error {
  using Error::Error;
};

/* hull construction */
struct ObstructionProjectionFailure : Error {
  using Error::Error;
};
struct HullNotStable : Error {
  using Error::Error;
};
struct NotLiftable : Error {
  using Error::Error;
};

/* observables */
struct MorphismCheckFailed : Error {
  using Error::Error;
};
struct NotWellDefined : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};

}  // namespace burnside
