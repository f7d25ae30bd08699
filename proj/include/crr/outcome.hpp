#ifndef CRR_OUTCOME_HPP
#define CRR_OUTCOME_HPP

#include <string>

#include "crr/errors.hpp"

namespace crr {

// Solve outcome classes. "indetermined" means the timeout was exceeded.
enum class Outcome { sat, unsat, indetermined };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::sat: return "sat";
    case Outcome::unsat: return "unsat";
    case Outcome::indetermined: return "indet";
  }
  return "?";
}

inline Outcome outcome_from_string(const std::string& s) {
  if (s == "sat") return Outcome::sat;
  if (s == "unsat") return Outcome::unsat;
  if (s == "indet" || s == "indetermined") return Outcome::indetermined;
  throw ParseError("unknown outcome: " + s);
}

}  // namespace crr

#endif
