#pragma once

#include <stdexcept>
#include <string>

namespace degform {

/* An argument violates an operation's contract (bad operand, zero divisor,
 * mismatched series orders, a point index that does not divide the degree
 * product, ...). */
class invalid_operand_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* A criterion was queried outside its domain of applicability, e.g. a Rost
 * number at a prime p with (p-1) not dividing dim X. */
class not_applicable_error : public invalid_operand_error {
  public:
    using invalid_operand_error::invalid_operand_error;
};

/* A quantity the theory proves integral (or divisible) failed to be so.
 * This can only happen through a bug, never through user input. */
class internal_inconsistency_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace degform
