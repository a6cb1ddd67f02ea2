#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

/// Bad argument: violated precondition on user-supplied data.
class invalid_input : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold did not. Signals a bug (or a wrong
/// convention), never bad input.
class invariant_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace hilb
