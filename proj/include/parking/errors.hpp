#pragma once

#include <stdexcept>
#include <string>

namespace parking {

// Malformed input: unparsable literals, entries outside the declared domain,
// labels missing from a street.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's mathematical domain,
// e.g. stripping a 1 from a word that has none.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive oracles refuse sizes beyond their desk-scale guard.
class guard_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace parking
