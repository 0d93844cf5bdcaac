#pragma once

#include <stdexcept>
#include <string>

namespace sumquot {

// Rejected input: the caller handed us something outside an operation's
// domain (zero denominator, nonpositive element, malformed file, ...).
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A violated internal soundness assertion.  If one of these fires, the
// library produced something it cannot certify; the CLI maps it to exit
// code 2.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_input(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void require_invariant(bool ok, const std::string& msg) {
    if (!ok) throw invariant_error(msg);
}

} // namespace sumquot
