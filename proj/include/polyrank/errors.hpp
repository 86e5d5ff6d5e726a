#pragma once

#include <stdexcept>
#include <string>

namespace polyrank {

// Bad data supplied by the caller: malformed files, out-of-range parameters,
// violated operation preconditions.  The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A degree-redistribution step whose post-degree verification failed.  This
// is expected behaviour for unlucky epsilon values; callers retry with a
// smaller one.
class epsilon_too_large : public input_error {
public:
    epsilon_too_large() : input_error("epsilon not small enough") {}
    explicit epsilon_too_large(const std::string& detail)
        : input_error("epsilon not small enough: " + detail) {}
};

// A rejection sampler ran out of attempts.
class attempts_exhausted : public input_error {
public:
    using input_error::input_error;
};

// A broken internal invariant, i.e. a bug.  The CLI maps this to exit code 3.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace polyrank
