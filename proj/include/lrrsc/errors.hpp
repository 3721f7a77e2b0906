#pragma once

#include <stdexcept>
#include <string>

namespace lrrsc {

/// Bad dimensions, out-of-range parameters, mismatched sizes.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File not readable/writable, or malformed content.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric breakdown outside the iteration loop (e.g. factorization failure).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite values appeared in a solver iterate; carries the offending iteration.
class divergence_error : public numeric_error {
public:
    divergence_error(int iteration, const std::string& what)
        : numeric_error(what), iteration_(iteration) {}

    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// The representation collapsed to rank zero; no affinity can be built from it.
class degenerate_representation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lrrsc
