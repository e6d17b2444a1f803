#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematically ill-posed request: division by a non-unit, log of a
/// non-positive number, a presentation that is not a Weil algebra, ...
struct domain_error : error {
    using error::error;
};

/// Malformed input: unparsable expression text, wrong arity, bad flags.
struct usage_error : error {
    using error::error;
};

} // namespace sdg
