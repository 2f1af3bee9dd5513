#pragma once

#include <stdexcept>
#include <string>

namespace mdinf {

// Invalid user input: non-positive rates, NaN arguments, out-of-range knobs.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A requested quantity left the representable floating range (e.g. e^{2*rho}
// overflow). Raised instead of silently returning inf.
class numeric_range_error : public std::range_error {
public:
    explicit numeric_range_error(const std::string& what) : std::range_error(what) {}
};

// Transform evaluated too close to a denominator zero.
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured budget (term caps, iteration guards).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Two methods that must agree within a guaranteed band failed to do so.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdinf
