#pragma once

#include <stdexcept>
#include <string>

namespace pitail {

/// Thrown by catalog lookups with an id outside 1..36.
class series_not_found : public std::out_of_range {
public:
    explicit series_not_found(int id)
        : std::out_of_range("series not in catalog: " + std::to_string(id)) {}
};

/// Requested precision cannot be met or a result cannot be resolved at it.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource limit (e.g. the tail-summation term cap) was hit.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pitail
