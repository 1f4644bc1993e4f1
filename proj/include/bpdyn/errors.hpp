#pragma once

#include <stdexcept>
#include <string>

namespace bpdyn {

// Thrown when an operation would exceed the subset-enumeration capacity
// (graphs of order > Graph::kMaxOrder). Distinct from invalid_argument so
// callers can tell "bad input" from "too big to enumerate".
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace bpdyn
