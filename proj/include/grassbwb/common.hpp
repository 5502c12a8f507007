#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grassbwb {

/// Thrown when a computation reaches a state the underlying mathematics
/// forbids (non-integral intersection number, infeasible spectral sequence,
/// Noether non-divisibility, ...).  Distinct from std::invalid_argument,
/// which is reserved for caller precondition violations.
class hard_error : public std::runtime_error {
public:
    explicit hard_error(const std::string& what) : std::runtime_error(what) {}
};

using i64 = std::int64_t;

}  // namespace grassbwb
