#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adegree {

/// Thrown when a computation exceeds the configured coefficient bit budget.
/// Callers catch this to report partial results instead of consuming
/// unbounded memory.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Total bits allowed across all coefficients of a single polynomial (or all
// coordinates of a single point). Default 2^20.
std::int64_t coefficient_bit_budget();
void set_coefficient_bit_budget(std::int64_t bits);

} // namespace adegree
