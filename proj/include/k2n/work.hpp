#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k2n {

// Thrown when an exact search exceeds its step budget. Distinct from "absent":
// callers that catch this know the question was not decided.
struct WorkLimitExceeded : std::runtime_error {
    explicit WorkLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Step budget for the exhaustive searches. One unit is roughly one search-tree
// node. The default is sized so desk-scale instances never hit it.
struct Budget {
    std::uint64_t remaining = 4'000'000'000ULL;

    void spend(std::uint64_t k = 1) {
        if (remaining < k) throw WorkLimitExceeded("search step budget exhausted");
        remaining -= k;
    }
};

// helper for the `Budget* budget = nullptr` parameter convention
inline Budget& budget_or(Budget*& maybe, Budget& local) {
    if (!maybe) maybe = &local;
    return *maybe;
}

} // namespace k2n
