#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permexpr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two words with different strand counts were combined.
struct StrandCountMismatch : Error {
    using Error::Error;
};

// The letters at the requested position do not match the relation pattern.
struct PatternMismatch : Error {
    using Error::Error;
};

// Operation requires a reduced word.
struct NotReduced : Error {
    using Error::Error;
};

// Operation requires two expressions of the same permutation.
struct NotEquivalent : Error {
    using Error::Error;
};

struct StrandsDoNotCross : Error {
    using Error::Error;
};

// Name sequences are not permuted images of one another.
struct IncomparableSequences : Error {
    using Error::Error;
};

// Breadth-first search exceeded its node limit.
struct StateSpaceExceeded : Error {
    using Error::Error;
};

// Reversing exceeded its step budget.
struct StepBudgetExceeded : Error {
    using Error::Error;
};

// A derivation step failed to apply; carries the offending step index.
struct ReplayMismatch : Error {
    std::size_t step_index;
    ReplayMismatch(std::size_t index, const std::string& msg)
        : Error(msg), step_index(index) {}
};

}  // namespace permexpr
