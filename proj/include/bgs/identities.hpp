#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgs/action.hpp"

namespace bgs {

/// Thrown for g = identity: the defining equation g(t,x) = y has no solution
/// for distinct x, y.
struct DegenerateElement : BgsError {
    using BgsError::BgsError;
};

/// The derived elements of a non-identity g in a semitransitive distributive
/// effective action: bar with g(bar(x,y),x) = y, hat = bar^{-1} with
/// g(x,y) = hat(y,x), and tilde with g(tilde(y,x),x) = y.
struct DerivedElements {
    int bar = -1;
    int hat = -1;
    int tilde = -1;
};

/// Finds bar at the pair (0,1) by scanning G, then verifies all three
/// defining identities globally and the uniqueness of bar by full scan.
DerivedElements derived_elements(const BinaryAction& a, int g);

struct IdentityCheck {
    std::string name;
    std::int64_t tuples = 0;
    std::optional<std::array<int, 6>> counterexample;  // (g,h,x,y,z,t), unused slots -1
    bool ok() const { return !counterexample.has_value(); }
};

/// Exhaustively checks the five derived-element and distributivity
/// identities. Requires a semitransitive, distributive, effective action.
std::vector<IdentityCheck> verify_lemma_suite(const BinaryAction& a);

/// True iff every row and every column of the slice of g is a permutation.
bool quasigroup_check(const BinaryAction& a, int g);

/// Throws PreconditionFailed unless the action is semitransitive,
/// distributive, and effective.
void require_qualifying(const BinaryAction& a);

}  // namespace bgs
