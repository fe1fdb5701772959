#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bgs/group.hpp"
#include "bgs/report.hpp"

namespace bgs {

/// A binary G-space: a |G| x m x m table with slice[g][x][y] = g(x,y).
/// Property flags are computed on demand and cached; recomputation is
/// idempotent, so concurrent reads stay safe.
struct BinaryAction {
    FiniteGroup group;
    int space_size = 0;
    std::vector<std::vector<std::vector<int>>> table;

    int at(int g, int x, int y) const { return table[g][x][y]; }

    bool operator==(const BinaryAction& o) const {
        return group == o.group && space_size == o.space_size && table == o.table;
    }

    mutable std::optional<bool> cached_distributive;
    mutable std::optional<bool> cached_semitransitive;
    mutable std::optional<bool> cached_transitive;
    mutable std::optional<bool> cached_effective;
};

/// A pair stabilizer G_{(x,y)} = { g : g(x,y) = y }.
struct PairStabilizer {
    Subgroup subgroup;
    int x = 0;
    int y = 0;
};

/// The three routes of the distributivity criterion, computed independently.
struct DistributivityReport {
    bool direct = false;             // g(x,h(y,z)) = h(g(x,y),g(x,z)) by scan
    bool via_biequivariance = false; // every g_x is a biequivariant bijection
    bool via_commutation = false;    // g_x h_y = h_{g_x(y)} g_x as unary maps
    bool all() const { return direct && via_biequivariance && via_commutation; }
};

/// Checks both action axioms on a raw table, with witness tuples.
ValidationReport verify_action(const FiniteGroup& group, int m,
                               const std::vector<std::vector<std::vector<int>>>& table);

/// Validates and wraps a raw table. Throws BgsError on violations.
BinaryAction make_action(FiniteGroup group, int m, std::vector<std::vector<std::vector<int>>> table);

/// Builds an action without the axiom scan, for constructions whose validity
/// is guaranteed; tests re-verify.
BinaryAction make_action_unchecked(FiniteGroup group, int m, std::vector<std::vector<std::vector<int>>> table);

/// Every g acts as e(x,y) = y.
BinaryAction identity_only_action(FiniteGroup group, int m);

/// Ker = { g : g(x,y) = y for all x,y }; always normal.
Subgroup kernel(const BinaryAction& a);

bool is_effective(const BinaryAction& a);

struct Effectivization {
    BinaryAction action;        // effective action of group/Ker
    std::vector<int> coset_of;  // original group index -> quotient index
};

Effectivization effectivization(const BinaryAction& a);

/// Computes the three distributivity tests and asserts they agree; a
/// disagreement would falsify the criterion theorem and throws.
DistributivityReport distributivity_report(const BinaryAction& a);

bool is_distributive(const BinaryAction& a);

/// When the action is distributive and x == y, normality of the stabilizer
/// is asserted.
PairStabilizer stationary_subgroup(const BinaryAction& a, int x, int y);

/// Orbit G(x,y) as a sorted index set.
std::vector<int> orbit(const BinaryAction& a, int x, int y);

/// G(x,x) = X for every x.
bool is_transitive(const BinaryAction& a);

/// G(x,x) = {x} for every x, and G(x,y) = X minus {x} for x != y.
/// On a one-point space this is true only for the trivial group.
bool is_semitransitive(const BinaryAction& a);

/// g(x,y) = x g x^{-1} y on X = G. Always valid, distributive, transitive,
/// effective.
BinaryAction conjugate_left_translation(const FiniteGroup& g);

/// g(kH, lH) = (k g k^{-1} l)H on the coset space of a normal subgroup.
BinaryAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Lexicographically least space bijection f with f(g(x,y)) = g(f(x),f(y)),
/// group labeling fixed, or nullopt. Backtracking with forced-value
/// propagation and orbit-signature pruning; m <= bound.
std::optional<std::vector<int>> are_biequimorphic(const BinaryAction& a, const BinaryAction& b, int bound = 8);

struct TwistedEquivalence {
    std::vector<int> group_automorphism;
    std::vector<int> space_bijection;
};

/// Biequimorphism up to a group automorphism twist: finds sigma in Aut(G)
/// and f with f(a[sigma(g)](x,y)) = b[g](f(x),f(y)). Used only to merge
/// Frobenius-related duplicates in classification reports.
std::optional<TwistedEquivalence> are_twisted_biequimorphic(const BinaryAction& a, const BinaryAction& b,
                                                            int bound = 8);

/// Flattened table, for canonical ordering of search output.
std::vector<int> flatten(const BinaryAction& a);

}  // namespace bgs
