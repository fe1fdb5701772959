#pragma once

#include <string>
#include <vector>

#include "bgs/report.hpp"

namespace bgs {

/// A finite group given by its Cayley table on indices 0..n-1.
/// Convention: the identity element is always index 0; constructors and the
/// parser renumber tables to enforce this.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> cayley;  // cayley[a][b] = a*b
    std::vector<int> inverses;

    static constexpr int identity = 0;

    int mul(int a, int b) const { return cayley[a][b]; }
    int inv(int a) const { return inverses[a]; }

    bool operator==(const FiniteGroup&) const = default;
};

/// A subgroup of a FiniteGroup, stored as a sorted member list containing 0.
struct Subgroup {
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;

    bool operator==(const Subgroup&) const = default;
};

/// Coset-label map attached to a quotient group: coset_of[g] is the index of
/// the coset of g, with the coset of the identity at index 0.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> coset_of;
};

/// Z/n with cayley[a][b] = (a+b) mod n.
FiniteGroup make_cyclic(int n);

/// Symmetric group on n points (n <= 5), permutations enumerated in
/// lexicographic one-line order; the identity permutation lands at index 0.
FiniteGroup make_symmetric(int n);

/// Direct product, element (a,b) encoded as a*|B|+b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Checks every group axiom on a raw table; each violation is reported with
/// its first witness.
ValidationReport verify_group(const std::vector<std::vector<int>>& table);

/// Validates a raw table and builds a FiniteGroup, relabeling so that the
/// identity becomes index 0. Throws BgsError on an invalid table.
FiniteGroup group_from_table(std::vector<std::vector<int>> table);

bool is_abelian(const FiniteGroup& g);

int element_order(const FiniteGroup& g, int a);

/// All subgroups, by closure of subsets; |G| <= bound.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound = 24);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// All normal subgroups sorted by (size, member sequence), including the
/// trivial and full subgroups.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int bound = 24);

/// Quotient by a normal subgroup. Throws BgsError (with a witness
/// conjugation) if h is not normal.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h);

/// All automorphisms of g, each as an index bijection, in lexicographic
/// order. Brute force; intended for small groups only.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

/// Greedy generating sequence: repeatedly adds the smallest element outside
/// the subgroup generated so far. Empty for the trivial group.
std::vector<int> generating_sequence(const FiniteGroup& g);

/// Elements of the subgroup generated by the given elements, sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace bgs
