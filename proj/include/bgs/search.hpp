#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgs/action.hpp"
#include "bgs/field.hpp"

namespace bgs {

struct SearchOptions {
    /// Short-circuit on |G| != m-1 (trivial-stabilizer obstruction).
    bool prune_size = true;
    /// Short-circuit on non-abelian G.
    bool prune_abelian = true;
    int max_space = 8;
    int max_group = 7;
};

/// Deterministic enumeration result for the semitransitive classification.
struct SearchReport {
    std::string group_desc;
    int space_size = 0;
    SearchOptions options;
    std::vector<BinaryAction> found;  // canonical (lexicographic flattened-table) order
    int count_raw = 0;
    int count_up_to_biequimorphism = 0;
    int count_up_to_twisted_biequimorphism = 0;
    std::int64_t nodes_explored = 0;
    std::string pruned_reason;  // nonempty when a short circuit decided the result
};

/// Exhaustive, deterministic enumeration of all semitransitive distributive
/// effective binary actions of G on m points. The state space is the per-
/// point family of homomorphisms G -> Sym(X minus {x}) with transitive
/// image, an exact reparametrization of the action axioms plus the
/// semitransitivity orbit conditions; distributivity is checked
/// incrementally and effectiveness at the leaves.
SearchReport search_semitransitive(const FiniteGroup& g, int m, const SearchOptions& options = {});

struct TransitiveReport {
    int count = 0;
    bool all_biequimorphic_to_translation = true;
    std::vector<BinaryAction> found;
    std::int64_t candidates_scanned = 0;
};

/// Enumerates all effective transitive distributive actions of G on |G|
/// points by scanning homomorphisms G -> H2(X) through generator images,
/// and checks each against the conjugate left translation. Supports groups
/// with a single-generator presentation at |G| <= 4.
TransitiveReport classify_transitive(const FiniteGroup& g);

struct RealizabilityResult {
    bool realizable = false;
    std::optional<BinaryAction> witness;
    std::optional<FiniteField> induced_field;
    SearchReport report;
};

/// G is the multiplicative group of a finite field iff it has a
/// semitransitive distributive effective action on |G|+1 points.
RealizabilityResult realizable_as_mult_group(const FiniteGroup& g, const SearchOptions& options = {});

}  // namespace bgs
