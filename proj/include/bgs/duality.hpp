#pragma once

#include "bgs/action.hpp"
#include "bgs/field.hpp"
#include "bgs/identities.hpp"

namespace bgs {

struct DegenerateParams : BgsError {
    using BgsError::BgsError;
};

/// Construction parameters for a field built from a binary action: the
/// designated zero and one of the space and the addition parameter s.
/// Requires x0 != x1 and s != e (except for the one-element group, where
/// params are ignored and the two-point carrier forces GF(2)).
struct FieldParams {
    int x0 = 0;
    int x1 = 1;
    int s = 1;
};

/// The natural action of the multiplicative group of F on F itself:
/// table[g][a][b] = (1-p)a + pb with p the field element of group index g.
BinaryAction field_to_action(const FiniteField& f);

/// A field built from a qualifying action, together with the space
/// relabeling used (x0 -> 0, x1 -> 1, then i-order of group preimages).
struct BuiltField {
    FiniteField field;
    std::vector<int> relabel;  // space index -> field element label
};

/// Builds the field of a semitransitive distributive effective action:
/// multiplication through i(g) = g(x0,x1), addition through the s-formula.
/// The output is verified as a field and the reconstruction identity
/// g(x,y) = (1-p)x + py with p = i(g) is asserted.
BuiltField action_to_field(const BinaryAction& a, const FieldParams& params);

/// The affine isomorphism phi(p) = p*(1'-0') + 0' between the fields built
/// from two parameter choices, verified entrywise. The auxiliary identities
/// relating the two additions and multiplications are asserted during
/// construction.
FieldIso parameter_iso(const BinaryAction& a, const FieldParams& params, const FieldParams& params2);

/// Deterministic parameters for round trips: x0 = 0, x1 = 1, s = the group
/// index of the smallest field element of multiplicative order > 1.
FieldParams canonical_params(const FiniteField& f);

/// field -> action -> field; returns the isomorphism (the identity map when
/// the round trip reproduces the tables exactly, which canonical params do).
FieldIso roundtrip_field(const FiniteField& f);

/// action -> field -> action; true iff the rebuilt table equals the original
/// exactly after the x0 -> 0, x1 -> 1 renumbering.
bool roundtrip_action(const BinaryAction& a, const FieldParams& params);

}  // namespace bgs
