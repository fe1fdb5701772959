#pragma once

#include <optional>
#include <vector>

#include "bgs/group.hpp"
#include "bgs/report.hpp"

namespace bgs {

/// A finite field as explicit add/mul tables on indices 0..q-1.
/// Convention: zero = 0 and one = 1; field_from_tables renumbers to enforce
/// this.
struct FiniteField {
    int order = 0;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    int characteristic = 0;

    static constexpr int zero = 0;
    static constexpr int one = 1;

    int addv(int a, int b) const { return add[a][b]; }
    int mulv(int a, int b) const { return mul[a][b]; }
    int neg(int a) const;
    int sub(int a, int b) const { return add[a][neg(b)]; }
    int recip(int a) const;  // multiplicative inverse, a != 0

    bool operator==(const FiniteField&) const = default;
};

/// Index bijection between two fields preserving add, mul, zero, one.
using FieldIso = std::vector<int>;

/// The multiplicative group of a field, with the index maps between group
/// indices and nonzero field elements. Group index 0 corresponds to the
/// field's one; the remaining nonzero elements follow in increasing order,
/// so elem_of_index[k] = k+1.
struct MultGroup {
    FiniteGroup group;
    std::vector<int> elem_of_index;   // group index -> field element
    std::vector<int> index_of_elem;   // field element -> group index (-1 at 0)
};

bool is_prime(int p);

/// GF(p^n) with elements encoded as base-p digit strings of polynomials
/// (constant term = least significant digit), reduced modulo the smallest
/// monic irreducible polynomial of degree n in ascending-coefficient
/// lexicographic order. p^n <= 4096.
FiniteField gf(int p, int n);

/// GF(q) for a prime power q.
FiniteField gf(int q);

/// Checks every field axiom on raw tables, reporting witnesses.
ValidationReport verify_field(const std::vector<std::vector<int>>& add, const std::vector<std::vector<int>>& mul,
                              int q);

/// Validates and renumbers raw tables so zero lands at 0 and one at 1.
FiniteField field_from_tables(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul);

MultGroup multiplicative_group(const FiniteField& f);

/// Multiplicative order of a nonzero element.
int multiplicative_order(const FiniteField& f, int a);

/// Isomorphism search: maps a multiplicative generator of f to each
/// same-order element of g in index order, extends multiplicatively, checks
/// additivity. q <= 4096.
std::optional<FieldIso> fields_isomorphic(const FiniteField& f, const FiniteField& g);

}  // namespace bgs
