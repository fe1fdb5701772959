#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgs/report.hpp"

namespace bgs {

/// One binary operation on a finite space: an element of the monoid C2(X).
struct BinaryOp {
    int space_size = 0;
    std::vector<std::vector<int>> table;  // table[x][y] = f(x,y)

    int at(int x, int y) const { return table[x][y]; }

    auto operator<=>(const BinaryOp&) const = default;
};

struct NotInvertible : BgsError {
    int row;
    explicit NotInvertible(int r) : BgsError("row " + std::to_string(r) + " is not a permutation"), row(r) {}
};

/// The unit of right multiplication: e(x,y) = y.
BinaryOp identity_op(int m);

/// The unit of left multiplication: p(x,y) = x.
BinaryOp first_projection_op(int m);

/// Right product: (fg)(x,y) = f(x, g(x,y)).
BinaryOp compose_right(const BinaryOp& f, const BinaryOp& g);

/// Left product: (fg)(x,y) = f(g(x,y), y).
BinaryOp compose_left(const BinaryOp& f, const BinaryOp& g);

/// Argument swap: f*(x,y) = f(y,x). Carries right products to left products.
BinaryOp star(const BinaryOp& f);

/// True iff every row of f is a permutation, i.e. f(a,x)=b is uniquely
/// solvable in x. Coincides with invertibility in (C2, right product).
bool is_left_quasigroup(const BinaryOp& f);

/// Inverse under right multiplication: row a of the result is the
/// permutation inverse of row a of f. Throws NotInvertible with the first
/// bad row.
BinaryOp invert(const BinaryOp& f);

/// Embeds a permutation h into H2 via f(x,y) = h(y).
BinaryOp embed_unary(const std::vector<int>& h);

/// Streams the group H2(X) of invertible binary operations on m points in
/// lexicographic table order, without materializing all (m!)^m elements.
class H2Enumerator {
public:
    explicit H2Enumerator(int m);  // m <= 4

    /// Next element, or nullopt when exhausted.
    std::optional<BinaryOp> next();

    /// (m!)^m
    static std::int64_t count(int m);

private:
    int m_;
    std::vector<std::vector<int>> perms_;  // all permutations of m, lex order
    std::vector<int> odometer_;
    bool done_ = false;
};

}  // namespace bgs
