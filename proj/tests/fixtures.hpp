#pragma once

#include "bgs/action.hpp"
#include "bgs/group.hpp"

namespace bgs::fixtures {

/// The semitransitive distributive action of Z/2 on 3 points
/// (the GF(3) action g(x,y) = 2x + 2y mod 3).
inline BinaryAction act3() {
    std::vector<std::vector<std::vector<int>>> table{
        {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}},
        {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}},
    };
    return make_action(make_cyclic(2), 3, std::move(table));
}

inline FiniteGroup klein() { return direct_product(make_cyclic(2), make_cyclic(2)); }

}  // namespace bgs::fixtures
