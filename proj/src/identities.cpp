#include "bgs/identities.hpp"

#include <algorithm>

namespace bgs {

void require_qualifying(const BinaryAction& a) {
    if (!is_semitransitive(a)) throw PreconditionFailed("action is not semitransitive");
    if (!is_distributive(a)) throw PreconditionFailed("action is not distributive");
    if (!is_effective(a)) throw PreconditionFailed("action is not effective");
}

namespace {

// unique c in G with g(c(0,1), 0) = 1, or -1 / -2 for none / several
int find_bar(const BinaryAction& a, int g) {
    int found = -1;
    for (int c = 0; c < a.group.order; ++c) {
        if (a.at(g, a.at(c, 0, 1), 0) == 1) {
            if (found >= 0) return -2;
            found = c;
        }
    }
    return found;
}

}  // namespace

DerivedElements derived_elements(const BinaryAction& a, int g) {
    require_qualifying(a);
    if (a.space_size < 2) throw PreconditionFailed("space has fewer than 2 points");
    if (g == FiniteGroup::identity)
        throw DegenerateElement("derived elements are undefined for the group identity");

    DerivedElements d;
    d.bar = find_bar(a, g);
    if (d.bar == -1) throw BgsError("derived_elements: no bar element (precondition violated)");
    if (d.bar == -2) throw BgsError("derived_elements: bar element not unique (precondition violated)");

    const int m = a.space_size;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (a.at(g, a.at(d.bar, x, y), x) != y)
                throw BgsError("derived_elements: bar identity fails globally");

    d.hat = a.group.inv(d.bar);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (a.at(g, x, y) != a.at(d.hat, y, x)) throw BgsError("derived_elements: hat identity fails");

    int bar2 = find_bar(a, d.bar);
    if (bar2 < 0) throw BgsError("derived_elements: no bar element for bar(g)");
    d.tilde = a.group.inv(bar2);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (a.at(g, a.at(d.tilde, y, x), x) != y) throw BgsError("derived_elements: tilde identity fails");
    return d;
}

std::vector<IdentityCheck> verify_lemma_suite(const BinaryAction& a) {
    require_qualifying(a);
    const int n = a.group.order, m = a.space_size;
    std::vector<IdentityCheck> out;

    auto blank = [] { return std::array<int, 6>{-1, -1, -1, -1, -1, -1}; };

    {
        IdentityCheck c{.name = "bar-cancel"};
        for (int g = 1; g < n; ++g) {
            int bar = find_bar(a, g);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    ++c.tuples;
                    if (bar < 0 || a.at(g, a.at(bar, x, y), x) != y) {
                        if (!c.counterexample) {
                            auto w = blank();
                            w[0] = g;
                            w[2] = x;
                            w[3] = y;
                            c.counterexample = w;
                        }
                    }
                }
        }
        out.push_back(std::move(c));
    }

    {
        IdentityCheck c{.name = "hat-swap"};
        for (int g = 1; g < n; ++g) {
            int bar = find_bar(a, g);
            int hat = bar >= 0 ? a.group.inv(bar) : -1;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    ++c.tuples;
                    if (hat < 0 || a.at(g, x, y) != a.at(hat, y, x)) {
                        if (!c.counterexample) {
                            auto w = blank();
                            w[0] = g;
                            w[2] = x;
                            w[3] = y;
                            c.counterexample = w;
                        }
                    }
                }
        }
        out.push_back(std::move(c));
    }

    {
        IdentityCheck c{.name = "tilde-cancel"};
        for (int g = 1; g < n; ++g) {
            int bar = find_bar(a, g);
            int bar2 = bar >= 0 ? find_bar(a, bar) : -1;
            int tilde = bar2 >= 0 ? a.group.inv(bar2) : -1;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    ++c.tuples;
                    if (tilde < 0 || a.at(g, a.at(tilde, y, x), x) != y) {
                        if (!c.counterexample) {
                            auto w = blank();
                            w[0] = g;
                            w[2] = x;
                            w[3] = y;
                            c.counterexample = w;
                        }
                    }
                }
        }
        out.push_back(std::move(c));
    }

    {
        IdentityCheck c{.name = "right-distributivity"};
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y)
                        for (int z = 0; z < m; ++z) {
                            ++c.tuples;
                            if (a.at(g, a.at(h, x, y), z) != a.at(h, a.at(g, x, z), a.at(g, y, z))) {
                                if (!c.counterexample) c.counterexample = std::array<int, 6>{g, h, x, y, z, -1};
                            }
                        }
        out.push_back(std::move(c));
    }

    {
        IdentityCheck c{.name = "interchange"};
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y)
                        for (int z = 0; z < m; ++z)
                            for (int t = 0; t < m; ++t) {
                                ++c.tuples;
                                if (a.at(g, a.at(h, x, y), a.at(h, z, t)) !=
                                    a.at(h, a.at(g, x, z), a.at(g, y, t))) {
                                    if (!c.counterexample) c.counterexample = std::array<int, 6>{g, h, x, y, z, t};
                                }
                            }
        out.push_back(std::move(c));
    }

    return out;
}

bool quasigroup_check(const BinaryAction& a, int g) {
    const int m = a.space_size;
    std::vector<bool> hit(m);
    for (int x = 0; x < m; ++x) {
        std::fill(hit.begin(), hit.end(), false);
        for (int y = 0; y < m; ++y) {
            int v = a.at(g, x, y);
            if (hit[v]) return false;
            hit[v] = true;
        }
    }
    for (int y = 0; y < m; ++y) {
        std::fill(hit.begin(), hit.end(), false);
        for (int x = 0; x < m; ++x) {
            int v = a.at(g, x, y);
            if (hit[v]) return false;
            hit[v] = true;
        }
    }
    return true;
}

}  // namespace bgs
