#include "bgs/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bgs {

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw BgsError("make_cyclic: n must be positive");
    FiniteGroup g;
    g.order = n;
    g.cayley.assign(n, std::vector<int>(n));
    g.inverses.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.cayley[a][b] = (a + b) % n;
        g.inverses[a] = (n - a) % n;
    }
    return g;
}

FiniteGroup make_symmetric(int n) {
    if (n < 1) throw BgsError("make_symmetric: n must be positive");
    if (n > 5) throw BoundsError("make_symmetric: n > 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };

    int order = static_cast<int>(perms.size());
    FiniteGroup g;
    g.order = order;
    g.cayley.assign(order, std::vector<int>(order));
    g.inverses.resize(order);
    std::vector<int> comp(n), inv(n);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            // (a*b)(i) = a(b(i))
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            g.cayley[a][b] = index_of(comp);
        }
        for (int i = 0; i < n; ++i) inv[perms[a][i]] = i;
        g.inverses[a] = index_of(inv);
    }
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    FiniteGroup g;
    g.order = n;
    g.cayley.assign(n, std::vector<int>(n));
    g.inverses.resize(n);
    auto enc = [&](int x, int y) { return x * b.order + y; };
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y) {
            int e = enc(x, y);
            g.inverses[e] = enc(a.inv(x), b.inv(y));
            for (int u = 0; u < a.order; ++u)
                for (int v = 0; v < b.order; ++v)
                    g.cayley[e][enc(u, v)] = enc(a.mul(x, u), b.mul(y, v));
        }
    return g;
}

ValidationReport verify_group(const std::vector<std::vector<int>>& table) {
    ValidationReport rep;
    int n = static_cast<int>(table.size());
    if (n == 0) {
        rep.fail("empty table");
        return rep;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            rep.fail("ragged table at row " + std::to_string(a));
            return rep;
        }
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n) {
                rep.fail("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                return rep;
            }
    }

    // rows and columns must be permutations
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            row[table[a][b]] = true;
            col[table[b][a]] = true;
        }
        for (int v = 0; v < n; ++v) {
            if (!row[v]) {
                rep.fail("row " + std::to_string(a) + " is not a permutation (misses " + std::to_string(v) + ")");
                break;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!col[v]) {
                rep.fail("column " + std::to_string(a) + " is not a permutation (misses " + std::to_string(v) + ")");
                break;
            }
        }
    }

    // two-sided identity
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (table[c][a] != a || table[a][c] != a) {
                ok = false;
                break;
            }
        if (ok) e = c;
    }
    if (e < 0) rep.fail("no two-sided identity element");

    if (e >= 0) {
        for (int a = 0; a < n; ++a) {
            bool has = false;
            for (int b = 0; b < n; ++b)
                if (table[a][b] == e && table[b][a] == e) {
                    has = true;
                    break;
                }
            if (!has) {
                rep.fail("no inverse for element " + std::to_string(a));
                break;
            }
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    rep.fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
                    return rep;
                }
    return rep;
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table) {
    auto rep = verify_group(table);
    if (!rep.ok()) throw BgsError("invalid group table: " + rep.violations.front());
    int n = static_cast<int>(table.size());

    int e = 0;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (table[c][a] != a) {
                ok = false;
                break;
            }
        if (ok) {
            e = c;
            break;
        }
    }
    if (e != 0) {
        // swap labels 0 <-> e so the identity sits at index 0
        auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[relabel(a)][relabel(b)] = relabel(table[a][b]);
        table = std::move(t);
    }

    FiniteGroup g;
    g.order = n;
    g.cayley = std::move(table);
    g.inverses.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.cayley[a][b] == 0) g.inverses[a] = b;
    return g;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.cayley[a][b] != g.cayley[b][a]) return false;
    return true;
}

int element_order(const FiniteGroup& g, int a) {
    int x = a, k = 1;
    while (x != FiniteGroup::identity) {
        x = g.mul(x, a);
        ++k;
    }
    return k;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> seen{FiniteGroup::identity};
    std::vector<int> frontier{FiniteGroup::identity};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : gens) {
                int y = g.mul(x, s);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound) {
    if (g.order > bound) throw BoundsError("all_subgroups: |G| exceeds bound");
    std::set<std::vector<int>> found;
    found.insert({FiniteGroup::identity});
    // grow each known subgroup by one extra generator until closure stabilizes
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& h : std::vector<std::vector<int>>(found.begin(), found.end())) {
            for (int x = 1; x < g.order; ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::vector<int> gens = h;
                gens.push_back(x);
                auto closed = generated_subgroup(g, gens);
                if (found.insert(closed).second) changed = true;
            }
        }
    }
    std::vector<Subgroup> out;
    for (auto& m : found) out.push_back(Subgroup{m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.order; ++x)
        for (int m : h.members)
            if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
    return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int bound) {
    std::vector<Subgroup> out;
    for (auto& h : all_subgroups(g, bound))
        if (is_normal(g, h)) out.push_back(std::move(h));
    return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.order; ++x)
        for (int m : h.members)
            if (!h.contains(g.mul(g.mul(x, m), g.inv(x))))
                throw BgsError("quotient: subgroup not normal, witness g=" + std::to_string(x) +
                               " h=" + std::to_string(m));

    int n = g.order;
    std::vector<int> coset_of(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        for (int m : h.members) coset_of[g.mul(x, m)] = next;
        ++next;
    }
    // identity coset is found first (x = 0), so it already has index 0

    QuotientGroup q;
    q.coset_of = coset_of;
    q.group.order = next;
    q.group.cayley.assign(next, std::vector<int>(next, -1));
    q.group.inverses.assign(next, -1);
    std::vector<int> rep(next, -1);
    for (int x = 0; x < n; ++x)
        if (rep[coset_of[x]] < 0) rep[coset_of[x]] = x;
    for (int a = 0; a < next; ++a) {
        for (int b = 0; b < next; ++b) q.group.cayley[a][b] = coset_of[g.mul(rep[a], rep[b])];
        q.group.inverses[a] = coset_of[g.inv(rep[a])];
    }
    return q;
}

namespace {

bool extend_automorphism(const FiniteGroup& g, std::vector<int>& f) {
    // f maps a partial set of elements; close under multiplication and check
    int n = g.order;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            if (f[a] < 0) continue;
            for (int b = 0; b < n; ++b) {
                if (f[b] < 0) continue;
                int ab = g.mul(a, b);
                int im = g.mul(f[a], f[b]);
                if (f[ab] < 0) {
                    f[ab] = im;
                    changed = true;
                } else if (f[ab] != im) {
                    return false;
                }
            }
        }
    }
    return true;
}

void automorphism_dfs(const FiniteGroup& g, const std::vector<int>& gens, size_t k, std::vector<int> f,
                      std::vector<std::vector<int>>& out) {
    if (k == gens.size()) {
        // must be total and bijective by now (gens generate G)
        std::vector<bool> hit(g.order, false);
        for (int v : f) {
            if (v < 0) return;
            hit[v] = true;
        }
        for (bool b : hit)
            if (!b) return;
        out.push_back(f);
        return;
    }
    int a = gens[k];
    if (f[a] >= 0) {
        automorphism_dfs(g, gens, k + 1, std::move(f), out);
        return;
    }
    int ord = element_order(g, a);
    for (int c = 0; c < g.order; ++c) {
        if (element_order(g, c) != ord) continue;
        auto f2 = f;
        f2[a] = c;
        if (extend_automorphism(g, f2)) automorphism_dfs(g, gens, k + 1, std::move(f2), out);
    }
}

}  // namespace

std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<int> gens;
    auto closed = generated_subgroup(g, gens);
    while (static_cast<int>(closed.size()) < g.order) {
        for (int x = 0; x < g.order; ++x)
            if (!std::binary_search(closed.begin(), closed.end(), x)) {
                gens.push_back(x);
                break;
            }
        closed = generated_subgroup(g, gens);
    }
    return gens;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
    std::vector<int> f(g.order, -1);
    f[FiniteGroup::identity] = FiniteGroup::identity;
    std::vector<std::vector<int>> out;
    automorphism_dfs(g, generating_sequence(g), 0, std::move(f), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bgs
