#include "bgs/action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bgs {

namespace {

std::string tup(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

ValidationReport verify_action(const FiniteGroup& group, int m,
                               const std::vector<std::vector<std::vector<int>>>& table) {
    ValidationReport rep;
    if (static_cast<int>(table.size()) != group.order) {
        rep.fail("slice count does not match group order");
        return rep;
    }
    for (int g = 0; g < group.order; ++g) {
        if (static_cast<int>(table[g].size()) != m) {
            rep.fail("slice " + std::to_string(g) + " has wrong row count");
            return rep;
        }
        for (int x = 0; x < m; ++x) {
            if (static_cast<int>(table[g][x].size()) != m) {
                rep.fail("slice " + std::to_string(g) + " row " + std::to_string(x) + " has wrong length");
                return rep;
            }
            for (int y = 0; y < m; ++y)
                if (table[g][x][y] < 0 || table[g][x][y] >= m) {
                    rep.fail("entry out of range at " + tup({g, x, y}));
                    return rep;
                }
        }
    }

    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (table[FiniteGroup::identity][x][y] != y) {
                rep.fail("condition 2 fails: e" + tup({x, y}) + " != " + std::to_string(y));
                x = m;
                break;
            }

    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            int gh = group.mul(g, h);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (table[gh][x][y] != table[g][x][table[h][x][y]]) {
                        rep.fail("condition 1 fails at (g,h,x,y)=" + tup({g, h, x, y}));
                        return rep;
                    }
        }
    return rep;
}

BinaryAction make_action(FiniteGroup group, int m, std::vector<std::vector<std::vector<int>>> table) {
    auto rep = verify_action(group, m, table);
    if (!rep.ok()) throw BgsError("invalid binary action: " + rep.violations.front());
    return make_action_unchecked(std::move(group), m, std::move(table));
}

BinaryAction make_action_unchecked(FiniteGroup group, int m, std::vector<std::vector<std::vector<int>>> table) {
    BinaryAction a;
    a.group = std::move(group);
    a.space_size = m;
    a.table = std::move(table);
    return a;
}

BinaryAction identity_only_action(FiniteGroup group, int m) {
    std::vector<std::vector<int>> slice(m, std::vector<int>(m));
    for (auto& row : slice) std::iota(row.begin(), row.end(), 0);
    std::vector<std::vector<std::vector<int>>> table(group.order, slice);
    return make_action_unchecked(std::move(group), m, std::move(table));
}

Subgroup kernel(const BinaryAction& a) {
    Subgroup k;
    for (int g = 0; g < a.group.order; ++g) {
        bool in = true;
        for (int x = 0; x < a.space_size && in; ++x)
            for (int y = 0; y < a.space_size; ++y)
                if (a.at(g, x, y) != y) {
                    in = false;
                    break;
                }
        if (in) k.members.push_back(g);
    }
    if (!is_normal(a.group, k)) throw BgsError("kernel is not normal");  // cannot happen for a valid action
    return k;
}

bool is_effective(const BinaryAction& a) {
    if (!a.cached_effective) a.cached_effective = kernel(a).size() == 1;
    return *a.cached_effective;
}

Effectivization effectivization(const BinaryAction& a) {
    auto ker = kernel(a);
    auto q = quotient(a.group, ker);
    int n = q.group.order;
    std::vector<int> rep(n, -1);
    for (int g = 0; g < a.group.order; ++g)
        if (rep[q.coset_of[g]] < 0) rep[q.coset_of[g]] = g;
    std::vector<std::vector<std::vector<int>>> table(n);
    for (int c = 0; c < n; ++c) table[c] = a.table[rep[c]];
    Effectivization e{make_action_unchecked(std::move(q.group), a.space_size, std::move(table)), q.coset_of};
    return e;
}

DistributivityReport distributivity_report(const BinaryAction& a) {
    const int n = a.group.order, m = a.space_size;
    DistributivityReport r;

    r.direct = true;
    for (int g = 0; g < n && r.direct; ++g)
        for (int h = 0; h < n && r.direct; ++h)
            for (int x = 0; x < m && r.direct; ++x)
                for (int y = 0; y < m && r.direct; ++y)
                    for (int z = 0; z < m; ++z)
                        if (a.at(g, x, a.at(h, y, z)) != a.at(h, a.at(g, x, y), a.at(g, x, z))) {
                            r.direct = false;
                            break;
                        }

    // unary maps g_x(y) = g(x,y)
    auto gx = [&](int g, int x) { return a.table[g][x]; };

    r.via_biequivariance = true;
    for (int g = 0; g < n && r.via_biequivariance; ++g)
        for (int x = 0; x < m && r.via_biequivariance; ++x) {
            const auto& u = gx(g, x);
            std::vector<bool> hit(m, false);
            for (int v : u) hit[v] = true;
            for (int v = 0; v < m; ++v)
                if (!hit[v]) {
                    r.via_biequivariance = false;
                    break;
                }
            for (int h = 0; h < n && r.via_biequivariance; ++h)
                for (int y = 0; y < m && r.via_biequivariance; ++y)
                    for (int z = 0; z < m; ++z)
                        if (u[a.at(h, y, z)] != a.at(h, u[y], u[z])) {
                            r.via_biequivariance = false;
                            break;
                        }
        }

    r.via_commutation = true;
    for (int g = 0; g < n && r.via_commutation; ++g)
        for (int h = 0; h < n && r.via_commutation; ++h)
            for (int x = 0; x < m && r.via_commutation; ++x)
                for (int y = 0; y < m && r.via_commutation; ++y) {
                    const auto& u = gx(g, x);            // g_x
                    const auto& v = gx(h, y);            // h_y
                    const auto& w = gx(h, u[y]);         // h_{g_x(y)}
                    for (int z = 0; z < m; ++z)
                        if (u[v[z]] != w[u[z]]) {
                            r.via_commutation = false;
                            break;
                        }
                    if (!r.via_commutation) break;
                }

    if (r.direct != r.via_biequivariance || r.direct != r.via_commutation)
        throw BgsError("distributivity criterion routes disagree (internal inconsistency)");
    return r;
}

bool is_distributive(const BinaryAction& a) {
    if (!a.cached_distributive) a.cached_distributive = distributivity_report(a).all();
    return *a.cached_distributive;
}

PairStabilizer stationary_subgroup(const BinaryAction& a, int x, int y) {
    PairStabilizer st;
    st.x = x;
    st.y = y;
    for (int g = 0; g < a.group.order; ++g)
        if (a.at(g, x, y) == y) st.subgroup.members.push_back(g);
    if (x == y && is_distributive(a) && !is_normal(a.group, st.subgroup))
        throw BgsError("point stabilizer not normal in a distributive action");
    return st;
}

std::vector<int> orbit(const BinaryAction& a, int x, int y) {
    std::vector<bool> hit(a.space_size, false);
    for (int g = 0; g < a.group.order; ++g) hit[a.at(g, x, y)] = true;
    std::vector<int> out;
    for (int v = 0; v < a.space_size; ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

bool is_transitive(const BinaryAction& a) {
    if (!a.cached_transitive) {
        bool t = true;
        for (int x = 0; x < a.space_size && t; ++x)
            t = static_cast<int>(orbit(a, x, x).size()) == a.space_size;
        a.cached_transitive = t;
    }
    return *a.cached_transitive;
}

bool is_semitransitive(const BinaryAction& a) {
    if (a.cached_semitransitive) return *a.cached_semitransitive;
    bool s = true;
    int m = a.space_size;
    if (m == 1) {
        // effectiveness convention: only the trivial group acts
        // semitransitively on a point
        s = a.group.order == 1;
    } else {
        for (int x = 0; x < m && s; ++x) {
            auto diag = orbit(a, x, x);
            if (diag != std::vector<int>{x}) {
                s = false;
                break;
            }
            std::vector<int> rest;
            for (int v = 0; v < m; ++v)
                if (v != x) rest.push_back(v);
            for (int y = 0; y < m; ++y) {
                if (y == x) continue;
                if (orbit(a, x, y) != rest) {
                    s = false;
                    break;
                }
            }
        }
    }
    a.cached_semitransitive = s;
    return s;
}

BinaryAction conjugate_left_translation(const FiniteGroup& g) {
    int n = g.order;
    std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int e = 0; e < n; ++e)
        for (int x = 0; x < n; ++x) {
            int c = g.mul(g.mul(x, e), g.inv(x));
            for (int y = 0; y < n; ++y) table[e][x][y] = g.mul(c, y);
        }
    return make_action_unchecked(g, n, std::move(table));
}

BinaryAction coset_action(const FiniteGroup& g, const Subgroup& h) {
    auto q = quotient(g, h);  // throws if not normal
    int n = g.order, k = q.group.order;
    std::vector<int> rep(k, -1);
    for (int x = 0; x < n; ++x)
        if (rep[q.coset_of[x]] < 0) rep[q.coset_of[x]] = x;
    std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(k, std::vector<int>(k)));
    for (int e = 0; e < n; ++e)
        for (int a = 0; a < k; ++a) {
            int kk = rep[a];
            int c = g.mul(g.mul(kk, e), g.inv(kk));
            for (int b = 0; b < k; ++b) table[e][a][b] = q.coset_of[g.mul(c, rep[b])];
        }
    return make_action_unchecked(g, k, std::move(table));
}

namespace {

// multiset of orbit sizes from x, an invariant of space relabelings
std::vector<int> orbit_signature(const BinaryAction& a, int x) {
    std::vector<int> sig;
    for (int y = 0; y < a.space_size; ++y) sig.push_back(static_cast<int>(orbit(a, x, y).size()));
    std::sort(sig.begin(), sig.end());
    return sig;
}

// propagate forced values of a partial bijection; returns false on conflict
bool propagate(const BinaryAction& a, const BinaryAction& b, std::vector<int>& f, std::vector<bool>& used) {
    int m = a.space_size;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < a.group.order; ++g)
            for (int x = 0; x < m; ++x) {
                if (f[x] < 0) continue;
                for (int y = 0; y < m; ++y) {
                    if (f[y] < 0) continue;
                    int t = a.at(g, x, y);
                    int req = b.at(g, f[x], f[y]);
                    if (f[t] < 0) {
                        if (used[req]) return false;
                        f[t] = req;
                        used[req] = true;
                        changed = true;
                    } else if (f[t] != req) {
                        return false;
                    }
                }
            }
    }
    return true;
}

bool biequi_dfs(const BinaryAction& a, const BinaryAction& b, const std::vector<std::vector<int>>& sig_a,
                const std::vector<std::vector<int>>& sig_b, std::vector<int> f, std::vector<bool> used,
                std::vector<int>& out) {
    int m = a.space_size;
    int x = -1;
    for (int i = 0; i < m; ++i)
        if (f[i] < 0) {
            x = i;
            break;
        }
    if (x < 0) {
        out = f;
        return true;
    }
    for (int v = 0; v < m; ++v) {
        if (used[v] || sig_a[x] != sig_b[v]) continue;
        auto f2 = f;
        auto u2 = used;
        f2[x] = v;
        u2[v] = true;
        if (propagate(a, b, f2, u2) && biequi_dfs(a, b, sig_a, sig_b, std::move(f2), std::move(u2), out)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> are_biequimorphic(const BinaryAction& a, const BinaryAction& b, int bound) {
    if (a.group != b.group) throw BgsError("are_biequimorphic: actions must share the group");
    if (a.space_size != b.space_size) throw BgsError("are_biequimorphic: space sizes differ");
    if (a.space_size > bound) throw BoundsError("are_biequimorphic: space size exceeds bound");

    int m = a.space_size;
    std::vector<std::vector<int>> sig_a(m), sig_b(m);
    for (int x = 0; x < m; ++x) {
        sig_a[x] = orbit_signature(a, x);
        sig_b[x] = orbit_signature(b, x);
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> out;
    if (biequi_dfs(a, b, sig_a, sig_b, std::vector<int>(m, -1), std::vector<bool>(m, false), out)) return out;
    return std::nullopt;
}

std::optional<TwistedEquivalence> are_twisted_biequimorphic(const BinaryAction& a, const BinaryAction& b,
                                                            int bound) {
    if (a.group != b.group) throw BgsError("are_twisted_biequimorphic: actions must share the group");
    for (const auto& sigma : automorphisms(a.group)) {
        BinaryAction twisted = a;
        for (int g = 0; g < a.group.order; ++g) twisted.table[g] = a.table[sigma[g]];
        twisted.cached_distributive.reset();
        twisted.cached_semitransitive.reset();
        twisted.cached_transitive.reset();
        twisted.cached_effective.reset();
        if (auto f = are_biequimorphic(twisted, b, bound)) return TwistedEquivalence{sigma, *f};
    }
    return std::nullopt;
}

std::vector<int> flatten(const BinaryAction& a) {
    std::vector<int> out;
    out.reserve(a.group.order * a.space_size * a.space_size);
    for (const auto& slice : a.table)
        for (const auto& row : slice) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace bgs
