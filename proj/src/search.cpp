#include "bgs/search.hpp"

#include <algorithm>
#include <numeric>

#include "bgs/binop.hpp"
#include "bgs/duality.hpp"

namespace bgs {

namespace {

std::vector<std::vector<int>> permutations_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_order(const std::vector<int>& p) {
    int d = static_cast<int>(p.size());
    std::vector<int> x(d);
    std::iota(x.begin(), x.end(), 0);
    int ord = 0;
    while (true) {
        ++ord;
        std::vector<int> nx(d);
        for (int i = 0; i < d; ++i) nx[i] = p[x[i]];
        x = std::move(nx);
        bool id = true;
        for (int i = 0; i < d; ++i)
            if (x[i] != i) {
                id = false;
                break;
            }
        if (id) return ord;
    }
}

// a homomorphism G -> Sym(d), stored as one permutation per group element
using Hom = std::vector<std::vector<int>>;

// extend generator images to a full homomorphism, or fail
std::optional<Hom> close_hom(const FiniteGroup& g, const std::vector<int>& gens,
                             const std::vector<std::vector<int>>& images, int d) {
    Hom theta(g.order);
    std::vector<bool> known(g.order, false);
    theta[FiniteGroup::identity].resize(d);
    std::iota(theta[FiniteGroup::identity].begin(), theta[FiniteGroup::identity].end(), 0);
    known[FiniteGroup::identity] = true;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.order; ++x) {
            if (!known[x]) continue;
            for (size_t j = 0; j < gens.size(); ++j) {
                int y = g.mul(x, gens[j]);
                std::vector<int> comp(d);
                for (int i = 0; i < d; ++i) comp[i] = theta[x][images[j][i]];
                if (!known[y]) {
                    theta[y] = std::move(comp);
                    known[y] = true;
                    changed = true;
                } else if (theta[y] != comp) {
                    return std::nullopt;
                }
            }
        }
    }
    for (bool k : known)
        if (!k) return std::nullopt;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            int ab = g.mul(a, b);
            for (int i = 0; i < d; ++i)
                if (theta[ab][i] != theta[a][theta[b][i]]) return std::nullopt;
        }
    return theta;
}

bool image_transitive(const Hom& theta, int d) {
    if (d == 0) return true;
    std::vector<bool> seen(d, false);
    seen[0] = true;
    std::vector<int> frontier{0};
    int count = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (const auto& p : theta) {
                int y = p[x];
                if (!seen[y]) {
                    seen[y] = true;
                    next.push_back(y);
                    ++count;
                }
            }
        frontier = std::move(next);
    }
    return count == d;
}

// all homomorphisms G -> Sym(d) with transitive image, in deterministic order
std::vector<Hom> transitive_homs(const FiniteGroup& g, int d) {
    auto perms = permutations_of(std::max(d, 1));
    std::vector<int> perm_orders(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) perm_orders[i] = perm_order(perms[i]);

    auto gens = generating_sequence(g);
    std::vector<Hom> out;
    std::vector<std::vector<int>> images(gens.size());

    auto dfs = [&](auto&& self, size_t k) -> void {
        if (k == gens.size()) {
            if (auto theta = close_hom(g, gens, images, d))
                if (image_transitive(*theta, d)) out.push_back(std::move(*theta));
            return;
        }
        int ord = element_order(g, gens[k]);
        for (size_t i = 0; i < perms.size(); ++i) {
            if (ord % perm_orders[i] != 0) continue;
            images[k] = perms[i];
            self(self, k + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

struct SearchState {
    const FiniteGroup* group;
    int m;
    const std::vector<Hom>* homs;
    std::vector<std::vector<std::vector<int>>> table;  // [g][x][y], row x filled when assigned
    std::int64_t nodes = 0;
    std::vector<BinaryAction> found;
};

// distributivity tuples that become checkable once row r is assigned
bool distributivity_ok_incremental(const SearchState& st, int r) {
    const int n = st.group->order, m = st.m;
    const auto& T = st.table;
    for (int g = 1; g < n; ++g)
        for (int x = 0; x <= r; ++x)
            for (int y = 0; y <= r; ++y) {
                const int w0 = T[g][x][y];
                if (w0 > r) continue;
                if (x != r && y != r && w0 != r) continue;  // already checked at an earlier row
                for (int h = 1; h < n; ++h)
                    for (int z = 0; z < m; ++z)
                        if (T[g][x][T[h][y][z]] != T[h][w0][T[g][x][z]]) return false;
            }
    return true;
}

void assign_row(SearchState& st, int x, const Hom& theta) {
    const int n = st.group->order, m = st.m;
    for (int g = 0; g < n; ++g) {
        auto& row = st.table[g][x];
        row[x] = x;
        for (int y = 0; y < m; ++y) {
            if (y == x) continue;
            int j = y < x ? y : y - 1;
            int img = theta[g][j];
            row[y] = img < x ? img : img + 1;
        }
    }
}

void search_dfs(SearchState& st, int r) {
    const int m = st.m;
    if (r == m) {
        BinaryAction a = make_action_unchecked(*st.group, m, st.table);
        if (!verify_action(a.group, m, a.table).ok()) return;  // cannot happen
        if (!is_effective(a)) return;
        if (!is_semitransitive(a)) return;
        if (!is_distributive(a)) return;
        st.found.push_back(std::move(a));
        return;
    }
    for (const auto& theta : *st.homs) {
        ++st.nodes;
        assign_row(st, r, theta);
        if (distributivity_ok_incremental(st, r)) search_dfs(st, r + 1);
    }
}

std::vector<int> canonical_space_form(const BinaryAction& a) {
    const int n = a.group.order, m = a.space_size;
    auto perms = permutations_of(m);
    std::vector<int> best;
    std::vector<int> cur(n * m * m);
    std::vector<int> inv(m);
    for (const auto& f : perms) {
        for (int i = 0; i < m; ++i) inv[f[i]] = i;
        int k = 0;
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) cur[k++] = f[a.at(g, inv[x], inv[y])];
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

std::vector<int> canonical_twisted_form(const BinaryAction& a) {
    std::vector<int> best;
    for (const auto& sigma : automorphisms(a.group)) {
        BinaryAction twisted = a;
        for (int g = 0; g < a.group.order; ++g) twisted.table[g] = a.table[sigma[g]];
        auto c = canonical_space_form(twisted);
        if (best.empty() || c < best) best = c;
    }
    return best;
}

int distinct_count(std::vector<std::vector<int>> forms) {
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return static_cast<int>(forms.size());
}

}  // namespace

SearchReport search_semitransitive(const FiniteGroup& g, int m, const SearchOptions& options) {
    if (m < 1) throw BgsError("search_semitransitive: m must be positive");
    if (m > options.max_space) throw BoundsError("search_semitransitive: m exceeds bound");
    if (g.order > options.max_group) throw BoundsError("search_semitransitive: |G| exceeds bound");

    SearchReport rep;
    rep.group_desc = "order-" + std::to_string(g.order) + " group";
    rep.space_size = m;
    rep.options = options;

    if (m == 1) {
        if (g.order == 1) rep.found.push_back(identity_only_action(g, 1));
    } else if (options.prune_size && g.order != m - 1) {
        rep.pruned_reason = "trivial-stabilizer obstruction: |G| != m-1";
    } else if (options.prune_abelian && !is_abelian(g)) {
        rep.pruned_reason = "abelianness obstruction: G is non-abelian";
    } else {
        auto homs = transitive_homs(g, m - 1);
        SearchState st;
        st.group = &g;
        st.m = m;
        st.homs = &homs;
        st.table.assign(g.order, std::vector<std::vector<int>>(m, std::vector<int>(m, -1)));
        search_dfs(st, 0);
        rep.nodes_explored = st.nodes;
        rep.found = std::move(st.found);
    }

    std::sort(rep.found.begin(), rep.found.end(),
              [](const BinaryAction& a, const BinaryAction& b) { return flatten(a) < flatten(b); });
    rep.found.erase(std::unique(rep.found.begin(), rep.found.end()), rep.found.end());
    rep.count_raw = static_cast<int>(rep.found.size());

    std::vector<std::vector<int>> space_forms, twisted_forms;
    for (const auto& a : rep.found) {
        space_forms.push_back(canonical_space_form(a));
        twisted_forms.push_back(canonical_twisted_form(a));
    }
    rep.count_up_to_biequimorphism = distinct_count(std::move(space_forms));
    rep.count_up_to_twisted_biequimorphism = distinct_count(std::move(twisted_forms));
    return rep;
}

TransitiveReport classify_transitive(const FiniteGroup& g) {
    const int n = g.order;
    if (n > 4) throw BoundsError("classify_transitive: |G| > 4");
    TransitiveReport rep;

    if (n == 1) {
        rep.found.push_back(identity_only_action(g, 1));
        rep.count = 1;
        rep.candidates_scanned = 1;
        return rep;
    }

    auto gens = generating_sequence(g);
    if (gens.size() != 1)
        throw BoundsError("classify_transitive: only single-generator groups supported at this size");
    int a0 = gens[0];
    int ord = element_order(g, a0);

    // element index of a0^k for each k
    std::vector<int> power_elem(ord);
    power_elem[0] = FiniteGroup::identity;
    for (int k = 1; k < ord; ++k) power_elem[k] = g.mul(power_elem[k - 1], a0);

    auto translation = conjugate_left_translation(g);

    H2Enumerator h2(n);
    auto e = identity_op(n);
    while (auto f = h2.next()) {
        ++rep.candidates_scanned;
        // need f^ord = e for a well-defined homomorphism
        std::vector<BinaryOp> powers{e};
        BinaryOp acc = e;
        bool ok = true;
        for (int k = 1; k <= ord; ++k) {
            acc = compose_right(acc, *f);
            if (k < ord)
                powers.push_back(acc);
            else
                ok = acc == e;
        }
        if (!ok) continue;

        std::vector<std::vector<std::vector<int>>> table(n);
        for (int k = 0; k < ord; ++k) table[power_elem[k]] = powers[k].table;
        BinaryAction act = make_action_unchecked(g, n, std::move(table));
        if (!is_effective(act) || !is_transitive(act) || !is_distributive(act)) continue;
        if (!are_biequimorphic(act, translation)) rep.all_biequimorphic_to_translation = false;
        rep.found.push_back(std::move(act));
    }
    std::sort(rep.found.begin(), rep.found.end(),
              [](const BinaryAction& a, const BinaryAction& b) { return flatten(a) < flatten(b); });
    rep.count = static_cast<int>(rep.found.size());
    return rep;
}

RealizabilityResult realizable_as_mult_group(const FiniteGroup& g, const SearchOptions& options) {
    RealizabilityResult res;
    res.report = search_semitransitive(g, g.order + 1, options);
    if (res.report.found.empty()) return res;

    res.realizable = true;
    res.witness = res.report.found.front();
    // any qualifying params yield the induced field
    FieldParams params{0, 1, g.order > 1 ? 1 : 0};
    res.induced_field = action_to_field(*res.witness, params).field;
    return res;
}

}  // namespace bgs
