#include "bgs/duality.hpp"

#include <algorithm>

namespace bgs {

BinaryAction field_to_action(const FiniteField& f) {
    auto mg = multiplicative_group(f);
    const int q = f.order, n = mg.group.order;
    std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(q, std::vector<int>(q)));
    for (int g = 0; g < n; ++g) {
        int p = mg.elem_of_index[g];
        int one_minus_p = f.sub(FiniteField::one, p);
        for (int a = 0; a < q; ++a) {
            int pa = f.mulv(one_minus_p, a);
            for (int b = 0; b < q; ++b) table[g][a][b] = f.addv(pa, f.mulv(p, b));
        }
    }
    return make_action_unchecked(std::move(mg.group), q, std::move(table));
}

BuiltField action_to_field(const BinaryAction& a, const FieldParams& params) {
    require_qualifying(a);
    const int m = a.space_size, n = a.group.order;
    if (params.x0 < 0 || params.x0 >= m || params.x1 < 0 || params.x1 >= m)
        throw DegenerateParams("x0/x1 out of range");
    if (params.x0 == params.x1) throw DegenerateParams("x0 and x1 must be distinct");

    BuiltField out;
    out.relabel.assign(m, -1);
    out.relabel[params.x0] = 0;

    if (n == 1) {
        // two-point carrier: the field of order 2 is forced, no s needed
        out.relabel[params.x1] = 1;
        out.field = gf(2, 1);
        return out;
    }
    if (params.s <= 0 || params.s >= n)
        throw DegenerateParams("s must be a non-identity group element");

    // i(g) = g(x0, x1) bijects G onto X minus {x0}
    std::vector<int> i_of(n);
    for (int g = 0; g < n; ++g) {
        int v = a.at(g, params.x0, params.x1);
        if (v == params.x0 || out.relabel[v] != -1)
            throw BgsError("action_to_field: i is not a bijection (precondition violated)");
        i_of[g] = v;
        out.relabel[v] = g + 1;
    }

    const int q = m;
    FiniteField f;
    f.order = q;
    f.add.assign(q, std::vector<int>(q));
    f.mul.assign(q, std::vector<int>(q));

    // multiplication through the group: label k corresponds to group index k-1
    for (int x = 0; x < q; ++x) {
        f.mul[x][0] = f.mul[0][x] = 0;
        for (int y = 1; y < q; ++y)
            if (x != 0) f.mul[x][y] = a.group.mul(x - 1, y - 1) + 1;
    }

    // addition: x + y = s(tilde(x,0), s^{-1}(0,y))
    int tilde = derived_elements(a, params.s).tilde;
    int sinv = a.group.inv(params.s);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            int sum = a.at(params.s, a.at(tilde, u, params.x0), a.at(sinv, params.x0, v));
            f.add[out.relabel[u]][out.relabel[v]] = out.relabel[sum];
        }

    auto rep = verify_field(f.add, f.mul, q);
    if (!rep.ok())
        throw BgsError("action_to_field: constructed tables are not a field: " + rep.violations.front());

    int c = 1, x = FiniteField::one;
    while (x != FiniteField::zero) {
        x = f.add[x][FiniteField::one];
        ++c;
    }
    f.characteristic = c;

    // reconstruction identity: g(x,y) = (1-p)x + py with p = i(g)
    for (int g = 0; g < n; ++g) {
        int p = g + 1;
        int omp = f.sub(FiniteField::one, p);
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
                if (out.relabel[a.at(g, u, v)] !=
                    f.addv(f.mulv(omp, out.relabel[u]), f.mulv(p, out.relabel[v])))
                    throw BgsError("action_to_field: reconstruction identity fails");
    }

    out.field = std::move(f);
    return out;
}

FieldIso parameter_iso(const BinaryAction& a, const FieldParams& params, const FieldParams& params2) {
    auto bf1 = action_to_field(a, params);
    auto bf2 = action_to_field(a, params2);
    const FiniteField& f = bf1.field;
    const FiniteField& f2 = bf2.field;
    const int q = f.order;

    std::vector<int> inv1(q), inv2(q);
    for (int u = 0; u < q; ++u) {
        inv1[bf1.relabel[u]] = u;
        inv2[bf2.relabel[u]] = u;
    }

    int z = bf1.relabel[params2.x0];  // 0' as an element of F
    int o = bf1.relabel[params2.x1];  // 1' as an element of F
    int delta = f.sub(o, z);

    auto phi_in_f = [&](int x) { return f.addv(f.mulv(x, delta), z); };

    FieldIso phi(q);
    for (int x = 0; x < q; ++x) phi[x] = bf2.relabel[inv1[phi_in_f(x)]];

    if (phi[FiniteField::zero] != FiniteField::zero || phi[FiniteField::one] != FiniteField::one)
        throw BgsError("parameter_iso: map does not preserve 0/1");
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            if (phi[f.addv(x, y)] != f2.addv(phi[x], phi[y]))
                throw BgsError("parameter_iso: additivity fails");
            if (phi[f.mulv(x, y)] != f2.mulv(phi[x], phi[y]))
                throw BgsError("parameter_iso: multiplicativity fails");
        }

    // auxiliary identities relating the two structures on the common carrier
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
            // x (+') y = x + y - 0'
            int lhs = inv2[f2.addv(bf2.relabel[u], bf2.relabel[v])];
            int rhs = inv1[f.sub(f.addv(bf1.relabel[u], bf1.relabel[v]), z)];
            if (lhs != rhs) throw BgsError("parameter_iso: addition-shift identity fails");
            // phi(x) (*') y = x*(y - 0') + 0'
            int pu = inv1[phi_in_f(bf1.relabel[u])];
            int lhs2 = inv2[f2.mulv(bf2.relabel[pu], bf2.relabel[v])];
            int rhs2 = inv1[f.addv(f.mulv(bf1.relabel[u], f.sub(bf1.relabel[v], z)), z)];
            if (lhs2 != rhs2) throw BgsError("parameter_iso: multiplication-shift identity fails");
        }

    return phi;
}

FieldParams canonical_params(const FiniteField& f) {
    FieldParams p;
    p.x0 = FiniteField::zero;
    p.x1 = FiniteField::one;
    if (f.order < 3) {
        p.s = 0;  // unused for the trivial multiplicative group
        return p;
    }
    // smallest element of multiplicative order > 1 is element 2, which sits
    // at group index 1 under the mult-group numbering
    p.s = 1;
    return p;
}

FieldIso roundtrip_field(const FiniteField& f) {
    auto act = field_to_action(f);
    auto built = action_to_field(act, canonical_params(f));
    if (built.field.add == f.add && built.field.mul == f.mul) {
        FieldIso id(f.order);
        for (int i = 0; i < f.order; ++i) id[i] = i;
        return id;
    }
    auto iso = fields_isomorphic(f, built.field);
    if (!iso) throw BgsError("roundtrip_field: rebuilt field is not isomorphic to the input");
    return *iso;
}

bool roundtrip_action(const BinaryAction& a, const FieldParams& params) {
    auto built = action_to_field(a, params);
    auto rebuilt = field_to_action(built.field);
    if (rebuilt.group.order != a.group.order || rebuilt.space_size != a.space_size) return false;
    const int n = a.group.order, m = a.space_size;
    for (int g = 0; g < n; ++g)
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
                if (rebuilt.at(g, built.relabel[u], built.relabel[v]) != built.relabel[a.at(g, u, v)])
                    return false;
    return true;
}

}  // namespace bgs
