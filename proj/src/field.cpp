#include "bgs/field.hpp"

#include <algorithm>
#include <string>

namespace bgs {

int FiniteField::neg(int a) const {
    for (int b = 0; b < order; ++b)
        if (add[a][b] == zero) return b;
    throw BgsError("neg: no additive inverse");
}

int FiniteField::recip(int a) const {
    if (a == zero) throw BgsError("recip of zero");
    for (int b = 1; b < order; ++b)
        if (mul[a][b] == one) return b;
    throw BgsError("recip: no multiplicative inverse");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// polynomials over GF(p), coefficient i of x^i
using Poly = std::vector<int>;

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = degree(m);
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i] % p;
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(std::max(dm, 1));
    return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
    auto r = poly_mod(a, d, p);
    return degree(r) < 0;
}

// enumerate monic polynomials of the given degree in ascending-coefficient
// lexicographic order (constant term varies slowest)
bool next_coeffs(std::vector<int>& c, int p) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

bool is_irreducible(const Poly& f, int p) {
    int n = degree(f);
    for (int d = 1; d < n; ++d) {
        std::vector<int> c(d, 0);
        do {
            Poly g(d + 1, 0);
            for (int i = 0; i < d; ++i) g[i] = c[i];
            g[d] = 1;
            if (divides(g, f, p)) return false;
        } while (next_coeffs(c, p));
    }
    return true;
}

// smallest monic irreducible of degree n, by lexicographic order on the
// coefficient tuple (c0, c1, ..., c_{n-1})
Poly smallest_irreducible(int p, int n) {
    std::vector<int> c(n, 0);
    while (true) {
        Poly f(n + 1, 0);
        for (int i = 0; i < n; ++i) f[i] = c[i];
        f[n] = 1;
        if (is_irreducible(f, p)) return f;
        if (!next_coeffs(c, p)) throw BgsError("no irreducible polynomial found");  // cannot happen
    }
}

int encode(const Poly& a, int p, int n) {
    int v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return v;
}

Poly decode(int v, int p, int n) {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

}  // namespace

FiniteField gf(int p, int n) {
    if (!is_prime(p)) throw BgsError("gf: p is not prime");
    if (n < 1) throw BgsError("gf: n must be positive");
    std::int64_t q64 = 1;
    for (int i = 0; i < n; ++i) q64 *= p;
    if (q64 > 4096) throw BoundsError("gf: p^n > 4096");
    int q = static_cast<int>(q64);

    Poly mod = n == 1 ? Poly{0, 1} : smallest_irreducible(p, n);

    FiniteField f;
    f.order = q;
    f.characteristic = p;
    f.add.assign(q, std::vector<int>(q));
    f.mul.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p, n);
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p, n);
            Poly sum(n);
            for (int i = 0; i < n; ++i) sum[i] = (pa[i] + pb[i]) % p;
            f.add[a][b] = encode(sum, p, n);
            f.mul[a][b] = encode(poly_mod(poly_mul(pa, pb, p), mod, p), p, n);
        }
    }
    return f;
}

FiniteField gf(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int n = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++n;
        }
        if (v == 1 && n >= 1) return gf(p, n);
    }
    throw BgsError("gf: " + std::to_string(q) + " is not a prime power");
}

ValidationReport verify_field(const std::vector<std::vector<int>>& add, const std::vector<std::vector<int>>& mul,
                              int q) {
    ValidationReport rep;
    if (static_cast<int>(add.size()) != q || static_cast<int>(mul.size()) != q) {
        rep.fail("table size does not match order");
        return rep;
    }
    for (int a = 0; a < q; ++a) {
        if (static_cast<int>(add[a].size()) != q || static_cast<int>(mul[a].size()) != q) {
            rep.fail("ragged table at row " + std::to_string(a));
            return rep;
        }
        for (int b = 0; b < q; ++b)
            if (add[a][b] < 0 || add[a][b] >= q || mul[a][b] < 0 || mul[a][b] >= q) {
                rep.fail("entry out of range at row " + std::to_string(a));
                return rep;
            }
    }

    auto add_rep = verify_group(add);
    for (auto& v : add_rep.violations) rep.fail("additive group: " + v);

    // locate additive identity
    int zero = -1;
    for (int c = 0; c < q && zero < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < q; ++a)
            if (add[c][a] != a || add[a][c] != a) {
                ok = false;
                break;
            }
        if (ok) zero = c;
    }
    if (zero < 0) {
        rep.fail("no additive identity");
        return rep;
    }

    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (add[a][b] != add[b][a]) {
                rep.fail("addition not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                a = q;
                break;
            }

    for (int a = 0; a < q; ++a)
        if (mul[a][zero] != zero || mul[zero][a] != zero) {
            rep.fail("x*0 != 0 for x=" + std::to_string(a));
            break;
        }

    // multiplicative group on nonzero elements
    std::vector<std::vector<int>> nz;
    std::vector<int> elems;
    for (int a = 0; a < q; ++a)
        if (a != zero) elems.push_back(a);
    bool closed = true;
    for (int a : elems)
        for (int b : elems)
            if (mul[a][b] == zero) {
                rep.fail("zero divisors: " + std::to_string(a) + "*" + std::to_string(b) + " = 0");
                closed = false;
            }
    if (closed && q > 1) {
        std::vector<int> pos(q, -1);
        for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
        nz.assign(elems.size(), std::vector<int>(elems.size()));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) nz[i][j] = pos[mul[elems[i]][elems[j]]];
        auto mul_rep = verify_group(nz);
        for (auto& v : mul_rep.violations) rep.fail("multiplicative group: " + v);
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j)
                if (nz[i][j] != nz[j][i]) {
                    rep.fail("multiplication not commutative");
                    i = elems.size();
                    break;
                }
    }

    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z)
                if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]) {
                    rep.fail("distributivity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                             std::to_string(z) + ")");
                    return rep;
                }
    return rep;
}

FiniteField field_from_tables(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul) {
    int q = static_cast<int>(add.size());
    auto rep = verify_field(add, mul, q);
    if (!rep.ok()) throw BgsError("invalid field tables: " + rep.violations.front());

    int zero = -1, one = -1;
    for (int c = 0; c < q && zero < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < q; ++a)
            if (add[c][a] != a) {
                ok = false;
                break;
            }
        if (ok) zero = c;
    }
    for (int c = 0; c < q && one < 0; ++c) {
        if (c == zero) continue;
        bool ok = true;
        for (int a = 0; a < q; ++a)
            if (mul[c][a] != a) {
                ok = false;
                break;
            }
        if (ok) one = c;
    }
    if (q == 1 || one < 0) throw BgsError("invalid field tables: no multiplicative identity");

    std::vector<int> relabel(q);
    for (int i = 0; i < q; ++i) relabel[i] = i;
    // send zero -> 0 and one -> 1 by a transposition chain
    auto apply = [&](int from, int to) {
        int other = -1;
        for (int i = 0; i < q; ++i)
            if (relabel[i] == to) other = i;
        std::swap(relabel[from], relabel[other]);
    };
    apply(zero, 0);
    apply(one, 1);

    FiniteField f;
    f.order = q;
    f.add.assign(q, std::vector<int>(q));
    f.mul.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            f.add[relabel[a]][relabel[b]] = relabel[add[a][b]];
            f.mul[relabel[a]][relabel[b]] = relabel[mul[a][b]];
        }
    int c = 1, x = FiniteField::one;
    while (x != FiniteField::zero) {
        x = f.add[x][FiniteField::one];
        ++c;
        if (c > q + 1) throw BgsError("invalid field tables: characteristic undefined");
    }
    f.characteristic = c;
    return f;
}

MultGroup multiplicative_group(const FiniteField& f) {
    int q = f.order;
    MultGroup mg;
    mg.index_of_elem.assign(q, -1);
    mg.elem_of_index.reserve(q - 1);
    mg.elem_of_index.push_back(FiniteField::one);
    mg.index_of_elem[FiniteField::one] = 0;
    for (int a = 2; a < q; ++a) {
        mg.index_of_elem[a] = static_cast<int>(mg.elem_of_index.size());
        mg.elem_of_index.push_back(a);
    }
    int n = q - 1;
    mg.group.order = n;
    mg.group.cayley.assign(n, std::vector<int>(n));
    mg.group.inverses.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            mg.group.cayley[i][j] = mg.index_of_elem[f.mulv(mg.elem_of_index[i], mg.elem_of_index[j])];
        mg.group.inverses[i] = mg.index_of_elem[f.recip(mg.elem_of_index[i])];
    }
    return mg;
}

int multiplicative_order(const FiniteField& f, int a) {
    if (a == FiniteField::zero) throw BgsError("multiplicative_order of zero");
    int x = a, k = 1;
    while (x != FiniteField::one) {
        x = f.mulv(x, a);
        ++k;
    }
    return k;
}

std::optional<FieldIso> fields_isomorphic(const FiniteField& f, const FiniteField& g) {
    if (f.order != g.order) return std::nullopt;
    int q = f.order;
    if (q > 4096) throw BoundsError("fields_isomorphic: q > 4096");
    if (q == 2) return FieldIso{0, 1};

    int gen = -1;
    for (int a = 1; a < q; ++a)
        if (multiplicative_order(f, a) == q - 1) {
            gen = a;
            break;
        }
    if (gen < 0) return std::nullopt;  // not actually a field

    for (int img = 1; img < q; ++img) {
        if (multiplicative_order(g, img) != q - 1) continue;
        FieldIso phi(q, -1);
        phi[FiniteField::zero] = FiniteField::zero;
        int x = FiniteField::one, y = FiniteField::one;
        phi[x] = y;
        for (int k = 1; k < q - 1; ++k) {
            x = f.mulv(x, gen);
            y = g.mulv(y, img);
            phi[x] = y;
        }
        bool ok = true;
        for (int a = 0; a < q && ok; ++a)
            for (int b = 0; b < q; ++b)
                if (phi[f.addv(a, b)] != g.addv(phi[a], phi[b])) {
                    ok = false;
                    break;
                }
        if (ok) return phi;
    }
    return std::nullopt;
}

}  // namespace bgs
