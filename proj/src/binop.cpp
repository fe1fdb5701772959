#include "bgs/binop.hpp"

#include <algorithm>
#include <numeric>

namespace bgs {

namespace {

void require_same_size(const BinaryOp& f, const BinaryOp& g) {
    if (f.space_size != g.space_size) throw BgsError("binary op size mismatch");
}

}  // namespace

BinaryOp identity_op(int m) {
    if (m < 1) throw BgsError("identity_op: m must be positive");
    BinaryOp f;
    f.space_size = m;
    f.table.assign(m, std::vector<int>(m));
    for (auto& row : f.table) std::iota(row.begin(), row.end(), 0);
    return f;
}

BinaryOp first_projection_op(int m) {
    if (m < 1) throw BgsError("first_projection_op: m must be positive");
    BinaryOp f;
    f.space_size = m;
    f.table.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x) std::fill(f.table[x].begin(), f.table[x].end(), x);
    return f;
}

BinaryOp compose_right(const BinaryOp& f, const BinaryOp& g) {
    require_same_size(f, g);
    int m = f.space_size;
    BinaryOp r;
    r.space_size = m;
    r.table.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) r.table[x][y] = f.table[x][g.table[x][y]];
    return r;
}

BinaryOp compose_left(const BinaryOp& f, const BinaryOp& g) {
    require_same_size(f, g);
    int m = f.space_size;
    BinaryOp r;
    r.space_size = m;
    r.table.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) r.table[x][y] = f.table[g.table[x][y]][y];
    return r;
}

BinaryOp star(const BinaryOp& f) {
    int m = f.space_size;
    BinaryOp r;
    r.space_size = m;
    r.table.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) r.table[x][y] = f.table[y][x];
    return r;
}

bool is_left_quasigroup(const BinaryOp& f) {
    int m = f.space_size;
    std::vector<bool> hit(m);
    for (int x = 0; x < m; ++x) {
        std::fill(hit.begin(), hit.end(), false);
        for (int y = 0; y < m; ++y) {
            int v = f.table[x][y];
            if (hit[v]) return false;
            hit[v] = true;
        }
    }
    return true;
}

BinaryOp invert(const BinaryOp& f) {
    int m = f.space_size;
    BinaryOp r;
    r.space_size = m;
    r.table.assign(m, std::vector<int>(m, -1));
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            int v = f.table[x][y];
            if (r.table[x][v] != -1) throw NotInvertible(x);
            r.table[x][v] = y;
        }
        for (int y = 0; y < m; ++y)
            if (r.table[x][y] < 0) throw NotInvertible(x);
    }
    return r;
}

BinaryOp embed_unary(const std::vector<int>& h) {
    int m = static_cast<int>(h.size());
    std::vector<bool> hit(m, false);
    for (int v : h) {
        if (v < 0 || v >= m || hit[v]) throw BgsError("embed_unary: not a permutation");
        hit[v] = true;
    }
    BinaryOp f;
    f.space_size = m;
    f.table.assign(m, h);
    return f;
}

H2Enumerator::H2Enumerator(int m) : m_(m) {
    if (m < 1) throw BgsError("enumerate_h2: m must be positive");
    if (m > 4) throw BoundsError("enumerate_h2: m > 4");
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    odometer_.assign(m, 0);
}

std::optional<BinaryOp> H2Enumerator::next() {
    if (done_) return std::nullopt;
    BinaryOp f;
    f.space_size = m_;
    f.table.reserve(m_);
    for (int x = 0; x < m_; ++x) f.table.push_back(perms_[odometer_[x]]);
    // advance, least significant digit last (row 0 is most significant, so
    // the emitted sequence is in lexicographic flattened-table order)
    int i = m_ - 1;
    while (i >= 0) {
        if (++odometer_[i] < static_cast<int>(perms_.size())) break;
        odometer_[i] = 0;
        --i;
    }
    if (i < 0) done_ = true;
    return f;
}

std::int64_t H2Enumerator::count(int m) {
    std::int64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    std::int64_t c = 1;
    for (int i = 0; i < m; ++i) c *= fact;
    return c;
}

}  // namespace bgs
