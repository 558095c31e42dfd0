#include "graphzz/z2.hpp"

#include <algorithm>
#include <bit>

namespace graphzz {

void bitvec::operator^=(const bitvec& o) {
    GZ_CHECK(w.size() == o.w.size(), "xor of bit vectors of different widths");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
}

bool bitvec::zero() const {
    for (std::uint64_t x : w)
        if (x) return false;
    return true;
}

int bitvec::lowest() const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    return -1;
}

bool z2_echelon::insert(bitvec v) {
    reduce(v);
    int p = v.lowest();
    if (p < 0) return false;
    rows_.push_back({std::move(v), p});
    return true;
}

void z2_echelon::reduce(bitvec& v) const {
    while (true) {
        int p = v.lowest();
        if (p < 0) break;
        auto it = std::find_if(rows_.begin(), rows_.end(),
                               [&](const row_t& r) { return r.pivot == p; });
        if (it == rows_.end()) break;
        v ^= it->v;
    }
}

z2_relation z2_relation::identity(int dim) {
    z2_relation r;
    r.dim_left = r.dim_right = dim;
    for (int i = 0; i < dim; ++i) {
        bitvec v(2 * dim);
        v.set(i);
        v.set(dim + i);
        r.rows.push_back(v);
    }
    return r;
}

namespace {

// Gauss-Jordan: fully reduced spanning rows sorted by pivot; canonical for
// the spanned subspace.
std::vector<bitvec> reduced_rows(std::vector<bitvec> rows) {
    std::vector<bitvec> basis;
    for (bitvec& v : rows) {
        while (true) {
            int p = v.lowest();
            if (p < 0) break;
            auto it = std::find_if(basis.begin(), basis.end(),
                                   [&](const bitvec& b) { return b.lowest() == p; });
            if (it == basis.end()) break;
            v ^= *it;
        }
        if (v.zero()) continue;
        int p = v.lowest();
        for (bitvec& b : basis)
            if (b.get(p)) b ^= v;
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(),
              [](const bitvec& a, const bitvec& b) { return a.lowest() < b.lowest(); });
    return basis;
}

}  // namespace

void z2_relation::canonicalize() { rows = reduced_rows(std::move(rows)); }

z2_relation compose(const z2_relation& a, const z2_relation& b) {
    GZ_CHECK(a.dim_right == b.dim_left, "relation composition dimension mismatch");
    const int dv = a.dim_right;
    const int du = a.dim_left;
    const int dw = b.dim_right;
    // columns: [ V | U | W ]; eliminating the V block leaves the composite
    const int width = dv + du + dw;
    std::vector<bitvec> work;
    for (const bitvec& r : a.rows) {
        bitvec v(width);
        for (int i = 0; i < du; ++i)
            if (r.get(i)) v.set(dv + i);
        for (int i = 0; i < dv; ++i)
            if (r.get(du + i)) v.set(i);
        work.push_back(v);
    }
    for (const bitvec& r : b.rows) {
        bitvec v(width);
        for (int i = 0; i < dv; ++i)
            if (r.get(i)) v.set(i);
        for (int i = 0; i < dw; ++i)
            if (r.get(dv + i)) v.set(dv + du + i);
        work.push_back(v);
    }
    // eliminate the V columns
    std::vector<bool> used(work.size(), false);
    for (int c = 0; c < dv; ++c) {
        std::size_t pivot = work.size();
        for (std::size_t r = 0; r < work.size(); ++r)
            if (!used[r] && work[r].get(c)) {
                pivot = r;
                break;
            }
        if (pivot == work.size()) continue;
        used[pivot] = true;
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != pivot && work[r].get(c)) work[r] ^= work[pivot];
    }
    z2_relation out;
    out.dim_left = du;
    out.dim_right = dw;
    for (std::size_t r = 0; r < work.size(); ++r) {
        if (used[r]) continue;
        bitvec v(du + dw);
        bool nz = false;
        for (int i = 0; i < du + dw; ++i)
            if (work[r].get(dv + i)) {
                v.set(i);
                nz = true;
            }
        if (nz) out.rows.push_back(v);
    }
    out.canonicalize();
    return out;
}

index_t relation_rank(const z2_relation& r) {
    // rank of the right-factor projection
    z2_echelon proj;
    for (const bitvec& row : r.rows) {
        bitvec v(r.dim_right);
        for (int i = 0; i < r.dim_right; ++i)
            if (row.get(r.dim_left + i)) v.set(i);
        proj.insert(std::move(v));
    }
    // rank of the kernel-side subspace {(0, w) in R}
    std::vector<bool> used(r.rows.size(), false);
    std::vector<bitvec> work = r.rows;
    for (int c = 0; c < r.dim_left; ++c) {
        std::size_t pivot = work.size();
        for (std::size_t row = 0; row < work.size(); ++row)
            if (!used[row] && work[row].get(c)) {
                pivot = row;
                break;
            }
        if (pivot == work.size()) continue;
        used[pivot] = true;
        for (std::size_t row = 0; row < work.size(); ++row)
            if (row != pivot && work[row].get(c)) work[row] ^= work[pivot];
    }
    z2_echelon ker;
    for (std::size_t row = 0; row < work.size(); ++row)
        if (!used[row] && !work[row].zero()) ker.insert(std::move(work[row]));
    return proj.rank() - ker.rank();
}

}  // namespace graphzz
