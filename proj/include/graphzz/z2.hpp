#pragma once

#include <cstdint>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// Dense bit vector over Z2.
struct bitvec {
    std::vector<std::uint64_t> w;

    bitvec() = default;
    explicit bitvec(int nbits) : w(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

    bool get(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    void flip(int i) { w[static_cast<std::size_t>(i >> 6)] ^= 1ull << (i & 63); }
    void operator^=(const bitvec& o);
    bool zero() const;
    int lowest() const;  // index of the lowest set bit, -1 if zero
};

// Row-echelon basis keyed by lowest set bit. Callers needing combination
// bookkeeping append augmentation columns to their vectors.
class z2_echelon {
public:
    // Reduces v against the basis; stores it and returns true when it was
    // independent.
    bool insert(bitvec v);
    // Reduces v in place without storing.
    void reduce(bitvec& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct row_t {
        bitvec v;
        int pivot;
    };
    std::vector<row_t> rows_;
};

// A subspace of V (+) W spanned by stacked rows [v | w], encoding a linear
// relation between the two factors.
struct z2_relation {
    int dim_left = 0, dim_right = 0;
    std::vector<bitvec> rows;  // each of width dim_left + dim_right

    static z2_relation identity(int dim);
    void canonicalize();  // reduced spanning set, canonical for equality
};

z2_relation compose(const z2_relation& a, const z2_relation& b);

// dim(projection to the right factor) - dim(intersection with 0 (+) W):
// for composed homology relations this counts the intervals containing the
// whole index window.
index_t relation_rank(const z2_relation& r);

}  // namespace graphzz
