#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// Persistence interval [birth, death], both ends in [0, m].
struct interval {
    index_t birth = 0;
    index_t death = 0;

    friend bool operator==(const interval&, const interval&) = default;
    friend auto operator<=>(const interval&, const interval&) = default;
};

// Multiset of intervals in one homology dimension. Equality is multiset
// equality: sort then compare.
struct barcode {
    int dim = 0;
    std::vector<interval> intervals;

    void canonicalize();
    bool same_intervals(const barcode& other) const;

    // Number of intervals containing index i.
    index_t count_at(index_t i) const;
};

enum class barcode_format { text, json };

// Text format: one "dim birth death" triple per line, canonically sorted.
// JSON mirror: {"dim": p, "intervals": [[b, d], ...]}.
std::string serialize_barcode(const barcode& bc, barcode_format fmt = barcode_format::text);
barcode parse_barcode(const std::string& text);

}  // namespace graphzz
