#include "graphzz/barcode.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace graphzz {

void barcode::canonicalize() { std::sort(intervals.begin(), intervals.end()); }

bool barcode::same_intervals(const barcode& other) const {
    std::vector<interval> a = intervals, b = other.intervals;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

index_t barcode::count_at(index_t i) const {
    index_t c = 0;
    for (const interval& iv : intervals)
        if (iv.birth <= i && i <= iv.death) ++c;
    return c;
}

std::string serialize_barcode(const barcode& bc, barcode_format fmt) {
    std::vector<interval> sorted = bc.intervals;
    std::sort(sorted.begin(), sorted.end());
    if (fmt == barcode_format::json) {
        nlohmann::json j;
        j["dim"] = bc.dim;
        j["intervals"] = nlohmann::json::array();
        for (const interval& iv : sorted) j["intervals"].push_back({iv.birth, iv.death});
        return j.dump() + "\n";
    }
    std::ostringstream out;
    for (const interval& iv : sorted)
        out << bc.dim << ' ' << iv.birth << ' ' << iv.death << '\n';
    return out.str();
}

barcode parse_barcode(const std::string& text) {
    barcode bc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool dim_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long p, b, d;
        if (!(ls >> p)) continue;  // blank line
        if (!(ls >> b >> d)) throw parse_error(lineno, "expected \"dim birth death\"");
        if (!dim_seen) {
            bc.dim = static_cast<int>(p);
            dim_seen = true;
        } else if (bc.dim != p) {
            throw parse_error(lineno, "mixed dimensions in barcode");
        }
        if (b > d) throw parse_error(lineno, "birth exceeds death");
        bc.intervals.push_back({b, d});
    }
    bc.canonicalize();
    return bc;
}

}  // namespace graphzz
