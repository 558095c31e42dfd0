#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphzz/barcode.hpp"
#include "graphzz/filtration.hpp"

namespace gztest {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) {
    return std::string(GRAPHZZ_DATA_DIR) + "/" + name;
}

inline graphzz::barcode make_barcode(int dim,
                                     std::vector<std::pair<long long, long long>> ivs) {
    graphzz::barcode bc;
    bc.dim = dim;
    for (auto [b, d] : ivs) bc.intervals.push_back({b, d});
    bc.canonicalize();
    return bc;
}

inline std::string show(const graphzz::barcode& bc) {
    return graphzz::serialize_barcode(bc);
}

}  // namespace gztest
