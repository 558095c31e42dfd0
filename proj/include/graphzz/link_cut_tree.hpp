#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// Link/cut tree with maximum aggregation over node values. The MSF mirrors
// each tree edge as an intermediate node carrying the edge weight, so the
// aggregate over an access path is the max edge weight on the tree path.
class link_cut_tree {
public:
    static constexpr std::uint32_t none = 0xffffffffu;
    static constexpr weight_t neg_inf = std::numeric_limits<weight_t>::min();

    std::uint32_t add_node(weight_t val, std::uint64_t tag);
    void link(std::uint32_t child, std::uint32_t parent);
    void cut_edge(std::uint32_t a, std::uint32_t b);  // a and b adjacent in the tree
    bool same_tree(std::uint32_t a, std::uint32_t b);
    // (max value, tag of a node attaining it) over the a..b tree path
    std::pair<weight_t, std::uint64_t> path_max(std::uint32_t a, std::uint32_t b);

private:
    struct node_t {
        std::uint32_t l = none, r = none, p = none;
        bool flip = false;
        weight_t val = neg_inf, mx = neg_inf;
        std::uint64_t tag = 0;
        std::uint32_t mx_node = none;
    };
    std::vector<node_t> nodes_;

    bool is_splay_root(std::uint32_t x) const;
    void push(std::uint32_t x);
    void pull(std::uint32_t x);
    void rotate(std::uint32_t x);
    void splay(std::uint32_t x);
    void access(std::uint32_t x);
    void make_root(std::uint32_t x);
    std::uint32_t find_root(std::uint32_t x);
};

}  // namespace graphzz
