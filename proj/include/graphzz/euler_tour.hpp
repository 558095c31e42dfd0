#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// One spanning forest of a level, kept as Euler tours in a treap keyed by
// tour position. Elements are vertex markers (one per touched vertex) and
// paired directed arcs (two per tree edge). Subtrees aggregate a node count,
// a vertex-marker count and two flag bits used by the replacement search:
//   bit 0: marker's vertex has pending non-tree edges at this level
//   bit 1: arc belongs to a tree edge whose level equals this level
class euler_tour_forest {
public:
    static constexpr std::uint32_t none = 0xffffffffu;
    static constexpr std::uint8_t flag_nontree = 1;
    static constexpr std::uint8_t flag_tree_edge = 2;

    explicit euler_tour_forest(std::uint64_t seed);

    bool has_marker(std::uint32_t v) const {
        return v < marker_.size() && marker_[v] != none;
    }
    std::uint32_t marker(std::uint32_t v);  // creates the singleton tour on first use

    std::uint32_t find_root(std::uint32_t node) const;
    std::uint32_t root_of(std::uint32_t v) { return find_root(marker(v)); }
    std::uint64_t tree_vertices(std::uint32_t root) const { return nodes_[root].vcnt; }
    std::uint64_t tree_nodes(std::uint32_t root) const { return nodes_[root].sz; }

    // Joins the tours of u and v; returns the two arc nodes (u->v, v->u).
    std::pair<std::uint32_t, std::uint32_t> link(std::uint32_t u, std::uint32_t v,
                                                 std::uint64_t tag);
    // Removes a pair of arcs created by link, splitting the tour in two.
    void cut(std::uint32_t arc_uv, std::uint32_t arc_vu);

    void set_vertex_flag(std::uint32_t v, bool on) { set_flag(marker(v), flag_nontree, on); }
    void set_arc_flag(std::uint32_t arc, bool on) { set_flag(arc, flag_tree_edge, on); }

    // Any node with the given flag bit inside the tree, or none.
    std::uint32_t find_flagged(std::uint32_t root, std::uint8_t bit) const;
    // All flagged nodes in the tree (used when the scan must not consume).
    void collect_flagged(std::uint32_t root, std::uint8_t bit,
                         std::vector<std::uint32_t>& out) const;

    std::uint64_t tag(std::uint32_t node) const { return nodes_[node].owner; }
    std::uint32_t marker_vertex(std::uint32_t node) const {
        return static_cast<std::uint32_t>(nodes_[node].owner);
    }

    void validate() const;  // test hook: structural consistency of every tour

private:
    struct node_t {
        std::uint32_t l = none, r = none, p = none;
        std::uint32_t pri = 0;
        std::uint32_t sz = 1;     // all nodes in subtree
        std::uint32_t vcnt = 0;   // vertex markers in subtree
        std::uint8_t self = 0, sub = 0;
        bool is_vertex = false;
        std::uint64_t owner = 0;  // vertex id or edge tag
    };

    std::vector<node_t> nodes_;
    std::vector<std::uint32_t> marker_;
    std::vector<std::uint32_t> free_;
    std::uint64_t rng_state_;

    std::uint32_t next_pri();
    std::uint32_t alloc(bool is_vertex, std::uint64_t owner);
    void release(std::uint32_t x);
    void pull(std::uint32_t x);
    void pull_to_root(std::uint32_t x);
    void set_flag(std::uint32_t x, std::uint8_t bit, bool on);
    std::uint32_t join(std::uint32_t a, std::uint32_t b);
    // (everything before x, [x, ...]) and ([..., x], everything after x)
    std::pair<std::uint32_t, std::uint32_t> split_before(std::uint32_t x);
    std::pair<std::uint32_t, std::uint32_t> split_after(std::uint32_t x);
    std::uint64_t position(std::uint32_t x) const;
    std::uint32_t reroot(std::uint32_t v);
};

}  // namespace graphzz
