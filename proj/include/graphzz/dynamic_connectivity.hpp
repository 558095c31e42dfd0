#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphzz/common.hpp"
#include "graphzz/euler_tour.hpp"

namespace graphzz {

// Fully dynamic connectivity over a fixed vertex universe 0..n-1 with a
// hierarchy of Euler tour forests. Edge insertions start at level 0; when a
// tree edge dies, the replacement search promotes edges of the smaller side
// one level up, so a level-l tree never spans more than n/2^l vertices.
// Parallel edges and self-loops are allowed; every edge is named by the
// handle returned from insert_edge. Component identifiers are treap roots of
// the level-0 forest and may change after any mutation. Single writer, no
// concurrent access; the structure may be moved between threads.
class dynamic_connectivity {
public:
    using component_id = std::uint64_t;
    using edge_handle = std::uint64_t;

    explicit dynamic_connectivity(index_t n_vertices);

    index_t num_vertices() const { return n_; }
    edge_handle insert_edge(index_t u, index_t v);
    void delete_edge(edge_handle h);
    bool connected(index_t u, index_t v);
    component_id find(index_t v);

    bool edge_alive(edge_handle h) const;
    std::pair<index_t, index_t> edge_endpoints(edge_handle h) const;
    index_t num_live_edges() const { return live_edges_; }

    // Debug dump for oracle tests: the component partition, each class and
    // the class list sorted.
    std::vector<std::vector<index_t>> component_partition();

    // Test hook: verifies the level invariants (tree sizes, edge placement).
    void check_invariants();

private:
    struct edge_rec {
        std::uint32_t u = 0, v = 0;
        int level = 0;
        bool alive = false;
        bool is_tree = false;
        bool self_loop = false;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // per level 0..level
        std::uint32_t pos_u = 0, pos_v = 0;  // positions in adjacency lists (non-tree)
    };

    index_t n_ = 0;
    index_t live_edges_ = 0;
    std::vector<euler_tour_forest> levels_;
    std::vector<std::vector<std::vector<std::uint32_t>>> adj_;  // [level][vertex] -> edge ids
    std::vector<edge_rec> edges_;

    void ensure_level(int l);
    void check_vertex(index_t v) const;
    void adj_insert(int l, std::uint32_t vtx, std::uint32_t e);
    void adj_erase(int l, std::uint32_t vtx, std::uint32_t pos);
    void make_tree_edge(std::uint32_t e, int up_to_level);
    bool replace(std::uint32_t u, std::uint32_t v, int level);
};

}  // namespace graphzz
