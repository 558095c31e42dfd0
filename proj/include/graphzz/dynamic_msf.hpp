#pragma once

#include <cstdint>
#include <set>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graphzz/common.hpp"
#include "graphzz/euler_tour.hpp"
#include "graphzz/link_cut_tree.hpp"

namespace graphzz {

enum class msf_mode {
    hierarchical,  // default: leveled replacement search
    naive_scan,    // reference: weight-ordered scan of all non-tree edges
};

// Fully dynamic minimum spanning forest over distinct edge weights, with max
// edge-weight queries on tree paths. The maintained forest is always the
// unique MSF of the current graph: insertions evict the heaviest cycle edge
// when beneficial, deletions of tree edges pick the globally lightest edge
// reconnecting the cut. Path max is answered by a link/cut mirror of the
// tree edges. Single writer, no concurrent access.
class dynamic_msf {
public:
    using component_id = std::uint64_t;
    using edge_handle = std::uint64_t;

    explicit dynamic_msf(index_t n_vertices, msf_mode mode = msf_mode::hierarchical);

    index_t num_vertices() const { return n_; }
    edge_handle insert_edge(index_t u, index_t v, weight_t w);
    void delete_edge(edge_handle h);
    bool connected(index_t u, index_t v);
    component_id find(index_t v);
    weight_t path_max_weight(index_t u, index_t v);
    std::pair<weight_t, edge_handle> path_max_edge(index_t u, index_t v);

    bool edge_alive(edge_handle h) const { return h < edges_.size() && edges_[h].alive; }
    bool edge_is_tree(edge_handle h) const { return edges_[h].is_tree; }
    std::pair<index_t, index_t> edge_endpoints(edge_handle h) const;

    // Debug dump for oracle tests: sorted (u, v, w) triples of the forest.
    std::vector<std::tuple<index_t, index_t, weight_t>> msf_edges() const;

    void check_invariants();

    // introspection for tests
    int edge_level(edge_handle h) const { return edges_[h].level; }
    std::uint64_t level_root(index_t v, int level) {
        return levels_[static_cast<std::size_t>(level)].root_of(static_cast<std::uint32_t>(v));
    }
    int num_levels() const { return static_cast<int>(levels_.size()); }

private:
    struct edge_rec {
        std::uint32_t u = 0, v = 0;
        weight_t w = 0;
        int level = 0;
        bool alive = false;
        bool is_tree = false;
        bool self_loop = false;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
        std::uint32_t pos_u = 0, pos_v = 0;
        std::uint32_t lct_node = link_cut_tree::none;
    };

    index_t n_ = 0;
    msf_mode mode_;
    std::vector<euler_tour_forest> levels_;
    std::vector<std::vector<std::vector<std::uint32_t>>> adj_;
    std::vector<edge_rec> edges_;
    link_cut_tree lct_;
    std::unordered_set<weight_t> live_weights_;
    std::set<std::pair<weight_t, std::uint32_t>> naive_nontree_;

    void ensure_level(int l);
    void check_vertex(index_t v) const;
    void adj_insert(int l, std::uint32_t vtx, std::uint32_t e);
    void adj_erase(int l, std::uint32_t vtx, std::uint32_t pos);
    void attach_tree_edge(std::uint32_t e, int up_to_level);
    void detach_tree_edge(std::uint32_t e);
    void store_nontree(std::uint32_t e, int level);
    void unstore_nontree(std::uint32_t e);
    void scan_level(std::uint32_t u, std::uint32_t v, int level,
                    std::vector<std::uint32_t>& candidates);
    void maintain_level(std::uint32_t u, std::uint32_t v, int level,
                        std::vector<std::uint32_t>& crossing);
    void reconnect(std::uint32_t u, std::uint32_t v, int top_level);
};

}  // namespace graphzz
