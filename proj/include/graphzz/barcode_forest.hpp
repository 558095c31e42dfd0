#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// Leveled forest of component-history nodes. Levels strictly increase away
// from the root (the root is the lowest node of its tree). A node can hold
// an entrance potential (birth = level) and a split potential (birth =
// level + 1), each usable once; regular chain nodes hold neither. Paths are
// glued by melding, never deleted: a departure scan marks the dead path
// consumed and stops at the first open potential. Glued nodes are identified
// through an alias union-find, so stale ids held by callers keep resolving.
class barcode_forest {
public:
    using node_id = std::uint32_t;
    static constexpr node_id none = 0xffffffffu;

    node_id new_root(index_t level);                      // entering, unpaired
    node_id attach_child(node_id parent, index_t level);  // regular
    void set_level(node_id leaf, index_t level);          // fix a leaf before it becomes interior
    void mark_splitting(node_id x);                       // opens the split potential

    node_id resolve(node_id x) const;
    node_id parent(node_id x) const;  // resolved; none for roots
    index_t level(node_id x) const;
    bool same_tree(node_id x, node_id y);
    std::pair<node_id, index_t> root_of(node_id x);  // (root node, its level)

    // Nearest common ancestor of two nodes in one tree.
    node_id nca(node_id u, node_id v);

    // Melds the two leaf-to-ancestor paths, identifying equal-level nodes
    // (flags OR'd, the id from u's path survives). Same tree: up_to is the
    // nca of u and v and the meld covers the segments strictly below it.
    // Different trees: up_to is none, the full root paths meld and the trees
    // become one. Returns the highest-level node of the melded chain.
    node_id glue_paths(node_id u, node_id v, node_id up_to);

    struct scan_result {
        index_t level = 0;
        bool splitting = false;  // false: stopped at the root's entrance potential
    };
    // Walks rootward from a departing leaf, consuming dead nodes, and claims
    // the first open potential (split potential of an ancestor, else the
    // root's entrance potential).
    scan_result departure_scan(node_id leaf);

    bool entering_open(node_id x) const;
    bool splitting_open(node_id x) const;
    void pair_entering(node_id x);
    void pair_splitting(node_id x);
    bool consumed(node_id x) const;

    // At the end of a run: [level, m] per open entrance potential of a root,
    // [level+1, m] per open split potential anywhere.
    std::vector<std::pair<index_t, bool>> open_potentials() const;

    std::uint64_t nodes_created() const { return nodes_.size(); }
    std::uint64_t scan_visits() const { return scan_visits_; }
    std::uint64_t live_trees() const { return live_trees_; }

    // parent/level/kind/paired table of representative nodes, for
    // differential tests
    std::string dump() const;
    void validate() const;  // acyclicity and level monotonicity

private:
    struct node_t {
        node_id parent = none;
        index_t level = 0;
        bool is_entering = false, entering_paired = false;
        bool is_splitting = false, splitting_paired = false;
        bool is_consumed = false;
        node_id alias = none;     // union-find over glued identities
        node_id tuf_parent = none;  // union-find over trees
        std::uint32_t tuf_size = 1;
        node_id tree_root = none;  // valid on tuf representatives
    };

    std::vector<node_t> nodes_;
    std::uint64_t scan_visits_ = 0;
    std::uint64_t live_trees_ = 0;

    node_id alloc(index_t level);
    node_id tuf_find(node_id x);
    void collect_path(node_id from, node_id stop, std::vector<node_id>& out) const;
    void merge_into(node_id survivor, node_id donor);
};

}  // namespace graphzz
