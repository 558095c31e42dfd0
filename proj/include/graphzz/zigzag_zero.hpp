#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "graphzz/barcode.hpp"
#include "graphzz/barcode_forest.hpp"
#include "graphzz/dynamic_connectivity.hpp"
#include "graphzz/graph_events.hpp"

namespace graphzz {

struct zero_options {
    bool check_state = false;  // verify the component<->leaf bijection per event
};

struct zero_stats {
    std::uint64_t forest_nodes = 0;
    std::uint64_t scan_visits = 0;
};

// Streaming state for the 0-dimensional barcode: a dynamic connectivity
// structure, the barcode forest, and the map from live component ids to
// forest leaves. Events are applied one per arrow; indices of emitted
// intervals are in [0, m].
class zero_state {
public:
    explicit zero_state(const graph_event_seq& seq, zero_options opt = {});

    // Applies the event of arrow i (1-based); appends any emitted interval.
    void process_event(const graph_event& ev, index_t i, std::vector<interval>& out);
    // Open components and splits at index m close here.
    void finalize(index_t m, std::vector<interval>& out);

    const barcode_forest& forest() const { return forest_; }
    dynamic_connectivity& connectivity() { return conn_; }

private:
    dynamic_connectivity conn_;
    barcode_forest forest_;
    std::unordered_map<dynamic_connectivity::component_id, barcode_forest::node_id> phi_;
    std::unordered_map<std::uint64_t, dynamic_connectivity::edge_handle> handle_of_;
    std::unordered_set<std::uint32_t> active_;
    zero_options opt_;

    barcode_forest::node_id fix_leaf(barcode_forest::node_id leaf, index_t lvl);
    void check_state();
};

barcode compute_barcode0(const graph_event_seq& seq, zero_options opt = {},
                         zero_stats* stats = nullptr);
barcode compute_barcode0(const zigzag_filtration& f, zero_options opt = {},
                         zero_stats* stats = nullptr);

}  // namespace graphzz
