#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "graphzz/common.hpp"
#include "graphzz/filtration.hpp"

namespace graphzz {

// A graph-level view of a filtration over a dense vertex universe: one event
// per arrow (no-ops keep the indexing), plus the initial graph G_0. Unlike
// the simplicial layer this view admits multigraphs, self-loops and explicit
// no-op arrows, which the dual filtrations need.
struct graph_event {
    enum class op : std::uint8_t { add_vertex, del_vertex, add_edge, del_edge, noop };
    op kind = op::noop;
    std::uint32_t u = 0, v = 0;
    std::uint64_t eid = 0;  // stable identity of one edge instance
};

struct graph_event_seq {
    std::uint32_t n_vertices = 0;
    std::vector<std::uint32_t> initial_vertices;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> initial_edges;
    std::vector<graph_event> events;

    index_t size() const { return static_cast<index_t>(events.size()); }
};

// Restriction to the 1-skeleton: triangle arrows become no-ops. Vertex ids
// are densified in order of first appearance.
graph_event_seq events_from_filtration(const zigzag_filtration& f);

}  // namespace graphzz
