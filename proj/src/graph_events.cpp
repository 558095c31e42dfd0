#include "graphzz/graph_events.hpp"

#include <unordered_map>

namespace graphzz {

graph_event_seq events_from_filtration(const zigzag_filtration& f) {
    graph_event_seq seq;
    std::unordered_map<vertex_t, std::uint32_t> dense;
    auto id_of = [&](vertex_t v) {
        auto [it, fresh] = dense.try_emplace(v, static_cast<std::uint32_t>(dense.size()));
        (void)fresh;
        return it->second;
    };
    std::unordered_map<simplex, std::uint64_t, simplex_hash> live_edge;
    std::uint64_t next_eid = 0;

    for (const simplex& s : f.base) {
        if (s.kind == simplex_kind::vertex) {
            seq.initial_vertices.push_back(id_of(s.v[0]));
        } else if (s.kind == simplex_kind::edge) {
            std::uint64_t eid = next_eid++;
            live_edge[s] = eid;
            seq.initial_edges.emplace_back(id_of(s.v[0]), id_of(s.v[1]), eid);
        }
    }
    for (const arrow& a : f.arrows) {
        graph_event ev;
        if (a.s.kind == simplex_kind::triangle) {
            ev.kind = graph_event::op::noop;
        } else if (a.s.kind == simplex_kind::vertex) {
            ev.kind = a.forward ? graph_event::op::add_vertex : graph_event::op::del_vertex;
            ev.u = ev.v = id_of(a.s.v[0]);
        } else {
            ev.u = id_of(a.s.v[0]);
            ev.v = id_of(a.s.v[1]);
            if (a.forward) {
                ev.kind = graph_event::op::add_edge;
                ev.eid = next_eid++;
                live_edge[a.s] = ev.eid;
            } else {
                ev.kind = graph_event::op::del_edge;
                auto it = live_edge.find(a.s);
                GZ_CHECK(it != live_edge.end(), "deletion of an edge that is not live");
                ev.eid = it->second;
                live_edge.erase(it);
            }
        }
        seq.events.push_back(ev);
    }
    seq.n_vertices = static_cast<std::uint32_t>(dense.size());
    return seq;
}

}  // namespace graphzz
