#include "graphzz/zigzag_one.hpp"

#include <set>
#include <unordered_map>

#include "graphzz/dynamic_msf.hpp"

namespace graphzz {

barcode compute_barcode1(const graph_event_seq& seq, std::vector<arrow_class>* classes) {
    dynamic_msf msf(seq.n_vertices);
    std::multiset<index_t> open_births;
    std::unordered_map<std::uint64_t, dynamic_msf::edge_handle> handle_of;
    std::unordered_map<std::uint64_t, weight_t> weight_of;

    weight_t base_w = 0;
    for (auto [u, v, eid] : seq.initial_edges) {
        GZ_CHECK(u != v, "self-loops are not supported in dimension 1");
        --base_w;
        handle_of[eid] = msf.insert_edge(u, v, base_w);
        weight_of[eid] = base_w;
    }
    // every independent cycle of the initial graph is open with birth 0
    for (auto [u, v, eid] : seq.initial_edges) {
        (void)u;
        (void)v;
        if (!msf.edge_is_tree(handle_of[eid])) open_births.insert(0);
    }

    barcode bc;
    bc.dim = 1;
    if (classes) classes->assign(seq.events.size(), arrow_class::neutral);
    for (index_t i = 1; i <= seq.size(); ++i) {
        const graph_event& ev = seq.events[static_cast<std::size_t>(i - 1)];
        if (ev.kind == graph_event::op::add_edge) {
            GZ_CHECK(ev.u != ev.v, "self-loops are not supported in dimension 1");
            bool cycle = msf.connected(ev.u, ev.v);
            handle_of[ev.eid] = msf.insert_edge(ev.u, ev.v, i);
            weight_of[ev.eid] = i;
            if (cycle) {
                open_births.insert(i);
                if (classes) (*classes)[static_cast<std::size_t>(i - 1)] = arrow_class::positive;
            }
        } else if (ev.kind == graph_event::op::del_edge) {
            auto it = handle_of.find(ev.eid);
            GZ_CHECK(it != handle_of.end(), "deletion of an unknown edge");
            msf.delete_edge(it->second);
            handle_of.erase(it);
            weight_t w_sigma = weight_of.at(ev.eid);
            weight_of.erase(ev.eid);
            if (!msf.connected(ev.u, ev.v)) continue;
            if (classes) (*classes)[static_cast<std::size_t>(i - 1)] = arrow_class::negative;
            weight_t floor = std::max(w_sigma, msf.path_max_weight(ev.u, ev.v));
            auto jt = open_births.lower_bound(floor);
            GZ_CHECK(jt != open_births.end(), "no admissible open birth for a closing edge");
            bc.intervals.push_back({*jt, i - 1});
            open_births.erase(jt);
        }
        // vertex arrows and no-ops never move dimension 1
    }
    for (index_t j : open_births) bc.intervals.push_back({j, seq.size()});
    bc.canonicalize();
    return bc;
}

barcode compute_barcode1(const zigzag_filtration& f, std::vector<arrow_class>* classes) {
    if (f.has_triangles())
        throw validation_error(
            0, "dimension-1 computation requires a graph filtration without 2-simplices");
    return compute_barcode1(events_from_filtration(f), classes);
}

}  // namespace graphzz
