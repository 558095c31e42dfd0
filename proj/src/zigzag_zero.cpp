#include "graphzz/zigzag_zero.hpp"

#include <map>

namespace graphzz {

zero_state::zero_state(const graph_event_seq& seq, zero_options opt)
    : conn_(seq.n_vertices), opt_(opt) {
    for (auto [u, v, eid] : seq.initial_edges) handle_of_[eid] = conn_.insert_edge(u, v);
    for (std::uint32_t v : seq.initial_vertices) active_.insert(v);
    // one level-0 node per initial component
    std::map<dynamic_connectivity::component_id, std::vector<std::uint32_t>> comps;
    for (std::uint32_t v : active_) comps[conn_.find(v)].push_back(v);
    for (auto& [id, verts] : comps) {
        (void)verts;
        phi_[id] = forest_.new_root(0);
    }
}

barcode_forest::node_id zero_state::fix_leaf(barcode_forest::node_id leaf, index_t lvl) {
    if (forest_.level(leaf) < lvl) return forest_.attach_child(leaf, lvl);
    GZ_CHECK(forest_.level(leaf) == lvl, "leaf ahead of the current index");
    return leaf;
}

void zero_state::process_event(const graph_event& ev, index_t i, std::vector<interval>& out) {
    switch (ev.kind) {
        case graph_event::op::noop:
            return;
        case graph_event::op::add_vertex: {
            active_.insert(ev.u);
            phi_[conn_.find(ev.u)] = forest_.new_root(i);
            break;
        }
        case graph_event::op::del_vertex: {
            auto id = conn_.find(ev.u);
            auto it = phi_.find(id);
            GZ_CHECK(it != phi_.end(), "departing vertex has no leaf");
            barcode_forest::node_id leaf = it->second;
            phi_.erase(it);
            active_.erase(ev.u);
            auto res = forest_.departure_scan(leaf);
            if (res.splitting)
                out.push_back({res.level + 1, i - 1});
            else
                out.push_back({res.level, i - 1});
            break;
        }
        case graph_event::op::add_edge: {
            if (ev.u == ev.v) {  // self-loop: no 0-dimensional effect
                handle_of_[ev.eid] = conn_.insert_edge(ev.u, ev.v);
                break;
            }
            auto t1 = conn_.find(ev.u), t2 = conn_.find(ev.v);
            if (t1 == t2) {
                handle_of_[ev.eid] = conn_.insert_edge(ev.u, ev.v);
                break;
            }
            barcode_forest::node_id l1 = phi_.at(t1), l2 = phi_.at(t2);
            auto g1 = fix_leaf(l1, i - 1);
            auto g2 = fix_leaf(l2, i - 1);
            barcode_forest::node_id top;
            if (forest_.same_tree(g1, g2)) {
                auto meet = forest_.nca(g1, g2);
                GZ_CHECK(forest_.splitting_open(meet), "merge meeting node has no open split");
                forest_.pair_splitting(meet);
                out.push_back({forest_.level(meet) + 1, i - 1});
                top = forest_.glue_paths(g1, g2, meet);
            } else {
                auto [r1, lv1] = forest_.root_of(g1);
                auto [r2, lv2] = forest_.root_of(g2);
                // the younger root's entrance closes; with equal levels the
                // composite root keeps exactly one open entrance
                if (lv1 > lv2)
                    forest_.pair_entering(r1);
                else if (lv2 > lv1)
                    forest_.pair_entering(r2);
                out.push_back({std::max(lv1, lv2), i - 1});
                top = forest_.glue_paths(g1, g2, barcode_forest::none);
            }
            barcode_forest::node_id leaf = forest_.attach_child(top, i);
            handle_of_[ev.eid] = conn_.insert_edge(ev.u, ev.v);
            phi_.erase(t1);
            phi_.erase(t2);
            phi_[conn_.find(ev.u)] = leaf;
            break;
        }
        case graph_event::op::del_edge: {
            auto it = handle_of_.find(ev.eid);
            GZ_CHECK(it != handle_of_.end(), "deletion of an unknown edge");
            auto h = it->second;
            handle_of_.erase(it);
            if (ev.u == ev.v) {
                conn_.delete_edge(h);
                break;
            }
            auto old_id = conn_.find(ev.u);
            barcode_forest::node_id leaf = phi_.at(old_id);
            conn_.delete_edge(h);
            phi_.erase(old_id);
            if (conn_.connected(ev.u, ev.v)) {
                // component survives but its identifier may have changed
                phi_[conn_.find(ev.u)] = leaf;
            } else {
                auto x = fix_leaf(leaf, i - 1);
                forest_.mark_splitting(x);
                phi_[conn_.find(ev.u)] = forest_.attach_child(x, i);
                phi_[conn_.find(ev.v)] = forest_.attach_child(x, i);
            }
            break;
        }
    }
    if (opt_.check_state) check_state();
}

void zero_state::finalize(index_t m, std::vector<interval>& out) {
    for (auto [lvl, splitting] : forest_.open_potentials()) {
        if (splitting)
            out.push_back({lvl + 1, m});
        else
            out.push_back({lvl, m});
    }
}

void zero_state::check_state() {
    std::map<dynamic_connectivity::component_id, int> comps;
    for (std::uint32_t v : active_) comps[conn_.find(v)] = 1;
    GZ_CHECK(comps.size() == phi_.size(), "component/leaf count mismatch");
    std::unordered_set<barcode_forest::node_id> leaves;
    for (auto& [id, leaf] : phi_) {
        GZ_CHECK(comps.count(id) == 1, "stale component id in phi");
        GZ_CHECK(leaves.insert(forest_.resolve(leaf)).second, "phi is not injective");
        GZ_CHECK(!forest_.consumed(leaf), "live leaf marked consumed");
    }
    forest_.validate();
}

barcode compute_barcode0(const graph_event_seq& seq, zero_options opt, zero_stats* stats) {
    zero_state st(seq, opt);
    barcode bc;
    bc.dim = 0;
    for (index_t i = 1; i <= seq.size(); ++i)
        st.process_event(seq.events[static_cast<std::size_t>(i - 1)], i, bc.intervals);
    st.finalize(seq.size(), bc.intervals);
    bc.canonicalize();
    if (stats) {
        stats->forest_nodes = st.forest().nodes_created();
        stats->scan_visits = st.forest().scan_visits();
    }
    return bc;
}

barcode compute_barcode0(const zigzag_filtration& f, zero_options opt, zero_stats* stats) {
    return compute_barcode0(events_from_filtration(f), opt, stats);
}

}  // namespace graphzz
