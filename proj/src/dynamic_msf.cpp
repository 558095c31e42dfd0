#include "graphzz/dynamic_msf.hpp"

#include <algorithm>

namespace graphzz {

dynamic_msf::dynamic_msf(index_t n_vertices, msf_mode mode) : n_(n_vertices), mode_(mode) {
    GZ_CHECK(n_vertices >= 0, "negative vertex count");
    ensure_level(0);
    for (index_t v = 0; v < n_; ++v) lct_.add_node(link_cut_tree::neg_inf, 0);
}

void dynamic_msf::ensure_level(int l) {
    while (static_cast<int>(levels_.size()) <= l) {
        levels_.emplace_back(0x5fca1ull * (levels_.size() + 1));
        adj_.emplace_back();
    }
    if (adj_[static_cast<std::size_t>(l)].size() < static_cast<std::size_t>(n_))
        adj_[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(n_));
}

void dynamic_msf::check_vertex(index_t v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

bool dynamic_msf::connected(index_t u, index_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return true;
    return levels_[0].root_of(static_cast<std::uint32_t>(u)) ==
           levels_[0].root_of(static_cast<std::uint32_t>(v));
}

dynamic_msf::component_id dynamic_msf::find(index_t v) {
    check_vertex(v);
    return levels_[0].root_of(static_cast<std::uint32_t>(v));
}

std::pair<index_t, index_t> dynamic_msf::edge_endpoints(edge_handle h) const {
    GZ_CHECK(h < edges_.size(), "unknown edge handle");
    return {edges_[h].u, edges_[h].v};
}

void dynamic_msf::adj_insert(int l, std::uint32_t vtx, std::uint32_t e) {
    ensure_level(l);
    auto& list = adj_[static_cast<std::size_t>(l)][vtx];
    edge_rec& rec = edges_[e];
    if (rec.u == vtx) rec.pos_u = static_cast<std::uint32_t>(list.size());
    if (rec.v == vtx) rec.pos_v = static_cast<std::uint32_t>(list.size());
    list.push_back(e);
    if (list.size() == 1) levels_[static_cast<std::size_t>(l)].set_vertex_flag(vtx, true);
}

void dynamic_msf::adj_erase(int l, std::uint32_t vtx, std::uint32_t pos) {
    auto& list = adj_[static_cast<std::size_t>(l)][vtx];
    std::uint32_t moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos < list.size()) {
        edge_rec& m = edges_[moved];
        if (m.u == vtx) m.pos_u = pos;
        if (m.v == vtx) m.pos_v = pos;
    }
    if (list.empty()) levels_[static_cast<std::size_t>(l)].set_vertex_flag(vtx, false);
}

void dynamic_msf::store_nontree(std::uint32_t e, int level) {
    edge_rec& rec = edges_[e];
    rec.is_tree = false;
    rec.level = level;
    if (mode_ == msf_mode::naive_scan) {
        naive_nontree_.insert({rec.w, e});
    } else {
        adj_insert(level, rec.u, e);
        adj_insert(level, rec.v, e);
    }
}

void dynamic_msf::unstore_nontree(std::uint32_t e) {
    edge_rec& rec = edges_[e];
    if (mode_ == msf_mode::naive_scan) {
        naive_nontree_.erase({rec.w, e});
    } else {
        adj_erase(rec.level, rec.u, rec.pos_u);
        adj_erase(rec.level, rec.v, rec.pos_v);
    }
}

void dynamic_msf::attach_tree_edge(std::uint32_t e, int up_to_level) {
    edge_rec& rec = edges_[e];
    rec.is_tree = true;
    rec.level = up_to_level;
    rec.arcs.clear();
    ensure_level(up_to_level);
    for (int l = 0; l <= up_to_level; ++l)
        rec.arcs.push_back(levels_[static_cast<std::size_t>(l)].link(rec.u, rec.v, e));
    levels_[static_cast<std::size_t>(up_to_level)].set_arc_flag(rec.arcs.back().first, true);
    if (rec.lct_node == link_cut_tree::none) rec.lct_node = lct_.add_node(rec.w, e);
    lct_.link(rec.lct_node, static_cast<std::uint32_t>(rec.u));
    lct_.link(rec.lct_node, static_cast<std::uint32_t>(rec.v));
}

void dynamic_msf::detach_tree_edge(std::uint32_t e) {
    edge_rec& rec = edges_[e];
    levels_[static_cast<std::size_t>(rec.level)].set_arc_flag(rec.arcs.back().first, false);
    for (int l = rec.level; l >= 0; --l)
        levels_[static_cast<std::size_t>(l)].cut(rec.arcs[static_cast<std::size_t>(l)].first,
                                                 rec.arcs[static_cast<std::size_t>(l)].second);
    rec.arcs.clear();
    lct_.cut_edge(rec.lct_node, static_cast<std::uint32_t>(rec.u));
    lct_.cut_edge(rec.lct_node, static_cast<std::uint32_t>(rec.v));
    rec.is_tree = false;
}

dynamic_msf::edge_handle dynamic_msf::insert_edge(index_t u, index_t v, weight_t w) {
    check_vertex(u);
    check_vertex(v);
    if (!live_weights_.insert(w).second)
        throw validation_error(0, "duplicate live edge weight " + std::to_string(w));
    edge_handle h = edges_.size();
    edge_rec rec;
    rec.u = static_cast<std::uint32_t>(u);
    rec.v = static_cast<std::uint32_t>(v);
    rec.w = w;
    rec.alive = true;
    rec.self_loop = (u == v);
    edges_.push_back(rec);
    if (rec.self_loop) return h;
    if (!connected(u, v)) {
        attach_tree_edge(static_cast<std::uint32_t>(h), 0);
        return h;
    }
    auto [wmax, heaviest] = path_max_edge(u, v);
    store_nontree(static_cast<std::uint32_t>(h), 0);
    if (w < wmax) {
        // The new edge displaces the heaviest edge of the cycle it closes.
        // Demote that edge and rerun the replacement search over its cut; the
        // new edge is the lightest crossing edge, so it enters the forest,
        // and every level's placement invariant is restored on the way.
        edge_rec& frec = edges_[heaviest];
        int ftop = frec.level;
        detach_tree_edge(static_cast<std::uint32_t>(heaviest));
        store_nontree(static_cast<std::uint32_t>(heaviest), 0);
        reconnect(frec.u, frec.v, ftop);
        GZ_CHECK(edges_[h].is_tree, "displacing edge failed to enter the forest");
    }
    return h;
}

// First pass of the replacement search: enumerates the smaller side's
// non-tree edges of this level without mutating anything and reports the
// lightest one crossing the cut.
void dynamic_msf::scan_level(std::uint32_t u, std::uint32_t v, int level,
                             std::vector<std::uint32_t>& candidates) {
    euler_tour_forest& f = levels_[static_cast<std::size_t>(level)];
    std::uint32_t ru = f.root_of(u), rv = f.root_of(v);
    GZ_CHECK(ru != rv, "replacement scan on connected endpoints");
    if (f.tree_vertices(ru) > f.tree_vertices(rv)) std::swap(ru, rv);
    std::vector<std::uint32_t> flagged;
    f.collect_flagged(ru, euler_tour_forest::flag_nontree, flagged);
    std::uint32_t best = euler_tour_forest::none;
    for (std::uint32_t marker : flagged) {
        std::uint32_t x = f.marker_vertex(marker);
        for (std::uint32_t e : adj_[static_cast<std::size_t>(level)][x]) {
            edge_rec& rec = edges_[e];
            std::uint32_t other = (rec.u == x) ? rec.v : rec.u;
            if (f.root_of(other) != rv) continue;
            if (best == euler_tour_forest::none || rec.w < edges_[best].w) best = e;
        }
    }
    if (best != euler_tour_forest::none) candidates.push_back(best);
}

// Second pass at one level: pushes the smaller side's tree edges of this
// level up and raises its non-crossing non-tree edges; crossing edges stay
// and are reported for demotion.
void dynamic_msf::maintain_level(std::uint32_t u, std::uint32_t v, int level,
                                 std::vector<std::uint32_t>& crossing) {
    ensure_level(level + 1);
    euler_tour_forest& f = levels_[static_cast<std::size_t>(level)];
    std::uint32_t ru = f.root_of(u), rv = f.root_of(v);
    GZ_CHECK(ru != rv, "maintenance scan on connected endpoints");
    if (f.tree_vertices(ru) > f.tree_vertices(rv)) std::swap(ru, rv);
    std::uint32_t arc;
    while ((arc = f.find_flagged(ru, euler_tour_forest::flag_tree_edge)) !=
           euler_tour_forest::none) {
        std::uint32_t e = static_cast<std::uint32_t>(f.tag(arc));
        edge_rec& rec = edges_[e];
        f.set_arc_flag(arc, false);
        rec.arcs.push_back(levels_[static_cast<std::size_t>(level + 1)].link(rec.u, rec.v, e));
        rec.level = level + 1;
        levels_[static_cast<std::size_t>(level + 1)].set_arc_flag(rec.arcs.back().first, true);
    }
    std::vector<std::uint32_t> flagged;
    f.collect_flagged(ru, euler_tour_forest::flag_nontree, flagged);
    for (std::uint32_t marker : flagged) {
        std::uint32_t x = f.marker_vertex(marker);
        auto& list = adj_[static_cast<std::size_t>(level)][x];
        std::size_t i = 0;
        while (i < list.size()) {
            std::uint32_t e = list[i];
            edge_rec& rec = edges_[e];
            std::uint32_t other = (rec.u == x) ? rec.v : rec.u;
            if (f.root_of(other) == rv) {
                crossing.push_back(e);
                ++i;
            } else {
                adj_erase(level, rec.u, rec.pos_u);
                adj_erase(level, rec.v, rec.pos_v);
                rec.level = level + 1;
                adj_insert(level + 1, rec.u, e);
                adj_insert(level + 1, rec.v, e);
            }
        }
    }
}

void dynamic_msf::reconnect(std::uint32_t u, std::uint32_t v, int top_level) {
    if (mode_ == msf_mode::naive_scan) {
        // weight order guarantees the first crossing edge is the lightest
        for (auto it = naive_nontree_.begin(); it != naive_nontree_.end(); ++it) {
            std::uint32_t e = it->second;
            std::uint32_t a = edges_[e].u, b = edges_[e].v;
            bool u_side_a = levels_[0].root_of(a) == levels_[0].root_of(u);
            bool u_side_b = levels_[0].root_of(b) == levels_[0].root_of(u);
            bool v_side_a = levels_[0].root_of(a) == levels_[0].root_of(v);
            bool v_side_b = levels_[0].root_of(b) == levels_[0].root_of(v);
            if ((u_side_a && v_side_b) || (v_side_a && u_side_b)) {
                naive_nontree_.erase(it);
                attach_tree_edge(e, 0);
                return;
            }
        }
        return;
    }
    // hunt the lightest crossing edge without touching the hierarchy
    std::vector<std::uint32_t> candidates;
    for (int l = top_level; l >= 0; --l) scan_level(u, v, l, candidates);
    if (candidates.empty()) return;
    std::uint32_t best = candidates.front();
    for (std::uint32_t c : candidates)
        if (edges_[c].w < edges_[best].w) best = c;
    int best_level = edges_[best].level;
    // Maintenance stops at the winning level: it must not disturb the trees
    // the relink below rejoins. Crossing edges stranded above that level
    // come down with the winner (their endpoints' trees rejoin there).
    std::vector<std::uint32_t> crossing;
    for (int l = top_level; l >= best_level; --l) maintain_level(u, v, l, crossing);
    for (std::uint32_t c : crossing) {
        if (c == best || edges_[c].level <= best_level) continue;
        edge_rec& rec = edges_[c];
        adj_erase(rec.level, rec.u, rec.pos_u);
        adj_erase(rec.level, rec.v, rec.pos_v);
        rec.level = best_level;
        adj_insert(best_level, rec.u, c);
        adj_insert(best_level, rec.v, c);
    }
    edge_rec& rec = edges_[best];
    adj_erase(rec.level, rec.u, rec.pos_u);
    adj_erase(rec.level, rec.v, rec.pos_v);
    attach_tree_edge(best, rec.level);
}

void dynamic_msf::delete_edge(edge_handle h) {
    GZ_CHECK(h < edges_.size() && edges_[h].alive, "dead or unknown edge handle");
    edge_rec& rec = edges_[h];
    rec.alive = false;
    live_weights_.erase(rec.w);
    if (rec.self_loop) return;
    if (!rec.is_tree) {
        unstore_nontree(static_cast<std::uint32_t>(h));
        return;
    }
    int top = rec.level;
    detach_tree_edge(static_cast<std::uint32_t>(h));
    reconnect(rec.u, rec.v, top);
}

std::pair<weight_t, dynamic_msf::edge_handle> dynamic_msf::path_max_edge(index_t u, index_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !connected(u, v))
        throw validation_error(0, "path_max on disconnected or equal vertices");
    auto [w, tag] = lct_.path_max(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    GZ_CHECK(w != link_cut_tree::neg_inf, "path without edges");
    return {w, tag};
}

weight_t dynamic_msf::path_max_weight(index_t u, index_t v) { return path_max_edge(u, v).first; }

std::vector<std::tuple<index_t, index_t, weight_t>> dynamic_msf::msf_edges() const {
    std::vector<std::tuple<index_t, index_t, weight_t>> out;
    for (const edge_rec& rec : edges_)
        if (rec.alive && rec.is_tree)
            out.emplace_back(std::min(rec.u, rec.v), std::max(rec.u, rec.v), rec.w);
    std::sort(out.begin(), out.end());
    return out;
}

void dynamic_msf::check_invariants() {
    for (auto& f : levels_) f.validate();
    weight_t max_live = link_cut_tree::neg_inf;
    for (const edge_rec& rec : edges_)
        if (rec.alive) max_live = std::max(max_live, rec.w);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const edge_rec& rec = edges_[e];
        if (!rec.alive || rec.self_loop) continue;
        if (rec.is_tree) {
            GZ_CHECK(rec.arcs.size() == static_cast<std::size_t>(rec.level) + 1,
                     "tree edge arcs out of sync with level");
            GZ_CHECK(rec.w <= max_live, "tree edge heavier than max live weight");
        } else if (mode_ == msf_mode::hierarchical) {
            euler_tour_forest& f = levels_[static_cast<std::size_t>(rec.level)];
            GZ_CHECK(f.root_of(rec.u) == f.root_of(rec.v),
                     "non-tree edge endpoints split at its level");
        }
    }
    for (std::size_t l = 1; l < levels_.size(); ++l) {
        euler_tour_forest& f = levels_[l];
        std::uint64_t bound = static_cast<std::uint64_t>(n_) >> l;
        for (index_t v = 0; v < n_; ++v) {
            if (!f.has_marker(static_cast<std::uint32_t>(v))) continue;
            GZ_CHECK(f.tree_vertices(f.root_of(static_cast<std::uint32_t>(v))) <=
                         std::max<std::uint64_t>(bound, 1),
                     "level tree too large");
        }
    }
}

}  // namespace graphzz
