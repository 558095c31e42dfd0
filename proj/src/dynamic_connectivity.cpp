#include "graphzz/dynamic_connectivity.hpp"

#include <algorithm>
#include <map>

namespace graphzz {

dynamic_connectivity::dynamic_connectivity(index_t n_vertices) : n_(n_vertices) {
    GZ_CHECK(n_vertices >= 0, "negative vertex count");
    ensure_level(0);
}

void dynamic_connectivity::ensure_level(int l) {
    while (static_cast<int>(levels_.size()) <= l) {
        levels_.emplace_back(0xe77c0ull * (levels_.size() + 1));
        adj_.emplace_back();
    }
    if (adj_[static_cast<std::size_t>(l)].size() < static_cast<std::size_t>(n_))
        adj_[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(n_));
}

void dynamic_connectivity::check_vertex(index_t v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

bool dynamic_connectivity::connected(index_t u, index_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return true;
    return levels_[0].root_of(static_cast<std::uint32_t>(u)) ==
           levels_[0].root_of(static_cast<std::uint32_t>(v));
}

dynamic_connectivity::component_id dynamic_connectivity::find(index_t v) {
    check_vertex(v);
    return levels_[0].root_of(static_cast<std::uint32_t>(v));
}

bool dynamic_connectivity::edge_alive(edge_handle h) const {
    return h < edges_.size() && edges_[h].alive;
}

std::pair<index_t, index_t> dynamic_connectivity::edge_endpoints(edge_handle h) const {
    GZ_CHECK(h < edges_.size(), "unknown edge handle");
    return {edges_[h].u, edges_[h].v};
}

void dynamic_connectivity::adj_insert(int l, std::uint32_t vtx, std::uint32_t e) {
    ensure_level(l);
    auto& list = adj_[static_cast<std::size_t>(l)][vtx];
    edge_rec& rec = edges_[e];
    if (rec.u == vtx)
        rec.pos_u = static_cast<std::uint32_t>(list.size());
    if (rec.v == vtx)
        rec.pos_v = static_cast<std::uint32_t>(list.size());
    list.push_back(e);
    if (list.size() == 1) levels_[static_cast<std::size_t>(l)].set_vertex_flag(vtx, true);
}

void dynamic_connectivity::adj_erase(int l, std::uint32_t vtx, std::uint32_t pos) {
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

dynamic_connectivity::edge_handle dynamic_connectivity::insert_edge(index_t u, index_t v) {
    check_vertex(u);
    check_vertex(v);
    edge_handle h = edges_.size();
    edge_rec rec;
    rec.u = static_cast<std::uint32_t>(u);
    rec.v = static_cast<std::uint32_t>(v);
    rec.alive = true;
    rec.level = 0;
    rec.self_loop = (u == v);
    edges_.push_back(rec);
    ++live_edges_;
    if (rec.self_loop) return h;
    if (!connected(u, v)) {
        edges_[h].is_tree = true;
        edges_[h].arcs.push_back(levels_[0].link(rec.u, rec.v, h));
        levels_[0].set_arc_flag(edges_[h].arcs[0].first, true);
    } else {
        adj_insert(0, rec.u, static_cast<std::uint32_t>(h));
        adj_insert(0, rec.v, static_cast<std::uint32_t>(h));
    }
    return h;
}

// Promotes non-tree edge e to a tree edge linking its endpoints at levels
// 0..up_to_level (its own level).
void dynamic_connectivity::make_tree_edge(std::uint32_t e, int up_to_level) {
    edge_rec& rec = edges_[e];
    rec.is_tree = true;
    rec.arcs.clear();
    for (int l = 0; l <= up_to_level; ++l) {
        ensure_level(l);
        rec.arcs.push_back(levels_[static_cast<std::size_t>(l)].link(rec.u, rec.v, e));
    }
    levels_[static_cast<std::size_t>(up_to_level)].set_arc_flag(rec.arcs.back().first, true);
}

// Searches one level for a replacement edge after a tree edge between the
// components of u and v was removed. Returns true when reconnected.
bool dynamic_connectivity::replace(std::uint32_t u, std::uint32_t v, int level) {
    // Materialize level+1 up front so no reference below is invalidated by
    // container growth while edges rise.
    ensure_level(level + 1);
    euler_tour_forest& f = levels_[static_cast<std::size_t>(level)];
    std::uint32_t ru = f.root_of(u), rv = f.root_of(v);
    GZ_CHECK(ru != rv, "replacement search on connected endpoints");
    if (f.tree_vertices(ru) > f.tree_vertices(rv)) {
        std::swap(ru, rv);
        std::swap(u, v);
    }
    // ru is the smaller side. First push its tree edges of this level up.
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
    // Then scan its non-tree edges: a crossing edge reconnects, the rest rise.
    std::uint32_t mk;
    while ((mk = f.find_flagged(ru, euler_tour_forest::flag_nontree)) !=
           euler_tour_forest::none) {
        std::uint32_t x = f.marker_vertex(mk);
        auto& list = adj_[static_cast<std::size_t>(level)][x];
        while (!list.empty()) {
            std::uint32_t e = list.back();
            edge_rec& rec = edges_[e];
            std::uint32_t other = (rec.u == x) ? rec.v : rec.u;
            if (f.root_of(other) == rv) {
                // Replacement found: detach from adjacency, relink as tree edge.
                adj_erase(level, rec.u, rec.pos_u);
                adj_erase(level, rec.v, rec.pos_v);
                make_tree_edge(e, level);
                return true;
            }
            adj_erase(level, rec.u, rec.pos_u);
            adj_erase(level, rec.v, rec.pos_v);
            rec.level = level + 1;
            adj_insert(level + 1, rec.u, e);
            adj_insert(level + 1, rec.v, e);
        }
    }
    return false;
}

void dynamic_connectivity::delete_edge(edge_handle h) {
    GZ_CHECK(h < edges_.size() && edges_[h].alive, "dead or unknown edge handle");
    edge_rec& rec = edges_[h];
    rec.alive = false;
    --live_edges_;
    if (rec.self_loop) return;
    if (!rec.is_tree) {
        adj_erase(rec.level, rec.u, rec.pos_u);
        adj_erase(rec.level, rec.v, rec.pos_v);
        return;
    }
    int top = rec.level;
    levels_[static_cast<std::size_t>(top)].set_arc_flag(rec.arcs.back().first, false);
    for (int l = top; l >= 0; --l)
        levels_[static_cast<std::size_t>(l)].cut(rec.arcs[static_cast<std::size_t>(l)].first,
                                                 rec.arcs[static_cast<std::size_t>(l)].second);
    rec.arcs.clear();
    for (int l = top; l >= 0; --l)
        if (replace(rec.u, rec.v, l)) return;
}

std::vector<std::vector<index_t>> dynamic_connectivity::component_partition() {
    std::map<component_id, std::vector<index_t>> groups;
    for (index_t v = 0; v < n_; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<index_t>> out;
    for (auto& [id, group] : groups) {
        std::sort(group.begin(), group.end());
        out.push_back(group);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void dynamic_connectivity::check_invariants() {
    for (std::size_t l = 0; l < levels_.size(); ++l) levels_[l].validate();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const edge_rec& rec = edges_[e];
        if (!rec.alive || rec.self_loop) continue;
        if (rec.is_tree) {
            GZ_CHECK(rec.arcs.size() == static_cast<std::size_t>(rec.level) + 1,
                     "tree edge arcs out of sync with level");
        } else {
            // endpoints of a non-tree edge share a tree at its level
            euler_tour_forest& f = levels_[static_cast<std::size_t>(rec.level)];
            GZ_CHECK(f.root_of(rec.u) == f.root_of(rec.v),
                     "non-tree edge endpoints split at its level");
        }
    }
    // a level-l tree spans at most n/2^l vertices
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
