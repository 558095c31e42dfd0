#include "graphzz/barcode_forest.hpp"

#include <sstream>

namespace graphzz {

barcode_forest::node_id barcode_forest::alloc(index_t level) {
    node_id x = static_cast<node_id>(nodes_.size());
    node_t n;
    n.level = level;
    nodes_.push_back(n);
    return x;
}

barcode_forest::node_id barcode_forest::resolve(node_id x) const {
    GZ_CHECK(x < nodes_.size(), "bad node id");
    while (nodes_[x].alias != none) x = nodes_[x].alias;
    return x;
}

barcode_forest::node_id barcode_forest::tuf_find(node_id x) {
    node_id r = x;
    while (nodes_[r].tuf_parent != none) r = nodes_[r].tuf_parent;
    while (nodes_[x].tuf_parent != none) {
        node_id next = nodes_[x].tuf_parent;
        nodes_[x].tuf_parent = r == x ? none : r;
        x = next;
    }
    return r;
}

barcode_forest::node_id barcode_forest::new_root(index_t level) {
    node_id x = alloc(level);
    nodes_[x].is_entering = true;
    nodes_[x].tree_root = x;
    ++live_trees_;
    return x;
}

barcode_forest::node_id barcode_forest::attach_child(node_id parent_, index_t level) {
    node_id p = resolve(parent_);
    if (level <= nodes_[p].level)
        throw invariant_error("child level must exceed parent level");
    node_id x = alloc(level);
    nodes_[x].parent = p;
    node_id pr = tuf_find(p);
    nodes_[x].tuf_parent = pr;
    ++nodes_[pr].tuf_size;
    return x;
}

void barcode_forest::set_level(node_id leaf, index_t level) {
    node_id x = resolve(leaf);
    node_id p = parent(x);
    GZ_CHECK(level >= nodes_[x].level, "leaf level may only advance");
    GZ_CHECK(p == none || nodes_[p].level < level, "level must exceed parent level");
    nodes_[x].level = level;
}

void barcode_forest::mark_splitting(node_id x_) {
    node_id x = resolve(x_);
    GZ_CHECK(!nodes_[x].is_splitting, "node is already splitting");
    nodes_[x].is_splitting = true;
}

barcode_forest::node_id barcode_forest::parent(node_id x) const {
    node_id p = nodes_[resolve(x)].parent;
    return p == none ? none : resolve(p);
}

index_t barcode_forest::level(node_id x) const { return nodes_[resolve(x)].level; }

bool barcode_forest::same_tree(node_id x, node_id y) {
    return tuf_find(resolve(x)) == tuf_find(resolve(y));
}

std::pair<barcode_forest::node_id, index_t> barcode_forest::root_of(node_id x) {
    node_id rep = tuf_find(resolve(x));
    node_id root = resolve(nodes_[rep].tree_root);
    return {root, nodes_[root].level};
}

barcode_forest::node_id barcode_forest::nca(node_id u, node_id v) {
    node_id x = resolve(u), y = resolve(v);
    GZ_CHECK(same_tree(x, y), "nca of nodes in different trees");
    while (x != y) {
        index_t lx = nodes_[x].level, ly = nodes_[y].level;
        if (lx > ly) {
            x = parent(x);
        } else if (ly > lx) {
            y = parent(y);
        } else {
            x = parent(x);
            y = parent(y);
        }
        GZ_CHECK(x != none && y != none, "nca walk escaped the tree");
    }
    return x;
}

void barcode_forest::collect_path(node_id from, node_id stop, std::vector<node_id>& out) const {
    node_id x = resolve(from);
    while (x != stop) {
        GZ_CHECK(x != none, "path walk escaped the tree");
        GZ_CHECK(!nodes_[x].is_consumed, "live path through a consumed node");
        out.push_back(x);
        node_id p = nodes_[x].parent;
        x = p == none ? none : resolve(p);
    }
}

void barcode_forest::merge_into(node_id survivor, node_id donor) {
    node_t& s = nodes_[survivor];
    node_t& d = nodes_[donor];
    GZ_CHECK(s.level == d.level, "glued nodes must share a level");
    s.is_entering |= d.is_entering;
    s.entering_paired |= d.entering_paired;
    s.is_splitting |= d.is_splitting;
    s.splitting_paired |= d.splitting_paired;
    GZ_CHECK(!s.is_consumed && !d.is_consumed, "glue of a consumed node");
    d.alias = survivor;
}

barcode_forest::node_id barcode_forest::glue_paths(node_id u, node_id v, node_id up_to) {
    node_id stop = none;
    bool cross = (up_to == none);
    node_id set_u = tuf_find(resolve(u)), set_v = tuf_find(resolve(v));
    if (!cross) {
        GZ_CHECK(set_u == set_v, "same-tree glue across trees");
        stop = resolve(up_to);
    } else {
        GZ_CHECK(set_u != set_v, "cross-tree glue within one tree");
    }
    std::vector<node_id> pu, pv;
    collect_path(u, stop, pu);
    collect_path(v, stop, pv);
    GZ_CHECK(!pu.empty() && !pv.empty(), "glue endpoints must lie below the meeting node");

    // meld by descending level; ties identify, u's node surviving
    std::vector<node_id> chain;
    std::size_t i = 0, j = 0;
    while (i < pu.size() || j < pv.size()) {
        if (j == pv.size() ||
            (i < pu.size() && nodes_[pu[i]].level > nodes_[pv[j]].level)) {
            chain.push_back(pu[i++]);
        } else if (i == pu.size() || nodes_[pv[j]].level > nodes_[pu[i]].level) {
            chain.push_back(pv[j++]);
        } else {
            merge_into(pu[i], pv[j]);
            chain.push_back(pu[i]);
            ++i;
            ++j;
        }
    }
    for (std::size_t k = 0; k < chain.size(); ++k)
        nodes_[chain[k]].parent = (k + 1 < chain.size()) ? chain[k + 1] : stop;

    if (cross) {
        if (nodes_[set_u].tuf_size < nodes_[set_v].tuf_size) std::swap(set_u, set_v);
        nodes_[set_v].tuf_parent = set_u;
        nodes_[set_u].tuf_size += nodes_[set_v].tuf_size;
        nodes_[set_u].tree_root = chain.back();
        --live_trees_;
    }
    return chain.front();
}

barcode_forest::scan_result barcode_forest::departure_scan(node_id leaf) {
    node_id x = resolve(leaf);
    while (true) {
        GZ_CHECK(!nodes_[x].is_consumed, "departure scan entered a consumed node");
        if (nodes_[x].is_splitting && !nodes_[x].splitting_paired) {
            nodes_[x].splitting_paired = true;
            return {nodes_[x].level, true};
        }
        node_id p = parent(x);
        if (p == none) {
            GZ_CHECK(nodes_[x].is_entering && !nodes_[x].entering_paired,
                     "departure scan reached an exhausted root");
            nodes_[x].entering_paired = true;
            --live_trees_;
            return {nodes_[x].level, false};
        }
        nodes_[x].is_consumed = true;
        ++scan_visits_;
        x = p;
    }
}

bool barcode_forest::entering_open(node_id x_) const {
    const node_t& n = nodes_[resolve(x_)];
    return n.is_entering && !n.entering_paired;
}

bool barcode_forest::splitting_open(node_id x_) const {
    const node_t& n = nodes_[resolve(x_)];
    return n.is_splitting && !n.splitting_paired;
}

void barcode_forest::pair_entering(node_id x_) {
    node_t& n = nodes_[resolve(x_)];
    GZ_CHECK(n.is_entering && !n.entering_paired, "entrance potential already used");
    n.entering_paired = true;
}

void barcode_forest::pair_splitting(node_id x_) {
    node_t& n = nodes_[resolve(x_)];
    GZ_CHECK(n.is_splitting && !n.splitting_paired, "split potential already used");
    n.splitting_paired = true;
}

bool barcode_forest::consumed(node_id x_) const { return nodes_[resolve(x_)].is_consumed; }

std::vector<std::pair<index_t, bool>> barcode_forest::open_potentials() const {
    std::vector<std::pair<index_t, bool>> out;
    for (node_id x = 0; x < nodes_.size(); ++x) {
        const node_t& n = nodes_[x];
        if (n.alias != none) continue;
        if (n.is_splitting && !n.splitting_paired) out.emplace_back(n.level, true);
        if (n.parent == none && n.is_entering && !n.entering_paired)
            out.emplace_back(n.level, false);
    }
    return out;
}

std::string barcode_forest::dump() const {
    std::ostringstream out;
    for (node_id x = 0; x < nodes_.size(); ++x) {
        if (nodes_[x].alias != none) continue;
        const node_t& n = nodes_[x];
        out << x << " parent=";
        if (n.parent == none)
            out << '-';
        else
            out << resolve(n.parent);
        out << " level=" << n.level << " kind=";
        if (n.is_splitting)
            out << 's';
        else if (n.is_entering)
            out << 'e';
        else
            out << 'r';
        out << " paired=" << (n.is_splitting ? n.splitting_paired : n.entering_paired)
            << " consumed=" << n.is_consumed << '\n';
    }
    return out.str();
}

void barcode_forest::validate() const {
    // strict level decrease toward the root also rules out cycles
    for (node_id x = 0; x < nodes_.size(); ++x) {
        if (nodes_[x].alias != none) continue;
        node_id p = nodes_[x].parent;
        if (p != none) {
            p = resolve(p);
            GZ_CHECK(nodes_[p].level < nodes_[x].level, "level monotonicity broken");
        }
    }
}

}  // namespace graphzz
