#include "graphzz/link_cut_tree.hpp"

namespace graphzz {

std::uint32_t link_cut_tree::add_node(weight_t val, std::uint64_t tag) {
    std::uint32_t x = static_cast<std::uint32_t>(nodes_.size());
    node_t n;
    n.val = n.mx = val;
    n.tag = tag;
    n.mx_node = x;
    nodes_.push_back(n);
    return x;
}

bool link_cut_tree::is_splay_root(std::uint32_t x) const {
    std::uint32_t p = nodes_[x].p;
    return p == none || (nodes_[p].l != x && nodes_[p].r != x);
}

void link_cut_tree::push(std::uint32_t x) {
    node_t& n = nodes_[x];
    if (!n.flip) return;
    std::swap(n.l, n.r);
    if (n.l != none) nodes_[n.l].flip ^= true;
    if (n.r != none) nodes_[n.r].flip ^= true;
    n.flip = false;
}

void link_cut_tree::pull(std::uint32_t x) {
    node_t& n = nodes_[x];
    n.mx = n.val;
    n.mx_node = x;
    for (std::uint32_t c : {n.l, n.r}) {
        if (c != none && nodes_[c].mx > n.mx) {
            n.mx = nodes_[c].mx;
            n.mx_node = nodes_[c].mx_node;
        }
    }
}

void link_cut_tree::rotate(std::uint32_t x) {
    std::uint32_t p = nodes_[x].p;
    std::uint32_t g = nodes_[p].p;
    bool p_is_splay_root = is_splay_root(p);
    bool left = (nodes_[p].l == x);
    std::uint32_t b = left ? nodes_[x].r : nodes_[x].l;
    if (left) {
        nodes_[x].r = p;
        nodes_[p].l = b;
    } else {
        nodes_[x].l = p;
        nodes_[p].r = b;
    }
    if (b != none) nodes_[b].p = p;
    nodes_[p].p = x;
    nodes_[x].p = g;
    if (!p_is_splay_root) {
        if (nodes_[g].l == p)
            nodes_[g].l = x;
        else if (nodes_[g].r == p)
            nodes_[g].r = x;
    }
    pull(p);
    pull(x);
}

void link_cut_tree::splay(std::uint32_t x) {
    // push from the splay root down to x, then rotate up
    std::vector<std::uint32_t> stack{x};
    for (std::uint32_t y = x; !is_splay_root(y); y = nodes_[y].p) stack.push_back(nodes_[y].p);
    while (!stack.empty()) {
        push(stack.back());
        stack.pop_back();
    }
    while (!is_splay_root(x)) {
        std::uint32_t p = nodes_[x].p;
        if (!is_splay_root(p)) {
            std::uint32_t g = nodes_[p].p;
            if ((nodes_[g].l == p) == (nodes_[p].l == x))
                rotate(p);
            else
                rotate(x);
        }
        rotate(x);
    }
}

void link_cut_tree::access(std::uint32_t x) {
    std::uint32_t last = none;
    for (std::uint32_t y = x; y != none; y = nodes_[y].p) {
        splay(y);
        nodes_[y].r = last;
        pull(y);
        last = y;
    }
    splay(x);
}

void link_cut_tree::make_root(std::uint32_t x) {
    access(x);
    nodes_[x].flip ^= true;
    push(x);
}

std::uint32_t link_cut_tree::find_root(std::uint32_t x) {
    access(x);
    while (true) {
        push(x);
        if (nodes_[x].l == none) break;
        x = nodes_[x].l;
    }
    splay(x);
    return x;
}

bool link_cut_tree::same_tree(std::uint32_t a, std::uint32_t b) {
    if (a == b) return true;
    return find_root(a) == find_root(b);
}

void link_cut_tree::link(std::uint32_t child, std::uint32_t parent) {
    make_root(child);
    GZ_CHECK(find_root(parent) != child, "link would create a cycle");
    make_root(child);
    nodes_[child].p = parent;
}

void link_cut_tree::cut_edge(std::uint32_t a, std::uint32_t b) {
    make_root(a);
    access(b);
    GZ_CHECK(nodes_[b].l == a && nodes_[a].l == none && nodes_[a].r == none,
             "cut of a non-adjacent pair");
    nodes_[b].l = none;
    nodes_[a].p = none;
    pull(b);
}

std::pair<weight_t, std::uint64_t> link_cut_tree::path_max(std::uint32_t a, std::uint32_t b) {
    GZ_CHECK(same_tree(a, b), "path query on disconnected vertices");
    make_root(a);
    access(b);
    const node_t& n = nodes_[b];
    return {n.mx, n.mx_node == none ? 0 : nodes_[n.mx_node].tag};
}

}  // namespace graphzz
