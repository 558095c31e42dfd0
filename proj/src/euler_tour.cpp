#include "graphzz/euler_tour.hpp"

namespace graphzz {

euler_tour_forest::euler_tour_forest(std::uint64_t seed)
    : rng_state_(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull) {}

std::uint32_t euler_tour_forest::next_pri() {
    // splitmix64, truncated
    std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 16);
}

std::uint32_t euler_tour_forest::alloc(bool is_vertex, std::uint64_t owner) {
    std::uint32_t x;
    if (!free_.empty()) {
        x = free_.back();
        free_.pop_back();
        nodes_[x] = node_t{};
    } else {
        x = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
    }
    node_t& n = nodes_[x];
    n.pri = next_pri();
    n.is_vertex = is_vertex;
    n.owner = owner;
    n.vcnt = is_vertex ? 1 : 0;
    return x;
}

void euler_tour_forest::release(std::uint32_t x) { free_.push_back(x); }

std::uint32_t euler_tour_forest::marker(std::uint32_t v) {
    if (v >= marker_.size()) marker_.resize(v + 1, none);
    if (marker_[v] == none) marker_[v] = alloc(true, v);
    return marker_[v];
}

void euler_tour_forest::pull(std::uint32_t x) {
    node_t& n = nodes_[x];
    n.sz = 1;
    n.vcnt = n.is_vertex ? 1u : 0u;
    n.sub = n.self;
    if (n.l != none) {
        n.sz += nodes_[n.l].sz;
        n.vcnt += nodes_[n.l].vcnt;
        n.sub |= nodes_[n.l].sub;
    }
    if (n.r != none) {
        n.sz += nodes_[n.r].sz;
        n.vcnt += nodes_[n.r].vcnt;
        n.sub |= nodes_[n.r].sub;
    }
}

void euler_tour_forest::pull_to_root(std::uint32_t x) {
    while (x != none) {
        pull(x);
        x = nodes_[x].p;
    }
}

void euler_tour_forest::set_flag(std::uint32_t x, std::uint8_t bit, bool on) {
    if (on)
        nodes_[x].self |= bit;
    else
        nodes_[x].self &= static_cast<std::uint8_t>(~bit);
    pull_to_root(x);
}

std::uint32_t euler_tour_forest::find_root(std::uint32_t node) const {
    while (nodes_[node].p != none) node = nodes_[node].p;
    return node;
}

std::uint32_t euler_tour_forest::join(std::uint32_t a, std::uint32_t b) {
    if (a == none) return b;
    if (b == none) return a;
    if (nodes_[a].pri >= nodes_[b].pri) {
        std::uint32_t r = join(nodes_[a].r, b);
        nodes_[a].r = r;
        nodes_[r].p = a;
        pull(a);
        return a;
    }
    std::uint32_t l = join(a, nodes_[b].l);
    nodes_[b].l = l;
    nodes_[l].p = b;
    pull(b);
    return b;
}

std::pair<std::uint32_t, std::uint32_t> euler_tour_forest::split_before(std::uint32_t x) {
    std::uint32_t a = nodes_[x].l;
    if (a != none) nodes_[a].p = none;
    nodes_[x].l = none;
    pull(x);
    std::uint32_t b = x;
    std::uint32_t child = x, p = nodes_[x].p;
    nodes_[x].p = none;
    while (p != none) {
        std::uint32_t pp = nodes_[p].p;
        nodes_[p].p = none;
        if (nodes_[p].l == child) {
            nodes_[p].l = none;
            pull(p);
            b = join(b, p);
        } else {
            nodes_[p].r = none;
            pull(p);
            a = join(p, a);
        }
        child = p;
        p = pp;
    }
    return {a, b};
}

std::pair<std::uint32_t, std::uint32_t> euler_tour_forest::split_after(std::uint32_t x) {
    std::uint32_t b = nodes_[x].r;
    if (b != none) nodes_[b].p = none;
    nodes_[x].r = none;
    pull(x);
    std::uint32_t a = x;
    std::uint32_t child = x, p = nodes_[x].p;
    nodes_[x].p = none;
    while (p != none) {
        std::uint32_t pp = nodes_[p].p;
        nodes_[p].p = none;
        if (nodes_[p].l == child) {
            nodes_[p].l = none;
            pull(p);
            b = join(b, p);
        } else {
            nodes_[p].r = none;
            pull(p);
            a = join(p, a);
        }
        child = p;
        p = pp;
    }
    return {a, b};
}

std::uint64_t euler_tour_forest::position(std::uint32_t x) const {
    std::uint64_t pos = nodes_[x].l != none ? nodes_[nodes_[x].l].sz : 0;
    std::uint32_t child = x, p = nodes_[x].p;
    while (p != none) {
        if (nodes_[p].r == child) pos += 1 + (nodes_[p].l != none ? nodes_[nodes_[p].l].sz : 0);
        child = p;
        p = nodes_[p].p;
    }
    return pos;
}

std::uint32_t euler_tour_forest::reroot(std::uint32_t v) {
    std::uint32_t m = marker(v);
    auto [a, b] = split_before(m);
    return join(b, a);
}

std::pair<std::uint32_t, std::uint32_t> euler_tour_forest::link(std::uint32_t u, std::uint32_t v,
                                                                std::uint64_t tag) {
    std::uint32_t mu = marker(u), mv = marker(v);
    GZ_CHECK(find_root(mu) != find_root(mv), "link within one tour");
    std::uint32_t tu = reroot(u);
    std::uint32_t tv = reroot(v);
    std::uint32_t a1 = alloc(false, tag);
    std::uint32_t a2 = alloc(false, tag);
    std::uint32_t t = join(tu, a1);
    t = join(t, tv);
    join(t, a2);
    return {a1, a2};
}

void euler_tour_forest::cut(std::uint32_t arc_uv, std::uint32_t arc_vu) {
    std::uint32_t x = arc_uv, y = arc_vu;
    if (position(x) > position(y)) std::swap(x, y);
    // tour = prefix ++ [x] ++ inner ++ [y] ++ suffix; the cut leaves
    // prefix ++ suffix (one side) and inner (the other side).
    auto [prefix, rest] = split_before(x);
    (void)rest;
    auto [mid, suffix] = split_after(y);
    (void)mid;
    auto [xonly, tail] = split_after(x);
    (void)xonly;
    (void)tail;
    auto [inner, yonly] = split_before(y);
    (void)inner;
    (void)yonly;
    join(prefix, suffix);
    release(x);
    release(y);
}

std::uint32_t euler_tour_forest::find_flagged(std::uint32_t root, std::uint8_t bit) const {
    if (root == none || !(nodes_[root].sub & bit)) return none;
    std::uint32_t x = root;
    while (true) {
        const node_t& n = nodes_[x];
        if (n.l != none && (nodes_[n.l].sub & bit)) {
            x = n.l;
        } else if (n.self & bit) {
            return x;
        } else {
            x = n.r;
        }
    }
}

void euler_tour_forest::collect_flagged(std::uint32_t root, std::uint8_t bit,
                                        std::vector<std::uint32_t>& out) const {
    if (root == none || !(nodes_[root].sub & bit)) return;
    collect_flagged(nodes_[root].l, bit, out);
    if (nodes_[root].self & bit) out.push_back(root);
    collect_flagged(nodes_[root].r, bit, out);
}

void euler_tour_forest::validate() const {
    for (std::uint32_t x = 0; x < nodes_.size(); ++x) {
        const node_t& n = nodes_[x];
        if (n.l != none) GZ_CHECK(nodes_[n.l].p == x, "bad left parent link");
        if (n.r != none) GZ_CHECK(nodes_[n.r].p == x, "bad right parent link");
        std::uint32_t sz = 1, vc = n.is_vertex ? 1u : 0u;
        std::uint8_t sub = n.self;
        if (n.l != none) sz += nodes_[n.l].sz, vc += nodes_[n.l].vcnt, sub |= nodes_[n.l].sub;
        if (n.r != none) sz += nodes_[n.r].sz, vc += nodes_[n.r].vcnt, sub |= nodes_[n.r].sub;
        GZ_CHECK(sz == n.sz && vc == n.vcnt && sub == n.sub, "stale aggregate");
    }
}

}  // namespace graphzz
