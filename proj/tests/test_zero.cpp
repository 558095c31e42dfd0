#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "test_helpers.hpp"

#include "graphzz/barcode_forest.hpp"
#include "graphzz/generator.hpp"
#include "graphzz/oracle.hpp"
#include "graphzz/zigzag_zero.hpp"

using namespace graphzz;

namespace {

barcode zero_of(const zigzag_filtration& f, zero_stats* stats = nullptr) {
    zero_options opt;
    opt.check_state = true;  // per-event component/leaf bijection checks
    return compute_barcode0(f, opt, stats);
}

// Reference implementation: an explicit leveled forest with physical child
// lists and real path deletions, driven by the same connectivity events.
// Kept deliberately naive and separate from the production forest.
struct naive_zero {
    struct node {
        int parent = -1;
        index_t level = 0;
        bool splitting = false, entering = false;
        std::vector<int> children;
    };
    std::vector<node> nodes;
    std::map<std::uint64_t, int> leaf_of;  // component id -> leaf
    std::vector<interval> out;

    int make(index_t level, bool entering) {
        nodes.push_back({});
        nodes.back().level = level;
        nodes.back().entering = entering;
        return static_cast<int>(nodes.size()) - 1;
    }
    void attach(int child, int parent) {
        nodes[static_cast<std::size_t>(child)].parent = parent;
        if (parent >= 0) nodes[static_cast<std::size_t>(parent)].children.push_back(child);
    }
    void detach(int child) {
        int p = nodes[static_cast<std::size_t>(child)].parent;
        if (p < 0) return;
        auto& ch = nodes[static_cast<std::size_t>(p)].children;
        ch.erase(std::find(ch.begin(), ch.end(), child));
        nodes[static_cast<std::size_t>(child)].parent = -1;
    }

    void run(const graph_event_seq& seq) {
        dynamic_connectivity conn(seq.n_vertices);
        std::map<std::uint64_t, dynamic_connectivity::edge_handle> handles;
        for (auto [u, v, eid] : seq.initial_edges) handles[eid] = conn.insert_edge(u, v);
        std::set<std::uint32_t> active(seq.initial_vertices.begin(),
                                       seq.initial_vertices.end());
        for (std::uint32_t v : active) {
            auto id = conn.find(v);
            if (leaf_of.count(id)) continue;
            leaf_of[id] = make(0, true);
        }
        for (index_t i = 1; i <= seq.size(); ++i) {
            const graph_event& ev = seq.events[static_cast<std::size_t>(i - 1)];
            switch (ev.kind) {
                case graph_event::op::noop: break;
                case graph_event::op::add_vertex:
                    leaf_of[conn.find(ev.u)] = make(i, true);
                    break;
                case graph_event::op::del_vertex: {
                    int leaf = leaf_of.at(conn.find(ev.u));
                    leaf_of.erase(conn.find(ev.u));
                    departure(leaf, i);
                    break;
                }
                case graph_event::op::add_edge: {
                    if (ev.u == ev.v) {
                        handles[ev.eid] = conn.insert_edge(ev.u, ev.v);
                        break;
                    }
                    auto t1 = conn.find(ev.u), t2 = conn.find(ev.v);
                    if (t1 == t2) {
                        handles[ev.eid] = conn.insert_edge(ev.u, ev.v);
                        break;
                    }
                    int l1 = leaf_of.at(t1), l2 = leaf_of.at(t2);
                    int merged = merge(l1, l2, i);
                    handles[ev.eid] = conn.insert_edge(ev.u, ev.v);
                    leaf_of.erase(t1);
                    leaf_of.erase(t2);
                    leaf_of[conn.find(ev.u)] = merged;
                    break;
                }
                case graph_event::op::del_edge: {
                    auto h = handles.at(ev.eid);
                    handles.erase(ev.eid);
                    if (ev.u == ev.v) {
                        conn.delete_edge(h);
                        break;
                    }
                    auto old_id = conn.find(ev.u);
                    int leaf = leaf_of.at(old_id);
                    conn.delete_edge(h);
                    leaf_of.erase(old_id);
                    if (conn.connected(ev.u, ev.v)) {
                        leaf_of[conn.find(ev.u)] = leaf;
                    } else {
                        int s = leaf;
                        if (nodes[static_cast<std::size_t>(leaf)].level < i - 1) {
                            s = make(i - 1, false);
                            attach(s, leaf);
                        }
                        nodes[static_cast<std::size_t>(s)].splitting = true;
                        nodes[static_cast<std::size_t>(s)].level = i - 1;
                        int c1 = make(i, false), c2 = make(i, false);
                        attach(c1, s);
                        attach(c2, s);
                        leaf_of[conn.find(ev.u)] = c1;
                        leaf_of[conn.find(ev.v)] = c2;
                    }
                    break;
                }
            }
        }
        finalize(seq.size());
        std::sort(out.begin(), out.end());
    }

    int root_of(int x) {
        while (nodes[static_cast<std::size_t>(x)].parent >= 0)
            x = nodes[static_cast<std::size_t>(x)].parent;
        return x;
    }

    std::vector<int> path_to_root(int x) {
        std::vector<int> p{x};
        while (nodes[static_cast<std::size_t>(p.back())].parent >= 0)
            p.push_back(nodes[static_cast<std::size_t>(p.back())].parent);
        return p;
    }

    int merge(int l1, int l2, index_t i) {
        int g1 = l1;
        if (nodes[static_cast<std::size_t>(l1)].level < i - 1) {
            g1 = make(i - 1, false);
            attach(g1, l1);
        }
        int g2 = l2;
        if (nodes[static_cast<std::size_t>(l2)].level < i - 1) {
            g2 = make(i - 1, false);
            attach(g2, l2);
        }
        int r1 = root_of(g1), r2 = root_of(g2);
        if (r1 != r2) {
            index_t lv1 = nodes[static_cast<std::size_t>(r1)].level;
            index_t lv2 = nodes[static_cast<std::size_t>(r2)].level;
            out.push_back({std::max(lv1, lv2), i - 1});
            if (lv1 > lv2) {
                nodes[static_cast<std::size_t>(r1)].entering = false;
            } else if (lv2 > lv1) {
                nodes[static_cast<std::size_t>(r2)].entering = false;
            }
            // equal levels: one entrance closes through the glue below
        } else {
            int a = g1, b = g2;
            while (a != b) {
                index_t la = nodes[static_cast<std::size_t>(a)].level;
                index_t lb = nodes[static_cast<std::size_t>(b)].level;
                if (la > lb) {
                    a = nodes[static_cast<std::size_t>(a)].parent;
                } else if (lb > la) {
                    b = nodes[static_cast<std::size_t>(b)].parent;
                } else {
                    a = nodes[static_cast<std::size_t>(a)].parent;
                    b = nodes[static_cast<std::size_t>(b)].parent;
                }
            }
            REQUIRE(nodes[static_cast<std::size_t>(a)].splitting);
            nodes[static_cast<std::size_t>(a)].splitting = false;
            out.push_back({nodes[static_cast<std::size_t>(a)].level + 1, i - 1});
        }
        // physically meld the two paths by level, up to the meeting node
        int stop = (r1 != r2) ? -1 : [&] {
            int a = g1, b = g2;
            while (a != b) {
                index_t la = nodes[static_cast<std::size_t>(a)].level;
                index_t lb = nodes[static_cast<std::size_t>(b)].level;
                if (la > lb)
                    a = nodes[static_cast<std::size_t>(a)].parent;
                else if (lb > la)
                    b = nodes[static_cast<std::size_t>(b)].parent;
                else {
                    a = nodes[static_cast<std::size_t>(a)].parent;
                    b = nodes[static_cast<std::size_t>(b)].parent;
                }
            }
            return a;
        }();
        auto path_to = [&](int x) {
            std::vector<int> p;
            while (x != stop && x >= 0) {
                p.push_back(x);
                x = nodes[static_cast<std::size_t>(x)].parent;
            }
            return p;
        };
        std::vector<int> p1 = path_to(g1), p2 = path_to(g2);
        std::vector<int> chain;
        std::size_t i1 = 0, i2 = 0;
        while (i1 < p1.size() || i2 < p2.size()) {
            if (i2 == p2.size()) {
                chain.push_back(p1[i1++]);
            } else if (i1 == p1.size()) {
                chain.push_back(p2[i2++]);
            } else {
                index_t la = nodes[static_cast<std::size_t>(p1[i1])].level;
                index_t lb = nodes[static_cast<std::size_t>(p2[i2])].level;
                if (la > lb) {
                    chain.push_back(p1[i1++]);
                } else if (lb > la) {
                    chain.push_back(p2[i2++]);
                } else {
                    int keep = p1[i1++], drop = p2[i2++];
                    if (keep != drop) {
                        node& k = nodes[static_cast<std::size_t>(keep)];
                        node& d = nodes[static_cast<std::size_t>(drop)];
                        k.splitting = k.splitting || d.splitting;
                        k.entering = k.entering || d.entering;
                        for (int c : std::vector<int>(d.children)) {
                            detach(c);
                            attach(c, keep);
                        }
                        d.entering = d.splitting = false;
                    }
                    chain.push_back(keep);
                }
            }
        }
        for (std::size_t k = 0; k < chain.size(); ++k) {
            detach(chain[k]);
            if (k + 1 < chain.size()) attach(chain[k], chain[k + 1]);
        }
        if (stop >= 0) attach(chain.back(), stop);
        int leaf = make(i, false);
        attach(leaf, chain.front());
        return leaf;
    }

    void departure(int leaf, index_t i) {
        int x = leaf;
        while (true) {
            node& n = nodes[static_cast<std::size_t>(x)];
            if (n.splitting) {
                out.push_back({n.level + 1, i - 1});
                n.splitting = false;
                break;
            }
            if (n.parent < 0) {
                REQUIRE(n.entering);
                n.entering = false;
                out.push_back({n.level, i - 1});
                break;
            }
            int p = n.parent;
            detach(x);
            x = p;
        }
    }

    void finalize(index_t m) {
        for (std::size_t x = 0; x < nodes.size(); ++x) {
            if (nodes[x].splitting) out.push_back({nodes[x].level + 1, m});
            if (nodes[x].entering && nodes[x].parent < 0 && has_live_leaf(static_cast<int>(x)))
                out.push_back({nodes[x].level, m});
        }
    }

    bool has_live_leaf(int root) {
        for (auto& [id, leaf] : leaf_of)
            if (root_of(leaf) == root) return true;
        return false;
    }
};

}  // namespace

TEST_CASE("forest primitives behave") {
    barcode_forest bf;
    auto r = bf.new_root(1);
    CHECK(bf.root_of(r) == std::pair{r, index_t{1}});
    auto r2 = bf.new_root(2);
    CHECK(bf.live_trees() == 2);
    CHECK(!bf.same_tree(r, r2));
    auto c = bf.attach_child(r, 2);
    auto c2 = bf.attach_child(c, 3);
    CHECK(bf.root_of(c2).first == r);
    CHECK_THROWS_AS(bf.attach_child(c2, 3), invariant_error);  // level must grow
    auto c3 = bf.attach_child(c, 4);
    CHECK(bf.nca(c2, c3) == c);
    CHECK(bf.nca(c2, c) == c);  // ancestor case
    CHECK_THROWS_AS(bf.nca(c2, r2), invariant_error);
    CHECK(!bf.dump().empty());
    bf.validate();
}

TEST_CASE("glue of two singleton roots leaves one node") {
    barcode_forest bf;
    auto a = bf.new_root(3);
    auto b = bf.new_root(3);
    auto top = bf.glue_paths(a, b, barcode_forest::none);
    CHECK(bf.resolve(a) == bf.resolve(b));
    CHECK(bf.resolve(top) == bf.resolve(a));
    CHECK(bf.live_trees() == 1);
}

TEST_CASE("departure scan on a lone root claims the entrance") {
    barcode_forest bf;
    auto r = bf.new_root(4);
    auto res = bf.departure_scan(r);
    CHECK(res.level == 4);
    CHECK(!res.splitting);
    CHECK(bf.open_potentials().empty());
}

TEST_CASE("showcase dim-0 barcode is exact") {
    zigzag_filtration f =
        parse_filtration(gztest::read_file(gztest::data_path("showcase_dim0.txt")));
    barcode expected = gztest::make_barcode(
        0, {{2, 2}, {4, 4}, {6, 8}, {8, 9}, {7, 10}, {1, 10}});
    barcode got = zero_of(f);
    CHECK_MESSAGE(got.same_intervals(expected), gztest::show(got));
}

TEST_CASE("two entrances and a merge kill the younger root") {
    zigzag_filtration f = parse_filtration("+ v 0\n+ v 1\n+ e 0 1\n");
    CHECK(zero_of(f).same_intervals(gztest::make_barcode(0, {{2, 2}, {1, 3}})));
}

TEST_CASE("events emit the closed intervals before the final sweep") {
    zigzag_filtration f =
        parse_filtration(gztest::read_file(gztest::data_path("showcase_dim0.txt")));
    graph_event_seq seq = events_from_filtration(f);
    zero_state st(seq);
    std::vector<interval> emitted;
    for (index_t i = 1; i <= seq.size(); ++i)
        st.process_event(seq.events[static_cast<std::size_t>(i - 1)], i, emitted);
    std::sort(emitted.begin(), emitted.end());
    CHECK(emitted == std::vector<interval>{{2, 2}, {4, 4}, {6, 8}, {8, 9}});
    st.finalize(seq.size(), emitted);
    std::sort(emitted.begin(), emitted.end());
    CHECK(emitted.size() == 6);
}

TEST_CASE("single vertex life") {
    CHECK(zero_of(parse_filtration("+ v 0\n")).same_intervals(
        gztest::make_barcode(0, {{1, 1}})));
    CHECK(zero_of(parse_filtration("+ v 0\n- v 0\n")).same_intervals(
        gztest::make_barcode(0, {{1, 1}})));
    CHECK(zero_of(parse_filtration("")).intervals.empty());
}

TEST_CASE("initial graphs seed level-0 components") {
    zigzag_filtration f = parse_filtration(
        "base v 0\nbase v 1\nbase v 2\nbase e 0 1\n+ e 1 2\n- e 0 1\n");
    barcode got = zero_of(f);
    CHECK(got.same_intervals(oracle::oracle_barcode(f, 0)));
    CHECK(got.same_intervals(gztest::make_barcode(0, {{0, 0}, {2, 2}, {0, 2}})));
}

TEST_CASE("parallel base edges make one component") {
    graph_event_seq seq;
    seq.n_vertices = 2;
    seq.initial_vertices = {0, 1};
    seq.initial_edges = {{0, 1, 0}, {0, 1, 1}};
    barcode got = compute_barcode0(seq);
    CHECK(got.same_intervals(gztest::make_barcode(0, {{0, 0}})));
}

TEST_CASE("self-loop arrows are no-change events") {
    graph_event_seq seq;
    seq.n_vertices = 1;
    seq.initial_vertices = {0};
    seq.events.push_back({graph_event::op::add_edge, 0, 0, 7});
    seq.events.push_back({graph_event::op::del_edge, 0, 0, 7});
    barcode got = compute_barcode0(seq);
    CHECK(got.same_intervals(gztest::make_barcode(0, {{0, 2}})));
}

TEST_CASE("matches the oracle on random filtrations") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        zigzag_filtration f =
            generate_random(3 + seed % 10, 8 + (seed * 7) % 33, seed,
                            static_cast<gen_model>(seed % 3));
        barcode fast = zero_of(f);
        barcode truth = oracle::oracle_barcode(f, 0);
        REQUIRE_MESSAGE(fast.same_intervals(truth), "seed ", seed, "\n",
                        serialize_filtration(f));
    }
}

TEST_CASE("per-index counts equal component counts") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        zigzag_filtration f = generate_random(8, 30, seed, gen_model::churn);
        barcode fast = zero_of(f);
        std::vector<index_t> comps = oracle::component_count_profile(f);
        for (index_t i = 0; i <= f.size(); ++i)
            REQUIRE(fast.count_at(i) == comps[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("add-only filtrations match union-find persistence with the elder rule") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        zigzag_filtration f = generate_random(10, 36, seed, gen_model::insert_heavy);
        zigzag_filtration mono;
        mono.dim = 1;
        std::set<simplex> present;
        for (const arrow& a : f.arrows) {
            if (!a.forward || present.count(a.s)) continue;
            if (a.s.kind == simplex_kind::edge &&
                (!present.count(simplex::vertex(a.s.v[0])) ||
                 !present.count(simplex::vertex(a.s.v[1]))))
                continue;
            present.insert(a.s);
            mono.arrows.push_back(a);
        }
        std::map<vertex_t, vertex_t> parent;
        std::map<vertex_t, index_t> birth;
        std::function<vertex_t(vertex_t)> find = [&](vertex_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<interval> expected;
        for (index_t i = 1; i <= mono.size(); ++i) {
            const arrow& a = mono.arrows[static_cast<std::size_t>(i - 1)];
            if (a.s.kind == simplex_kind::vertex) {
                parent[a.s.v[0]] = a.s.v[0];
                birth[a.s.v[0]] = i;
            } else {
                vertex_t ra = find(a.s.v[0]), rb = find(a.s.v[1]);
                if (ra == rb) continue;
                if (birth[ra] < birth[rb]) std::swap(ra, rb);
                expected.push_back({birth[ra], i - 1});  // the younger class ends
                birth[find(rb)] = std::min(birth[ra], birth[rb]);
                parent[ra] = rb;
            }
        }
        std::set<vertex_t> seen;
        for (auto& [v, p] : parent)
            if (seen.insert(find(v)).second) expected.push_back({birth[find(v)], mono.size()});
        barcode want;
        want.dim = 0;
        want.intervals = expected;
        REQUIRE_MESSAGE(zero_of(mono).same_intervals(want), "seed ", seed, "\n",
                        serialize_filtration(mono));
    }
}

TEST_CASE("agrees with the naive leveled forest on random runs") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        zigzag_filtration f =
            generate_random(2 + seed % 9, 6 + (seed * 11) % 35, seed,
                            static_cast<gen_model>(seed % 3));
        graph_event_seq seq = events_from_filtration(f);
        naive_zero ref;
        ref.run(seq);
        barcode want;
        want.dim = 0;
        want.intervals = ref.out;
        barcode got = zero_of(f);
        REQUIRE_MESSAGE(got.same_intervals(want), "seed ", seed, "\n",
                        serialize_filtration(f));
    }
}

TEST_CASE("departure scans amortize against created nodes") {
    for (std::uint64_t seed = 7; seed < 14; ++seed) {
        zigzag_filtration f = generate_random(12, 500, seed, gen_model::churn);
        zero_stats stats;
        compute_barcode0(f, {}, &stats);
        CHECK(stats.scan_visits <= stats.forest_nodes);
    }
}
