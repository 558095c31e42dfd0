#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_helpers.hpp"

#include "graphzz/duality.hpp"
#include "graphzz/generator.hpp"
#include "graphzz/oracle.hpp"
#include "graphzz/zigzag_one.hpp"

using namespace graphzz;

namespace {

std::vector<simplex> ground_of(const zigzag_filtration& f) {
    std::set<simplex> all(f.base.begin(), f.base.end());
    for (const arrow& a : f.arrows) all.insert(a.s);
    return {all.begin(), all.end()};
}

zigzag_filtration filled_triangle() {
    return parse_filtration(
        "dim 2\ncoord 0 0 0\ncoord 1 8 0\ncoord 2 0 8\n"
        "+ v 0\n+ v 1\n+ v 2\n+ e 0 1\n+ e 0 2\n+ e 1 2\n+ t 0 1 2\n");
}

zigzag_filtration square_cycle() {
    return parse_filtration(
        "dim 2\ncoord 0 0 0\ncoord 1 8 0\ncoord 2 8 8\ncoord 3 0 8\n"
        "+ v 0\n+ v 1\n+ v 2\n+ v 3\n+ e 0 1\n+ e 1 2\n+ e 2 3\n+ e 0 3\n");
}

}  // namespace

TEST_CASE("edge classes chain through shared vertices") {
    std::vector<simplex> complex = {
        simplex::vertex(0), simplex::vertex(1), simplex::vertex(2),
        simplex::edge(0, 1), simplex::edge(1, 2)};
    auto classes = q_connected_components(complex, 1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].size() == 2);

    std::vector<simplex> split_complex = {
        simplex::vertex(0), simplex::vertex(1), simplex::vertex(2), simplex::vertex(3),
        simplex::edge(0, 1), simplex::edge(2, 3)};
    CHECK(q_connected_components(split_complex, 1).size() == 2);
}

TEST_CASE("closure pulls in triangles exactly when all edges are in the class") {
    zigzag_filtration f = filled_triangle();
    std::vector<simplex> ground = ground_of(f);
    auto classes = q_connected_components(ground, 1);
    REQUIRE(classes.size() == 1);
    std::vector<simplex> closure = component_closure(ground, classes[0]);
    CHECK(std::count_if(closure.begin(), closure.end(), [](const simplex& s) {
              return s.kind == simplex_kind::triangle;
          }) == 1);

    // same class but the triangle never enters the complex
    std::vector<simplex> no_fill = ground;
    no_fill.erase(std::remove(no_fill.begin(), no_fill.end(), simplex::triangle(0, 1, 2)),
                  no_fill.end());
    std::vector<simplex> closure2 = component_closure(no_fill, classes[0]);
    CHECK(std::none_of(closure2.begin(), closure2.end(), [](const simplex& s) {
        return s.kind == simplex_kind::triangle;
    }));
}

TEST_CASE("dual graph of one filled triangle") {
    zigzag_filtration f = filled_triangle();
    std::vector<simplex> ground = ground_of(f);
    auto classes = q_connected_components(ground, 1);
    std::vector<simplex> closure = component_closure(ground, classes[0]);
    dual_complex dc = planar_dual_graph(closure, f.coords);
    CHECK(dc.num_dual_vertices == 2);
    CHECK(dc.num_voids == 1);
    CHECK(dc.vertex_of.size() == 1);
    REQUIRE(dc.edge_of.size() == 3);
    // three parallel dual edges between the face and the outer void
    std::set<std::pair<index_t, index_t>> ends;
    for (auto& [s, e] : dc.edge_of) {
        auto norm = std::minmax(e.first, e.second);
        ends.insert({norm.first, norm.second});
    }
    CHECK(ends.size() == 1);
}

TEST_CASE("dual graph of an unfilled square") {
    zigzag_filtration f = square_cycle();
    std::vector<simplex> ground = ground_of(f);
    auto classes = q_connected_components(ground, 1);
    std::vector<simplex> closure = component_closure(ground, classes[0]);
    dual_complex dc = planar_dual_graph(closure, f.coords);
    CHECK(dc.num_dual_vertices == 2);
    CHECK(dc.num_voids == 2);  // inside and outside
    CHECK(dc.vertex_of.empty());
    CHECK(dc.edge_of.size() == 4);
}

TEST_CASE("dual edges of bridges are self-loops") {
    zigzag_filtration f = parse_filtration(
        "dim 2\ncoord 0 0 0\ncoord 1 8 0\n+ v 0\n+ v 1\n+ e 0 1\n");
    std::vector<simplex> ground = ground_of(f);
    auto classes = q_connected_components(ground, 1);
    dual_complex dc = planar_dual_graph(component_closure(ground, classes[0]), f.coords);
    CHECK(dc.num_dual_vertices == 1);
    auto ends = dc.edge_of.at(simplex::edge(0, 1));
    CHECK(ends.first == ends.second);
}

TEST_CASE("restriction masks partition the edge and triangle arrows") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        zigzag_filtration f = generate_planar(3, 40, seed, true);
        std::vector<simplex> ground = ground_of(f);
        auto classes = q_connected_components(ground, 1);
        std::vector<int> hit(f.arrows.size(), 0);
        for (auto& cls : classes) {
            restricted_filtration rf = restrict_filtration(f, component_closure(ground, cls));
            for (std::size_t i = 0; i < f.arrows.size(); ++i)
                if (rf.keep[i] && f.arrows[i].s.kind != simplex_kind::vertex) ++hit[i];
        }
        for (std::size_t i = 0; i < f.arrows.size(); ++i) {
            if (f.arrows[i].s.kind == simplex_kind::vertex) continue;
            REQUIRE(hit[i] == 1);
        }
    }
}

TEST_CASE("dual filtration flips membership and keeps indices") {
    zigzag_filtration f = filled_triangle();
    std::vector<simplex> ground = ground_of(f);
    auto classes = q_connected_components(ground, 1);
    std::vector<simplex> closure = component_closure(ground, classes[0]);
    dual_complex dc = planar_dual_graph(closure, f.coords);
    restricted_filtration rf = restrict_filtration(f, closure);
    graph_event_seq seq = dual_filtration(rf, dc);
    REQUIRE(seq.size() == f.size());
    // the full dual graph is the initial state
    CHECK(seq.initial_edges.size() == 3);
    CHECK(seq.initial_vertices.size() == 2);
    // vertex arrows are no-ops, edge arrows delete dual edges, triangle
    // arrows delete dual vertices
    int noops = 0, deledges = 0, delverts = 0;
    for (const graph_event& ev : seq.events) {
        if (ev.kind == graph_event::op::noop) ++noops;
        if (ev.kind == graph_event::op::del_edge) ++deledges;
        if (ev.kind == graph_event::op::del_vertex) ++delverts;
    }
    CHECK(noops == 3);
    CHECK(deledges == 3);
    CHECK(delverts == 1);
    // deleting a primal edge reinserts its dual edge
    zigzag_filtration g = filled_triangle();
    g.arrows.pop_back();  // drop the triangle fill
    g.arrows.push_back({false, simplex::edge(0, 1)});
    restricted_filtration rg = restrict_filtration(g, closure);
    graph_event_seq seq2 = dual_filtration(rg, dc);
    CHECK(seq2.events.back().kind == graph_event::op::add_edge);
}

TEST_CASE("filled triangle pipeline end to end") {
    barcode got = compute_codim1(filled_triangle());
    CHECK(got.same_intervals(gztest::make_barcode(1, {{6, 6}})));
}

TEST_CASE("codimension-one equals dimension one without 2-simplices") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        zigzag_filtration f = generate_planar(2 + seed % 3, 10 + (seed * 13) % 50, seed, false);
        barcode via_dual = compute_codim1(f);
        barcode direct = compute_barcode1(f);
        REQUIRE_MESSAGE(via_dual.same_intervals(direct), "seed ", seed, "\n",
                        serialize_filtration(f));
    }
}

TEST_CASE("codimension-one matches the oracle with triangles") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        zigzag_filtration f = generate_planar(3, 12 + (seed * 7) % 28, seed, true);
        barcode via_dual = compute_codim1(f);
        barcode truth = oracle::oracle_barcode(f, 1);
        REQUIRE_MESSAGE(via_dual.same_intervals(truth), "seed ", seed, "\n",
                        serialize_filtration(f));
        // per-index counts against the 2-complex Betti numbers
        std::vector<index_t> b1 = oracle::betti_profile(f, 1);
        for (index_t i = 0; i <= f.size(); ++i)
            REQUIRE(via_dual.count_at(i) == b1[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("supplied dual graphs reproduce the traced pipeline") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        zigzag_filtration f = generate_planar(3, 24, seed, true);
        std::vector<simplex> ground = ground_of(f);
        auto classes = q_connected_components(ground, 1);
        std::vector<dual_complex> duals;
        for (auto& cls : classes)
            duals.push_back(planar_dual_graph(component_closure(ground, cls), f.coords));
        // route the duals through the text format as a caller would
        std::vector<dual_complex> reloaded =
            parse_dual_complexes(serialize_dual_complexes(duals));
        REQUIRE(reloaded.size() == duals.size());
        for (std::size_t i = 0; i < duals.size(); ++i) REQUIRE(reloaded[i] == duals[i]);
        barcode from_supplied = compute_codim1(f, reloaded);
        barcode from_tracing = compute_codim1(f);
        REQUIRE(from_supplied.same_intervals(from_tracing));
    }
}

TEST_CASE("codimension-one needs coordinates or supplied duals") {
    zigzag_filtration f = filled_triangle();
    f.coords.clear();
    CHECK_THROWS_AS(compute_codim1(f), validation_error);
}

TEST_CASE("crossing embeddings are rejected") {
    CHECK_THROWS_AS(parse_filtration("dim 2\n"
                                     "coord 0 0 0\ncoord 1 8 8\ncoord 2 0 8\ncoord 3 8 0\n"
                                     "+ v 0\n+ v 1\n+ v 2\n+ v 3\n+ e 0 1\n+ e 2 3\n"),
                    validation_error);
    // vertex inside a filled triangle
    CHECK_THROWS_AS(parse_filtration("dim 2\n"
                                     "coord 0 0 0\ncoord 1 12 0\ncoord 2 0 12\ncoord 3 2 2\n"
                                     "+ v 0\n+ v 1\n+ v 2\n+ v 3\n+ e 0 1\n+ e 0 2\n+ e 1 2\n"
                                     "+ t 0 1 2\n"),
                    validation_error);
}
