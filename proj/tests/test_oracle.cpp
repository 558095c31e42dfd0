#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_helpers.hpp"

#include "graphzz/generator.hpp"
#include "graphzz/oracle.hpp"
#include "graphzz/z2.hpp"

using namespace graphzz;
using namespace graphzz::oracle;

namespace {

z2_relation transpose(const z2_relation& r) {
    z2_relation t;
    t.dim_left = r.dim_right;
    t.dim_right = r.dim_left;
    for (const bitvec& row : r.rows) {
        bitvec v(t.dim_left + t.dim_right);
        for (int i = 0; i < r.dim_left; ++i)
            if (row.get(i)) v.set(t.dim_left + i);
        for (int i = 0; i < r.dim_right; ++i)
            if (row.get(r.dim_left + i)) v.set(i);
        t.rows.push_back(v);
    }
    t.canonicalize();
    return t;
}

bool contains(const z2_relation& r, const bitvec& v) {
    z2_echelon ech;
    for (const bitvec& row : r.rows) ech.insert(row);
    bitvec probe = v;
    ech.reduce(probe);
    return probe.zero();
}

}  // namespace

TEST_CASE("bit vectors and echelon ranks") {
    bitvec a(130), b(130);
    a.set(0);
    a.set(129);
    b.set(129);
    a ^= b;
    CHECK(a.get(0));
    CHECK(!a.get(129));
    CHECK(a.lowest() == 0);
    CHECK(bitvec(64).zero());

    z2_echelon ech;
    bitvec r1(4), r2(4), r3(4);
    r1.set(0);
    r1.set(1);
    r2.set(1);
    r2.set(2);
    r3.set(0);
    r3.set(2);
    CHECK(ech.insert(r1));
    CHECK(ech.insert(r2));
    CHECK(!ech.insert(r3));  // dependent
    CHECK(ech.rank() == 2);
}

TEST_CASE("identity relation has full rank") {
    z2_relation id = z2_relation::identity(5);
    CHECK(relation_rank(id) == 5);
    z2_relation comp = compose(id, id);
    CHECK(relation_rank(comp) == 5);
    CHECK(comp.rows.size() == 5);
}

TEST_CASE("showcase barcodes reproduce through the oracle") {
    zigzag_filtration f0 =
        parse_filtration(gztest::read_file(gztest::data_path("showcase_dim0.txt")));
    CHECK(oracle_barcode(f0, 0).same_intervals(
        gztest::make_barcode(0, {{2, 2}, {4, 4}, {6, 8}, {8, 9}, {7, 10}, {1, 10}})));
    zigzag_filtration f1 =
        parse_filtration(gztest::read_file(gztest::data_path("showcase_dim1.txt")));
    CHECK(oracle_barcode(f1, 1).same_intervals(
        gztest::make_barcode(1, {{4, 6}, {2, 8}, {6, 9}, {8, 9}})));
}

TEST_CASE("empty filtration has an empty barcode") {
    zigzag_filtration f;
    CHECK(oracle_barcode(f, 0).intervals.empty());
    CHECK(oracle_barcode(f, 1).intervals.empty());
}

TEST_CASE("index classification of the showcase run") {
    zigzag_filtration f0 =
        parse_filtration(gztest::read_file(gztest::data_path("showcase_dim0.txt")));
    index_classes ic = classify_indices(f0, 0);
    CHECK(ic.positive == std::vector<index_t>{1, 2, 4, 6, 7, 8});
    CHECK(ic.negative == std::vector<index_t>{2, 4, 8, 9, 10, 10});
}

TEST_CASE("add-only runs die only at the end") {
    zigzag_filtration f = parse_filtration("+ v 0\n+ v 1\n+ e 0 1\n+ v 2\n+ e 1 2\n+ e 0 2\n");
    index_classes ic = classify_indices(f, 0);
    for (index_t d : ic.negative) {
        bool at_end = (d == f.size());
        bool merge_death = !at_end;
        CHECK((at_end || merge_death));
    }
    index_classes ic1 = classify_indices(f, 1);
    CHECK(ic1.negative == std::vector<index_t>{6});  // the lone cycle survives
    CHECK(ic1.positive == std::vector<index_t>{6});
}

TEST_CASE("births and deaths line up with oracle intervals") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        zigzag_filtration f = generate_random(7, 26, seed, static_cast<gen_model>(seed % 3));
        for (int p : {0, 1}) {
            barcode bc = oracle_barcode(f, p);
            index_classes ic = classify_indices(f, p);
            std::vector<index_t> births, deaths;
            for (const interval& iv : bc.intervals) {
                births.push_back(iv.birth);
                deaths.push_back(iv.death);
            }
            std::sort(births.begin(), births.end());
            std::sort(deaths.begin(), deaths.end());
            REQUIRE(births == ic.positive);
            REQUIRE(deaths == ic.negative);
        }
    }
}

TEST_CASE("relation composed with its converse contains the identity on the image") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        zigzag_filtration f = generate_random(6, 18, seed, gen_model::churn);
        for (index_t a = 1; a <= f.size(); ++a) {
            homology_space left(f.snapshot(a - 1), 0);
            homology_space right(f.snapshot(a), 0);
            z2_relation r = induced_relation(left, right,
                                             f.arrows[static_cast<std::size_t>(a - 1)].forward,
                                             0);
            z2_relation rt = transpose(r);
            z2_relation c = compose(r, rt);  // relation on the left factor
            // for every (x, y) in r, (y, y) is in r^T r ... check on the rows
            for (const bitvec& row : r.rows) {
                bitvec img(r.dim_right);
                for (int i = 0; i < r.dim_right; ++i)
                    if (row.get(r.dim_left + i)) img.set(i);
                bitvec pair(2 * r.dim_right);
                for (int i = 0; i < r.dim_right; ++i)
                    if (img.get(i)) {
                        pair.set(i);
                        pair.set(r.dim_right + i);
                    }
                z2_relation rtr = compose(rt, r);
                REQUIRE(contains(rtr, pair));
            }
        }
    }
}

TEST_CASE("interval counts are monotone under window containment") {
    for (std::uint64_t seed = 30; seed < 42; ++seed) {
        zigzag_filtration f = generate_random(6, 20, seed, gen_model::dynamic_er);
        barcode bc = oracle_barcode(f, 0);
        auto r = [&](index_t i, index_t j) {
            index_t c = 0;
            for (const interval& iv : bc.intervals)
                if (iv.birth <= i && j <= iv.death) ++c;
            return c;
        };
        for (index_t i = 0; i <= f.size(); ++i)
            for (index_t j = i; j <= f.size(); ++j) {
                if (i > 0) CHECK(r(i - 1, j) <= r(i, j));
                if (j < f.size()) CHECK(r(i, j + 1) <= r(i, j));
            }
    }
}

TEST_CASE("betti profiles agree with combinatorial counts on graphs") {
    for (std::uint64_t seed = 60; seed < 72; ++seed) {
        zigzag_filtration f = generate_random(8, 24, seed, gen_model::churn);
        CHECK(betti_profile(f, 0) == component_count_profile(f));
        CHECK(betti_profile(f, 1) == cycle_rank_profile(f));
    }
}

TEST_CASE("triangles kill cycle classes") {
    zigzag_filtration f = parse_filtration(
        "dim 2\n+ v 0\n+ v 1\n+ v 2\n+ e 0 1\n+ e 1 2\n+ e 0 2\n+ t 0 1 2\n");
    std::vector<index_t> b1 = betti_profile(f, 1);
    CHECK(b1 == std::vector<index_t>{0, 0, 0, 0, 0, 0, 1, 0});
    CHECK(oracle_barcode(f, 1).same_intervals(gztest::make_barcode(1, {{6, 6}})));
}

TEST_CASE("oracle guard rejects large instances") {
    zigzag_filtration f = generate_random(5, 30, 1, gen_model::churn);
    guard_limits tight;
    tight.max_arrows = 10;
    CHECK_THROWS_AS(oracle_barcode(f, 0, tight), validation_error);
}
