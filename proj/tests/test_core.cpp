#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_helpers.hpp"

#include "graphzz/filtration.hpp"
#include "graphzz/generator.hpp"

using namespace graphzz;

TEST_CASE("simplex ids are canonical") {
    CHECK(simplex::edge(3, 1) == simplex::edge(1, 3));
    CHECK(simplex::triangle(5, 2, 9) == simplex::triangle(9, 5, 2));
    CHECK_THROWS_AS(simplex::edge(4, 4), validation_error);
    CHECK_THROWS_AS(simplex::triangle(1, 2, 2), validation_error);
}

TEST_CASE("parse accepts the add-then-remove mirror") {
    const char* text =
        "dim 1\n"
        "+ v 0\n"
        "+ v 1\n"
        "+ e 0 1\n"
        "- e 0 1\n"
        "- v 1\n"
        "- v 0\n";
    zigzag_filtration f = parse_filtration(text);
    CHECK(f.size() == 6);
    CHECK(f.dim == 1);
    CHECK(f.snapshot(6).empty());
}

TEST_CASE("compact arrow forms parse too") {
    zigzag_filtration f = parse_filtration("+v 0\n+v 1\n+e 0 1\n");
    CHECK(f.size() == 3);
}

TEST_CASE("closure violations are rejected with the arrow index") {
    CHECK_THROWS_WITH_AS(parse_filtration("+ e 0 1\n"),
                         doctest::Contains("arrow 1"), validation_error);
    CHECK_THROWS_AS(parse_filtration("+ v 0\n+ v 0\n"), validation_error);   // duplicate add
    CHECK_THROWS_AS(parse_filtration("+ v 0\n- v 1\n"), validation_error);   // delete missing
    CHECK_THROWS_AS(parse_filtration("+ v 0\n+ v 1\n+ e 0 1\n- v 0\n"),
                    validation_error);  // delete with coface
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_filtration("dim 1\n+ q 0\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse after serialize is the identity on filtrations") {
    zigzag_filtration f = generate_random(9, 30, 7, gen_model::churn);
    std::string once = serialize_filtration(f);
    zigzag_filtration g = parse_filtration(once);
    CHECK(serialize_filtration(g) == once);
    CHECK(g.arrows == f.arrows);
}

TEST_CASE("barcode io round-trips and sorts canonically") {
    barcode bc = gztest::make_barcode(0, {{7, 10}, {2, 2}, {1, 10}, {4, 4}, {8, 9}, {6, 8}});
    std::string text = serialize_barcode(bc);
    CHECK(text == "0 1 10\n0 2 2\n0 4 4\n0 6 8\n0 7 10\n0 8 9\n");
    CHECK(parse_barcode(text).same_intervals(bc));
    CHECK(serialize_barcode(barcode{}) == "");
    std::string json = serialize_barcode(bc, barcode_format::json);
    CHECK(json.find("\"dim\":0") != std::string::npos);
}

TEST_CASE("generator is deterministic and valid") {
    zigzag_filtration a = generate_random(12, 40, 42, gen_model::dynamic_er);
    zigzag_filtration b = generate_random(12, 40, 42, gen_model::dynamic_er);
    CHECK(serialize_filtration(a) == serialize_filtration(b));
    a.validate();
    CHECK(a.size() == 40);

    zigzag_filtration c = generate_random(12, 40, 43, gen_model::dynamic_er);
    CHECK(serialize_filtration(a) != serialize_filtration(c));
}

TEST_CASE("generator trivial cases") {
    CHECK(generate_random(5, 0, 7, gen_model::churn).size() == 0);
    zigzag_filtration f = generate_random(1, 2, 1, gen_model::churn);
    REQUIRE(f.size() == 2);
    CHECK(f.arrows[0] == arrow{true, simplex::vertex(0)});
    CHECK(f.arrows[1] == arrow{false, simplex::vertex(0)});
}

TEST_CASE("all generator models emit valid filtrations") {
    for (gen_model model :
         {gen_model::dynamic_er, gen_model::insert_heavy, gen_model::churn}) {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            zigzag_filtration f = generate_random(6, 25, seed, model);
            f.validate();
        }
    }
}

TEST_CASE("planar generator emits valid embedded filtrations") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        zigzag_filtration f = generate_planar(3, 30, seed, true);
        CHECK(f.dim == 2);
        // the parser re-runs closure and embedding validation
        zigzag_filtration g = parse_filtration(serialize_filtration(f));
        CHECK(g.arrows == f.arrows);
    }
}

TEST_CASE("showcase files parse") {
    zigzag_filtration f0 = parse_filtration(gztest::read_file(gztest::data_path("showcase_dim0.txt")));
    CHECK(f0.size() == 10);
    zigzag_filtration f1 = parse_filtration(gztest::read_file(gztest::data_path("showcase_dim1.txt")));
    CHECK(f1.size() == 9);
    CHECK(f1.base.size() == 9);
}
