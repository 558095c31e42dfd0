#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

enum class simplex_kind : std::uint8_t { vertex = 0, edge = 1, triangle = 2 };

// A vertex, edge or triangle named by its vertex ids. Ids are kept sorted so
// equality and hashing are canonical; edges and triangles require pairwise
// distinct ids.
struct simplex {
    simplex_kind kind = simplex_kind::vertex;
    std::array<vertex_t, 3> v{0, 0, 0};

    static simplex vertex(vertex_t a);
    static simplex edge(vertex_t a, vertex_t b);
    static simplex triangle(vertex_t a, vertex_t b, vertex_t c);

    int dim() const { return static_cast<int>(kind); }
    friend bool operator==(const simplex&, const simplex&) = default;
    friend auto operator<=>(const simplex&, const simplex&) = default;
};

struct simplex_hash {
    std::size_t operator()(const simplex& s) const;
};

struct arrow {
    bool forward = true;  // true: insertion, false: deletion
    simplex s;

    friend bool operator==(const arrow&, const arrow&) = default;
};

struct coord2 {
    vertex_t id = 0;
    std::int64_t x = 0, y = 0;
};

// A zigzag filtration: an optional initial complex (the "base"), then m
// single-simplex insertion/deletion arrows, indexed 1..m. The complex after
// arrow i is G_i; G_0 is the base complex (empty unless declared).
// Immutable after construction; safe to share read-only across threads.
struct zigzag_filtration {
    int dim = 1;  // 1: graphs, 2: embedded complexes
    std::vector<simplex> base;
    std::vector<arrow> arrows;
    std::vector<coord2> coords;  // required for dim 2 duality runs

    index_t size() const { return static_cast<index_t>(arrows.size()); }
    bool has_triangles() const;

    // Replays the filtration and checks simplicial-complex closure at every
    // step: insertions need absent simplices with all proper faces present,
    // deletions need present simplices with no remaining cofaces.
    void validate() const;

    // Complex after arrow i (i in [0, size()]), as a sorted simplex list.
    std::vector<simplex> snapshot(index_t i) const;
};

// v1 text format. Lines, '#' comments ignored:
//   dim D                      (optional, D in {1,2}, default 1)
//   coord ID X Y               (integer coordinates, dim-2 files)
//   base v ID | base e A B | base t A B C     (initial complex)
//   + v ID | - v ID | + e A B | - e A B | + t A B C | - t A B C
// "+v 3" is accepted as a compact form of "+ v 3".
zigzag_filtration parse_filtration(const std::string& text);
std::string serialize_filtration(const zigzag_filtration& f);

}  // namespace graphzz
