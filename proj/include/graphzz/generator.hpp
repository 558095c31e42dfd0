#pragma once

#include <cstdint>
#include <string>

#include "graphzz/filtration.hpp"

namespace graphzz {

enum class gen_model { dynamic_er, insert_heavy, churn };

gen_model parse_model(const std::string& name);
std::string model_name(gen_model model);

// Random zigzag graph filtration over vertices 0..n-1. Forward arrows pick
// uniformly among addable simplices (absent vertices and absent edges over
// present endpoints), backward arrows among removable ones (present edges
// and isolated present vertices); the model sets the forward bias and a step
// falls back to the other direction when its class is empty. Deterministic
// in (n, m, seed, model).
zigzag_filtration generate_random(index_t n_vertices, index_t m, std::uint64_t seed,
                                  gen_model model);

// Random zigzag filtration of a triangulated grid with integer coordinates
// (a valid straight-line embedded 2-complex). with_triangles false keeps the
// filtration 2-simplex-free.
zigzag_filtration generate_planar(index_t grid, index_t m, std::uint64_t seed,
                                  bool with_triangles);

}  // namespace graphzz
