#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphzz/barcode.hpp"
#include "graphzz/filtration.hpp"
#include "graphzz/graph_events.hpp"

namespace graphzz {

// Partition of the q-simplices of a complex into q-connected components:
// maximal classes chained by shared (q-1)-faces. Classes are ordered by
// their smallest member.
std::vector<std::vector<simplex>> q_connected_components(const std::vector<simplex>& complex,
                                                         int q);

// Closure of a q-connected class plus the (q+1)-simplices all of whose
// q-faces lie in the class. Sorted simplex list.
std::vector<simplex> component_closure(const std::vector<simplex>& complex,
                                       const std::vector<simplex>& q_class);

// Filtration restricted to a subcomplex: arrows outside it become no-ops so
// interval endpoints stay in the original coordinates.
struct restricted_filtration {
    const zigzag_filtration* base = nullptr;
    std::vector<simplex> subcomplex;  // sorted
    std::vector<bool> keep;           // per arrow
};
restricted_filtration restrict_filtration(const zigzag_filtration& f,
                                          std::vector<simplex> subcomplex);

// Dual graph of an embedded complex: one vertex per void and per p-simplex,
// one edge per (p-1)-simplex (joining the two sides of that simplex; a
// self-loop when both sides meet the same void).
struct dual_complex {
    index_t num_dual_vertices = 0;
    index_t num_voids = 0;  // dual vertices 0..num_voids-1 are voids
    std::unordered_map<simplex, index_t, simplex_hash> vertex_of;  // p-simplex
    std::unordered_map<simplex, std::pair<index_t, index_t>, simplex_hash>
        edge_of;  // (p-1)-simplex

    bool operator==(const dual_complex&) const = default;
};

// Faces of the planar subdivision of a connected embedded 1-complex by
// rotation-system tracing; exact integer predicates throughout. Faces that
// are filled triangles of the complex become p-simplex dual vertices, every
// other face (including the unbounded one, the face of non-positive signed
// area) becomes a void.
dual_complex planar_dual_graph(const std::vector<simplex>& closure_complex,
                               const std::vector<coord2>& coords);

// Membership-flipped filtration of the dual graph: starts with the full
// dual graph, deletes the dual of every inserted primal simplex and
// vice versa, keeping no-ops so indices are preserved.
graph_event_seq dual_filtration(const restricted_filtration& rf, const dual_complex& dc);

// Codimension-one barcode via the dual filtrations of the (p-1)-connected
// components (p = 2 path: dual graphs traced from the embedding). With
// supplied non-empty, supplied[l] is used for the l-th component instead of
// tracing (the caller-provided route).
barcode compute_codim1(const zigzag_filtration& f,
                       const std::vector<dual_complex>& supplied = {});

// "component / voids N / dualv t A B C ID / duale e A B ID ID" text format,
// one section per (p-1)-connected component.
std::vector<dual_complex> parse_dual_complexes(const std::string& text);
std::string serialize_dual_complexes(const std::vector<dual_complex>& dcs);

// Exact non-crossing check of a straight-line embedding (segments meet only
// at shared endpoints, no vertex inside an edge or a filled triangle).
void validate_embedding(const zigzag_filtration& f);

}  // namespace graphzz
