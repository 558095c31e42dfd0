#pragma once

#include <vector>

#include "graphzz/barcode.hpp"
#include "graphzz/filtration.hpp"
#include "graphzz/z2.hpp"

namespace graphzz::oracle {

// Desk-scale ground truth: composes the Z2 relations induced by the arrows
// and counts intervals by inclusion-exclusion over relation ranks. Guarded
// to small instances; every result is self-checked against per-index Betti
// numbers before it is returned.

struct guard_limits {
    index_t max_arrows = 64;
    std::size_t max_simplices = 64;
};

// Homology of one snapshot with a chosen basis, coordinates and
// representatives (dimension 0: component indicators; dimension 1: cycle
// space modulo triangle boundaries).
class homology_space {
public:
    homology_space(const std::vector<simplex>& snapshot, int p);

    int dim() const { return dim_; }
    bitvec coords_of_vertex(vertex_t v) const;
    bitvec coords_of_cycle(const std::vector<simplex>& edges) const;
    // representative of basis class k
    vertex_t rep_vertex(int k) const;
    const std::vector<simplex>& rep_cycle(int k) const;

private:
    int p_;
    int dim_ = 0;
    // dimension 0
    std::vector<vertex_t> verts_;
    std::vector<int> comp_of_;       // per vertex position
    std::vector<vertex_t> comp_rep_;  // per component
    // dimension 1
    std::vector<simplex> edges_;
    std::vector<bitvec> solver_;          // echelon rows with augmentation
    std::vector<int> chosen_;             // fundamental cycle -> basis slot
    std::vector<std::vector<simplex>> gen_cycles_;
    int aug_base_ = 0;  // first augmentation column
    int width_ = 0;     // edge columns plus augmentation columns

    int edge_index(const simplex& e) const;
};

// Relation of H_p across one arrow, from the snapshot before to the one
// after (the graph of the induced map, transposed for deletions).
z2_relation induced_relation(const homology_space& left, const homology_space& right,
                             bool arrow_forward, int p);

barcode oracle_barcode(const zigzag_filtration& f, int p, guard_limits lim = {});

struct index_classes {
    std::vector<index_t> positive, negative;  // sorted multisets
};
index_classes classify_indices(const zigzag_filtration& f, int p, guard_limits lim = {});

// dim H_p(G_i) for i = 0..m via the Z2 machinery
std::vector<index_t> betti_profile(const zigzag_filtration& f, int p);

// combinatorial profiles for graphs, independent of the Z2 machinery:
// component counts and cycle ranks E - V + C
std::vector<index_t> component_count_profile(const zigzag_filtration& f);
std::vector<index_t> cycle_rank_profile(const zigzag_filtration& f);

}  // namespace graphzz::oracle
