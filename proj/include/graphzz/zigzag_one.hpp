#pragma once

#include <vector>

#include "graphzz/barcode.hpp"
#include "graphzz/graph_events.hpp"

namespace graphzz {

enum class arrow_class : std::uint8_t { positive, negative, neutral };

// 1-dimensional barcode of a graph filtration. A forward edge whose
// endpoints are already connected opens an interval at its arrow index; a
// backward edge whose endpoints stay connected closes the earliest open
// birth admissible for it, namely the smallest open birth at least
// max(path max weight after the deletion, the edge's own weight). Edge
// weights are insertion arrow indices; initial edges carry distinct negative
// weights so every open birth admits them, and each independent initial
// cycle opens a birth at 0.
barcode compute_barcode1(const graph_event_seq& seq,
                         std::vector<arrow_class>* classes = nullptr);
barcode compute_barcode1(const zigzag_filtration& f,
                         std::vector<arrow_class>* classes = nullptr);

}  // namespace graphzz
