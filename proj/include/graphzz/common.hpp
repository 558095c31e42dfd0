#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphzz {

using index_t = std::int64_t;   // arrow / filtration indices
using vertex_t = std::int64_t;  // vertex ids as written in files
using weight_t = std::int64_t;  // edge weights (arrow indices, negative for base edges)

// Malformed input text.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Structurally invalid filtration or complex (user input, exit code 1 in the CLI).
struct validation_error : std::runtime_error {
    index_t arrow;  // 1-based offending arrow, 0 if not arrow-specific
    validation_error(index_t arrow_, const std::string& what_)
        : std::runtime_error(arrow_ > 0 ? "arrow " + std::to_string(arrow_) + ": " + what_
                                        : what_),
          arrow(arrow_) {}
};

// Broken internal invariant (a bug, exit code 2 in the CLI).
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what_) : std::logic_error(what_) {}
};

#define GZ_CHECK(cond, msg)                                    \
    do {                                                       \
        if (!(cond)) throw ::graphzz::invariant_error(msg);    \
    } while (0)

}  // namespace graphzz
