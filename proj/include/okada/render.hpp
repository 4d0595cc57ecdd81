#pragma once

// Deterministic SVG and TikZ drawings. Arc diagrams put the positive
// endpoints on a left column numbered bottom to top and the negative ones
// on a right column, with heights in circled labels on the arcs.

#include "okada/arc_diagram.hpp"
#include "okada/fibonacci.hpp"
#include "okada/rewrite.hpp"

#include <string>
#include <string_view>

namespace okada {

enum class Format { svg, tikz };

/// Throws std::invalid_argument for anything but "svg" or "tikz".
Format parse_format(std::string_view name);

std::string render(const ArcDiagram& d, Format f);
std::string render(const HalfArcDiagram& h, Format f);
/// The trapezoid of boxes with the heap's boxes filled in black.
std::string render(const Heap& heap, Format f);
/// Young-Fibonacci lattice from rank 0 up to max_rank, nodes labelled by word and set.
std::string render_yf_hasse(int max_rank, Format f);
/// Dominance order on the rank-N Fibonacci sets.
std::string render_dominance_hasse(int rank, Format f);

}  // namespace okada
