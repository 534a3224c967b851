#ifndef RAMSEG_EXPORT_HPP
#define RAMSEG_EXPORT_HPP

#include <optional>
#include <ostream>
#include <string>

#include "ramseg/geometry.hpp"
#include "ramseg/graph.hpp"

namespace ramseg {

/// Undirected DOT graph with nodes named 1..n.
void write_dot(std::ostream& os, const LabeledGraph& g, const std::string& name = "G");

/// SVG 1.1 drawing of the segments, labelled 1..n, with an optional
/// transversal. The y-axis is stretched independently of x so that
/// flattened arrangements stay legible; the factor is recorded in a comment.
void write_svg(std::ostream& os, const NumericArrangement& arr, const std::optional<StabLine>& line = {},
               const std::string& title = "");

}  // namespace ramseg

#endif
