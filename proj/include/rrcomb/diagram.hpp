#ifndef RRCOMB_DIAGRAM_HPP
#define RRCOMB_DIAGRAM_HPP

#include <optional>
#include <string>

#include "rrcomb/durfee.hpp"
#include "rrcomb/partition.hpp"

namespace rrcomb {

inline constexpr int kDiagramWidth = 80;

/// Young diagram, one character per cell. With a decomposition, cells of the
/// first rectangle are '#', of the second '=', everything else 'o'; a '|'
/// closes each rectangle row and a rule of '-' follows each rectangle.
/// Rows wider than max_width end in "...".
std::string render_diagram(const Partition& lambda,
                           const std::optional<DurfeeDecomposition>& d = std::nullopt,
                           int max_width = kDiagramWidth);

}  // namespace rrcomb

#endif  // RRCOMB_DIAGRAM_HPP
