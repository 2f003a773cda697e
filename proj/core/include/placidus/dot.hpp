#pragma once

#include "gsn.hpp"
#include "vgsn.hpp"

#include <string>

namespace placidus
{

// Graphviz rendering, one DOT node per AC node in preorder. Goals with a
// development are boxes, evidence nodes ellipses, undeveloped goals carry a
// diamond marker. With a report, node outlines are coloured by status.
[[nodiscard]] std::string render_dot( const GsnNode& root, const DeductiveReport* report = nullptr );

// As above; each label ends with the node's presence condition in brackets.
[[nodiscard]] std::string render_dot( const PlAc& ac, const VDeductiveReport* report = nullptr );

} // namespace placidus
