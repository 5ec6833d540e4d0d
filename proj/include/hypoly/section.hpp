#pragma once

#include <string>

#include "hypoly/specfile.hpp"

namespace hypoly {

/// Renders the planar section {z = z0, t = t0} of a 4-dimensional document as
/// SVG: every sphere side contributes a circle when the section height still
/// cuts it, every plane side a line, and finite vertices lying exactly in the
/// section are marked. Purely presentational; decimal conversion happens only
/// here.
std::string render_section_svg(const SpecDocument& doc, const Polyhedron& poly,
                               const ExactScalar& z0, const ExactScalar& t0);

}  // namespace hypoly
