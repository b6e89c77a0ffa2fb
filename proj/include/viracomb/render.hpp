#pragma once

#include "viracomb/halfpath.hpp"
#include "viracomb/rsos.hpp"

#include <string>

namespace viracomb {

// Text grid. Vertex rows carry the path vertices ('*' scoring, 'o' other);
// edge rows carry '/' and '\' and are filled with ':' inside dark bands.
std::string render_ascii(const RsosPath& path);
// Half paths mark straight vertices with '*'; with baselines (A = B = 2)
// every particle baseline is drawn with '-'.
std::string render_ascii(const HalfPath& path, bool baselines = false);

std::string render_svg(const RsosPath& path);
std::string render_svg(const HalfPath& path, bool baselines = false);

}  // namespace viracomb
