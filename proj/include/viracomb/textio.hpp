#pragma once

#include "viracomb/halfpath.hpp"
#include "viracomb/rsos.hpp"

#include <string>
#include <variant>

namespace viracomb {

// rsos p=<int> pp=<int> a=<int> b=<int> h=<heights through L>
std::string format_path(const RsosPath& path);
// half T=<int> A=<int> B=<int> H=<doubled heights through 2*Lhat>
std::string format_path(const HalfPath& path);

using AnyPath = std::variant<RsosPath, HalfPath>;

// Parses either line format. The heights are canonicalized and validated;
// malformed text throws InvalidArgument.
AnyPath parse_path(const std::string& line);
RsosPath parse_rsos(const std::string& line);
HalfPath parse_half(const std::string& line);

}  // namespace viracomb
