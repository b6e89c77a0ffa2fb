#pragma once

#include "viracomb/halfpath.hpp"
#include "viracomb/sector.hpp"

#include <optional>
#include <vector>

namespace viracomb {

// A charged peak. Positions and heights are doubled; charge d is twice the
// real charge, so the baseline sits d below the peak and spans [origin, right].
struct Particle {
    int peak = 0;
    int height = 0;
    int charge = 0;
    int origin = 0;
    int right = 0;
    int base = 0;
    bool tail = false;
};

struct Dissection {
    std::vector<Particle> particles;  // left to right, includes a few tail peaks
    Sector sector;
};

// Paths in T with A = B = 2.
Dissection dissect(const HalfPath& path);

// Triangles of width 2d at height 2, charges decreasing left to right.
HalfPath minimal_path(const Sector& s);

// None: the baseline is not bare or the origin is not on a slope of greater
// charge. Excluded: that geometric condition holds but a particle of lower
// charge lies to the left; the move construction never meets this (charges
// move from high to low, lower ones waiting at the right) and its enactments
// do not apply there.
enum class MoveStatus { None, Permitted, Excluded };
MoveStatus move_status(const Dissection& dis, int j);

// Index of the particle whose slope holds particle j's baseline origin, if
// particle j has a permitted move.
std::optional<int> move_target(const Dissection& dis, int j);
std::vector<int> enumerate_moves(const HalfPath& path);

struct MoveResult {
    HalfPath path;
    int particle = 0;  // index of the moved particle in the new dissection
    int kind = 0;      // 1, 2 or 3
};

// Throws InvalidArgument when particle j has no permitted move. Every move is
// checked to add 1 to the weight and keep the sector and the charge.
MoveResult apply_move(const HalfPath& path, int j);

// All paths of sector s with weight <= max_weight, built from the minimal
// path by partition-indexed move sequences. Sorted.
std::vector<HalfPath> generate_sector(const Sector& s, int max_weight);

}  // namespace viracomb
