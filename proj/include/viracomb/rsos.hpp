#pragma once

#include "viracomb/qseries.hpp"

#include <vector>

namespace viracomb {

// RSOS path with start height a and b-tail, heights stored h_0..h_L where L
// is the smallest even index after which the path only visits {b, b+1}.
struct RsosPath {
    int p = 0;
    int pp = 0;
    int a = 0;
    int b = 0;
    std::vector<int> h;

    int L() const { return static_cast<int>(h.size()) - 1; }
    friend bool operator==(const RsosPath&, const RsosPath&) = default;
    friend auto operator<=>(const RsosPath&, const RsosPath&) = default;
};

enum class Shape { Peak, Valley, StraightUp, StraightDown };
enum class Score { None, Up, Down };

struct Vertex {
    int x;
    int h;
    Shape shape;
    Score score;
};

void check_model(int p, int pp);
bool band_is_dark(int p, int pp, int y);
std::vector<int> dark_floors(int p, int pp);

// r with b = floor(r pp / p), or 0 when b is not a dark floor.
int dark_index(int p, int pp, int b);

// Height of the implicit tail at position x.
int rsos_tail_height(int a, int b, int x);
int height(const RsosPath& path, int x);

// Canonical form from a height sequence whose implicit continuation is the
// b-tail. Validates range, unit steps and start height.
RsosPath make_rsos(int p, int pp, int a, int b, std::vector<int> heights);
void validate(const RsosPath& path);

// Vertices 1..horizon (horizon defaults to L, past which no vertex scores).
std::vector<Vertex> classify(const RsosPath& path, int horizon = -1);

long long weight(const RsosPath& path);
long long weight_edgewise(const RsosPath& path);

std::vector<RsosPath> enumerate_rsos(int p, int pp, int a, int b, int max_weight);
std::vector<RsosPath> enumerate_rsos_serial(int p, int pp, int a, int b, int max_weight);
// Single pass at a fixed horizon, no stabilization check.
std::vector<RsosPath> enumerate_rsos_horizon(int p, int pp, int a, int b, int max_weight,
                                             int horizon, bool parallel);
int rsos_default_horizon(int pp, int a, int b, int max_weight);

QSeries rsos_generating_function(int p, int pp, int a, int b, int order);

}  // namespace viracomb
