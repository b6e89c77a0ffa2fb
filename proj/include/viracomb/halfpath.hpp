#pragma once

#include "viracomb/qseries.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace viracomb {

// Half-lattice path in doubled coordinates: index i is position i/2, H[i] is
// twice the height. Stored through the canonical horizon 2*Lhat; beyond it
// the path alternates B (even index), B+1 (odd index).
struct HalfPath {
    int T = 0;
    int A = 0;
    int B = 0;
    std::vector<int> H;

    int L2() const { return static_cast<int>(H.size()) - 1; }
    friend bool operator==(const HalfPath&, const HalfPath&) = default;
    friend auto operator<=>(const HalfPath&, const HalfPath&) = default;
};

struct Violation {
    int index;
    std::string what;
};

// Height at doubled index i, with H[-1] = A+1 and the tail past the end.
int height(const HalfPath& path, int i);
int half_tail_height(int B, int i);

// Parameter domain of the generating-function identity: A, B even,
// 2 <= A <= T and 2 <= B <= T-2 for even T; 2 <= A, B <= T-1 for odd T.
void check_half_params(int T, int A, int B);
// Every (A, B) of that domain, A-major.
std::vector<std::pair<int, int>> half_endpoints(int T);

// Canonical form from a sequence whose continuation is the tail; throws on
// a structurally broken sequence, does not check the valley rule.
HalfPath make_half(int T, int A, int B, std::vector<int> heights);
std::optional<Violation> validate(const HalfPath& path);

bool is_straight(const HalfPath& path, int i);
bool is_peak(const HalfPath& path, int i);
bool is_valley(const HalfPath& path, int i);
int straight_count(const HalfPath& path);

// Sum of doubled positions of straight vertices: 4 times the unnormalized weight.
long long raw_weight(const HalfPath& path);
HalfPath ground_state(int T, int A, int B);
long long weight(const HalfPath& path);
long long weight_extended(const HalfPath& path);

std::vector<HalfPath> enumerate_half(int T, int A, int B, int max_weight);
std::vector<HalfPath> enumerate_half_serial(int T, int A, int B, int max_weight);
std::vector<HalfPath> enumerate_half_horizon(int T, int A, int B, int max_weight, int horizon,
                                             bool parallel);
int half_default_horizon(int A, int B, int max_weight);

QSeries half_generating_function(int T, int A, int B, int order);

}  // namespace viracomb
