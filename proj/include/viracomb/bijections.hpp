#pragma once

#include "viracomb/halfpath.hpp"
#include "viracomb/rsos.hpp"

#include <vector>

namespace viracomb {

// Weakly decreasing nonnegative parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& parts);
long long partition_size(const Partition& parts);

struct Bij1Trace {
    RsosPath hCut;
    int n = 0;
    int k = 0;  // scoring vertices of h
    Partition lambda;
    Partition mu;
    HalfPath hHatCut;
    HalfPath hHat;
};

struct Bij2Trace {
    RsosPath hCut;
    int n = 0;
    int k = 0;
    int m = 0;
    int c = 0;
    int d = 0;
    Partition lambda;
    Partition mu;
    Partition nu;
    HalfPath hHatCut;
    HalfPath hHatInt;
    HalfPath hHat;
};

// p' = 2p+1, a and b even. Image lies in T = 2p, A = a, B = b.
Bij1Trace bij1_forward(const RsosPath& h);
RsosPath bij1_inverse(const HalfPath& hHat);

// p' = 2p-1, start a even, tail b-1 with b even. Image lies in
// T = 2p-1, A = b, B = a.
Bij2Trace bij2_forward(const RsosPath& h);
RsosPath bij2_inverse(const HalfPath& hHat);

// Even-index vertices of a half path where neither the vertex nor the next
// one is a peak, listed from the right (first entry is accretion vertex 1).
std::vector<int> accretion_vertices(const HalfPath& path);

}  // namespace viracomb
