#pragma once
// Worked-example paths shared by the unit tests and the
// acceptance binary.

#include "viracomb/halfpath.hpp"
#include "viracomb/rsos.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace golden {

using namespace viracomb;

inline RsosPath running_rsos() {  // p=4, p'=9, a=8, b=6
    return make_rsos(4, 9, 8, 6, {8, 7, 6, 5, 6, 5, 4, 3, 2, 3, 2, 1, 2, 3, 4, 5, 4, 3,
                                  4, 5, 6, 5, 6, 7, 6, 7, 6});
}

inline std::vector<int> running_cut_heights() {
    return {8, 7, 6, 5, 4, 3, 2, 3, 2, 3, 4, 5, 4, 5, 6, 7, 6, 7, 6};
}

inline HalfPath running_half() {  // image of running_rsos, T=8, A=8, B=6
    return make_half(8, 8, 6, {8, 7, 6, 5, 4, 3, 2, 3, 2, 3, 4, 5, 6, 5, 4, 5, 6, 7, 6, 7, 6, 7, 6,
                               7, 6, 7, 8, 7, 6, 7, 6, 7, 6, 7, 6, 7, 8, 7, 6, 7, 6, 7, 8, 7, 6});
}

inline HalfPath weighted_half() {  // T=10, A=4, B=8, weight 66
    return make_half(10, 4, 8, {4, 3, 2, 3, 2, 3, 4, 5, 6, 5, 4, 5, 6, 7, 8, 9, 8, 9, 10, 9, 8,
                                9, 8, 7, 6, 7, 6, 7, 8, 9, 10, 9, 8, 9, 8, 9, 8});
}

inline RsosPath second_rsos() {  // p=4, p'=7, a=6, b=1
    return make_rsos(4, 7, 6, 1, {6, 5, 6, 5, 6, 5, 4, 3, 4, 3, 4, 5, 4, 3, 2, 1, 2, 3,
                                  2, 3, 4, 5, 6, 5, 6, 5, 4, 3, 2, 1, 2, 3, 2, 1, 2, 1});
}

inline std::vector<int> second_cut_heights() {
    return {6, 5, 4, 5, 4, 3, 2, 3, 2, 3, 4, 5, 4, 3, 2, 3, 2};
}

inline std::vector<int> second_cut_half_heights() {
    return {2, 3, 4, 3, 2, 3, 4, 5, 6, 5, 4, 3, 2, 3, 4, 3, 2, 3, 4, 5, 6, 5, 4, 5, 6};
}

inline std::vector<int> second_int_heights() {
    return {2, 3, 4, 5, 4, 3, 2, 3, 4, 5, 6, 5, 4, 3, 2, 3, 4, 5, 4, 3, 2, 3, 4, 5, 6, 7, 6, 5, 4, 5, 6};
}

inline HalfPath second_half() {  // T=7, A=2, B=6, weight 112
    return make_half(7, 2, 6, {2, 3, 2, 3, 4, 5, 4, 3, 2, 3, 4, 5, 4, 5, 6, 5, 4, 3, 2, 3, 4,
                               5, 4, 3, 2, 3, 2, 3, 2, 3, 4, 5, 6, 7, 6, 7, 6, 5, 4, 5, 6});
}

// Piecewise-linear path through the listed turning points (doubled units).
inline HalfPath through(int T, const std::vector<std::pair<int, int>>& turns) {
    std::vector<int> H{turns.front().second};
    for (size_t k = 1; k < turns.size(); ++k) {
        int step = turns[k].second > turns[k - 1].second ? 1 : -1;
        for (int i = turns[k - 1].first; i < turns[k].first; ++i) H.push_back(H.back() + step);
    }
    return make_half(T, turns.front().second, turns.back().second, H);
}

// Run-length steps such as "U7D7U3D3", starting at doubled height 2.
inline HalfPath from_runs(int T, const std::string& runs) {
    std::vector<int> H{2};
    for (size_t i = 0; i < runs.size();) {
        int dir = runs[i] == 'U' ? 1 : -1;
        size_t j = i + 1;
        while (j < runs.size() && isdigit(static_cast<unsigned char>(runs[j]))) ++j;
        int len = std::stoi(runs.substr(i + 1, j - i - 1));
        for (int k = 0; k < len; ++k) H.push_back(H.back() + dir);
        i = j;
    }
    while ((H.size() - 1) % 2) H.push_back(half_tail_height(2, static_cast<int>(H.size())));
    return make_half(T, 2, 2, H);
}

// Inverse of from_runs over the stored part of the path.
inline std::string format_runs(const HalfPath& path) {
    std::string out;
    for (int i = 1; i <= path.L2();) {
        int dir = path.H[i] - path.H[i - 1];
        int j = i;
        while (j <= path.L2() && path.H[j] - path.H[j - 1] == dir) ++j;
        out += (dir > 0 ? 'U' : 'D') + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline HalfPath dissection_example() {  // T=10
    return through(10, {{0, 2}, {5, 7}, {6, 6}, {9, 9}, {14, 4}, {16, 6}, {18, 4}, {22, 8},
                        {24, 6}, {26, 8}, {32, 2}, {37, 7}, {40, 4}, {43, 7}, {44, 6}, {45, 7},
                        {50, 2}, {51, 3}, {52, 2}});
}

inline std::vector<int> minimal_example_heights() {  // sector (2,1,1,1,0,1,0), T=10
    return {2, 3, 4, 5, 6, 7, 8, 9, 8, 7, 6, 5, 4, 3, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3,
            2, 3, 4, 5, 6, 5, 4, 3, 2, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2};
}

}  // namespace golden
