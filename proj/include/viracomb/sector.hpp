#pragma once

#include "viracomb/qseries.hpp"

#include <vector>

namespace viracomb {

// Occupation vector n = (n_2, ..., n_{T-2}); n[d-2] counts particles of
// doubled charge d.
struct Sector {
    int T = 0;
    std::vector<int> n;

    int count(int d) const { return n[d - 2]; }
    friend bool operator==(const Sector&, const Sector&) = default;
    friend auto operator<=>(const Sector&, const Sector&) = default;
};

Sector zero_sector(int T);
void check_sector(const Sector& s);

// B_ij = (i-1) j for i <= j, indices 2..T-2; returned 0-based.
std::vector<std::vector<long long>> b_matrix(int T);
// Cartan matrix of type A_{T-3}. B inverts it only up to the last diagonal
// entry, which B^{-1} has as (T-3)/(T-2) instead of 2.
std::vector<std::vector<long long>> cartan_matrix(int T);

// (1/2) n B n^T
long long minimal_weight(const Sector& s);

// m_1 .. m_{T-3}; element d-1 holds m_d.
std::vector<long long> m_vector(const Sector& s);

// q^{nBn/2} / (q)_{m_1} * prod_{j=2}^{T-3} [n_j + m_j choose n_j]
QSeries sector_gf(const Sector& s, int order);

// All sectors with minimal weight <= max_weight, lexicographic order.
// `loose` replaces the diagonal bound n_j <= sqrt(2N/((j-1)j)) by n_j <= N.
std::vector<Sector> enumerate_sectors(int T, int max_weight, bool loose = false);

// Same enumeration restricted to a fixed leading entry n_2.
std::vector<Sector> enumerate_sectors_with_n2(int T, int max_weight, int n2, bool loose = false);
int n2_bound(int max_weight);

}  // namespace viracomb
