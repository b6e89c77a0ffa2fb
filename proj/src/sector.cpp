#include "viracomb/sector.hpp"

#include "viracomb/errors.hpp"

#include <cmath>

namespace viracomb {

Sector zero_sector(int T) {
    require(T >= 4, "T = 2t must be at least 4");
    return Sector{T, std::vector<int>(T - 3, 0)};
}

void check_sector(const Sector& s) {
    require(s.T >= 4, "T = 2t must be at least 4");
    require(static_cast<int>(s.n.size()) == s.T - 3, "occupation vector must have T-3 entries");
    for (int v : s.n) require(v >= 0, "occupation numbers must be nonnegative");
}

std::vector<std::vector<long long>> b_matrix(int T) {
    int k = T - 3;
    std::vector<std::vector<long long>> B(k, std::vector<long long>(k));
    for (int a = 0; a < k; ++a) {
        for (int c = 0; c < k; ++c) {
            long long i = std::min(a, c) + 2, j = std::max(a, c) + 2;
            B[a][c] = (i - 1) * j;
        }
    }
    return B;
}

std::vector<std::vector<long long>> cartan_matrix(int T) {
    int k = T - 3;
    std::vector<std::vector<long long>> C(k, std::vector<long long>(k, 0));
    for (int a = 0; a < k; ++a) {
        C[a][a] = 2;
        if (a + 1 < k) C[a][a + 1] = C[a + 1][a] = -1;
    }
    return C;
}

static long long diag_pair(int i, int j) { return static_cast<long long>(i - 1) * j; }

long long minimal_weight(const Sector& s) {
    check_sector(s);
    long long q = 0;
    int top = s.T - 2;
    for (int i = 2; i <= top; ++i) {
        long long ni = s.count(i);
        if (!ni) continue;
        q += ni * ni * diag_pair(i, i);  // doubled diagonal term
        for (int j = i + 1; j <= top; ++j) q += 2 * ni * s.count(j) * diag_pair(i, j);
    }
    return q / 2;
}

std::vector<long long> m_vector(const Sector& s) {
    check_sector(s);
    int top = s.T - 2;
    std::vector<long long> m(top - 1, 0);
    for (int d = 1; d < top; ++d) {
        for (int k = d + 1; k <= top; ++k) m[d - 1] += static_cast<long long>(s.count(k)) * (k - d);
    }
    return m;
}

QSeries sector_gf(const Sector& s, int order) {
    long long q0 = minimal_weight(s);
    if (q0 > order) return QSeries(order);
    auto m = m_vector(s);
    int rem = order - static_cast<int>(q0);
    QSeries term = pochhammer_inverse(static_cast<int>(std::min<long long>(m[0], rem)), rem);
    for (int j = 2; j <= s.T - 3; ++j) {
        long long nj = s.count(j), mj = m[j - 1];
        if (nj == 0 || mj == 0) continue;
        term *= q_binomial(static_cast<int>(nj + mj), static_cast<int>(nj), rem);
    }
    QSeries out(order);
    for (int k = 0; k <= rem; ++k) out[k + static_cast<int>(q0)] = term[k];
    return out;
}

int n2_bound(int max_weight) {
    return static_cast<int>(std::floor(std::sqrt(2.0 * max_weight / 2.0) + 1e-9));
}

namespace {

void extend(int T, int N, bool loose, int j, std::vector<int>& n, std::vector<Sector>& out) {
    int top = T - 2;
    if (j > top) {
        out.push_back(Sector{T, n});
        return;
    }
    int bound = loose ? N
                      : static_cast<int>(std::floor(
                            std::sqrt(2.0 * N / (static_cast<double>(j - 1) * j)) + 1e-9));
    for (int v = 0; v <= bound; ++v) {
        n[j - 2] = v;
        // entries past j are zero here, so this is a lower bound for any completion
        if (minimal_weight(Sector{T, n}) > N) break;
        extend(T, N, loose, j + 1, n, out);
    }
    n[j - 2] = 0;
}

}  // namespace

std::vector<Sector> enumerate_sectors_with_n2(int T, int max_weight, int n2, bool loose) {
    require(T >= 4, "T = 2t must be at least 4");
    std::vector<Sector> out;
    std::vector<int> n(T - 3, 0);
    n[0] = n2;
    if (minimal_weight(Sector{T, n}) > max_weight) return out;
    extend(T, max_weight, loose, 3, n, out);
    return out;
}

std::vector<Sector> enumerate_sectors(int T, int max_weight, bool loose) {
    require(T >= 4, "T = 2t must be at least 4");
    std::vector<Sector> out;
    int b2 = loose ? max_weight : n2_bound(max_weight);
    for (int n2 = 0; n2 <= b2; ++n2) {
        auto part = enumerate_sectors_with_n2(T, max_weight, n2, loose);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace viracomb
