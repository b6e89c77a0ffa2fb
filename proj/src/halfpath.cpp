#include "viracomb/halfpath.hpp"

#include "viracomb/errors.hpp"
#include "viracomb/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace viracomb {

int half_tail_height(int B, int i) { return (i % 2 == 0) ? B : B + 1; }

int height(const HalfPath& path, int i) {
    if (i < 0) return path.A + 1;
    if (i < static_cast<int>(path.H.size())) return path.H[i];
    return half_tail_height(path.B, i);
}

void check_half_params(int T, int A, int B) {
    require(T >= 4, "T = 2t must be at least 4");
    require(A % 2 == 0 && B % 2 == 0, "A and B are doubled heights and must be even");
    if (T % 2 == 0) {
        require(A >= 2 && A <= T, "A out of range");
        require(B >= 2 && B <= T - 2, "B out of range");
    } else {
        require(A >= 2 && A <= T - 1, "A out of range");
        require(B >= 2 && B <= T - 1, "B out of range");
    }
}

std::vector<std::pair<int, int>> half_endpoints(int T) {
    require(T >= 4, "T = 2t must be at least 4");
    int amax = T % 2 == 0 ? T : T - 1;
    int bmax = T % 2 == 0 ? T - 2 : T - 1;
    std::vector<std::pair<int, int>> out;
    for (int A = 2; A <= amax; A += 2) {
        for (int B = 2; B <= bmax; B += 2) out.emplace_back(A, B);
    }
    return out;
}

HalfPath make_half(int T, int A, int B, std::vector<int> heights) {
    require(!heights.empty(), "empty height sequence");
    int n = static_cast<int>(heights.size());
    require(heights[n - 1] == half_tail_height(B, n - 1),
            "height sequence does not end on the tail");
    int last_off = -1;
    for (int i = 0; i < n; ++i) {
        if (heights[i] != B && heights[i] != B + 1) last_off = i;
    }
    int L2 = 0;
    if (last_off >= 0) L2 = (last_off + 1) % 2 == 0 ? last_off + 1 : last_off + 2;
    std::vector<int> H(L2 + 1);
    for (int i = 0; i <= L2; ++i) H[i] = i < n ? heights[i] : half_tail_height(B, i);
    return HalfPath{T, A, B, std::move(H)};
}

std::optional<Violation> validate(const HalfPath& path) {
    const auto& H = path.H;
    if (path.T < 4) return Violation{-1, "T below 4"};
    if (path.A % 2 || path.B % 2) return Violation{-1, "odd endpoint"};
    if (path.B < 2 || path.B + 1 > path.T) return Violation{-1, "tail out of range"};
    if (H.empty() || H[0] != path.A) return Violation{0, "start height differs from A"};
    for (size_t i = 0; i < H.size(); ++i) {
        if (H[i] < 2 || H[i] > path.T) return Violation{static_cast<int>(i), "height out of range"};
        if (i && std::abs(H[i] - H[i - 1]) != 1)
            return Violation{static_cast<int>(i), "non-unit step"};
    }
    int L2 = path.L2();
    if (L2 % 2 || H[L2] != path.B) return Violation{L2, "does not join the tail"};
    if (L2 >= 2 && (H[L2 - 1] == path.B || H[L2 - 1] == path.B + 1) &&
        (H[L2 - 2] == path.B || H[L2 - 2] == path.B + 1))
        return Violation{L2, "not canonical"};
    for (int i = 0; i <= L2; ++i) {
        int m = H[i];
        if (m % 2 && height(path, i - 1) == m + 1 && height(path, i + 1) == m + 1)
            return Violation{i, "valley at half-integer height"};
    }
    return std::nullopt;
}

bool is_straight(const HalfPath& path, int i) { return height(path, i - 1) != height(path, i + 1); }

bool is_peak(const HalfPath& path, int i) {
    int m = height(path, i);
    return height(path, i - 1) < m && height(path, i + 1) < m;
}

bool is_valley(const HalfPath& path, int i) {
    int m = height(path, i);
    return height(path, i - 1) > m && height(path, i + 1) > m;
}

int straight_count(const HalfPath& path) {
    int c = 0;
    for (int i = 0; i <= path.L2(); ++i) c += is_straight(path, i);
    return c;
}

long long raw_weight(const HalfPath& path) {
    long long s = 0;
    for (int i = 0; i <= path.L2(); ++i) {
        if (is_straight(path, i)) s += i;
    }
    return s;
}

HalfPath ground_state(int T, int A, int B) {
    std::vector<int> H{A};
    int step = B > A ? 1 : -1;
    while (H.back() != B) H.push_back(H.back() + step);
    return make_half(T, A, B, std::move(H));
}

long long weight(const HalfPath& path) {
    long long d = raw_weight(path) - raw_weight(ground_state(path.T, path.A, path.B));
    ensure(d >= 0 && d % 4 == 0, "half-lattice weight is not a nonnegative integer");
    return d / 4;
}

long long weight_extended(const HalfPath& path) {
    int e = std::abs(path.A - path.B);
    int step = path.A > path.B ? 1 : -1;
    // j runs over extended positions -e .. L2; height at -e-1 is B+1
    auto g = [&](int j) {
        if (j < -e) return path.B + 1;
        if (j < 0) return path.B + step * (j + e);
        return height(path, j);
    };
    long long s = 0;
    for (int j = -e; j <= path.L2(); ++j) {
        if (g(j - 1) != g(j + 1)) s += j;
    }
    ensure(s >= 0 && s % 4 == 0, "extended weight is not a nonnegative integer");
    return s / 4;
}

int half_default_horizon(int A, int B, int max_weight) {
    return 4 * max_weight + 2 * std::abs(A - B) + 8;
}

namespace {

class HalfSearch {
public:
    HalfSearch(int T, int A, int B, int n, int horizon)
        : T_(T), A_(A), B_(B), horizon_(horizon),
          cap_(4LL * n + raw_weight(ground_state(T, A, B))) {}

    struct State {
        std::vector<int> H;
        long long raw;
    };

    void run(std::vector<int>& H, long long raw, std::vector<std::vector<int>>& out,
             int split_depth, std::vector<State>* tasks) const {
        int i = static_cast<int>(H.size()) - 1;
        if (tasks && i == split_depth) {
            tasks->push_back(State{H, raw});
            return;
        }
        if (closes(H)) {
            long long rr = raw + (prev(H, i - 1) != B_ + 1 ? i : 0);
            if (rr <= cap_) out.push_back(H);
        }
        if (i >= horizon_) return;
        for (int nh : {H[i] - 1, H[i] + 1}) {
            if (nh < 2 || nh > T_) continue;
            int l = prev(H, i - 1);
            if (l == nh && l == H[i] + 1 && H[i] % 2) continue;  // half-integer valley
            long long rr = raw + (l != nh ? i : 0);
            if (rr > cap_) continue;
            H.push_back(nh);
            run(H, rr, out, split_depth, tasks);
            H.pop_back();
        }
    }

private:
    int prev(const std::vector<int>& H, int i) const { return i < 0 ? A_ + 1 : H[i]; }
    bool in_tail_pair(int v) const { return v == B_ || v == B_ + 1; }

    bool closes(const std::vector<int>& H) const {
        int i = static_cast<int>(H.size()) - 1;
        if (i % 2 || H[i] != B_) return false;
        if (i >= 2 && in_tail_pair(H[i - 1]) && in_tail_pair(H[i - 2])) return false;
        return true;
    }

    int T_, A_, B_, horizon_;
    long long cap_;
};

}  // namespace

std::vector<HalfPath> enumerate_half_horizon(int T, int A, int B, int max_weight, int horizon,
                                             bool parallel) {
    check_half_params(T, A, B);
    require(max_weight >= 0, "max weight must be nonnegative");
    HalfSearch search(T, A, B, max_weight, horizon);
    std::vector<std::vector<int>> found;
    std::vector<int> H{A};
    if (!parallel) {
        search.run(H, 0, found, -1, nullptr);
    } else {
        std::vector<HalfSearch::State> tasks;
        search.run(H, 0, found, std::min(horizon, 14), &tasks);
        std::vector<std::vector<std::vector<int>>> partial(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (long k = 0; k < static_cast<long>(tasks.size()); ++k) {
            std::vector<int> hh = tasks[k].H;
            search.run(hh, tasks[k].raw, partial[k], -1, nullptr);
        }
        for (auto& part : partial) {
            for (auto& v : part) found.push_back(std::move(v));
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<HalfPath> out;
    out.reserve(found.size());
    for (auto& v : found) out.push_back(HalfPath{T, A, B, std::move(v)});
    return out;
}

static std::vector<HalfPath> enumerate_stable(int T, int A, int B, int max_weight, bool parallel) {
    int hz = half_default_horizon(A, B, max_weight);
    auto first = enumerate_half_horizon(T, A, B, max_weight, hz, parallel);
    auto second = enumerate_half_horizon(T, A, B, max_weight, hz + 2, parallel);
    ensure(first == second, "half-lattice enumeration did not stabilize at the horizon");
    return first;
}

std::vector<HalfPath> enumerate_half(int T, int A, int B, int max_weight) {
    return enumerate_stable(T, A, B, max_weight, true);
}

std::vector<HalfPath> enumerate_half_serial(int T, int A, int B, int max_weight) {
    return enumerate_stable(T, A, B, max_weight, false);
}

QSeries half_generating_function(int T, int A, int B, int order) {
    std::vector<long long> ws;
    for (const auto& path : enumerate_half(T, A, B, order)) ws.push_back(weight(path));
    return series_from_weights(ws, order);
}

}  // namespace viracomb
