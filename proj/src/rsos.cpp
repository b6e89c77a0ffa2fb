#include "viracomb/rsos.hpp"

#include "viracomb/errors.hpp"
#include "viracomb/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace viracomb {

void check_model(int p, int pp) {
    require(p > 1 && pp > p, "need 1 < p < p'");
    require(std::gcd(p, pp) == 1, "p and p' must be coprime");
}

bool band_is_dark(int p, int pp, int y) {
    require(y >= 1 && y <= pp - 2, "band floor out of range");
    // smallest r with r*pp >= y*p, then check it lands below (y+1)*p
    long long r = (static_cast<long long>(y) * p + pp - 1) / pp;
    return r >= 1 && r < p && r * pp < static_cast<long long>(y + 1) * p;
}

std::vector<int> dark_floors(int p, int pp) {
    std::vector<int> out;
    for (int r = 1; r < p; ++r) out.push_back(r * pp / p);
    return out;
}

int dark_index(int p, int pp, int b) {
    for (int r = 1; r < p; ++r) {
        if (r * pp / p == b) return r;
    }
    return 0;
}

int rsos_tail_height(int a, int b, int x) {
    int even = ((a - b) % 2 == 0) ? b : b + 1;
    int odd = (even == b) ? b + 1 : b;
    return (x % 2 == 0) ? even : odd;
}

int height(const RsosPath& path, int x) {
    if (x >= 0 && x < static_cast<int>(path.h.size())) return path.h[x];
    return rsos_tail_height(path.a, path.b, x);
}

static void check_endpoints(int p, int pp, int a, int b) {
    check_model(p, pp);
    require(a >= 1 && a <= pp - 1, "start height a out of range");
    require(b >= 1 && b <= pp - 2, "tail height b out of range");
}

RsosPath make_rsos(int p, int pp, int a, int b, std::vector<int> heights) {
    check_endpoints(p, pp, a, b);
    require(!heights.empty(), "empty height sequence");
    int n = static_cast<int>(heights.size());
    require(heights[n - 1] == rsos_tail_height(a, b, n - 1),
            "height sequence does not end on the tail");
    int last_off = -1;
    for (int x = 0; x < n; ++x) {
        if (heights[x] != b && heights[x] != b + 1) last_off = x;
    }
    int L = 0;
    if (last_off >= 0) L = (last_off + 1) % 2 == 0 ? last_off + 1 : last_off + 2;
    std::vector<int> h(L + 1);
    for (int x = 0; x <= L; ++x) h[x] = x < n ? heights[x] : rsos_tail_height(a, b, x);
    RsosPath path{p, pp, a, b, std::move(h)};
    validate(path);
    return path;
}

void validate(const RsosPath& path) {
    check_endpoints(path.p, path.pp, path.a, path.b);
    require(!path.h.empty() && path.h[0] == path.a, "path must start at height a");
    for (size_t x = 0; x < path.h.size(); ++x) {
        require(path.h[x] >= 1 && path.h[x] <= path.pp - 1,
                "height out of range at x=" + std::to_string(x));
        if (x) require(std::abs(path.h[x] - path.h[x - 1]) == 1,
                       "non-unit step at x=" + std::to_string(x));
    }
    require(path.L() % 2 == 0, "stored horizon must be even");
    require(path.h.back() == rsos_tail_height(path.a, path.b, path.L()),
            "path does not join the tail");
}

static Vertex make_vertex(int p, int pp, int x, int left, int mid, int right) {
    int l = mid - left;
    int r = right - mid;
    Shape shape;
    if (l == r) shape = l > 0 ? Shape::StraightUp : Shape::StraightDown;
    else shape = l > 0 ? Shape::Peak : Shape::Valley;
    bool straight = (l == r);
    bool dark = band_is_dark(p, pp, std::min(mid, right));
    Score score = Score::None;
    if (straight == dark) score = l > 0 ? Score::Up : Score::Down;
    return Vertex{x, mid, shape, score};
}

std::vector<Vertex> classify(const RsosPath& path, int horizon) {
    if (horizon < 0) horizon = path.L();
    std::vector<Vertex> out;
    out.reserve(horizon);
    for (int x = 1; x <= horizon; ++x) {
        out.push_back(make_vertex(path.p, path.pp, x, height(path, x - 1), height(path, x),
                                  height(path, x + 1)));
    }
    return out;
}

static void require_finite(const RsosPath& path) {
    if (!dark_index(path.p, path.pp, path.b))
        throw InfiniteWeight("tail height b is not a dark band floor");
}

long long weight(const RsosPath& path) {
    require_finite(path);
    long long w = 0;
    for (const Vertex& v : classify(path)) {
        int twice_u = v.x - v.h + path.a;
        ensure(twice_u % 2 == 0, "odd u at a vertex");
        long long u = twice_u / 2;
        long long vv = v.x - u;
        if (v.score == Score::Up) w += u;
        else if (v.score == Score::Down) w += vv;
    }
    return w;
}

long long weight_edgewise(const RsosPath& path) {
    require_finite(path);
    auto cls = classify(path);
    int n = static_cast<int>(cls.size());
    // suffix counts of up- and down-scoring vertices
    std::vector<long long> up(n + 1, 0), down(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        up[i] = up[i + 1] + (cls[i].score == Score::Up);
        down[i] = down[i + 1] + (cls[i].score == Score::Down);
    }
    long long w = 0;
    for (int i = 0; i < n; ++i) {
        int x = cls[i].x;
        bool se = height(path, x) < height(path, x - 1);
        w += se ? up[i + 1] : down[i + 1];
    }
    return w;
}

int rsos_default_horizon(int pp, int a, int b, int max_weight) {
    return 2 * max_weight + std::abs(a - b) + 2 * pp;
}

namespace {

class RsosSearch {
public:
    RsosSearch(int p, int pp, int a, int b, int n, int horizon)
        : p_(p), pp_(pp), a_(a), b_(b), n_(n), horizon_(horizon) {
        for (int y = 1; y <= pp - 2; ++y) dark_.push_back(band_is_dark(p, pp, y));
    }

    struct State {
        std::vector<int> h;
        long long w;
    };

    // Depth-first search from a prefix. Nodes at depth split_depth are handed
    // to `tasks` instead of being expanded, when tasks is non-null.
    void run(std::vector<int>& h, long long w, std::vector<std::vector<int>>& out,
             int split_depth, std::vector<State>* tasks) const {
        int x = static_cast<int>(h.size()) - 1;
        if (tasks && x == split_depth) {
            tasks->push_back(State{h, w});
            return;
        }
        if (closes(h)) {
            long long ww = w + (x >= 1 ? vertex_weight(h, x, rsos_tail_height(a_, b_, x + 1)) : 0);
            if (ww <= n_) out.push_back(h);
        }
        if (x >= horizon_) return;
        for (int nh : {h[x] - 1, h[x] + 1}) {
            if (nh < 1 || nh > pp_ - 1) continue;
            long long ww = w + (x >= 1 ? vertex_weight(h, x, nh) : 0);
            if (ww > n_) continue;
            h.push_back(nh);
            run(h, ww, out, split_depth, tasks);
            h.pop_back();
        }
    }

private:
    bool in_tail_pair(int v) const { return v == b_ || v == b_ + 1; }

    bool closes(const std::vector<int>& h) const {
        int x = static_cast<int>(h.size()) - 1;
        if (x % 2) return false;
        if (h[x] != rsos_tail_height(a_, b_, x)) return false;
        if (x >= 2 && in_tail_pair(h[x - 1]) && in_tail_pair(h[x - 2])) return false;
        return true;
    }

    long long vertex_weight(const std::vector<int>& h, int x, int next) const {
        int l = h[x] - h[x - 1];
        int r = next - h[x];
        bool straight = (l == r);
        bool dark = dark_[std::min(h[x], next) - 1];
        if (straight != dark) return 0;
        return l > 0 ? (x - h[x] + a_) / 2 : (x + h[x] - a_) / 2;
    }

    int p_, pp_, a_, b_, n_, horizon_;
    std::vector<bool> dark_;
};

}  // namespace

std::vector<RsosPath> enumerate_rsos_horizon(int p, int pp, int a, int b, int max_weight,
                                             int horizon, bool parallel) {
    check_endpoints(p, pp, a, b);
    require(max_weight >= 0, "max weight must be nonnegative");
    if (!dark_index(p, pp, b)) throw InfiniteWeight("tail height b is not a dark band floor");
    RsosSearch search(p, pp, a, b, max_weight, horizon);
    std::vector<std::vector<int>> found;
    std::vector<int> h{a};
    if (!parallel) {
        search.run(h, 0, found, -1, nullptr);
    } else {
        std::vector<RsosSearch::State> tasks;
        int split = std::min(horizon, 12);
        search.run(h, 0, found, split, &tasks);
        std::vector<std::vector<std::vector<int>>> partial(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
            std::vector<int> hh = tasks[i].h;
            search.run(hh, tasks[i].w, partial[i], -1, nullptr);
        }
        for (auto& part : partial) {
            for (auto& v : part) found.push_back(std::move(v));
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<RsosPath> out;
    out.reserve(found.size());
    for (auto& v : found) out.push_back(RsosPath{p, pp, a, b, std::move(v)});
    return out;
}

static std::vector<RsosPath> enumerate_stable(int p, int pp, int a, int b, int max_weight,
                                              bool parallel) {
    int hz = rsos_default_horizon(pp, a, b, max_weight);
    auto first = enumerate_rsos_horizon(p, pp, a, b, max_weight, hz, parallel);
    auto second = enumerate_rsos_horizon(p, pp, a, b, max_weight, hz + 2, parallel);
    ensure(first == second, "RSOS enumeration did not stabilize at the horizon");
    return first;
}

std::vector<RsosPath> enumerate_rsos(int p, int pp, int a, int b, int max_weight) {
    return enumerate_stable(p, pp, a, b, max_weight, true);
}

std::vector<RsosPath> enumerate_rsos_serial(int p, int pp, int a, int b, int max_weight) {
    return enumerate_stable(p, pp, a, b, max_weight, false);
}

QSeries rsos_generating_function(int p, int pp, int a, int b, int order) {
    std::vector<long long> ws;
    for (const auto& path : enumerate_rsos(p, pp, a, b, order)) ws.push_back(weight(path));
    return series_from_weights(ws, order);
}

}  // namespace viracomb
