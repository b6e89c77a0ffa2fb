#include "viracomb/particles.hpp"

#include "viracomb/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace viracomb {

namespace {

std::vector<int> window(const HalfPath& path) {
    int len = static_cast<int>(path.H.size()) + 2 * path.T + 8;
    std::vector<int> H(len);
    for (int i = 0; i < len; ++i) H[i] = height(path, i);
    return H;
}

struct Turn {
    int x;
    bool peak;
};

HalfPath from_steps(int T, const std::vector<int>& st) {
    std::vector<int> H{2};
    for (int s : st) H.push_back(H.back() + s);
    while ((H.size() - 1) % 2) H.push_back(half_tail_height(2, static_cast<int>(H.size())));
    return make_half(T, 2, 2, std::move(H));
}

}  // namespace

Dissection dissect(const HalfPath& path) {
    require(path.A == 2 && path.B == 2, "dissection is defined for A = B = 2");
    auto bad = validate(path);
    require(!bad, "invalid half-lattice path" + (bad ? ": " + bad->what : std::string()));
    const int T = path.T;
    const int L = path.L2();
    const auto H = window(path);
    const int len = static_cast<int>(H.size());

    std::vector<Turn> tp{{0, false}};
    for (int i = 1; i + 1 < len; ++i) {
        if (H[i - 1] < H[i] && H[i] > H[i + 1]) tp.push_back({i, true});
        else if (H[i - 1] > H[i] && H[i] < H[i + 1]) tp.push_back({i, false});
    }
    while (tp.back().peak) tp.pop_back();
    const int nt = static_cast<int>(tp.size());

    std::vector<bool> alive(nt, true);
    std::vector<int> charge(nt, 0);
    for (int d = 1; d <= T - 2; ++d) {
        for (bool changed = true; changed;) {
            changed = false;
            for (int j = nt - 1; j >= 0; --j) {
                if (!tp[j].peak || !alive[j]) continue;
                int l = j - 1;
                while (l >= 0 && !(alive[l] && !tp[l].peak)) --l;
                int r = j + 1;
                while (r < nt && !(alive[r] && !tp[r].peak)) ++r;
                int P = H[tp[j].x];
                int v;
                if (r < nt && P - H[tp[r].x] == d) v = r;
                else if (l >= 0 && P - H[tp[l].x] == d) v = l;
                else continue;
                if (r >= nt && d > 1) continue;
                charge[j] = d;
                alive[j] = alive[v] = false;
                changed = true;
            }
        }
    }

    Dissection out;
    out.sector = zero_sector(T);
    for (int j = 0; j < nt; ++j) {
        if (!tp[j].peak) continue;
        int x = tp[j].x;
        if (!charge[j]) {
            if (x > L) continue;
            throw StructuralError("peak at " + std::to_string(x) + " received no charge");
        }
        Particle pt;
        pt.peak = x;
        pt.height = H[x];
        pt.charge = charge[j];
        pt.base = pt.height - pt.charge;
        pt.origin = x - 1;
        while (pt.origin >= 0 && H[pt.origin] != pt.base) --pt.origin;
        pt.right = x + 1;
        while (pt.right < len && H[pt.right] != pt.base) ++pt.right;
        pt.tail = x > L;
        if (pt.charge >= 2) ++out.sector.n[pt.charge - 2];
        out.particles.push_back(pt);
    }
    return out;
}

HalfPath minimal_path(const Sector& s) {
    check_sector(s);
    std::vector<int> H{2};
    for (int d = s.T - 2; d >= 2; --d) {
        for (int c = 0; c < s.count(d); ++c) {
            for (int i = 0; i < d; ++i) H.push_back(H.back() + 1);
            for (int i = 0; i < d; ++i) H.push_back(H.back() - 1);
        }
    }
    return make_half(s.T, 2, 2, std::move(H));
}

namespace {

struct Plan {
    int target;
    int kind;
};

std::vector<int> steps_of(const HalfPath& path) {
    auto H = window(path);
    std::vector<int> st(H.size() - 1);
    for (size_t i = 0; i + 1 < H.size(); ++i) st[i] = H[i + 1] - H[i];
    return st;
}

// Geometric condition only: bare baseline of length 2d away from the start,
// origin on the slope of a particle of greater charge.
std::optional<int> slope_target(const Dissection& dis, int j) {
    const auto& ps = dis.particles;
    require(j >= 0 && j < static_cast<int>(ps.size()), "particle index out of range");
    const Particle& S = ps[j];
    const int d = S.charge;
    if (S.right - S.origin != 2 * d || S.origin == 0) return std::nullopt;
    int best = -1;
    for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
        if (k == j) continue;
        const Particle& G = ps[k];
        if (G.origin > S.origin || S.origin > G.right || G.base > S.base) continue;
        if (best < 0 || G.base > ps[best].base ||
            (G.base == ps[best].base && G.right - G.origin < ps[best].right - ps[best].origin))
            best = k;
    }
    if (best < 0 || ps[best].charge <= d) return std::nullopt;
    return best;
}

// Lower-charge particles left of S fall outside the move construction,
// which always has S preceded by particles of equal or greater charge.
bool lower_charge_left(const Dissection& dis, int j) {
    const Particle& S = dis.particles[j];
    for (const Particle& P : dis.particles) {
        if (P.peak < S.peak && P.charge < S.charge) return true;
    }
    return false;
}

std::optional<Plan> plan_move(const Dissection& dis, int j) {
    auto g = slope_target(dis, j);
    if (!g || lower_charge_left(dis, j)) return std::nullopt;
    const Particle& S = dis.particles[j];
    const Particle& G = dis.particles[*g];
    if (S.peak < G.peak || S.height <= G.height - 2) return Plan{*g, 1};
    if (S.height == G.height) return Plan{*g, 2};
    ensure(G.height == S.height + 1, "unexpected peak heights for a move");
    return Plan{*g, 3};
}

}  // namespace

MoveStatus move_status(const Dissection& dis, int j) {
    if (!slope_target(dis, j)) return MoveStatus::None;
    return lower_charge_left(dis, j) ? MoveStatus::Excluded : MoveStatus::Permitted;
}

std::optional<int> move_target(const Dissection& dis, int j) {
    auto plan = plan_move(dis, j);
    if (!plan) return std::nullopt;
    return plan->target;
}

std::vector<int> enumerate_moves(const HalfPath& path) {
    auto dis = dissect(path);
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(dis.particles.size()); ++j) {
        if (plan_move(dis, j)) out.push_back(j);
    }
    return out;
}

MoveResult apply_move(const HalfPath& path, int j) {
    const auto dis = dissect(path);
    auto plan = plan_move(dis, j);
    if (!plan) throw InvalidArgument("particle " + std::to_string(j) + " has no permitted move");
    const Particle& S = dis.particles[j];
    const Particle& G = dis.particles[plan->target];
    const int d = S.charge;

    auto st = steps_of(path);
    int new_peak;
    if (plan->kind == 3) {
        ensure(S.peak == G.peak + 2 * d + 1, "half-height move with the wrong peak separation");
        // lower G's peak by one and raise the valley right of S's peak
        st.erase(st.begin() + G.peak - 1, st.begin() + G.peak + 1);
        st.insert(st.begin() + S.peak - 2, {1, -1});
        new_peak = G.peak - 1;
    } else {
        int o = plan->kind == 1 ? S.origin : G.peak - d;
        ensure(o >= 2, "move origin too close to the start");
        for (int i = 0; i < 2 * d; ++i)
            ensure(st[o + i] == (i < d ? 1 : -1), "moving particle is not a bare triangle");
        ensure(st[o - 2] == st[o - 1], "edge pair before the particle is not straight");
        int e = st[o - 1];
        for (int i = 0; i < d; ++i) st[o - 2 + i] = 1;
        for (int i = 0; i < d; ++i) st[o - 2 + d + i] = -1;
        st[o - 2 + 2 * d] = st[o - 1 + 2 * d] = e;
        new_peak = o - 2 + d;
    }

    HalfPath moved = from_steps(path.T, st);
    auto bad = validate(moved);
    ensure(!bad, "move produced an invalid path" + (bad ? ": " + bad->what : std::string()));
    auto after = dissect(moved);
    ensure(after.sector == dis.sector, "move changed the sector");
    ensure(weight(moved) == weight(path) + 1, "move did not add exactly one to the weight");
    for (int k = 0; k < static_cast<int>(after.particles.size()); ++k) {
        if (after.particles[k].peak == new_peak) {
            ensure(after.particles[k].charge == d, "moved particle changed its charge");
            return MoveResult{std::move(moved), k, plan->kind};
        }
    }
    throw StructuralError("moved particle not found after the move");
}

std::vector<HalfPath> generate_sector(const Sector& s, int max_weight) {
    check_sector(s);
    const int T = s.T;
    std::set<HalfPath> out;
    HalfPath base = minimal_path(s);
    if (weight(base) > max_weight) return {};
    auto mv = m_vector(s);

    // Charges are handled from high to low. For charge d the particles (left
    // to right) receive s_1 >= s_2 >= ... moves with s_1 <= m_d.
    std::function<void(const HalfPath&, int)> level;
    std::function<void(const HalfPath&, int, int, int)> part;
    level = [&](const HalfPath& hp, int d) {
        if (weight(hp) > max_weight) return;
        if (d == 0) {
            out.insert(hp);
            return;
        }
        long long bound = d <= T - 3 ? mv[d - 1] : 0;
        part(hp, d, 0, static_cast<int>(bound));
    };
    part = [&](const HalfPath& hp, int d, int i, int prev) {
        std::vector<int> ids;
        auto dis = dissect(hp);
        for (int k = 0; k < static_cast<int>(dis.particles.size()); ++k) {
            if (dis.particles[k].charge == d) ids.push_back(k);
        }
        int limit = d >= 2 ? s.count(d) : static_cast<int>(ids.size());
        level(hp, d - 1);
        if (i >= limit || i >= static_cast<int>(ids.size()) || prev == 0) return;
        HalfPath cur = hp;
        int jj = ids[i];
        for (int k = 1; k <= prev; ++k) {
            auto r = apply_move(cur, jj);
            cur = std::move(r.path);
            jj = r.particle;
            if (weight(cur) > max_weight) break;
            part(cur, d, i + 1, k);
        }
    };
    level(base, T - 2);
    return {out.begin(), out.end()};
}

}  // namespace viracomb
