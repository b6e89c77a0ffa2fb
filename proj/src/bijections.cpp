#include "viracomb/bijections.hpp"

#include "viracomb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace viracomb {

bool is_partition(const Partition& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

long long partition_size(const Partition& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

namespace {

bool scoring(Score s) { return s != Score::None; }

// Scores indexed by x; entry 0 is unused.
std::vector<Score> scores(const RsosPath& path, int horizon) {
    std::vector<Score> out(horizon + 1, Score::None);
    for (const Vertex& v : classify(path, horizon)) out[v.x] = v.score;
    return out;
}

std::vector<int> rsos_heights(const RsosPath& path, int len) {
    len = std::max(len, static_cast<int>(path.h.size()));
    std::vector<int> out(len);
    for (int x = 0; x < len; ++x) out[x] = height(path, x);
    return out;
}

RsosPath canon_rsos(int p, int pp, int a, int b, std::vector<int> v) {
    while ((v.size() - 1) % 2) v.push_back(rsos_tail_height(a, b, static_cast<int>(v.size())));
    return make_rsos(p, pp, a, b, std::move(v));
}

HalfPath canon_half(int T, int A, int B, std::vector<int> v) {
    while ((v.size() - 1) % 2) v.push_back(half_tail_height(B, static_cast<int>(v.size())));
    HalfPath hp = make_half(T, A, B, std::move(v));
    auto bad = validate(hp);
    ensure(!bad, "constructed half path is invalid at index " +
                     std::to_string(bad ? bad->index : 0) + ": " + (bad ? bad->what : ""));
    return hp;
}

std::vector<int> peaks_of(const std::vector<int>& H) {
    std::vector<int> out;
    for (size_t i = 1; i + 1 < H.size(); ++i) {
        if (H[i - 1] < H[i] && H[i] > H[i + 1]) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Inserts (H_j + 1, H_j) after every listed index; repeated indices stack.
std::vector<int> heighten(std::vector<int> H, std::vector<int> at) {
    std::sort(at.rbegin(), at.rend());
    for (int j : at) {
        int v = H[j];
        H.insert(H.begin() + j + 1, {v + 1, v});
    }
    return H;
}

// Removes entries i and i+1 for every listed i.
std::vector<int> lower(const std::vector<int>& H, const std::vector<int>& at) {
    std::vector<bool> drop(H.size(), false);
    for (int i : at) drop[i] = drop[i + 1] = true;
    std::vector<int> out;
    for (size_t i = 0; i < H.size(); ++i) {
        if (!drop[i]) out.push_back(H[i]);
    }
    return out;
}

// Adjacent pairs inside maximal runs of vertices satisfying `want`, formed
// left to right; a leftover vertex sits at the right end of its run.
template <class Want>
std::vector<std::pair<int, int>> run_pairs(const std::vector<Score>& s, Want want) {
    std::vector<std::pair<int, int>> out;
    int start = -1;
    int horizon = static_cast<int>(s.size()) - 1;
    for (int x = 1; x <= horizon + 1; ++x) {
        bool in = x <= horizon && want(s[x]);
        if (in && start < 0) start = x;
        if (!in && start >= 0) {
            for (int y = start; y + 1 < x; y += 2) out.emplace_back(y, y + 1);
            start = -1;
        }
    }
    return out;
}

int count_scoring(const std::vector<Score>& s) {
    return static_cast<int>(std::count_if(s.begin() + 1, s.end(), scoring));
}

// Scoring vertices of h that are peaks.
int scoring_peaks(const RsosPath& path, const std::vector<Score>& s) {
    int m = 0;
    for (int x = 1; x < static_cast<int>(s.size()); ++x) {
        if (scoring(s[x]) && height(path, x - 1) < height(path, x) &&
            height(path, x + 1) < height(path, x))
            ++m;
    }
    return m;
}

// Insert (h_y + delta, h_y) after vertex y so the new pair lies in a light band.
std::vector<int> insert_pair(const RsosPath& path, int y) {
    auto full = rsos_heights(path, y + 3);
    int hy = full[y];
    int delta = hy % 2 ? 1 : -1;
    full.insert(full.begin() + y + 1, {hy + delta, hy});
    return full;
}

}  // namespace

std::vector<int> accretion_vertices(const HalfPath& path) {
    std::vector<int> Hx = path.H;
    Hx.push_back(path.B + 1);
    Hx.push_back(path.B);
    auto pk = peaks_of(Hx);
    std::set<int> ps(pk.begin(), pk.end());
    std::vector<int> acc;
    for (int i = 0; i < static_cast<int>(path.H.size()); i += 2) {
        if (!ps.count(i) && !ps.count(i + 1)) acc.push_back(i);
    }
    std::reverse(acc.begin(), acc.end());
    return acc;
}

Bij1Trace bij1_forward(const RsosPath& h) {
    validate(h);
    const int p = h.p, pp = h.pp, a = h.a, b = h.b;
    require(pp == 2 * p + 1, "first bijection needs p' = 2p+1");
    require(a % 2 == 0 && b % 2 == 0, "first bijection needs even a and b");
    require(a > 1 && b > 1 && b < 2 * p, "endpoint out of range for the first bijection");
    const long long wt = weight(h);

    Bij1Trace tr;
    auto s = scores(h, h.L());
    tr.k = count_scoring(s);
    auto pairs = run_pairs(s, scoring);
    std::reverse(pairs.begin(), pairs.end());  // particle 1 is rightmost
    tr.n = static_cast<int>(pairs.size());
    std::vector<int> drop;
    for (auto [x, x2] : pairs) {
        int nonscoring = 0;
        for (int y = 1; y < x; ++y) nonscoring += !scoring(s[y]);
        tr.lambda.push_back(nonscoring);
        int l = height(h, x - 1), r = height(h, x + 1);
        ensure(l == r, "particle does not start at a peak or valley");
        drop.push_back(x);
    }
    const int n = tr.n, k = tr.k;
    tr.hCut = canon_rsos(p, pp, a, b, lower(h.h, drop));

    auto sc = scores(tr.hCut, tr.hCut.L());
    ensure(count_scoring(sc) == k - 2 * n, "particle removal changed the other scoring vertices");
    for (int x = 1; x + 1 < static_cast<int>(sc.size()); ++x)
        ensure(!(scoring(sc[x]) && scoring(sc[x + 1])), "cut path still has a scoring pair");
    ensure(weight(tr.hCut) == wt - partition_size(tr.lambda) - 1LL * n * (k - n),
           "cut weight differs from the removal formula");

    tr.hHatCut = canon_half(2 * p, a, b, tr.hCut.h);
    ensure(viracomb::weight(tr.hHatCut) == weight(tr.hCut), "shrink changed the weight");
    const int ell = straight_count(tr.hHatCut);
    ensure(ell == 2 * k - 4 * n, "straight count of the cut half path is not 2k-4n");

    for (int i = 1; i <= n; ++i) tr.mu.push_back(tr.lambda[i - 1] + n + 1 - i);
    for (int i = 1; i < n; ++i) ensure(tr.mu[i] < tr.mu[i - 1], "mu parts are not distinct");

    std::vector<int> Hx = tr.hHatCut.H;
    int need = n ? tr.mu[0] : 0;
    auto pk = peaks_of(Hx);
    while (static_cast<int>(pk.size()) < need || Hx.size() < tr.hHatCut.H.size() + 2) {
        Hx.push_back(half_tail_height(b, static_cast<int>(Hx.size())));
        pk = peaks_of(Hx);
    }
    std::vector<int> at;
    for (int m : tr.mu) at.push_back(pk[m - 1]);
    tr.hHat = canon_half(2 * p, a, b, heighten(Hx, at));

    long long hw = viracomb::weight(tr.hHat);
    ensure(hw == viracomb::weight(tr.hHatCut) + 1LL * n * (ell + n - 1) / 2 + partition_size(tr.mu),
           "heightening changed the weight by the wrong amount");
    ensure(hw == wt, "first bijection did not preserve the weight");
    return tr;
}

RsosPath bij1_inverse(const HalfPath& hHat) {
    auto bad = validate(hHat);
    require(!bad, "invalid half-lattice path" + (bad ? ": " + bad->what : std::string()));
    require(hHat.T % 2 == 0, "first bijection inverse needs even T");
    check_half_params(hHat.T, hHat.A, hHat.B);
    const int p = hHat.T / 2, pp = 2 * p + 1, a = hHat.A, b = hHat.B;

    std::vector<int> Hx = hHat.H;
    for (int v : {b + 1, b, b + 1, b}) Hx.push_back(v);
    auto pk = peaks_of(Hx);
    std::vector<int> ints;
    Partition mu;
    for (int j = 0; j < static_cast<int>(pk.size()); ++j) {
        if (Hx[pk[j]] % 2 == 0) {
            ints.push_back(pk[j]);
            mu.push_back(j + 1);
        }
    }
    std::sort(mu.rbegin(), mu.rend());
    const int n = static_cast<int>(mu.size());
    Partition lambda;
    for (int i = 1; i <= n; ++i) lambda.push_back(mu[i - 1] - n - 1 + i);

    RsosPath cur = canon_rsos(p, pp, a, b, lower(Hx, ints));
    for (int i = 0; i < n; ++i) {
        const int want = lambda[i];
        int y = 0;
        if (want > 0) {
            auto s = scores(cur, cur.L() + 2 * want + 4);
            int seen = 0;
            y = -1;
            for (int x = 1; x < static_cast<int>(s.size()) && y < 0; ++x) {
                if (!scoring(s[x]) && ++seen == want) y = x;
            }
            ensure(y >= 0, "no reinsertion point for a particle");
        }
        cur = canon_rsos(p, pp, a, b, insert_pair(cur, y));
    }
    return cur;
}

Bij2Trace bij2_forward(const RsosPath& h) {
    validate(h);
    const int p = h.p, pp = h.pp, a = h.a, b1 = h.b, b = b1 + 1;
    require(pp == 2 * p - 1 && p >= 3, "second bijection needs p' = 2p-1 with p >= 3");
    require(a % 2 == 0 && b % 2 == 0, "second bijection needs even a and odd tail b-1");
    require(a > 1 && a < pp && b < pp, "endpoint out of range for the second bijection");
    const long long wt = weight(h);

    Bij2Trace tr;
    auto s = scores(h, h.L() + 4);
    auto pairs = run_pairs(s, [](Score v) { return !scoring(v); });
    Partition lam;
    for (auto [x, x2] : pairs) {
        int right = 0;
        for (int y = x2 + 1; y < static_cast<int>(s.size()); ++y) right += scoring(s[y]);
        lam.push_back(right);
    }
    int n = 0;
    for (int i = 0; i < static_cast<int>(lam.size()); ++i) {
        if (lam[i] > 0) n = i + 1;
    }
    lam.resize(n);
    tr.n = n;
    tr.lambda = lam;

    auto full = rsos_heights(h, h.L() + 6);
    std::set<int> drop;
    for (int i = 0; i < n; ++i) {
        int x = pairs[i].first;
        if (full[x - 1] == full[x + 1]) {
            drop.insert({x, x + 1});
        } else {
            ensure(full[x] == full[x + 2], "particle has no removable edge pair");
            drop.insert({x + 1, x + 2});
        }
    }
    ensure(static_cast<int>(drop.size()) == 2 * n, "particle removals overlap");
    std::vector<int> cut;
    for (int x = 0; x < static_cast<int>(full.size()); ++x) {
        if (!drop.count(x)) cut.push_back(full[x]);
    }
    tr.hCut = canon_rsos(p, pp, a, b1, cut);
    ensure(weight(tr.hCut) == wt - partition_size(lam), "cut weight differs from the removal formula");

    auto sc = scores(tr.hCut, tr.hCut.L());
    tr.k = count_scoring(sc);
    tr.m = scoring_peaks(tr.hCut, sc);
    const int k = tr.k, m = tr.m;
    for (int i = 1; i <= n; ++i) {
        if (lam[i - 1] - i >= k - m) tr.c = i;
    }
    const int c = tr.c;
    tr.d = n - c;
    for (int i = 1; i <= c; ++i) tr.mu.push_back(lam[i - 1] - i - k + m + 1);
    tr.nu.assign(lam.begin() + c, lam.end());

    const int T = 2 * p - 1;
    std::vector<int> R(tr.hCut.h.rbegin(), tr.hCut.h.rend());
    tr.hHatCut = canon_half(T, b, a, heighten(R, peaks_of(R)));
    ensure(viracomb::weight(tr.hHatCut) == weight(tr.hCut), "flip and shrink changed the weight");
    const int ell = straight_count(tr.hHatCut);
    ensure(ell == 2 * k - 2 * m, "straight count of the cut half path is not 2k-2m");

    std::vector<int> Hx = tr.hHatCut.H;
    Hx.push_back(a + 1);
    Hx.push_back(a);
    auto pkc = peaks_of(Hx);
    std::vector<int> at;
    for (int v : tr.mu) {
        ensure(v >= 1 && v <= static_cast<int>(pkc.size()), "mu part exceeds the peak count");
        at.push_back(pkc[v - 1]);
    }
    tr.hHatInt = canon_half(T, b, a, heighten(Hx, at));
    ensure(viracomb::weight(tr.hHatInt) ==
               viracomb::weight(tr.hHatCut) + 1LL * c * (ell + c - 1) / 2 + partition_size(tr.mu),
           "mu heightening changed the weight by the wrong amount");

    auto acc = accretion_vertices(tr.hHatInt);
    for (int j = 1; j <= static_cast<int>(acc.size()); ++j) {
        int i = acc[j - 1];
        int right = 0;
        for (int q = i + 1; q <= tr.hHatInt.L2(); ++q) right += is_straight(tr.hHatInt, q);
        bool down = height(tr.hHatInt, i - 1) > height(tr.hHatInt, i) &&
                    height(tr.hHatInt, i) > height(tr.hHatInt, i + 1);
        ensure(right == (down ? 2 * j - 1 : 2 * j), "accretion vertex has the wrong straight count");
    }
    std::vector<int> Hi = tr.hHatInt.H;
    Hi.push_back(a + 1);
    Hi.push_back(a);
    at.clear();
    for (int v : tr.nu) {
        ensure(v >= 1 && v <= static_cast<int>(acc.size()), "nu part exceeds the accretion count");
        at.push_back(acc[v - 1]);
    }
    tr.hHat = canon_half(T, b, a, heighten(Hi, at));

    long long hw = viracomb::weight(tr.hHat);
    ensure(hw == viracomb::weight(tr.hHatInt) + partition_size(tr.nu),
           "accretion changed the weight by the wrong amount");
    ensure(hw == wt, "second bijection did not preserve the weight");
    return tr;
}

RsosPath bij2_inverse(const HalfPath& hHat) {
    auto bad = validate(hHat);
    require(!bad, "invalid half-lattice path" + (bad ? ": " + bad->what : std::string()));
    require(hHat.T % 2 == 1, "second bijection inverse needs odd T");
    check_half_params(hHat.T, hHat.A, hHat.B);
    const int T = hHat.T, A = hHat.A, B = hHat.B;
    const int p = (T + 1) / 2, pp = 2 * p - 1, a = B, b1 = A - 1;
    const int L = hHat.L2();

    std::vector<int> Hx = hHat.H;
    for (int v : {B + 1, B, B + 1, B}) Hx.push_back(v);
    std::set<int> odd;
    for (int i : peaks_of(Hx)) {
        if (Hx[i] % 2 && i < L) odd.insert(i);
    }

    // Runs of equal odd peaks two apart. A run that climbs in from one unit
    // below and drops back there carries a mu peak first; everything else
    // in the run came from accretion.
    std::set<int> used, strip;
    std::vector<std::pair<int, int>> bases;  // (first base index, multiplicity)
    for (int i : odd) {
        if (used.count(i)) continue;
        std::vector<int> run{i};
        while (odd.count(run.back() + 2) && Hx[run.back() + 2] == Hx[i]) run.push_back(run.back() + 2);
        used.insert(run.begin(), run.end());
        const int P = Hx[i] - 1;
        bool up = i >= 2 ? Hx[i - 2] == P - 1 : (i == 1 && A + 1 == P - 1);
        bool down = Hx[run.back() + 2] == P - 1;
        size_t first = (up && down && Hx[i - 1] == P) ? 1 : 0;
        if (first < run.size()) {
            for (size_t j = first; j < run.size(); ++j) strip.insert({run[j], run[j] + 1});
            bases.emplace_back(run[first] - 1, static_cast<int>(run.size() - first));
        }
    }
    std::vector<int> Hi;
    for (int i = 0; i < static_cast<int>(Hx.size()); ++i) {
        if (!strip.count(i)) Hi.push_back(Hx[i]);
    }
    HalfPath hint = canon_half(T, A, B, Hi);

    auto acc = accretion_vertices(hint);
    Partition nu;
    for (auto [base, mult] : bases) {
        int shift = static_cast<int>(std::distance(strip.begin(), strip.lower_bound(base)));
        auto it = std::find(acc.begin(), acc.end(), base - shift);
        ensure(it != acc.end(), "accretion insertion does not sit on an accretion vertex");
        nu.insert(nu.end(), mult, static_cast<int>(it - acc.begin()) + 1);
    }
    std::sort(nu.rbegin(), nu.rend());

    std::vector<int> Hx2 = hint.H;
    Hx2.push_back(B + 1);
    Hx2.push_back(B);
    auto pk2 = peaks_of(Hx2);
    std::vector<int> mupk;
    Partition mu;
    for (int j = 0; j < static_cast<int>(pk2.size()); ++j) {
        if (Hx2[pk2[j]] % 2 && pk2[j] < hint.L2()) {
            mupk.push_back(pk2[j]);
            mu.push_back(j + 1);
        }
    }
    std::sort(mu.rbegin(), mu.rend());
    const int c = static_cast<int>(mu.size());
    HalfPath hhc = canon_half(T, A, B, lower(Hx2, mupk));

    std::vector<int> R = lower(hhc.H, peaks_of(hhc.H));
    std::reverse(R.begin(), R.end());
    RsosPath cur = canon_rsos(p, pp, a, b1, R);
    auto sc = scores(cur, cur.L());
    const int k = count_scoring(sc);
    const int m = scoring_peaks(cur, sc);

    Partition lambda;
    for (int i = 1; i <= c; ++i) lambda.push_back(mu[i - 1] + i + k - m - 1);
    lambda.insert(lambda.end(), nu.begin(), nu.end());
    ensure(is_partition(lambda), "recovered lambda is not a partition");

    for (int i = static_cast<int>(lambda.size()) - 1; i >= 0; --i) {
        const int want = lambda[i];
        auto s = scores(cur, cur.L());
        std::vector<int> from_right;
        for (int x = static_cast<int>(s.size()) - 1; x >= 1; --x) {
            if (scoring(s[x])) from_right.push_back(x);
        }
        ensure(want == k || want < static_cast<int>(from_right.size()),
               "no reinsertion point for a particle");
        int y = want == k ? 0 : from_right[want];
        cur = canon_rsos(p, pp, a, b1, insert_pair(cur, y));
    }
    return cur;
}

}  // namespace viracomb
