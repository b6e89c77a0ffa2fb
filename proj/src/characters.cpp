#include "viracomb/characters.hpp"

#include "viracomb/errors.hpp"
#include "viracomb/parallel.hpp"
#include "viracomb/sector.hpp"

#include <numeric>

namespace viracomb {

void validate(const CharacterLabel& l) {
    require(l.p > 1 && l.pp > l.p, "need 1 < p < p'");
    require(std::gcd(l.p, l.pp) == 1, "p and p' must be coprime");
    require(l.r >= 1 && l.r < l.p, "r out of range");
    require(l.s >= 1 && l.s < l.pp, "s out of range");
}

QSeries bosonic_formula(int p, int pp, int r, int s, int order) {
    QSeries num(order);
    auto e1 = [&](long long k) { return k * k * p * pp + k * (static_cast<long long>(pp) * r - static_cast<long long>(p) * s); };
    auto e2 = [&](long long k) { return (k * p + r) * (k * pp + s); };
    auto add_term = [&](long long k) {
        long long a = e1(k), b = e2(k);
        if (a >= 0 && a <= order) num[static_cast<int>(a)] += 1;
        if (b >= 0 && b <= order) num[static_cast<int>(b)] -= 1;
        return a > order && b > order;
    };
    add_term(0);
    // walk outward until both exponents pass the order twice in a row
    for (int dir : {1, -1}) {
        int beyond = 0;
        for (long long k = dir; beyond < 2; k += dir) {
            beyond = add_term(k) ? beyond + 1 : 0;
        }
    }
    return num * pochhammer_inf_inverse(order);
}

QSeries bosonic_character(const CharacterLabel& l, int order) {
    validate(l);
    return bosonic_formula(l.p, l.pp, l.r, l.s, order);
}

static QSeries sum_slice(int T, int order, int n2) {
    QSeries acc(order);
    for (const Sector& s : enumerate_sectors_with_n2(T, order, n2)) acc += sector_gf(s, order);
    return acc;
}

QSeries fermionic_character_12_serial(int T, int order) {
    require(T >= 4, "T = 2t must be at least 4");
    QSeries acc(order);
    for (const Sector& s : enumerate_sectors(T, order)) acc += sector_gf(s, order);
    return acc;
}

QSeries fermionic_character_12(int T, int order) {
    require(T >= 4, "T = 2t must be at least 4");
    int b2 = n2_bound(order);
    std::vector<QSeries> slices(b2 + 1, QSeries(order));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int n2 = 0; n2 <= b2; ++n2) slices[n2] = sum_slice(T, order, n2);
    QSeries acc(order);
    for (const auto& s : slices) acc += s;  // fixed order keeps the result deterministic
    return acc;
}

CharacterLabel theorem1_label(int T, int aHat, int bHat) {
    require(T >= 4, "T = 2t must be at least 4");
    if (T % 2 == 0) {
        int t = T / 2;
        require(aHat >= 1 && aHat <= t, "aHat out of range");
        require(bHat >= 1 && bHat <= t - 1, "bHat out of range");
        return CharacterLabel{t, 2 * t + 1, bHat, 2 * aHat};
    }
    int top = (T - 1) / 2;  // t - 1/2
    require(aHat >= 1 && aHat <= top, "aHat out of range");
    require(bHat >= 1 && bHat <= top, "bHat out of range");
    return CharacterLabel{(T + 1) / 2, T, aHat, 2 * bHat};
}

CharacterLabel fermionic_label(int T) { return theorem1_label(T, 1, 1); }

static IdentityCheck compare(const std::string& name, const QSeries& a, const QSeries& b) {
    IdentityCheck c{name, true};
    if (auto mm = first_mismatch(a, b)) {
        c.pass = false;
        c.power = mm->power;
        c.left = mm->left;
        c.right = mm->right;
    }
    return c;
}

std::vector<IdentityCheck> verify_symmetries(const CharacterLabel& l, int order) {
    QSeries base = bosonic_character(l, order);
    QSeries reflected = bosonic_character(CharacterLabel{l.p, l.pp, l.p - l.r, l.pp - l.s}, order);
    QSeries swapped = bosonic_formula(l.pp, l.p, l.s, l.r, order);
    return {compare("reflection", base, reflected), compare("swap", base, swapped)};
}

std::vector<CharacterLabel> labels_up_to(int max_pp) {
    std::vector<CharacterLabel> out;
    for (int pp = 3; pp <= max_pp; ++pp) {
        for (int p = 2; p < pp; ++p) {
            if (std::gcd(p, pp) != 1) continue;
            for (int r = 1; r < p; ++r) {
                for (int s = 1; s < pp; ++s) out.push_back(CharacterLabel{p, pp, r, s});
            }
        }
    }
    return out;
}

static QSeries shifted(const QSeries& s, long long shift, int order) {
    QSeries out(order);
    for (long long k = 0; k + shift <= order && k <= s.order(); ++k)
        out[static_cast<int>(k + shift)] = s[static_cast<int>(k)];
    return out;
}

QSeries closed_form_2_5(int order) {
    QSeries acc(order);
    for (long long n = 0; n * n <= order; ++n)
        acc += shifted(pochhammer_inverse(static_cast<int>(n), order), n * n, order);
    return acc;
}

QSeries closed_form_3_7(int order) {
    QSeries acc(order);
    for (long long n2 = 0; 2 * n2 * n2 <= order; ++n2) {
        for (long long n1 = 0; (n1 + n2) * (n1 + n2) + 2 * n2 * n2 <= order; ++n1) {
            long long e = (n1 + n2) * (n1 + n2) + 2 * n2 * n2;
            QSeries t = pochhammer_inverse(static_cast<int>(n1), order) *
                        pochhammer_inverse(static_cast<int>(2 * n2), order);
            acc += shifted(t, e, order);
        }
    }
    return acc;
}

QSeries closed_form_3_4(int order) {
    QSeries acc(order);
    for (long long n = 0; 2 * n * n + 2 * n <= order; ++n)
        acc += shifted(pochhammer_inverse(static_cast<int>(2 * n + 1), order), 2 * n * n + 2 * n,
                       order);
    return acc;
}

QSeries closed_form_4_7(int order) {
    QSeries acc(order);
    for (long long n2 = 0; 6 * n2 * n2 <= order; ++n2) {
        for (long long n1 = 0; (n1 + 2 * n2) * (n1 + 2 * n2) + 2 * n2 * n2 <= order; ++n1) {
            long long e = (n1 + 2 * n2) * (n1 + 2 * n2) + 2 * n2 * n2;
            QSeries t = pochhammer_inverse(static_cast<int>(2 * n1 + 4 * n2), order) *
                        q_binomial(static_cast<int>(n1 + 2 * n2), static_cast<int>(n1), order);
            acc += shifted(t, e, order);
        }
    }
    return acc;
}

}  // namespace viracomb
