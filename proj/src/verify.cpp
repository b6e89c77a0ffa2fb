#include "viracomb/verify.hpp"

#include "viracomb/bijections.hpp"
#include "viracomb/characters.hpp"
#include "viracomb/errors.hpp"
#include "viracomb/halfpath.hpp"
#include "viracomb/particles.hpp"
#include "viracomb/rsos.hpp"
#include "viracomb/sector.hpp"
#include "viracomb/parallel.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace viracomb {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Runs `body`, turning library exceptions into a failing report.
template <class Body>
VerifyReport guarded(const std::string& identity, json params, int order, Body body) {
    auto t0 = Clock::now();
    VerifyReport r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = VerifyReport{};
        r.pass = false;
        r.detail = e.what();
    }
    r.identity = identity;
    r.params = std::move(params);
    r.order = order;
    r.seconds = since(t0);
    return r;
}

bool emit(const VerifyReport& r, const ReportSink& sink) {
    sink(r);
    return r.pass;
}

}  // namespace

json VerifyReport::to_json() const {
    json j;
    j["identity"] = identity;
    j["params"] = params;
    j["order"] = order;
    j["status"] = pass ? "pass" : "fail";
    if (!pass) {
        if (power >= 0) {
            j["power"] = power;
            j["left"] = left;
            j["right"] = right;
        }
        if (!detail.empty()) j["detail"] = detail;
    }
    if (!counts.empty()) j["counts"] = counts;
    j["elapsed"] = seconds;
    return j;
}

VerifyReport compare_series(const std::string& identity, json params, int order,
                            const QSeries& left, const QSeries& right) {
    VerifyReport r;
    r.identity = identity;
    r.params = std::move(params);
    r.order = order;
    if (left.order() < order || right.order() < order) {
        r.pass = false;
        r.detail = "series known only through q^" + std::to_string(std::min(left.order(), right.order()));
        return r;
    }
    if (auto mm = first_mismatch(left.truncated(order), right.truncated(order))) {
        r.pass = false;
        r.power = mm->power;
        r.left = str(mm->left);
        r.right = str(mm->right);
    }
    return r;
}

bool verify_rsos_characters(int order, const ReportSink& sink) {
    static const int models[][2] = {{2, 5}, {3, 5}, {3, 7}, {4, 7}, {4, 9}, {5, 9}, {5, 11}};
    bool ok = true;
    for (auto [p, pp] : models) {
        for (int r = 1; r < p; ++r) {
            int b = r * pp / p;
            for (int a = 1; a <= pp - 1; ++a) {
                json params = {{"p", p}, {"pp", pp}, {"a", a}, {"b", b}, {"r", r}};
                ok &= emit(guarded("X=chi", params, order, [&] {
                    auto paths = enumerate_rsos(p, pp, a, b, order);
                    std::vector<long long> ws;
                    long long edge_bad = 0;
                    for (const auto& h : paths) {
                        long long w = weight(h);
                        if (weight_edgewise(h) != w) ++edge_bad;
                        ws.push_back(w);
                    }
                    auto rep = compare_series("X=chi", {}, order, series_from_weights(ws, order),
                                              bosonic_character({p, pp, r, a}, order));
                    rep.counts = {{"paths", paths.size()}};
                    if (edge_bad) {
                        rep.pass = false;
                        rep.detail = std::to_string(edge_bad) + " paths with weight != edgewise weight";
                    }
                    return rep;
                }), sink);
            }
        }
    }
    return ok;
}

bool verify_half_characters(const VerifyOptions& opt, const ReportSink& sink) {
    bool ok = true;
    for (int T = 4; T <= opt.max_t2; ++T) {
        for (auto [A, B] : half_endpoints(T)) {
            CharacterLabel lab = theorem1_label(T, A / 2, B / 2);
            json params = {{"T", T}, {"A", A}, {"B", B},
                           {"label", {lab.p, lab.pp, lab.r, lab.s}}};
            ok &= emit(guarded("Y=chi", params, opt.order, [&] {
                auto paths = enumerate_half(T, A, B, opt.order);
                std::vector<long long> ws;
                long long ext_bad = 0;
                for (const auto& hp : paths) {
                    long long w = weight(hp);
                    if (weight_extended(hp) != w) ++ext_bad;
                    ws.push_back(w);
                }
                auto rep = compare_series("Y=chi", {}, opt.order, series_from_weights(ws, opt.order),
                                          bosonic_character(lab, opt.order));
                rep.counts = {{"paths", paths.size()}};
                if (ext_bad) {
                    rep.pass = false;
                    rep.detail = std::to_string(ext_bad) + " paths with weight != extended weight";
                }
                return rep;
            }), sink);
        }
    }
    return ok;
}

bool verify_theorem1(const VerifyOptions& opt, const ReportSink& sink) {
    bool ok = verify_rsos_characters(opt.order, sink);
    ok &= verify_half_characters(opt, sink);
    return ok;
}

bool verify_theorem2(const VerifyOptions& opt, const ReportSink& sink) {
    bool ok = true;
    for (int T = 4; T <= opt.max_t2; ++T) {
        CharacterLabel lab = fermionic_label(T);
        json params = {{"T", T}, {"label", {lab.p, lab.pp, lab.r, lab.s}}};
        ok &= emit(guarded("fermionic=bosonic", params, opt.order, [&] {
            return compare_series("", {}, opt.order, fermionic_character_12(T, opt.order),
                                  bosonic_character(lab, opt.order));
        }), sink);
    }
    return ok;
}

bool verify_products(int order, const ReportSink& sink) {
    struct Case {
        std::string name;
        CharacterLabel lab;
        std::function<QSeries(int)> series;
    };
    auto prod = [](int mod, std::vector<int> res) {
        return [mod, res](int n) { return modular_product(mod, res, n); };
    };
    std::vector<int> res28;
    for (int k = 1; k < 28; ++k) {
        if (k != 2 && k != 26 && k != 10 && k != 18 && k != 12 && k != 16 && k != 14) res28.push_back(k);
    }
    const std::vector<Case> cases = {
        {"closed form chi(2,5;1,2)", {2, 5, 1, 2}, closed_form_2_5},
        {"closed form chi(3,7;1,2)", {3, 7, 1, 2}, closed_form_3_7},
        {"closed form chi(3,4;1,3)", {3, 4, 1, 3}, closed_form_3_4},
        {"closed form chi(4,7;1,2)", {4, 7, 1, 2}, closed_form_4_7},
        {"product chi(2,5;1,2)", {2, 5, 1, 2}, prod(5, {1, 4})},
        {"product chi(3,7;1,2)", {3, 7, 1, 2}, prod(28, res28)},
        {"product chi(3,4;1,3)", {3, 4, 1, 3}, prod(16, {1, 4, 6, 7, 9, 10, 12, 15})},
    };
    bool ok = true;
    for (const auto& c : cases) {
        json params = {{"label", {c.lab.p, c.lab.pp, c.lab.r, c.lab.s}}};
        ok &= emit(guarded(c.name, params, order, [&] {
            return compare_series("", {}, order, c.series(order), bosonic_character(c.lab, order));
        }), sink);
    }
    return ok;
}

bool verify_symmetries(int order, int max_pp, const ReportSink& sink) {
    bool ok = true;
    for (const auto& lab : labels_up_to(max_pp)) {
        json params = {{"label", {lab.p, lab.pp, lab.r, lab.s}}};
        auto t0 = Clock::now();
        std::vector<IdentityCheck> checks;
        try {
            checks = verify_symmetries(lab, order);
        } catch (const std::exception& e) {
            VerifyReport r;
            r.identity = "symmetries";
            r.params = params;
            r.order = order;
            r.pass = false;
            r.detail = e.what();
            ok &= emit(r, sink);
            continue;
        }
        double dt = since(t0);
        for (const auto& c : checks) {
            VerifyReport r;
            r.identity = c.identity;
            r.params = params;
            r.order = order;
            r.pass = c.pass;
            if (!c.pass) {
                r.power = c.power;
                r.left = str(c.left);
                r.right = str(c.right);
            }
            r.seconds = dt;
            ok &= emit(r, sink);
        }
    }
    return ok;
}

bool verify_bijection_family(int family, int p, int a, int b, int order, const ReportSink& sink) {
    // family 1: P^{p,2p+1}_{a,b} -> H^{p}_{a/2,b/2}
    // family 2: P^{p,2p-1}_{a,b-1} -> H^{p-1/2}_{b/2,a/2}
    const int pp = family == 1 ? 2 * p + 1 : 2 * p - 1;
    const int tail = family == 1 ? b : b - 1;
    const int T = family == 1 ? 2 * p : 2 * p - 1;
    const int A = family == 1 ? a : b;
    const int B = family == 1 ? b : a;
    json params = {{"family", family}, {"p", p}, {"pp", pp}, {"a", a}, {"tail", tail},
                   {"T", T}, {"A", A}, {"B", B}};
    return emit(guarded("bijection", params, order, [&] {
        auto paths = enumerate_rsos(p, pp, a, tail, order);
        const long n = static_cast<long>(paths.size());
        std::vector<HalfPath> images(n);
        std::vector<std::string> errors(n);
        std::vector<char> good(n, 0);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (long i = 0; i < n; ++i) {
            try {
                const RsosPath& h = paths[i];
                HalfPath img = family == 1 ? bij1_forward(h).hHat : bij2_forward(h).hHat;
                RsosPath back = family == 1 ? bij1_inverse(img) : bij2_inverse(img);
                if (weight(img) != weight(h)) errors[i] = "weight changed";
                else if (back != h) errors[i] = "inverse did not recover the path";
                else good[i] = 1;
                images[i] = std::move(img);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        VerifyReport rep;
        for (long i = 0; i < n; ++i) {
            if (!good[i]) {
                rep.pass = false;
                rep.detail = errors[i];
                break;
            }
        }
        std::set<HalfPath> distinct(images.begin(), images.end());
        auto halves = enumerate_half(T, A, B, order);
        std::set<HalfPath> target(halves.begin(), halves.end());
        if (rep.pass && static_cast<long>(distinct.size()) != n) {
            rep.pass = false;
            rep.detail = "forward map is not injective";
        }
        if (rep.pass && distinct != target) {
            rep.pass = false;
            rep.detail = "image set differs from the half-lattice enumeration";
        }
        rep.counts = {{"paths", n}, {"half_paths", halves.size()}};
        return rep;
    }), sink);
}

bool verify_bijections(int order, const ReportSink& sink) {
    bool ok = true;
    for (int p = 2; p <= 4; ++p) {
        for (int a = 2; a <= 2 * p; a += 2) {
            for (int b = 2; b <= 2 * p - 2; b += 2) ok &= verify_bijection_family(1, p, a, b, order, sink);
        }
    }
    for (int p = 3; p <= 4; ++p) {
        for (int a = 2; a <= 2 * p - 2; a += 2) {
            for (int b = 2; b <= 2 * p - 2; b += 2) ok &= verify_bijection_family(2, p, a, b, order, sink);
        }
    }
    return ok;
}

bool verify_sectors(const VerifyOptions& opt, const ReportSink& sink) {
    bool ok = true;
    const int N = opt.order;
    for (int T = 4; T <= opt.max_t2; ++T) {
        json params = {{"T", T}};
        auto sectors = enumerate_sectors(T, N);
        ok &= emit(guarded("sum of sector gfs = Y(1,1)", params, N, [&] {
            QSeries sum(N);
            for (const auto& s : sectors) sum += sector_gf(s, N);
            auto rep = compare_series("", {}, N, sum, half_generating_function(T, 2, 2, N));
            if (rep.pass) rep = compare_series("", {}, N, sum, fermionic_character_12(T, N));
            rep.counts = {{"sectors", sectors.size()}};
            return rep;
        }), sink);

        ok &= emit(guarded("sector grouping", params, N, [&] {
            std::map<std::vector<int>, std::vector<long long>> groups;
            std::map<std::vector<int>, long long> least;
            auto paths = enumerate_half(T, 2, 2, N);
            long long moves = 0, excluded = 0;
            for (const auto& hp : paths) {
                auto dis = dissect(hp);
                auto n = dis.sector.n;
                long long w = weight(hp);
                groups[n].push_back(w);
                if (!least.count(n) || w < least[n]) least[n] = w;
                for (int j = 0; j < static_cast<int>(dis.particles.size()); ++j) {
                    auto status = move_status(dis, j);
                    if (status == MoveStatus::Excluded) ++excluded;
                    if (status != MoveStatus::Permitted) continue;
                    apply_move(hp, j);  // checks +1, sector and charge
                    ++moves;
                }
            }
            VerifyReport rep;
            for (const auto& s : sectors) {
                HalfPath mp = minimal_path(s);
                std::string tag = "sector " + json(s.n).dump();
                if (dissect(mp).sector != s || weight(mp) != minimal_weight(s) ||
                    !groups.count(s.n) || least[s.n] != minimal_weight(s)) {
                    rep.pass = false;
                    rep.detail = tag + ": minimal path mismatch";
                    break;
                }
                auto r2 = compare_series("", {}, N, series_from_weights(groups[s.n], N), sector_gf(s, N));
                if (!r2.pass) {
                    r2.detail = tag;
                    rep = r2;
                    break;
                }
            }
            if (rep.pass && groups.size() != sectors.size()) {
                rep.pass = false;
                rep.detail = "enumeration produced a sector outside the weight bound";
            }
            rep.counts = {{"paths", paths.size()}, {"sectors", groups.size()}, {"moves", moves},
                          {"excluded", excluded}};
            return rep;
        }), sink);
    }
    return ok;
}

std::vector<std::string> suite_names() {
    return {"theorem1", "theorem2", "products", "symmetries", "bijections", "sectors", "all"};
}

bool run_suite(const std::string& name, const VerifyOptions& opt, const ReportSink& sink) {
    require(opt.order >= 0, "order must be nonnegative");
    require(opt.max_t2 >= 4, "--max-t2 must be at least 4");
    if (name == "theorem1") return verify_theorem1(opt, sink);
    if (name == "theorem2") return verify_theorem2(opt, sink);
    if (name == "products") return verify_products(opt.order, sink);
    if (name == "symmetries") return verify_symmetries(opt.order, 12, sink);
    if (name == "bijections") return verify_bijections(opt.order, sink);
    if (name == "sectors") return verify_sectors(opt, sink);
    if (name == "all") {
        bool ok = true;
        for (const auto& s : suite_names()) {
            if (s != "all") ok &= run_suite(s, opt, sink);
        }
        return ok;
    }
    throw InvalidArgument("unknown verify suite '" + name + "'");
}

}  // namespace viracomb
