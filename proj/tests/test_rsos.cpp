#include <catch_amalgamated.hpp>

#include "golden.hpp"
#include "viracomb/characters.hpp"
#include "viracomb/errors.hpp"
#include "viracomb/rsos.hpp"

#include <set>

using namespace viracomb;

static std::set<int> scoring(const RsosPath& path, Score kind) {
    std::set<int> out;
    for (const auto& v : classify(path))
        if (v.score == kind) out.insert(v.x);
    return out;
}

TEST_CASE("dark bands", "[rsos]") {
    CHECK(dark_floors(4, 9) == std::vector<int>{2, 4, 6});
    CHECK(dark_floors(4, 7) == std::vector<int>{1, 3, 5});
    CHECK(dark_floors(2, 5) == std::vector<int>{2});
    for (int y = 1; y <= 7; ++y) CHECK(band_is_dark(4, 9, y) == (y == 2 || y == 4 || y == 6));
    CHECK(dark_index(4, 9, 6) == 3);
    CHECK(dark_index(4, 9, 5) == 0);
    CHECK_THROWS_AS(band_is_dark(4, 9, 8), InvalidArgument);
    CHECK_THROWS_AS(check_model(4, 6), InvalidArgument);
    CHECK_THROWS_AS(check_model(5, 4), InvalidArgument);
}

TEST_CASE("running example classification and weight", "[rsos]") {
    RsosPath h = golden::running_rsos();
    CHECK(h.L() == 22);
    CHECK(scoring(h, Score::Down) == std::set<int>{1, 3, 5, 7, 11, 17, 21});
    CHECK(scoring(h, Score::Up) == std::set<int>{4, 12, 14, 18, 20, 22});
    std::vector<long long> contrib;
    for (const auto& v : classify(h)) {
        long long u = (v.x - v.h + h.a) / 2;
        long long w = (v.x + v.h - h.a) / 2;
        CHECK(u + w == v.x);
        if (v.score == Score::Up) contrib.push_back(u);
        if (v.score == Score::Down) contrib.push_back(w);
    }
    CHECK(contrib == std::vector<long long>{0, 0, 3, 1, 1, 2, 9, 9, 6, 11, 11, 9, 12});
    CHECK(weight(h) == 74);
    CHECK(weight_edgewise(h) == 74);
}

TEST_CASE("second example classification and weight", "[rsos]") {
    RsosPath h = golden::second_rsos();
    std::set<int> all = scoring(h, Score::Up);
    for (int x : scoring(h, Score::Down)) all.insert(x);
    CHECK(all == std::set<int>{6, 11, 12, 14, 17, 18, 19, 21, 26, 28, 31, 32});
    CHECK(weight(h) == 112);
    CHECK(weight_edgewise(h) == 112);
}

TEST_CASE("vertex shapes", "[rsos]") {
    auto cls = classify(golden::running_rsos());
    CHECK(cls[0].shape == Shape::StraightDown);
    CHECK(cls[2].shape == Shape::Valley);
    CHECK(cls[3].shape == Shape::Peak);
    CHECK(cls[12].shape == Shape::StraightUp);
}

TEST_CASE("pure tail path has weight zero", "[rsos]") {
    RsosPath h = make_rsos(4, 9, 6, 6, {6});
    CHECK(h.L() == 0);
    CHECK(weight(h) == 0);
    RsosPath g = make_rsos(4, 9, 7, 6, {7, 6});
    CHECK(g.L() == 0);
    CHECK(weight(g) == 0);
}

TEST_CASE("non-dark tail has infinite weight", "[rsos]") {
    RsosPath h = make_rsos(4, 9, 5, 5, {5});
    CHECK_THROWS_AS(weight(h), InfiniteWeight);
    CHECK_THROWS_AS(enumerate_rsos(4, 9, 5, 5, 4), InfiniteWeight);
}

TEST_CASE("path validation", "[rsos]") {
    CHECK_THROWS_AS(make_rsos(4, 9, 8, 6, {8, 6}), InvalidArgument);
    CHECK_THROWS_AS(make_rsos(4, 9, 8, 6, {8, 9, 8, 7, 6}), InvalidArgument);
    CHECK_THROWS_AS(make_rsos(4, 9, 8, 6, {8, 7, 6, 5}), InvalidArgument);
    CHECK_THROWS_AS(make_rsos(4, 9, 8, 6, {}), InvalidArgument);
    CHECK_THROWS_AS(make_rsos(4, 9, 9, 6, {9}), InvalidArgument);
    CHECK_THROWS_AS(make_rsos(4, 9, 8, 8, {8}), InvalidArgument);
}

TEST_CASE("canonical horizon", "[rsos]") {
    RsosPath h = golden::running_rsos();
    std::vector<int> longer = h.h;
    for (int x = h.L() + 1; x <= h.L() + 7; ++x) longer.push_back(rsos_tail_height(8, 6, x));
    CHECK(make_rsos(4, 9, 8, 6, longer) == h);
    CHECK(make_rsos(4, 9, 8, 6, {8, 7, 6, 7, 6}).L() == 2);
}

TEST_CASE("zero order enumeration", "[rsos]") {
    CHECK(enumerate_rsos(4, 9, 8, 6, 0).size() == 1);
    CHECK(rsos_generating_function(4, 9, 8, 6, 0) == QSeries::one(0));
}

TEST_CASE("generating functions equal characters", "[rsos]") {
    CHECK(rsos_generating_function(4, 9, 8, 6, 12) == bosonic_character({4, 9, 3, 8}, 12));
    CHECK(rsos_generating_function(4, 7, 6, 1, 12) == bosonic_character({4, 7, 1, 6}, 12));
    CHECK(rsos_generating_function(2, 5, 2, 2, 12) == bosonic_character({2, 5, 1, 2}, 12));
    CHECK(rsos_generating_function(3, 5, 1, 1, 12) == bosonic_character({3, 5, 1, 1}, 12));
}

TEST_CASE("enumeration weights are bounded and distinct", "[rsos]") {
    auto paths = enumerate_rsos(4, 9, 8, 6, 10);
    std::set<RsosPath> uniq(paths.begin(), paths.end());
    CHECK(uniq.size() == paths.size());
    for (const auto& h : paths) {
        CHECK(weight(h) <= 10);
        CHECK(weight(h) == weight_edgewise(h));
        CHECK(make_rsos(h.p, h.pp, h.a, h.b, h.h) == h);
    }
}

TEST_CASE("serial and parallel rsos enumeration agree", "[rsos]") {
    CHECK(enumerate_rsos(5, 11, 5, 6, 12) == enumerate_rsos_serial(5, 11, 5, 6, 12));
    CHECK(enumerate_rsos(4, 9, 8, 6, 12) == enumerate_rsos_serial(4, 9, 8, 6, 12));
}

TEST_CASE("horizon stabilization is meaningful", "[rsos]") {
    int hz = rsos_default_horizon(9, 8, 6, 12);
    auto a = enumerate_rsos_horizon(4, 9, 8, 6, 12, hz, false);
    CHECK(a == enumerate_rsos_horizon(4, 9, 8, 6, 12, hz + 2, false));
    CHECK(a == enumerate_rsos_horizon(4, 9, 8, 6, 12, hz + 10, true));
    // a horizon too short to reach the weight bound misses paths
    CHECK(enumerate_rsos_horizon(4, 9, 8, 6, 12, 6, false).size() < a.size());
}
