#include <catch_amalgamated.hpp>

#include "golden.hpp"
#include "viracomb/characters.hpp"
#include "viracomb/errors.hpp"
#include "viracomb/halfpath.hpp"

using namespace viracomb;

TEST_CASE("weighted example", "[halfpath]") {
    HalfPath h = golden::weighted_half();
    CHECK_FALSE(validate(h));
    CHECK(raw_weight(h) == 274);
    CHECK(weight(h) == 66);
    CHECK(weight_extended(h) == 66);
}

TEST_CASE("ground states", "[halfpath]") {
    HalfPath g = ground_state(10, 4, 8);
    CHECK(g.H == std::vector<int>{4, 5, 6, 7, 8});
    CHECK(raw_weight(g) == 10);
    CHECK(weight(g) == 0);
    CHECK(weight_extended(g) == 0);
    HalfPath t = ground_state(8, 6, 6);
    CHECK(t.H == std::vector<int>{6});
    CHECK(raw_weight(t) == 0);
    HalfPath d = ground_state(8, 8, 6);
    CHECK(d.H == std::vector<int>{8, 7, 6});
    CHECK(raw_weight(d) == 1);
}

TEST_CASE("image of the running example", "[halfpath]") {
    HalfPath h = golden::running_half();
    CHECK_FALSE(validate(h));
    CHECK(raw_weight(h) == 297);
    CHECK(weight(h) == 74);
    CHECK(weight_extended(h) == 74);
}

TEST_CASE("image of the second example", "[halfpath]") {
    HalfPath h = golden::second_half();
    CHECK_FALSE(validate(h));
    CHECK(raw_weight(h) == 458);
    CHECK(weight(h) == 112);
    CHECK(weight_extended(h) == 112);
}

TEST_CASE("valleys only at integer heights", "[halfpath]") {
    CHECK_FALSE(validate(make_half(8, 6, 6, {6, 5, 4, 5, 6})));
    CHECK_FALSE(validate(make_half(8, 6, 6, {6, 7, 6, 5, 4, 5, 6})));
    auto bad = validate(make_half(8, 8, 6, {8, 7, 6, 5, 6, 7, 6}));
    REQUIRE(bad);
    CHECK(bad->index == 3);
    auto first = validate(HalfPath{8, 6, 6, {6, 5, 6}});
    REQUIRE(first);
    CHECK(first->index == 1);
}

TEST_CASE("structural violations", "[halfpath]") {
    CHECK(validate(HalfPath{8, 6, 6, {6, 7, 8, 10, 8, 7, 6}}));
    CHECK(validate(HalfPath{8, 6, 6, {4, 5, 6}}));
    CHECK(validate(HalfPath{8, 6, 6, {6, 7, 8, 9, 10, 9, 8, 7, 6}}));
    CHECK(validate(HalfPath{8, 6, 6, {6, 5, 4, 3, 2, 1, 2, 3, 4, 5, 6}}));
    CHECK(validate(HalfPath{8, 6, 6, {6, 7, 6, 7, 6}}));
    CHECK_THROWS_AS(make_half(8, 6, 6, {6, 5}), InvalidArgument);
    CHECK_THROWS_AS(make_half(8, 6, 6, {}), InvalidArgument);
}

TEST_CASE("tail truncation does not change the raw weight", "[halfpath]") {
    HalfPath h = golden::weighted_half();
    std::vector<int> longer = h.H;
    for (int i = h.L2() + 1; i <= h.L2() + 9; ++i) longer.push_back(half_tail_height(8, i));
    CHECK(make_half(10, 4, 8, longer) == h);
    HalfPath raw{10, 4, 8, longer};
    raw.H.resize(longer.size() - 1);
    CHECK(raw_weight(raw) == raw_weight(h));
}

TEST_CASE("parameter domain", "[halfpath]") {
    CHECK_NOTHROW(check_half_params(10, 10, 8));
    CHECK_THROWS_AS(check_half_params(10, 4, 10), InvalidArgument);
    CHECK_THROWS_AS(check_half_params(10, 3, 8), InvalidArgument);
    CHECK_THROWS_AS(check_half_params(7, 8, 2), InvalidArgument);
    CHECK_NOTHROW(check_half_params(7, 6, 6));
    CHECK_THROWS_AS(check_half_params(3, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(enumerate_half(10, 4, 10, 3), InvalidArgument);
    CHECK(half_endpoints(4) == std::vector<std::pair<int, int>>{{2, 2}, {4, 2}});
    CHECK(half_endpoints(7).size() == 9);
}

TEST_CASE("zero order enumeration is the ground state", "[halfpath]") {
    auto paths = enumerate_half(10, 4, 8, 0);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == ground_state(10, 4, 8));
}

TEST_CASE("half-lattice generating functions equal characters", "[halfpath]") {
    CHECK(half_generating_function(4, 2, 2, 10) == bosonic_character({2, 5, 1, 2}, 10));
    CHECK(half_generating_function(7, 2, 6, 10) == bosonic_character({4, 7, 1, 6}, 10));
    CHECK(theorem1_label(7, 1, 3) == CharacterLabel{4, 7, 1, 6});
    CHECK(half_generating_function(10, 4, 8, 10) == bosonic_character({5, 11, 4, 4}, 10));
    CHECK(half_generating_function(8, 8, 6, 10) == bosonic_character({4, 9, 3, 8}, 10));
    CHECK(half_generating_function(8, 8, 6, 10) == rsos_generating_function(4, 9, 8, 6, 10));
}

TEST_CASE("enumerated half paths are valid with matching weights", "[halfpath]") {
    for (auto [A, B] : half_endpoints(7)) {
        for (const auto& h : enumerate_half(7, A, B, 8)) {
            CHECK_FALSE(validate(h));
            CHECK(weight(h) <= 8);
            CHECK(weight(h) == weight_extended(h));
        }
    }
}

TEST_CASE("serial and parallel half enumeration agree", "[halfpath]") {
    CHECK(enumerate_half(10, 2, 2, 12) == enumerate_half_serial(10, 2, 2, 12));
    CHECK(enumerate_half(7, 2, 6, 12) == enumerate_half_serial(7, 2, 6, 12));
}

TEST_CASE("half horizon stabilization is meaningful", "[halfpath]") {
    int hz = half_default_horizon(2, 2, 10);
    auto a = enumerate_half_horizon(8, 2, 2, 10, hz, false);
    CHECK(a == enumerate_half_horizon(8, 2, 2, 10, hz + 2, false));
    CHECK(enumerate_half_horizon(8, 2, 2, 10, 8, false).size() < a.size());
}
