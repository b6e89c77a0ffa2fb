#include <catch_amalgamated.hpp>

#include "viracomb/characters.hpp"
#include "viracomb/errors.hpp"
#include "viracomb/sector.hpp"

using namespace viracomb;

TEST_CASE("bosonic characters equal known products", "[characters]") {
    CHECK(bosonic_character({2, 5, 1, 2}, 8) == modular_product(5, {1, 4}, 8));
    CHECK(bosonic_character({3, 4, 1, 3}, 16) ==
          modular_product(16, {1, 4, 6, 7, 9, 10, 12, 15}, 16));
}

TEST_CASE("character labels are validated", "[characters]") {
    CHECK_THROWS_AS(bosonic_character({2, 4, 1, 1}, 4), InvalidArgument);
    CHECK_THROWS_AS(bosonic_character({3, 2, 1, 1}, 4), InvalidArgument);
    CHECK_THROWS_AS(bosonic_character({3, 5, 3, 1}, 4), InvalidArgument);
    CHECK_THROWS_AS(bosonic_character({3, 5, 1, 5}, 4), InvalidArgument);
    CHECK_THROWS_AS(bosonic_character({3, 5, 0, 1}, 4), InvalidArgument);
}

TEST_CASE("every character starts at 1 and is nonnegative", "[characters]") {
    auto labels = labels_up_to(12);
    REQUIRE(!labels.empty());
    for (const auto& l : labels) {
        QSeries c = bosonic_character(l, 30);
        INFO("label " << l.p << "," << l.pp << "," << l.r << "," << l.s);
        CHECK(c[0] == 1);
        for (int k = 0; k <= 30; ++k) CHECK(c[k] >= 0);
    }
}

TEST_CASE("fermionic sum equals the bosonic series", "[characters]") {
    CHECK(fermionic_character_12(4, 8) == closed_form_2_5(8));
    CHECK(fermionic_character_12(4, 8) == bosonic_character({2, 5, 1, 2}, 8));
    CHECK(fermionic_character_12(6, 12) == bosonic_character({3, 7, 1, 2}, 12));
    CHECK(fermionic_character_12(7, 12) == bosonic_character({4, 7, 1, 2}, 12));
    CHECK(fermionic_character_12(5, 12) == bosonic_character({3, 5, 1, 2}, 12));
    for (int T = 4; T <= 10; ++T) {
        INFO("T=" << T);
        CHECK(fermionic_character_12(T, 20) == bosonic_character(theorem1_label(T, 1, 1), 20));
    }
    CHECK_THROWS_AS(fermionic_character_12(3, 8), InvalidArgument);
}

TEST_CASE("fermionic serial and parallel kernels agree", "[characters]") {
    for (int T = 4; T <= 10; ++T)
        CHECK(fermionic_character_12(T, 25) == fermionic_character_12_serial(T, 25));
}

TEST_CASE("fermionic labels", "[characters]") {
    CHECK(fermionic_label(4) == CharacterLabel{2, 5, 1, 2});
    CHECK(fermionic_label(7) == CharacterLabel{4, 7, 1, 2});
    CHECK(fermionic_label(5) == CharacterLabel{3, 5, 1, 2});
    CHECK(fermionic_label(10) == CharacterLabel{5, 11, 1, 2});
}

TEST_CASE("half-lattice character labels", "[characters]") {
    CHECK(theorem1_label(10, 2, 4) == CharacterLabel{5, 11, 4, 4});
    CHECK(theorem1_label(7, 1, 3) == CharacterLabel{4, 7, 1, 6});
    CHECK(theorem1_label(4, 1, 1) == CharacterLabel{2, 5, 1, 2});
    CHECK_THROWS_AS(theorem1_label(10, 6, 1), InvalidArgument);
    CHECK_THROWS_AS(theorem1_label(10, 1, 5), InvalidArgument);
    CHECK_THROWS_AS(theorem1_label(7, 4, 1), InvalidArgument);
    CHECK_THROWS_AS(theorem1_label(7, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(theorem1_label(3, 1, 1), InvalidArgument);
}

TEST_CASE("symmetry identities", "[characters]") {
    for (const auto& check : verify_symmetries({2, 5, 1, 2}, 30)) CHECK(check.pass);
    auto checks = verify_symmetries({4, 9, 3, 8}, 30);
    REQUIRE(checks.size() == 2);
    for (const auto& check : checks) CHECK(check.pass);
    CHECK(bosonic_character({3, 4, 1, 3}, 30) == bosonic_formula(4, 3, 3, 1, 30));
}

TEST_CASE("closed forms", "[characters]") {
    CHECK(closed_form_2_5(30) == bosonic_character({2, 5, 1, 2}, 30));
    CHECK(closed_form_3_7(30) == bosonic_character({3, 7, 1, 2}, 30));
    CHECK(closed_form_3_4(30) == bosonic_character({3, 4, 1, 3}, 30));
    CHECK(closed_form_4_7(30) == bosonic_character({4, 7, 1, 2}, 30));
}

TEST_CASE("diagonal sector bound loses no term", "[characters]") {
    for (int T = 4; T <= 10; ++T) {
        for (int N : {6, 15, 25}) {
            auto tight = enumerate_sectors(T, N, false);
            auto loose = enumerate_sectors(T, N, true);
            INFO("T=" << T << " N=" << N);
            CHECK(tight == loose);
        }
    }
}
