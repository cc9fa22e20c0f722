#include <doctest.h>

#include "cyclic/coach.hpp"
#include "cyclic/residue.hpp"
#include "cyclic/schick.hpp"

using namespace cyclic;

TEST_CASE("sbb cycles") {
    CHECK(sbb_cycle(17, 1).q == std::vector<i64>{1, 15, 13, 9});
    CHECK(sbb_cycle(17, 3).q == std::vector<i64>{3, 11, 5, 7});
    CHECK(sbb_cycle(63, 5).q == std::vector<i64>{5, 53, 43, 23, 17, 29});
    CHECK_THROWS_AS(sbb_cycle(17, 2), std::invalid_argument);
    CHECK_THROWS_AS(sbb_cycle(17, 17), std::invalid_argument);
    CHECK_THROWS_AS(sbb_cycle(15, 5), std::invalid_argument);
}

TEST_CASE("sbb systems") {
    SbbSystem s65 = sbb_system(65);
    CHECK(s65.count == 4);
    CHECK(s65.pes == 6);
    CHECK(s65.cycles[0].q.front() == 1);
    CHECK(s65.cycles[1].q.front() == 3);
    CHECK(s65.cycles[2].q.front() == 7);
    CHECK(s65.cycles[3].q.front() == 11);

    SbbSystem s11 = sbb_system(11);
    CHECK(s11.count == 1);
    CHECK(s11.pes == 5);

    SbbSystem s21 = sbb_system(21);
    CHECK(s21.pes == 6);
    CHECK(s21.cycles[0].q == std::vector<i64>{1, 19, 17, 13, 5, 11});
}

TEST_CASE("signed system reproduces the b = 65 rows") {
    std::vector<SignedCycle> cycles = sbb_signed_system(65);
    REQUIRE(cycles.size() == 4);
    CHECK(cycles[0].q == std::vector<i64>{-1, 63, -61, -57, -49, -33});
    CHECK(cycles[1].q == std::vector<i64>{3, 59, -53, -41, -17, 31});
    CHECK(cycles[2].q == std::vector<i64>{7, 51, -37, -9, 47, -29});
    CHECK(cycles[3].q == std::vector<i64>{11, 43, -21, 23, 19, 27});
}

TEST_CASE("signed system small cases") {
    CHECK(sbb_signed_system(7)[0].q == std::vector<i64>{1, 5, -3});

    // b = 31 is the smallest case where a later seed must stay positive
    // for the sequence to be purely periodic.
    std::vector<SignedCycle> cycles = sbb_signed_system(31);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].q == std::vector<i64>{1, 29, -27, -23, -15});
    CHECK(cycles[1].q == std::vector<i64>{-3, 25, -19, -7, 17});
    CHECK(cycles[2].q == std::vector<i64>{5, 21, -11, 9, 13});
}

TEST_CASE("cycle sums") {
    CHECK(cycle_sum(sbb_cycle(7, 1)) == 9);
    CHECK(cycle_sum(sbb_cycle(17, 1)) == 38);
    CHECK(cycle_sum(sbb_cycle(3, 1)) == 1);
}

TEST_CASE("schick invariants, small sweep") {
    for (i64 b = 3; b <= 301; b += 2) {
        SbbSystem system = sbb_system(b);
        QuasiOrder order = quasi_order(b);
        CHECK(system.pes == order.k);
        CHECK(system.count * system.pes == euler_phi(b) / 2);

        std::vector<i64> merged;
        for (const SbbCycle& cycle : system.cycles) {
            CHECK(cycle.pes() == system.pes);
            merged.insert(merged.end(), cycle.q.begin(), cycle.q.end());
        }
        std::sort(merged.begin(), merged.end());
        CHECK(merged == rrs_odd(b).elements);

        std::vector<SignedCycle> signed_cycles = sbb_signed_system(b);
        REQUIRE(signed_cycles.size() == system.cycles.size());
        for (std::size_t i = 0; i < signed_cycles.size(); ++i) {
            REQUIRE(signed_cycles[i].q.size() == system.cycles[i].q.size());
            for (std::size_t j = 0; j < signed_cycles[i].q.size(); ++j) {
                CHECK(std::abs(signed_cycles[i].q[j]) == system.cycles[i].q[j]);
            }
        }
    }
}
