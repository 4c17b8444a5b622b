#include "doctest.h"

#include <vector>

#include "yardsale/rng.hpp"

using namespace yardsale;

TEST_CASE("identical seed and run index reproduce identical streams") {
    RngStreams a(0xDEADBEEFCAFEULL, 7);
    RngStreams b(0xDEADBEEFCAFEULL, 7);
    for (int k = 0; k < 1000; ++k) {
        CHECK(a.next_pair() == b.next_pair());
        CHECK(a.next_fraction() == b.next_fraction());
        CHECK(a.next_win_prob() == b.next_win_prob());
        CHECK(a.next_coin() == b.next_coin());
        CHECK(a.next_init() == b.next_init());
    }
}

TEST_CASE("different run index or stream tag gives a different sequence") {
    RngStreams a(42, 0);
    RngStreams b(42, 1);
    int same = 0;
    for (int k = 0; k < 100; ++k) {
        if (a.next_pair() == b.next_pair()) ++same;
    }
    CHECK(same == 0);

    CHECK(RngStreams::derive_seed(42, 0, Stream::pair_draw) !=
          RngStreams::derive_seed(42, 0, Stream::fraction));
    CHECK(RngStreams::derive_seed(42, 0, Stream::pair_draw) !=
          RngStreams::derive_seed(42, 1, Stream::pair_draw));
    CHECK(RngStreams::derive_seed(42, 0, Stream::pair_draw) !=
          RngStreams::derive_seed(43, 0, Stream::pair_draw));
}

TEST_CASE("variates lie strictly inside (0,1)") {
    RngStreams rng(1, 0);
    for (int k = 0; k < 100000; ++k) {
        const double u = rng.next_fraction();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("streams do not interleave: draws on one stream leave others untouched") {
    RngStreams isolated(99, 3);
    std::vector<double> expected;
    for (int k = 0; k < 50; ++k) expected.push_back(isolated.next_coin());

    RngStreams mixed(99, 3);
    for (int k = 0; k < 50; ++k) {
        (void)mixed.next_pair();
        (void)mixed.next_fraction();
        (void)mixed.next_win_prob();
        (void)mixed.next_init();
    }
    for (int k = 0; k < 50; ++k) {
        CHECK(mixed.next_coin() == expected[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("draw counters track per-stream consumption") {
    RngStreams rng(5, 0);
    (void)rng.next_pair();
    (void)rng.next_pair();
    (void)rng.next_coin();
    CHECK(rng.draws(Stream::pair_draw) == 2);
    CHECK(rng.draws(Stream::coin) == 1);
    CHECK(rng.draws(Stream::fraction) == 0);
    CHECK(rng.draws(Stream::win_prob) == 0);
    CHECK(rng.draws(Stream::init) == 0);
}
