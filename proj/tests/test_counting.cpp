#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sqw/counting.hpp"
#include "sqw/rng.hpp"

using namespace sqw;

namespace {

DigitSpec random_spec(const FieldCtx& ctx, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<uint64_t>> sets;
    for (unsigned i = 0; i < ctx.r(); ++i)
        sets.push_back(sample_subset(ctx.p(), 1 + rng.bounded(ctx.p()), rng.next()));
    return make_digit_spec(ctx, Basis::polynomial(ctx), std::move(sets));
}

std::vector<uint64_t> full(uint64_t p) {
    std::vector<uint64_t> v(p);
    for (uint64_t i = 0; i < p; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("full digit sets: W = F_q") {
    FieldCtx f(3, 2);
    auto spec = make_digit_spec(f, Basis::polynomial(f), {full(3), full(3)});
    CountReport rep = count_squares_enum(f, spec);
    CHECK(rep.w_size == 9);
    CHECK(rep.squares == 4);  // (q-1)/2
    CHECK(rep.squares_with_zero == 5);
    CHECK(rep.char_sum == 0);
    CHECK(rep.zero_in_w);
    CHECK(rep.deviation_num == 1);
}

TEST_CASE("singleton zero set") {
    FieldCtx f(5, 2);
    auto spec = make_digit_spec(f, Basis::polynomial(f), {{0}, {0}});
    CountReport en = count_squares_enum(f, spec);
    CHECK(en.squares == 0);
    CHECK(en.squares_with_zero == 1);
    CHECK(en.char_sum == 0);
    CountReport id = count_squares_identity(f, spec);
    CHECK(id.squares == 0);
}

TEST_CASE("frozen instance p=5 r=2 D1={1,2} D2={0,3}") {
    FieldCtx f(5, 2);
    auto spec = make_digit_spec(f, Basis::polynomial(f), {{1, 2}, {0, 3}});
    CountReport rep = count_squares_enum(f, spec);
    CHECK(rep.w_size == 4);
    CHECK(rep.squares == 3);
    CHECK(rep.char_sum == 2);
    CHECK_FALSE(rep.zero_in_w);
    // independent path: explicit square-set membership
    oracle::NaiveCount nv = oracle::naive_count(f, spec);
    CHECK(nv.squares == rep.squares);
}

TEST_CASE("identity route equals enumeration route") {
    FieldCtx f(7, 2);
    for (uint64_t s = 0; s < 100; ++s) {
        DigitSpec spec = random_spec(f, s * 31 + 7);
        CountReport en = count_squares_enum(f, spec);
        CountReport id = count_squares_identity(f, spec);
        CHECK(en.squares == id.squares);
        CHECK(en.squares_with_zero == id.squares_with_zero);
        CHECK(en.char_sum == id.char_sum);
        CHECK(en.deviation_num == id.deviation_num);
        // deviation inequality: |squares - w/2| <= 1/2 + |char_sum|/2, exact
        CHECK(int64_t(en.deviation_num) <= 1 + std::abs(en.char_sum));
    }
}

TEST_CASE("counts agree with the square-set oracle") {
    for (auto [p, r] : {std::pair<uint64_t, unsigned>{5, 2}, {7, 2}, {3, 3}}) {
        FieldCtx f(p, r);
        for (uint64_t s = 0; s < 25; ++s) {
            DigitSpec spec = random_spec(f, s * 131 + p);
            CountReport en = count_squares_enum(f, spec);
            oracle::NaiveCount nv = oracle::naive_count(f, spec);
            CHECK(en.w_size == nv.w_size);
            CHECK(en.squares == nv.squares);
            CHECK(en.zero_in_w == nv.zero_in_w);
        }
    }
}

TEST_CASE("complement consistency") {
    FieldCtx f(11, 2);
    for (uint64_t s = 0; s < 20; ++s) {
        DigitSpec spec = random_spec(f, s + 555);
        CountReport en = count_squares_enum(f, spec);
        uint64_t nonsquares = 0;
        for_each_w(f, spec, [&](const FieldElement& x) {
            if (f.quadratic_char(x) < 0) ++nonsquares;
        });
        CHECK(en.squares + nonsquares + (en.zero_in_w ? 1 : 0) == en.w_size);
    }
}
