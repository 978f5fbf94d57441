#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sqw/field.hpp"
#include "sqw/rng.hpp"

using namespace sqw;

TEST_CASE("find_irreducible is deterministic and lexicographically minimal") {
    CHECK(find_irreducible(3, 1) == std::vector<uint64_t>{0, 1});
    CHECK(find_irreducible(3, 2) == std::vector<uint64_t>{1, 0, 1});
    CHECK(find_irreducible(5, 2) == std::vector<uint64_t>{2, 0, 1});
    // frozen by exhaustive scan
    CHECK(find_irreducible(7, 2) == std::vector<uint64_t>{1, 0, 1});
    CHECK(find_irreducible(11, 2) == std::vector<uint64_t>{1, 0, 1});
    CHECK(find_irreducible(13, 2) == std::vector<uint64_t>{2, 0, 1});
    CHECK(find_irreducible(17, 2) == std::vector<uint64_t>{3, 0, 1});
    CHECK(find_irreducible(3, 4) == std::vector<uint64_t>{2, 1, 0, 0, 1});
    CHECK_THROWS_AS(find_irreducible(9, 2), NotPrime);
}

TEST_CASE("make_field validation") {
    FieldCtx f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<uint64_t>{1, 0, 1});
    CHECK_THROWS_AS(FieldCtx(2, 3), EvenCharacteristic);
    CHECK_THROWS_AS(FieldCtx(9, 2), NotPrime);
    // x^2 + 4 = (x-1)(x+1) mod 5
    CHECK_THROWS_AS(FieldCtx(5, 2, std::vector<uint64_t>{4, 0, 1}), NotIrreducible);
    CHECK_NOTHROW(FieldCtx(5, 2, std::vector<uint64_t>{2, 0, 1}));
}

TEST_CASE("basic arithmetic in F_9") {
    FieldCtx f(3, 2);
    FieldElement t = f.gen_t();
    CHECK(f.add(t, f.zero()) == t);
    // modulus x^2+1 forces t*t = -1 = 2
    CHECK(f.mul(t, t) == f.from_prime(2));
    for (uint64_t i = 1; i < f.q(); ++i) {
        FieldElement x = f.element_at(i);
        CHECK(f.mul(x, f.inv(x)) == f.one());
    }
    CHECK_THROWS_AS(f.inv(f.zero()), ZeroInverse);
}

TEST_CASE("pow identities") {
    FieldCtx f(5, 2);
    FieldElement t = f.gen_t();
    CHECK(f.pow(t, 0) == f.one());
    for (uint64_t i = 1; i < f.q(); ++i)
        CHECK(f.pow(f.element_at(i), f.q() - 1) == f.one());
    FieldCtx f5(5, 1);
    CHECK(f5.inv(f5.from_prime(2)) == f5.from_prime(3));
}

TEST_CASE("frobenius") {
    FieldCtx f(5, 2);
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        FieldElement x = f.element_at(rng.bounded(f.q()));
        CHECK(f.frobenius(x, 0) == x);
        CHECK(f.frobenius(x, f.r()) == x);
        FieldElement y = f.element_at(rng.bounded(f.q()));
        // additive and multiplicative
        CHECK(f.frobenius(f.add(x, y), 1) == f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
        CHECK(f.frobenius(f.mul(x, y), 1) == f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
    }
    for (uint64_t c = 0; c < 5; ++c)
        CHECK(f.frobenius(f.from_prime(c), 1) == f.from_prime(c));
}

TEST_CASE("degree_over_prime and conjugacy") {
    FieldCtx f(5, 2);
    CHECK(f.degree_over_prime(f.zero()) == 1);
    for (uint64_t i = 0; i < f.q(); ++i) {
        FieldElement x = f.element_at(i);
        unsigned d = f.degree_over_prime(x);
        CHECK(d == (x.coeffs[1] != 0 ? 2 : 1));
        // orbit size equals the degree
        std::set<uint64_t> orbit;
        for (unsigned k = 0; k < f.r(); ++k) orbit.insert(f.index_of(f.frobenius(x, k)));
        CHECK(orbit.size() == d);
    }
    FieldElement t = f.gen_t();
    CHECK(f.are_conjugate(t, t));
    CHECK(f.are_conjugate(t, f.pow(t, 5)));
    CHECK_FALSE(f.are_conjugate(f.from_prime(1), f.from_prime(2)));
}

TEST_CASE("embedded subfield element of F_81 has degree 2") {
    FieldCtx f(3, 4);
    bool found = false;
    for (uint64_t i = 0; i < f.q() && !found; ++i) {
        FieldElement x = f.element_at(i);
        if (f.frobenius(x, 2) == x && f.frobenius(x, 1) != x) {
            CHECK(f.degree_over_prime(x) == 2);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("quadratic character") {
    FieldCtx f5(5, 1);
    CHECK(f5.quadratic_char(f5.zero()) == 0);
    CHECK(f5.quadratic_char(f5.one()) == 1);
    CHECK(f5.quadratic_char(f5.from_prime(2)) == -1);

    for (auto [p, r] : {std::pair<uint64_t, unsigned>{3, 2}, {5, 2}, {7, 2}, {11, 2}, {5, 3}}) {
        FieldCtx f(p, r);
        // orthogonality and square census, exact
        int64_t sum = 0;
        uint64_t plus = 0;
        for (uint64_t i = 0; i < f.q(); ++i) {
            int c = f.quadratic_char(f.element_at(i));
            sum += c;
            if (c > 0) ++plus;
        }
        CHECK(sum == 0);
        CHECK(plus == (f.q() - 1) / 2);
        // multiplicativity, randomized
        SplitMix64 rng(p * 100 + r);
        for (int k = 0; k < 1000; ++k) {
            FieldElement x = f.element_at(1 + rng.bounded(f.q() - 1));
            FieldElement y = f.element_at(1 + rng.bounded(f.q() - 1));
            CHECK(f.quadratic_char(f.mul(x, y)) == f.quadratic_char(x) * f.quadratic_char(y));
        }
    }
}

TEST_CASE("discrete log") {
    FieldCtx f7(7, 1);
    f7.set_generator(f7.from_prime(3));
    CHECK(f7.discrete_log(f7.one()) == 0);
    CHECK(f7.discrete_log(f7.from_prime(3)) == 1);
    CHECK(f7.discrete_log(f7.from_prime(6)) == 3);
    CHECK_THROWS_AS(f7.discrete_log(f7.zero()), ZeroArgument);
    CHECK_THROWS_AS(FieldCtx(7, 1).set_generator(FieldCtx(7, 1).from_prime(2)), NotGenerator);

    FieldCtx f(7, 2);
    const FieldElement& g = f.generator();
    CHECK(f.pow(g, f.q() - 1) == f.one());
    for (uint64_t k = 0; k < f.q() - 1; ++k)
        CHECK(f.discrete_log(f.pow(g, k)) == k);
}

TEST_CASE("discrete log via BSGS above the table cap") {
    FieldCtx f(11, 2);
    f.set_dlog_table_cap(1);  // force BSGS
    const FieldElement& g = f.generator();
    SplitMix64 rng(42);
    for (int i = 0; i < 50; ++i) {
        uint64_t k = rng.bounded(f.q() - 1);
        CHECK(f.discrete_log(f.pow(g, k)) == k);
    }
}

TEST_CASE("mult_char") {
    FieldCtx f7(7, 1);
    f7.set_generator(f7.from_prime(3));
    CHECK(f7.mult_char(3, f7.one()).index == 0);
    CHECK(f7.mult_char(3, f7.from_prime(2)).index == 2);  // dlog(2) = 2
    CHECK(f7.mult_char(2, f7.zero()).zero);
    CHECK_THROWS_AS(f7.mult_char(4, f7.one()), OrderDoesNotDivide);

    FieldCtx f(11, 2);
    SplitMix64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        FieldElement x = f.element_at(rng.bounded(f.q()));
        CHECK(f.mult_char(2, x).sign() == f.quadratic_char(x));
    }
}

TEST_CASE("polynomial text format") {
    CHECK(format_poly({1, 0, 1}) == "1,0,1");
    CHECK(parse_poly("1,0,1", 5) == std::vector<uint64_t>{1, 0, 1});
    CHECK(parse_poly("-1,6", 5) == std::vector<uint64_t>{4, 1});
    CHECK_THROWS_AS(parse_poly("1,x", 5), ConfigError);
}
