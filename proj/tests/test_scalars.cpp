#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace qde;

TEST_CASE("normalize cancels common factors") {
    // (q^2 - 1)/(q - 1) = q + 1
    QPoly num({Rat(-1), Rat(0), Rat(1)});
    QPoly den({Rat(-1), Rat(1)});
    RatFunc f = ratfunc_normalize(num, den);
    CHECK(f == RatFunc(QPoly({Rat(1), Rat(1)})));
    CHECK(f.den() == QPoly(Rat(1)));
}

TEST_CASE("normalize zero numerator gives 0/1") {
    RatFunc f = ratfunc_normalize(QPoly(), QPoly::monomial(Rat(1), 3));
    CHECK(f.is_zero_val());
    CHECK(f.num().is_zero_poly());
    CHECK(f.den() == QPoly(Rat(1)));
}

TEST_CASE("normalize zero denominator throws") {
    CHECK_THROWS_WITH(ratfunc_normalize(QPoly(Rat(1)), QPoly()), "division by zero polynomial");
}

TEST_CASE("normalize multiply-back oracle on random inputs") {
    testutil::Rng rng(0x5ca1ab1eULL);
    RatFunc s = q_minus_qinv();
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc p = testutil::rand_ratfunc(rng);
        CHECK((s * p) / s == p);
        QPoly a = testutil::rand_poly(rng, 4);
        QPoly b;
        do {
            b = testutil::rand_poly(rng, 4);
        } while (b.is_zero_poly());
        RatFunc f = ratfunc_normalize(a * b, b); // (a*b)/b = a
        CHECK(f == RatFunc(a));
    }
}

TEST_CASE("eval_at removable singularity cancelled by canonical form") {
    RatFunc f = ratfunc_normalize(QPoly({Rat(-1), Rat(0), Rat(1)}), QPoly({Rat(-1), Rat(1)}));
    CHECK(eval_at(f, Rat(1)) == Rat(2));
}

TEST_CASE("eval_at direct substitution") {
    RatFunc f = q_pow(1) + q_pow(-1);
    CHECK(eval_at(f, Rat(2)) == rat_from(5, 2));
}

TEST_CASE("eval_at genuine pole throws") {
    RatFunc f = RatFunc(QPoly(Rat(1)), QPoly({Rat(-1), Rat(1)}));
    CHECK_THROWS_WITH((void)eval_at(f, Rat(1)), "evaluation at pole");
    CHECK(!regular_at(f, Rat(1)));
    CHECK(regular_at(f, Rat(2)));
}

TEST_CASE("field axioms on random triples") {
    testutil::Rng rng(0xfeedULL);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc a = testutil::rand_ratfunc(rng);
        RatFunc b = testutil::rand_ratfunc(rng);
        RatFunc c = testutil::rand_ratfunc(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        if (!is_zero(b)) CHECK((a / b) * b == a);
    }
}

TEST_CASE("normalization is idempotent") {
    testutil::Rng rng(0xabcdULL);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc a = testutil::rand_ratfunc(rng);
        CHECK(ratfunc_normalize(a.num(), a.den()) == a);
    }
}

TEST_CASE("eval_at is a ring homomorphism where defined") {
    testutil::Rng rng(0x1234ULL);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc a = testutil::rand_ratfunc(rng);
        RatFunc b = testutil::rand_ratfunc(rng);
        Rat q0 = rat_from(rng.range(2, 9), rng.range(1, 4));
        if (!regular_at(a, q0) || !regular_at(b, q0) || !regular_at(a * b, q0) ||
            !regular_at(a + b, q0))
            continue;
        CHECK(eval_at(a * b, q0) == eval_at(a, q0) * eval_at(b, q0));
        CHECK(eval_at(a + b, q0) == eval_at(a, q0) + eval_at(b, q0));
    }
}

TEST_CASE("canonical text form round-trips bit-exactly") {
    testutil::Rng rng(0xc0ffeeULL);
    CHECK(to_string(q_minus_qinv()) == "(q^2 - 1)/(q)");
    CHECK(ratfunc_parse("(q^2 - 1)/(q)") == q_minus_qinv());
    CHECK(ratfunc_parse("q + 1") == RatFunc(QPoly({Rat(1), Rat(1)})));
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc a = testutil::rand_ratfunc(rng);
        CHECK(ratfunc_parse(to_string(a)) == a);
    }
}

TEST_CASE("quantum integers") {
    CHECK(q_int(2) == q_pow(1) + q_pow(-1));
    CHECK(eval_at(q_int(3), Rat(1)) == Rat(3));
}

TEST_CASE("t-polynomials and the t-rational field") {
    RatFuncT t = t_var();
    RatFuncT f = (t * t - RatFuncT(1)) / (t - RatFuncT(1));
    CHECK(eval_t(f, RatFunc(1)) == ratfunc_from(2));
    RatFuncT pole = RatFuncT(1) / (t - RatFuncT(1));
    CHECK_THROWS_WITH((void)eval_t(pole, RatFunc(1)), "evaluation at pole");
    // coefficients from Q(q) flow through
    RatFuncT g = t * RatFuncT(q_minus_qinv());
    CHECK(eval_t(g, RatFunc(1)) == q_minus_qinv());
}
