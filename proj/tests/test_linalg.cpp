#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace qde;
using M = Matrix<RatFunc>;
using S = Subspace<RatFunc>;

TEST_CASE("rref of identity and zero") {
    auto r = rref(M::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.reduced == M::identity(3));
    CHECK(rref(M::zero(4, 5)).rank == 0);
}

TEST_CASE("rref planted rank oracle") {
    testutil::Rng rng(0xbeefULL);
    for (int trial = 0; trial < 10; ++trial) {
        M a = testutil::rand_matrix(rng, 6, 2);
        M b = testutil::rand_matrix(rng, 2, 4);
        M prod = a * b;
        CHECK(rank(prod) <= 2);
        // rank exactly 2 when the factors have full rank
        if (rank(a) == 2 && rank(b) == 2) CHECK(rank(prod) == 2);
    }
}

TEST_CASE("rref determinism") {
    testutil::Rng rng(0x77ULL);
    M m = testutil::rand_matrix(rng, 8, 8);
    auto r1 = rref(m);
    auto r2 = rref(m);
    CHECK(r1.reduced == r2.reduced);
    CHECK(r1.pivots == r2.pivots);
}

TEST_CASE("kernel basics and multiply-back") {
    CHECK(kernel(M::identity(4)).dim() == 0);
    CHECK(kernel(M::zero(3, 5)).dim() == 5);
    testutil::Rng rng(0x99ULL);
    for (int trial = 0; trial < 10; ++trial) {
        M m = testutil::rand_matrix(rng, 5, 7);
        S k = kernel(m);
        CHECK(k.dim() == 7 - rank(m));
        for (int i = 0; i < k.dim(); ++i) {
            std::vector<RatFunc> v(7, RatFunc(0));
            for (const auto& [j, val] : k.basis().row(i)) v[j] = val;
            auto out = m.apply_vec(v);
            for (const auto& x : out) CHECK(is_zero(x));
        }
    }
}

TEST_CASE("subspace lattice identities") {
    testutil::Rng rng(0x31415ULL);
    for (int trial = 0; trial < 8; ++trial) {
        S a = S::from_rows(testutil::rand_matrix(rng, 3, 6));
        S b = S::from_rows(testutil::rand_matrix(rng, 3, 6));
        S u = sum(a, b);
        S i = intersect(a, b);
        CHECK(a.dim() + b.dim() == u.dim() + i.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(u.contains(a));
        CHECK(u.contains(b));
        CHECK(sum(a, a) == a);
        CHECK(intersect(a, a) == a);
    }
}

TEST_CASE("complementary coordinate planes") {
    M ma(2, 4), mb(2, 4);
    ma.set(0, 0, RatFunc(1));
    ma.set(1, 1, RatFunc(1));
    mb.set(0, 2, RatFunc(1));
    mb.set(1, 3, RatFunc(1));
    S a = S::from_rows(ma), b = S::from_rows(mb);
    CHECK(intersect(a, b).dim() == 0);
    CHECK(sum(a, b) == S::full(4));
}

TEST_CASE("ambient mismatch throws") {
    CHECK_THROWS_AS((void)sum(S::full(3), S::full(4)), error);
    CHECK_THROWS_AS((void)intersect(S::full(3), S::full(4)), error);
}

TEST_CASE("kron basics") {
    CHECK(kron(M::identity(2), M::identity(3)) == M::identity(6));
    M d = M::diagonal({q_pow(1), q_pow(-1)});
    M expect = M::diagonal({q_pow(1), q_pow(1), q_pow(-1), q_pow(-1)});
    CHECK(kron(d, M::identity(2)) == expect);
}

TEST_CASE("kron mixed-product property") {
    testutil::Rng rng(0x271828ULL);
    for (int trial = 0; trial < 8; ++trial) {
        M a = testutil::rand_matrix(rng, 2, 2);
        M b = testutil::rand_matrix(rng, 2, 2);
        M c = testutil::rand_matrix(rng, 2, 2);
        M d = testutil::rand_matrix(rng, 2, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("inverse and minimal-polynomial inverse agree") {
    testutil::Rng rng(0x8833ULL);
    for (int trial = 0; trial < 6; ++trial) {
        M m = testutil::rand_matrix(rng, 4, 4, 1);
        M probe;
        try {
            probe = inverse(m);
        } catch (const error&) {
            continue;
        }
        CHECK(m * probe == M::identity(4));
        CHECK(probe * m == M::identity(4));
    }
    // minpoly route on a diagonal with repeated eigenvalues
    M d = M::diagonal({q_pow(2), q_pow(2), q_pow(-2), RatFunc(1)});
    CHECK(inverse_via_minpoly(d) == inverse(d));
    CHECK_THROWS_AS((void)inverse(M::zero(3, 3)), error);
}

TEST_CASE("leg permutation helpers") {
    testutil::Rng rng(0x424242ULL);
    M a = testutil::rand_matrix(rng, 2, 2);
    M b = testutil::rand_matrix(rng, 3, 3);
    M ab = kron(a, b);
    M sw = swap_legs<RatFunc>(2, 3);
    M swi = swap_legs<RatFunc>(3, 2);
    CHECK(sw * ab * swi == kron(b, a));
    CHECK(exchange_legs(ab, 2, 3) == kron(b, a));
    // embed into a three-leg product
    M c = testutil::rand_matrix(rng, 2, 2);
    std::vector<int> dims{2, 3, 2};
    CHECK(embed_two_legs(kron(a, b), dims, 0, 1) == kron(kron(a, b), M::identity(2)));
    // embedding on legs (0,2) equals the directly assembled a (x) I (x) c
    M direct(12, 12);
    for (int i = 0; i < 2; ++i)
        for (int ii = 0; ii < 2; ++ii)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int kk = 0; kk < 2; ++kk) {
                        RatFunc v = a.get(i, ii) * c.get(k, kk);
                        if (!is_zero(v)) direct.add_to(i * 6 + j * 2 + k, ii * 6 + j * 2 + kk, v);
                    }
    CHECK(embed_two_legs(kron(a, c), dims, 0, 2) == direct);
}

TEST_CASE("partial transposes") {
    testutil::Rng rng(0x5151ULL);
    M a = testutil::rand_matrix(rng, 2, 2);
    M b = testutil::rand_matrix(rng, 3, 3);
    CHECK(partial_transpose_first(kron(a, b), 2, 3) == kron(a.transpose(), b));
    CHECK(partial_transpose_second(kron(a, b), 2, 3) == kron(a, b.transpose()));
}
