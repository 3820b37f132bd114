#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qde/qlie.hpp>

#include "testutil.hpp"

using namespace qde;

namespace {

Mat eval1(const Mat& m) {
    return m.map<RatFunc>([](const RatFunc& v) { return ratfunc_from(eval_at(v, Rat(1))); });
}

} // namespace

TEST_CASE("Q-operator: classical limit, invariance, scaling") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        FusedR fr(n);
        Word wv{LegV};
        Mat q = q_on(fr, wv);
        CHECK(eval1(q) == Mat::identity(n * n));
        // commutes with the coproduct action on V (x) V
        Rep v = vector_rep(n);
        Rep d = tensor_rep(v, v);
        for (size_t i = 0; i < d.e.size(); ++i) {
            CHECK(q * d.e[i] == d.e[i] * q);
            CHECK(q * d.f[i] == d.f[i] * q);
            CHECK(q * d.k[i] == d.k[i] * q);
        }
    }
    // scaling R by q^2 scales Q by q^4
    FusedR base(2), scaled(2, q_pow(2));
    CHECK(q_on(scaled, {LegV}) == q_on(base, {LegV}) * q_pow(4));
}

TEST_CASE("Q-operator invariance on longer and dual words") {
    FusedR fr(2);
    for (Word w : {Word{LegV, LegV}, Word{LegVDual}, Word{LegV, LegVDual}}) {
        CAPTURE(word_label(w));
        Mat q = q_on(fr, w);
        Rep v = vector_rep(2);
        Rep d = tensor_rep(v, word_rep(2, w));
        for (size_t i = 0; i < d.e.size(); ++i) {
            CHECK(q * d.e[i] == d.e[i] * q);
            CHECK(q * d.f[i] == d.f[i] * q);
            CHECK(q * d.k[i] == d.k[i] * q);
        }
    }
}

TEST_CASE("f_map basics") {
    int n = 2;
    FusedR fr(n);
    Word wv{LegV};
    // Tr at q = 1 realizes as the identity
    CHECK(eval1(c_v(fr, wv)) == Mat::identity(n));
    // traceless functionals vanish at q = 1
    Mat gens = lie_generators(n);
    for (int a = 0; a < n * n - 1; ++a) {
        std::vector<RatFunc> phi(n * n, RatFunc(0));
        for (const auto& [j, v] : gens.row(a)) phi[j] = v;
        CHECK(eval1(f_map(fr, phi, wv)).is_zero_matrix());
    }
    // the full span over End(V)* has dimension n^2 on the word V
    std::vector<typename Mat::Row> rows;
    for (int i = 0; i < n * n; ++i) {
        std::vector<RatFunc> phi(n * n, RatFunc(0));
        phi[i] = RatFunc(1);
        rows.push_back(f_map(fr, phi, wv).vectorize());
    }
    CHECK(rank(Mat::from_rows(std::move(rows), n * n)) == n * n);
}

TEST_CASE("quantum Casimir: scalar on V, unit at q = 1, exact inverse") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        FusedR fr(n);
        Mat c = c_v(fr, {LegV});
        // scalar on the irreducible V
        RatFunc s = c.get(0, 0);
        CHECK(c == Mat::identity(n) * s);
        CHECK(eval_at(s, Rat(1)) == Rat(1));
        Mat c2 = c_v(fr, {LegV, LegV});
        CHECK(eval1(c2) == Mat::identity(n * n));
        CHECK(c2 * c_v_inverse(c2) == Mat::identity(n * n));
    }
}

TEST_CASE("generator basis and classical span") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        QuantumLie ql(n);
        int g = ql.dim_l();
        CHECK(g == n * n - 1);
        for (int a = 0; a < g; ++a) {
            auto phi = ql.generator(a);
            RatFunc on_id(0);
            for (int i = 0; i < n; ++i) on_id += phi[i * n + i];
            CHECK(is_zero(on_id));
        }
        // classical limits of realized generators span traceless matrices
        std::vector<typename Mat::Row> rows;
        for (int a = 0; a < g; ++a) rows.push_back(eval1(ql.realize_generator(a, {LegV})).vectorize());
        CHECK(rank(Mat::from_rows(std::move(rows), n * n)) == g);
    }
}

TEST_CASE("sigma: classical flip, quadratic identity, eigenstructure") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        QuantumLie ql(n);
        int g = ql.dim_l();
        Mat s = ql.sigma();
        CHECK(eval1(s) == swap_legs<RatFunc>(g, g));
        // semisimple: eigenvalue 1 on the deformed symmetric part, and one
        // deformed -1 per irreducible summand of the antisymmetric part
        // (adjoint: -(q^4-q^2+1)/q^2; for n = 3 also -q^2 and -q^-2)
        RatFunc lam = RatFunc(0) - (q_pow(2) - RatFunc(1) + q_pow(-2));
        Mat id2 = Mat::identity(g * g);
        if (n == 2) {
            CHECK(s * s == s * (RatFunc(1) + lam) - id2 * lam);
        } else {
            Mat z = (s - id2) * (s - id2 * lam) * (s + id2 * q_pow(2)) * (s + id2 * q_pow(-2));
            CHECK(z.is_zero_matrix());
        }
        // deformed eigenvalue structure
        Mat dif = id2 - s;
        CHECK(rank(dif) == g * (g - 1) / 2);
        CHECK(kernel(dif).dim() == g * (g + 1) / 2);
    }
}

TEST_CASE("sigma and bracket close on and are equivariant over L") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        QuantumLie ql(n);
        Mat incl2 = kron(ql.gen_basis().transpose(), ql.gen_basis().transpose());
        // closure: the raw operator restricted to L (x) L factors through it
        CHECK(ql.sigma_ee() * incl2 == incl2 * ql.sigma());
        // equivariance against the adjoint module action
        Rep adj = ql.adjoint_rep();
        CHECK(check_rep_relations(adj));
        Rep adj2 = tensor_rep(adj, adj);
        for (size_t i = 0; i < adj2.e.size(); ++i) {
            CHECK(ql.sigma() * adj2.e[i] == adj2.e[i] * ql.sigma());
            CHECK(ql.sigma() * adj2.f[i] == adj2.f[i] * ql.sigma());
            CHECK(ql.sigma() * adj2.k[i] == adj2.k[i] * ql.sigma());
            CHECK(ql.bracket() * adj2.e[i] == adj.e[i] * ql.bracket());
            CHECK(ql.bracket() * adj2.f[i] == adj.f[i] * ql.bracket());
            CHECK(ql.bracket() * adj2.k[i] == adj.k[i] * ql.bracket());
        }
    }
}

TEST_CASE("bracket at q = 1 gives the classical structure constants") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        QuantumLie ql(n);
        int g = ql.dim_l();
        // classical generators on V from the realized limit
        std::vector<Matrix<Rat>> cls;
        for (int a = 0; a < g; ++a)
            cls.push_back(ql.realize_generator(a, {LegV}).map<Rat>([](const RatFunc& v) {
                return eval_at(v, Rat(1));
            }));
        // solve [A_a, A_b] = sum_c f^c_ab A_c and compare
        std::vector<typename Matrix<Rat>::Row> rows;
        for (int a = 0; a < g; ++a) rows.push_back(cls[a].vectorize());
        Matrix<Rat> basis = Matrix<Rat>::from_rows(std::move(rows), n * n);
        Subspace<Rat> span = Subspace<Rat>::from_rows(basis);
        Mat br1 = eval1(ql.bracket());
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) {
                Matrix<Rat> comm = cls[a] * cls[b] - cls[b] * cls[a];
                REQUIRE(span.reduce(comm.vectorize()).empty());
                std::vector<Rat> expect(g, Rat(0));
                {
                    // expand comm in the original (unreduced) generator basis
                    std::vector<typename Matrix<Rat>::Row> r2;
                    for (int i = 0; i < g; ++i) r2.push_back(basis.row(i));
                    r2.push_back(comm.vectorize());
                    // dependency: comm = sum x_i basis_i
                    Subspace<Rat> dep = kernel(Matrix<Rat>::from_rows(std::move(r2), n * n).transpose());
                    REQUIRE(dep.dim() == 1);
                    auto d = dep.basis().row(0);
                    Rat last(0);
                    for (const auto& [j, v] : d)
                        if (j == g) last = v;
                    REQUIRE(!is_zero(last));
                    for (const auto& [j, v] : d)
                        if (j < g) expect[j] = -v / last;
                }
                for (int c = 0; c < g; ++c)
                    CHECK(eval_at(br1.get(c, a * g + b), Rat(1)) == expect[c]);
            }
    }
}

TEST_CASE("coproduct split identity realized on V (x) V") {
    int n = 2;
    QuantumLie ql(n);
    FusedR& fr = ql.fused();
    Word wv{LegV};
    Mat gens = lie_generators(n);

    // traceless projection
    auto trq = quantum_trace_coords(n);
    int d = n * n;
    Mat t = Mat::identity(d);
    for (int a = 0; a < n; ++a)
        for (int uv = 0; uv < d; ++uv)
            if (!is_zero(trq[uv])) t.add_to(uv, a * n + a, -trq[uv]);

    // leg blocks of R_{V,V} against the second V
    std::vector<Mat> xb(d, Mat(n, n)), yb(d, Mat(n, n));
    auto split_blocks = [&](const Mat& m, std::vector<Mat>& out) {
        for (int r = 0; r < m.rows(); ++r) {
            int p = r / n, c = r % n;
            for (const auto& [col, val] : m.row(r)) out[c * n + col % n].add_to(p, col / n, val);
        }
    };
    split_blocks(fr.r(wv, wv), xb);
    split_blocks(exchange_legs(fr.r(wv, wv), n, n), yb);

    for (int a = 0; a < ql.dim_l(); ++a) {
        std::vector<RatFunc> phi(d, RatFunc(0));
        for (const auto& [j, v] : gens.row(a)) phi[j] = v;
        Mat lhs = f_map(fr, phi, {LegV, LegV});
        // first split term: the generator itself tensor the Casimir
        Mat rhs = kron(f_map(fr, phi, wv), c_v(fr, wv));
        for (int c = 0; c < n; ++c)
            for (int dd = 0; dd < n; ++dd)
                for (int e2 = 0; e2 < n; ++e2)
                    for (int f2 = 0; f2 < n; ++f2) {
                        RatFunc pcf = phi[c * n + f2];
                        if (is_zero(pcf)) continue;
                        // traceless part of psi = phi_{cf} e*_{de}
                        std::vector<RatFunc> psi(d, RatFunc(0));
                        for (int r = 0; r < d; ++r) {
                            RatFunc tv = t.get(r, dd * n + e2);
                            if (!is_zero(tv)) psi[r] = pcf * tv;
                        }
                        Mat fm = f_map(fr, psi, wv);
                        if (fm.is_zero_matrix()) continue;
                        rhs = rhs + kron(xb[c * n + dd] * yb[e2 * n + f2], fm);
                    }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("slot-wise product split pins sigma and bracket (n = 2)") {
    // x_(1) y gamma(x_(2)) (x) x_(3)  ==  ad_x(y) (x) C_V  +  sum of sigma' pairs,
    // realized on (V, V); the realized pairs are linearly independent, so this
    // determines both raw operators uniquely.
    int n = 2;
    QuantumLie ql(n);
    FusedR& fr = ql.fused();
    int d = n * n;
    std::vector<Mat> rv;
    for (int c = 0; c < d; ++c) {
        std::vector<RatFunc> phi(d, RatFunc(0));
        phi[c] = RatFunc(1);
        rv.push_back(f_map(fr, phi, {LegV}));
    }
    Mat cw = c_v(fr, {LegV});
    {
        // independence of the realized pairs
        std::vector<typename Mat::Row> rows;
        for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e) rows.push_back(kron(rv[c], rv[e]).vectorize());
        REQUIRE(rank(Mat::from_rows(std::move(rows), d * d * d * d)) == d * d);
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            std::vector<RatFunc> pa(d, RatFunc(0));
            pa[a] = RatFunc(1);
            Mat f3 = f_map(fr, pa, {LegV, LegVDual, LegV});
            const Mat& m = rv[b];
            Mat lhs(n * n, n * n);
            for (int i = 0; i < n; ++i)
                for (int w = 0; w < n; ++w)
                    for (int j = 0; j < n; ++j)
                        for (int wp = 0; wp < n; ++wp) {
                            RatFunc acc(0);
                            for (int k = 0; k < n; ++k)
                                for (int l = 0; l < n; ++l) {
                                    RatFunc fv = f3.get((i * n + j) * n + w, (k * n + l) * n + wp);
                                    if (is_zero(fv)) continue;
                                    RatFunc mv = m.get(k, l);
                                    if (!is_zero(mv)) acc += fv * mv;
                                }
                            if (!is_zero(acc)) lhs.set(i * n + w, j * n + wp, acc);
                        }
            std::vector<RatFunc> pab(d * d, RatFunc(0));
            pab[a * d + b] = RatFunc(1);
            auto brc = ql.bracket_ee().apply_vec(pab);
            Mat adv(n, n);
            for (int c = 0; c < d; ++c)
                if (!is_zero(brc[c])) adv = adv + rv[c] * brc[c];
            Mat rhs = kron(adv, cw);
            auto sc = ql.sigma_ee().apply_vec(pab);
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    if (!is_zero(sc[c * d + e])) rhs = rhs + kron(rv[c], rv[e]) * sc[c * d + e];
            CHECK(lhs == rhs);
        }
}

TEST_CASE("defining relations hold in the horizon realization (n = 2)") {
    QuantumLie ql(2);
    auto certs = verify_relations(ql, 3);
    for (const auto& c : certs) {
        CAPTURE(c.context);
        CHECK(c.pass);
    }
}

TEST_CASE("independent degree-2 cross-check (n = 2)") {
    QuantumLie ql(2);
    auto certs = re_algebra_cross_check(ql, 3);
    for (const auto& c : certs) {
        CAPTURE(c.context);
        CHECK(c.pass);
    }
}

TEST_CASE("scalar insensitivity: R rescaled by q^2") {
    QuantumLie base(2);
    QuantumLie scaled(2, q_pow(2));
    CHECK(base.sigma() == scaled.sigma());
    CHECK(base.bracket() == scaled.bracket());
    auto certs = verify_relations(scaled, 2);
    for (const auto& c : certs) {
        CAPTURE(c.context);
        CHECK(c.pass);
    }
}
