#include <qde/graded.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace qde {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// rows spanning the slab L^{(x) left} (x) S (x) L^{(x) right} inside
// L^{(x) (left + 2 + right)}
Mat slab_rows(const Mat& sbasis, int g, int left, int right) {
    Mat m = sbasis;
    if (left > 0) m = kron(Mat::identity(static_cast<int>(ipow(g, left))), m);
    if (right > 0) m = kron(m, Mat::identity(static_cast<int>(ipow(g, right))));
    return m;
}

Rat eval1(const RatFunc& v) { return eval_at(v, Rat(1)); }

// value of f/(q - 1) at q = 1, assuming f(1) = 0: the derivative f'(1)
Rat limit_over_qm1(const RatFunc& f) {
    const QPoly& num = f.num();
    const QPoly& den = f.den();
    auto dpoly_at1 = [](const QPoly& p) {
        Rat r(0);
        for (size_t i = 1; i < p.coeffs().size(); ++i) r += p.coeffs()[i] * Rat(static_cast<long>(i));
        return r;
    };
    Rat d1 = den.eval(Rat(1));
    if (is_zero(d1) || !is_zero(num.eval(Rat(1)))) throw error("evaluation at pole");
    // (num/den)'(1) with num(1) = 0: num'(1)/den(1)
    return dpoly_at1(num) / d1;
}

// module action matrices on L^{(x) k}
std::vector<Mat> action_generators(const QuantumLie& ql, int k) {
    Rep a = ql.adjoint_rep();
    Rep m = (k == 0) ? trivial_rep(ql.n()) : a;
    for (int i = 1; i < k; ++i) m = tensor_rep(m, a);
    std::vector<Mat> out;
    Mat id = Mat::identity(m.dim);
    for (size_t i = 0; i < m.e.size(); ++i) {
        out.push_back(m.e[i]);
        out.push_back(m.f[i]);
        out.push_back(m.k[i] - id);
    }
    return out;
}

bool subspace_invariant(const QuantumLie& ql, const Sub& s, int k) {
    auto gens = action_generators(ql, k);
    const Mat& b = s.basis();
    for (const auto& x : gens) {
        // x maps columns; act on each basis row as a vector
        for (int i = 0; i < s.dim(); ++i) {
            std::vector<RatFunc> v(b.cols(), RatFunc(0));
            for (const auto& [j, val] : b.row(i)) v[j] = val;
            auto w = x.apply_vec(v);
            typename Mat::Row wr;
            for (int j = 0; j < static_cast<int>(w.size()); ++j)
                if (!is_zero(w[j])) wr.push_back({j, w[j]});
            if (!s.contains(wr)) return false;
        }
    }
    return true;
}

} // namespace

QuadraticData sym_relations(const QuantumLie& ql) {
    int g = ql.dim_l();
    Mat dif = Mat::identity(g * g) - ql.sigma();
    QuadraticData qd;
    qd.gen_dim = g;
    qd.rel2 = Sub::from_rows(dif.transpose());
    qd.label = "sym";
    if (qd.rel2.dim() != g * (g - 1) / 2) throw error("relation dimension mismatch");
    return qd;
}

QuadraticData ext_relations(const QuantumLie& ql, const Sub& w2) {
    QuadraticData qd;
    qd.gen_dim = ql.dim_l();
    qd.rel2 = w2;
    qd.label = "ext";
    return qd;
}

Mat killing_form(const QuantumLie& ql) {
    int g = ql.dim_l();
    Rep a = ql.adjoint_rep();
    Rep a2 = tensor_rep(a, a);
    // invariant functionals b: b composed with every generator action is
    // eps-scaled, i.e. b is killed by e^T, f^T and fixed by k^T
    std::vector<typename Mat::Row> rows;
    Mat id = Mat::identity(g * g);
    auto put = [&](const Mat& x) {
        Mat xt = x.transpose();
        for (int i = 0; i < g * g; ++i) rows.push_back(xt.row(i));
    };
    for (size_t i = 0; i < a2.e.size(); ++i) {
        put(a2.e[i]);
        put(a2.f[i]);
        put(a2.k[i] - id);
    }
    Sub sol = kernel(Mat::from_rows(std::move(rows), g * g));
    if (sol.dim() != 1) throw error("invariant form not unique");
    Mat b(g, g);
    for (const auto& [j, v] : sol.basis().row(0)) b.set(j / g, j % g, v);

    // classical Killing form of the generator basis, from the q = 1 bracket
    Mat br1 = ql.bracket().map<RatFunc>([](const RatFunc& v) { return ratfunc_from(eval1(v)); });
    std::vector<Matrix<Rat>> ad(g, Matrix<Rat>(g, g));
    for (int c = 0; c < g; ++c)
        for (int aa = 0; aa < g; ++aa)
            for (int bb = 0; bb < g; ++bb) {
                Rat v = eval1(br1.get(c, aa * g + bb));
                if (!is_zero(v)) ad[aa].add_to(c, bb, v);
            }
    Matrix<Rat> kap(g, g);
    for (int aa = 0; aa < g; ++aa)
        for (int bb = 0; bb < g; ++bb) {
            Matrix<Rat> p = ad[aa] * ad[bb];
            Rat tr(0);
            for (int i = 0; i < g; ++i) tr += p.get(i, i);
            if (!is_zero(tr)) kap.set(aa, bb, tr);
        }
    // scale so the q = 1 limit matches the classical form exactly
    RatFunc scale(0);
    for (int aa = 0; aa < g && is_zero(scale); ++aa)
        for (int bb = 0; bb < g && is_zero(scale); ++bb)
            if (!is_zero(kap.get(aa, bb)) && !is_zero(b.get(aa, bb)))
                scale = ratfunc_from(kap.get(aa, bb)) / b.get(aa, bb);
    if (is_zero(scale)) throw error("invariant form not unique");
    return b * scale;
}

W2Result w2_complement(const QuantumLie& ql, const Mat& b) {
    int g = ql.dim_l();
    Mat dif = Mat::identity(g * g) - ql.sigma();
    Sub v2 = Sub::from_rows(dif.transpose());
    auto build = [&](const Mat& b2) {
        return kernel(v2.basis() * b2);
    };
    auto check = [&](const Sub& w2) {
        if (w2.dim() != g * (g + 1) / 2) return false;
        if (intersect(v2, w2).dim() != 0) return false;
        return subspace_invariant(ql, w2, 2);
    };
    W2Result res;
    Sub w2 = build(kron(b, b));
    if (check(w2)) {
        res.w2 = w2;
    } else {
        // braided extension: B2'(a(x)b, c(x)d) = sum B(a,x) B(y,d) sigma[(x,y),(b,c)]
        const Mat& s = ql.sigma();
        Mat b2(g * g, g * g);
        for (int x = 0; x < g; ++x)
            for (int y = 0; y < g; ++y) {
                const auto& srow = s.row(x * g + y);
                for (const auto& [col, sv] : srow) {
                    int bb = col / g, cc = col % g;
                    for (int aa = 0; aa < g; ++aa) {
                        RatFunc bax = b.get(aa, x);
                        if (is_zero(bax)) continue;
                        for (int dd = 0; dd < g; ++dd) {
                            RatFunc byd = b.get(y, dd);
                            if (is_zero(byd)) continue;
                            b2.add_to(aa * g + bb, cc * g + dd, bax * byd * sv);
                        }
                    }
                }
            }
        w2 = build(b2);
        if (!check(w2)) throw error("symmetric complement failed");
        res.w2 = w2;
        res.used_braided_fallback = true;
    }
    res.eigen_route_agrees = (res.w2 == kernel(dif));
    return res;
}

Mat sigma_bar(const Sub& v2, const Sub& w2) {
    int d = v2.basis().cols();
    if (v2.dim() + w2.dim() != d) throw error("ambient dimension mismatch");
    Mat cols(d, d);
    int at = 0;
    for (int i = 0; i < v2.dim(); ++i, ++at)
        for (const auto& [j, v] : v2.basis().row(i)) cols.set(j, at, v);
    for (int i = 0; i < w2.dim(); ++i, ++at)
        for (const auto& [j, v] : w2.basis().row(i)) cols.set(j, at, v);
    std::vector<RatFunc> diag(d, RatFunc(1));
    for (int i = 0; i < v2.dim(); ++i) diag[i] = RatFunc(-1);
    return cols * Mat::diagonal(diag) * inverse(cols);
}

long long graded_dim(const QuadraticData& qd, int k) {
    int g = qd.gen_dim;
    if (k < 0) return 0;
    if (k < 2) return ipow(g, k);
    long long ambient = ipow(g, k);
    std::vector<typename Mat::Row> rows;
    for (int i = 0; i + 2 <= k; ++i) {
        Mat slab = slab_rows(qd.rel2.basis(), g, i, k - 2 - i);
        for (int r = 0; r < slab.rows(); ++r) rows.push_back(slab.row(r));
    }
    return ambient - rank(Mat::from_rows(std::move(rows), static_cast<int>(ambient)));
}

std::vector<GradedCert> pbw_check(QuantumLie& ql, int D) {
    std::vector<GradedCert> out;
    int g = ql.dim_l();
    QuadraticData qd = sym_relations(ql);
    const Mat& beta = ql.bracket();

    // structural conditions on the degree-3 overlap
    Sub left = Sub::from_rows(slab_rows(qd.rel2.basis(), g, 0, 1));
    Sub right = Sub::from_rows(slab_rows(qd.rel2.basis(), g, 1, 0));
    Sub overlap = intersect(left, right);
    Mat id = Mat::identity(g);
    Mat b12 = kron(beta, id), b23 = kron(id, beta);
    bool into_rel = true, jacobi = true;
    for (int i = 0; i < overlap.dim(); ++i) {
        std::vector<RatFunc> t(g * g * g, RatFunc(0));
        for (const auto& [j, v] : overlap.basis().row(i)) t[j] = v;
        auto u = b12.apply_vec(t);
        auto w = b23.apply_vec(t);
        std::vector<RatFunc> dvec(g * g, RatFunc(0));
        typename Mat::Row drow;
        for (int j = 0; j < g * g; ++j) {
            dvec[j] = u[j] - w[j];
            if (!is_zero(dvec[j])) drow.push_back({j, dvec[j]});
        }
        if (!qd.rel2.contains(drow)) into_rel = false;
        auto z = beta.apply_vec(dvec);
        for (auto& zz : z)
            if (!is_zero(zz)) jacobi = false;
    }
    out.push_back(make_bool_cert("pbw structural: overlap difference lands in relations", 3, into_rel));
    out.push_back(make_bool_cert("pbw structural: jacobi identity on overlap", 3, jacobi));

    // realization: filtered dimensions of ordered monomials at t = 1
    Horizon h = build_horizon(ql, D + 1);
    std::vector<typename Mat::Row> rows;
    rows.push_back(Mat::identity(h.dim).vectorize());
    long long expect = 1;
    {
        auto chk = [&](int deg) {
            auto probe = rows;
            long long got = rank(Mat::from_rows(std::move(probe), h.dim * h.dim));
            out.push_back(make_cert("pbw realization: filtered dimension at t = 1", deg, expect, got));
        };
        chk(0);
        // ordered monomials by nondecreasing index sequences
        std::vector<std::pair<std::vector<int>, Mat>> prev{{{}, Mat::identity(h.dim)}};
        for (int k = 1; k <= D; ++k) {
            std::vector<std::pair<std::vector<int>, Mat>> cur;
            for (const auto& [idx, m] : prev) {
                int lo = idx.empty() ? 0 : idx.back();
                for (int a = lo; a < g; ++a) {
                    auto nidx = idx;
                    nidx.push_back(a);
                    Mat nm = m * h.xtilde[a];
                    rows.push_back(nm.vectorize());
                    cur.push_back({std::move(nidx), std::move(nm)});
                }
            }
            prev = std::move(cur);
            expect += binom(g + k - 1, k);
            chk(k);
        }
    }

    // first-order Poisson structures: t-direction (classical Jacobi) and
    // (q-1)-direction (quadratic bracket from the sigma expansion)
    {
        Mat br1(g, g * g);
        for (int c = 0; c < g; ++c)
            for (const auto& [j, v] : beta.row(c)) {
                Rat x = eval1(v);
                if (!is_zero(x)) br1.set(c, j, ratfunc_from(x));
            }
        bool cj = true;
        for (int a = 0; a < g && cj; ++a)
            for (int b = 0; b < g && cj; ++b)
                for (int c = 0; c < g && cj; ++c)
                    for (int e = 0; e < g; ++e) {
                        RatFunc s(0);
                        for (int dd = 0; dd < g; ++dd)
                            s += br1.get(dd, b * g + c) * br1.get(e, a * g + dd) +
                                 br1.get(dd, c * g + a) * br1.get(e, b * g + dd) +
                                 br1.get(dd, a * g + b) * br1.get(e, c * g + dd);
                        if (!is_zero(s)) {
                            cj = false;
                            break;
                        }
                    }
        out.push_back(make_bool_cert("poisson: t-direction jacobi", 1, cj));

        // S1 = d/dq (sigma - flip) at q = 1
        const Mat& s = ql.sigma();
        Mat flip = swap_legs<RatFunc>(g, g);
        std::vector<std::vector<Rat>> s1(g * g, std::vector<Rat>(g * g, Rat(0)));
        for (int r = 0; r < g * g; ++r) {
            for (const auto& [col, v] : s.row(r)) s1[r][col] = limit_over_qm1(v - flip.get(r, col));
            for (const auto& [col, v] : flip.row(r))
                if (is_zero(s.get(r, col))) s1[r][col] = limit_over_qm1(RatFunc(0) - v);
        }
        // bracket into S^2: {x_a, x_b} = sym(S1(e_a (x) e_b)); consistency
        // requires the symmetric input part to vanish under sym
        using SymKey = std::pair<int, int>; // sorted pair
        auto pb = [&](int a, int b) {
            std::map<SymKey, Rat> m;
            for (int r = 0; r < g * g; ++r) {
                Rat v = s1[r][a * g + b];
                if (is_zero(v)) continue;
                int c = r / g, d = r % g;
                m[{std::min(c, d), std::max(c, d)}] += v;
            }
            return m;
        };
        bool anti = true;
        for (int a = 0; a < g && anti; ++a)
            for (int b = a; b < g; ++b) {
                auto m1 = pb(a, b), m2 = pb(b, a);
                for (auto& [k, v] : m2) m1[k] += v;
                for (auto& [k, v] : m1)
                    if (!is_zero(v)) {
                        anti = false;
                        break;
                    }
                if (!anti) break;
            }
        out.push_back(make_bool_cert("poisson: (q-1)-direction antisymmetry", 1, anti));

        // Jacobi in S^3 via Leibniz
        using TriKey = std::array<int, 3>;
        auto addmono = [](std::map<TriKey, Rat>& acc, int x, int y, int z, const Rat& v) {
            TriKey k{x, y, z};
            std::sort(k.begin(), k.end());
            acc[k] += v;
        };
        auto br_with = [&](const std::map<SymKey, Rat>& p, int c, std::map<TriKey, Rat>& acc,
                           const Rat& sign) {
            // { sum p_{uv} x_u x_v , x_c } = sum p ( {x_u,x_c} x_v + x_u {x_v,x_c} )
            for (const auto& [k, v] : p) {
                auto [u, w] = k;
                for (const auto& [k2, v2] : pb(u, c)) addmono(acc, k2.first, k2.second, w, sign * v * v2);
                for (const auto& [k2, v2] : pb(w, c)) addmono(acc, k2.first, k2.second, u, sign * v * v2);
            }
        };
        bool qj = true;
        for (int a = 0; a < g && qj; ++a)
            for (int b = a + 1; b < g && qj; ++b)
                for (int c = b + 1; c < g; ++c) {
                    std::map<TriKey, Rat> acc;
                    br_with(pb(a, b), c, acc, Rat(1));
                    br_with(pb(b, c), a, acc, Rat(1));
                    br_with(pb(c, a), b, acc, Rat(1));
                    for (auto& [k, v] : acc)
                        if (!is_zero(v)) {
                            qj = false;
                            break;
                        }
                    if (!qj) break;
                }
        out.push_back(make_bool_cert("poisson: (q-1)-direction jacobi", 1, qj));
    }
    return out;
}

Sub invariant_subspace(const QuantumLie& ql, const Sub& ambient_sub, int k) {
    int m = ambient_sub.dim();
    if (m == 0) return ambient_sub;
    const Mat& bk = ambient_sub.basis();
    Mat bt = bk.transpose(); // ambient x m
    auto gens = action_generators(ql, k);
    // kernel over the coefficient space: cond * c = 0 for each stacked cond
    std::vector<typename Mat::Row> crows;
    for (const auto& x : gens) {
        Mat cond = x * bt;
        for (int i = 0; i < cond.rows(); ++i)
            if (!cond.row(i).empty()) crows.push_back(cond.row(i));
    }
    Sub coeff = kernel(Mat::from_rows(std::move(crows), m));
    return Sub::from_rows(coeff.basis() * bk);
}

namespace {

Sub iterated_intersection(const Sub& s2, int g, int k) {
    long long ambient = ipow(g, k);
    if (k < 2) {
        Mat id = Mat::identity(static_cast<int>(ambient));
        return Sub::from_rows(id);
    }
    Sub acc = Sub::from_rows(slab_rows(s2.basis(), g, 0, k - 2));
    for (int i = 1; i + 2 <= k; ++i)
        acc = intersect(acc, Sub::from_rows(slab_rows(s2.basis(), g, i, k - 2 - i)));
    return acc;
}

} // namespace

Sub symmetric_part(const QuantumLie& ql, const Sub& w2, int k) {
    return iterated_intersection(w2, ql.dim_l(), k);
}

Sub antisymmetric_part(const QuantumLie& ql, const Sub& v2, int k) {
    return iterated_intersection(v2, ql.dim_l(), k);
}

} // namespace qde
