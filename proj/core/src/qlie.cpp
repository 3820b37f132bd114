#include <qde/qlie.hpp>

namespace qde {

Mat q_on(FusedR& fr, const Word& word) {
    Word v{LegV};
    int dw = fr.word_dim(word);
    Mat r21 = exchange_legs(fr.r(word, v), dw, fr.n());
    return r21 * fr.r(v, word);
}

Mat f_map(FusedR& fr, const std::vector<RatFunc>& phi, const Word& word) {
    int n = fr.n();
    int dw = fr.word_dim(word);
    Mat q = q_on(fr, word);
    Mat out(dw, dw);
    for (int r = 0; r < q.rows(); ++r) {
        int a = r / dw, w = r % dw;
        for (const auto& [col, v] : q.row(r)) {
            int b = col / dw, wp = col % dw;
            const RatFunc& c = phi[a * n + b];
            if (!is_zero(c)) out.add_to(w, wp, c * v);
        }
    }
    return out;
}

Mat c_v(FusedR& fr, const Word& word) { return f_map(fr, quantum_trace_coords(fr.n()), word); }

Mat c_v_inverse(const Mat& c) {
    try {
        return inverse_via_minpoly(c);
    } catch (const error&) {
        throw error("Casimir not invertible");
    }
}

Mat lie_generators(int n) {
    Mat g(n * n - 1, n * n);
    int at = 0;
    for (int i = 0; i + 1 < n; ++i) {
        g.set(at, i * n + i, RatFunc(1));
        g.set(at, (i + 1) * n + (i + 1), RatFunc(-1));
        ++at;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) g.set(at++, a * n + b, RatFunc(1));
    return g;
}

namespace {

// Solve Hom_U(E, W) and pick a deterministic invertible combination.
std::pair<Mat, Mat> module_isomorphism(const Rep& e, const Rep& w) {
    int d = e.dim;
    std::vector<typename Mat::Row> rows;
    auto add_constraints = [&](const Mat& me, const Mat& mw) {
        // J me - mw J = 0, vectorized row-major
        Mat op = kron(Mat::identity(d), me.transpose()) - kron(mw, Mat::identity(d));
        for (int i = 0; i < op.rows(); ++i) rows.push_back(op.row(i));
    };
    for (size_t i = 0; i < e.e.size(); ++i) {
        add_constraints(e.e[i], w.e[i]);
        add_constraints(e.f[i], w.f[i]);
        add_constraints(e.k[i], w.k[i]);
    }
    Sub hom = kernel(Mat::from_rows(std::move(rows), d * d));
    if (hom.dim() == 0) throw error("modules are not isomorphic");
    auto reshape = [&](const typename Mat::Row& v) {
        Mat j(d, d);
        for (const auto& [idx, val] : v) j.set(idx / d, idx % d, val);
        return j;
    };
    for (int t = 0; t < 8; ++t) {
        typename Mat::Row v = hom.basis().row(0);
        if (hom.dim() > 1 && t > 0) {
            for (const auto& [idx, val] : hom.basis().row(1)) {
                // v += t * second basis vector
                RatFunc add = val * ratfunc_from(t);
                bool found = false;
                for (auto& [i2, v2] : v)
                    if (i2 == idx) {
                        v2 += add;
                        found = true;
                        break;
                    }
                if (!found) v.push_back({idx, add});
            }
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        Mat j = reshape(v);
        try {
            Mat jinv = inverse(j);
            return {j, jinv};
        } catch (const error&) {
            continue;
        }
    }
    throw error("no invertible intertwiner combination found");
}

} // namespace

QuantumLie::QuantumLie(int n, RatFunc r_scale)
    : n_(n), dim_l_(n * n - 1), fused_(n, std::move(r_scale)), endv_(endv_dual_rep(n)),
      word_e_{LegVDual, LegV} {
    Rep w = word_rep(n, word_e_);
    std::tie(j_, j_inv_) = module_isomorphism(endv_, w);

    int d = n * n;
    Mat in = Mat::identity(n);
    Word v{LegV};
    r_ev_ = kron(j_inv_, in) * fused_.r(word_e_, v) * kron(j_, in);
    r_ve_ = kron(in, j_inv_) * fused_.r(v, word_e_) * kron(in, j_);
    q_ve_ = exchange_legs(r_ev_, d, n) * r_ve_;

    trq_ = quantum_trace_coords(n);
    gen_basis_ = lie_generators(n);
    Mat bfull(d, d);
    for (int i = 0; i < dim_l_; ++i) bfull.row_mut(i) = gen_basis_.row(i);
    for (int i = 0; i < d; ++i)
        if (!is_zero(trq_[i])) bfull.row_mut(dim_l_).push_back({i, trq_[i]});
    proj_ = inverse(bfull.transpose()).block(0, 0, dim_l_, d);

    // raw adjoint contraction: phi (x) chi -> pi_E(f(phi)) chi
    bracket_ee_ = Mat(d, d * d);
    for (int r = 0; r < q_ve_.rows(); ++r) {
        int a = r / d, p = r % d;
        for (const auto& [col, val] : q_ve_.row(r)) {
            int b = col / d, s = col % d;
            bracket_ee_.add_to(p, (a * n + b) * d + s, val);
        }
    }

    // traceless projection T phi = phi - phi(id) Tr
    Mat t = Mat::identity(d);
    for (int a = 0; a < n; ++a)
        for (int uv = 0; uv < d; ++uv)
            if (!is_zero(trq_[uv])) t.add_to(uv, a * n + a, -trq_[uv]);

    // leg blocks of the E-side R-matrices, indexed by the V-leg entry (c,d)
    std::vector<Mat> xb(n * n, Mat(d, d)), yb(n * n, Mat(d, d));
    auto split_blocks = [&](const Mat& m, std::vector<Mat>& out) {
        for (int r = 0; r < m.rows(); ++r) {
            int p = r / n, c = r % n;
            for (const auto& [col, val] : m.row(r)) out[c * n + col % n].add_to(p, col / n, val);
        }
    };
    split_blocks(r_ev_, xb);
    split_blocks(exchange_legs(r_ve_, n, d), yb);

    // sigma'(phi (x) chi) = sum (X[cd] Y[ef] chi) (x) traceless(psi), where
    // psi_{uv} = [u=d][v=e] phi_{cf}; the column of the second factor is the
    // T-column at (d,e), placed at input coordinate (c,f).
    Mat acc(d * d, d * d);
    for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd)
            for (int e2 = 0; e2 < n; ++e2)
                for (int f2 = 0; f2 < n; ++f2) {
                    Mat m = xb[c * n + dd] * yb[e2 * n + f2];
                    if (m.is_zero_matrix()) continue;
                    int tcol = dd * n + e2, icol = c * n + f2;
                    // gather the T-column
                    std::vector<std::pair<int, RatFunc>> col_entries;
                    for (int r = 0; r < d; ++r) {
                        RatFunc tv = t.get(r, tcol);
                        if (!is_zero(tv)) col_entries.push_back({r, tv});
                    }
                    for (int i = 0; i < m.rows(); ++i)
                        for (const auto& [j, mv] : m.row(i))
                            for (const auto& [tr, tv] : col_entries)
                                acc.add_to(i * d + tr, j * d + icol, mv * tv);
                }
    sigma_ee_ = acc * swap_legs<RatFunc>(d, d);

    Mat incl2 = kron(gen_basis_.transpose(), gen_basis_.transpose());
    sigma_ = kron(proj_, proj_) * sigma_ee_ * incl2;
    bracket_ = proj_ * bracket_ee_ * incl2 * (RatFunc(1) / q_minus_qinv());

    for (size_t i = 0; i < endv_.e.size(); ++i) {
        act_e_.push_back(proj_ * endv_.e[i] * gen_basis_.transpose());
        act_f_.push_back(proj_ * endv_.f[i] * gen_basis_.transpose());
        act_k_.push_back(proj_ * endv_.k[i] * gen_basis_.transpose());
        act_kinv_.push_back(proj_ * endv_.kinv[i] * gen_basis_.transpose());
    }
}

std::vector<RatFunc> QuantumLie::generator(int a) const {
    std::vector<RatFunc> phi(n_ * n_, RatFunc(0));
    for (const auto& [j, v] : gen_basis_.row(a)) phi[j] = v;
    return phi;
}

Rep QuantumLie::adjoint_rep() const {
    Rep r;
    r.n = n_;
    r.dim = dim_l_;
    r.label = "L";
    r.e = act_e_;
    r.f = act_f_;
    r.k = act_k_;
    r.kinv = act_kinv_;
    return r;
}

Mat QuantumLie::realize_generator(int a, const Word& word) {
    Mat m = f_map(fused_, generator(a), word) * (RatFunc(1) / q_minus_qinv());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            if (!regular_at(v, Rat(1))) throw error("generator not divisible");
    return m;
}

Horizon build_horizon(QuantumLie& ql, int K) {
    Horizon h;
    h.K = K;
    std::vector<Word> words;
    Word w;
    for (int k = 0; k <= K; ++k) {
        words.push_back(w);
        w.push_back(LegV);
    }
    int g = ql.dim_l();
    h.c = Mat(0, 0);
    h.c_inv = Mat(0, 0);
    h.xhat.assign(g, Mat(0, 0));
    for (const auto& word : words) {
        Mat cb = c_v(ql.fused(), word);
        h.c = direct_sum(h.c, cb);
        h.c_inv = direct_sum(h.c_inv, c_v_inverse(cb));
        for (int a = 0; a < g; ++a) h.xhat[a] = direct_sum(h.xhat[a], ql.realize_generator(a, word));
    }
    h.dim = h.c.rows();
    for (int a = 0; a < g; ++a) h.xtilde.push_back(h.c_inv * h.xhat[a]);
    return h;
}

namespace {

// column-indexed view of an operator: for input column j, the list of
// (output row, coefficient)
std::vector<std::vector<std::pair<int, RatFunc>>> columns_of(const Mat& m) {
    std::vector<std::vector<std::pair<int, RatFunc>>> cols(m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) cols[j].push_back({i, v});
    return cols;
}

// number of basis pairs whose defining-relation residual vanishes
int count_zero_residuals(const std::vector<Mat>& x, const Mat* cmat, const Mat& sigma,
                         const Mat& bracket) {
    int g = static_cast<int>(x.size());
    std::vector<Mat> prod(g * g);
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) prod[a * g + b] = x[a] * x[b];
    std::vector<Mat> lin(g);
    for (int c = 0; c < g; ++c) lin[c] = cmat ? x[c] * (*cmat) : x[c];
    auto scols = columns_of(sigma);
    auto bcols = columns_of(bracket);
    int zero = 0;
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) {
            Mat res = prod[a * g + b];
            for (const auto& [cd, v] : scols[a * g + b]) res = res - prod[cd] * v;
            for (const auto& [c, v] : bcols[a * g + b]) res = res - lin[c] * v;
            if (res.is_zero_matrix()) ++zero;
        }
    return zero;
}

} // namespace

std::vector<GradedCert> verify_relations(QuantumLie& ql, int K) {
    int g = ql.dim_l();
    std::vector<GradedCert> certs;
    Horizon h = build_horizon(ql, K);
    certs.push_back(make_cert("relations: product-form residuals zero (horizon K)", K, g * g,
                              count_zero_residuals(h.xhat, &h.c, ql.sigma(), ql.bracket())));
    certs.push_back(make_cert("relations: normalized-form residuals zero (horizon K)", K, g * g,
                              count_zero_residuals(h.xtilde, nullptr, ql.sigma(), ql.bracket())));
    Horizon h2 = build_horizon(ql, K + 1);
    certs.push_back(make_cert("relations: product-form residuals zero (horizon K+1)", K + 1, g * g,
                              count_zero_residuals(h2.xhat, &h2.c, ql.sigma(), ql.bracket())));
    certs.push_back(make_cert("relations: normalized-form residuals zero (horizon K+1)", K + 1,
                              g * g,
                              count_zero_residuals(h2.xtilde, nullptr, ql.sigma(), ql.bracket())));
    return certs;
}

std::vector<GradedCert> re_algebra_cross_check(QuantumLie& ql, int K) {
    int g = ql.dim_l();
    std::vector<GradedCert> certs;
    Horizon h = build_horizon(ql, K);

    // centrality of the Casimir against the normalized generators
    bool central = true;
    for (int a = 0; a < g; ++a)
        if (h.c * h.xtilde[a] != h.xtilde[a] * h.c) central = false;
    certs.push_back(make_bool_cert("cross-check: Casimir centrality in realization", K, central));

    // full degree-2 dependency kernel among products, generators, identity
    std::vector<typename Mat::Row> rows;
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) rows.push_back((h.xtilde[a] * h.xtilde[b]).vectorize());
    for (int c = 0; c < g; ++c) rows.push_back(h.xtilde[c].vectorize());
    rows.push_back(Mat::identity(h.dim).vectorize());
    Mat stacked = Mat::from_rows(std::move(rows), h.dim * h.dim);
    Sub dep = kernel(stacked.transpose());
    long long expected = static_cast<long long>(g) * (g - 1) / 2;
    certs.push_back(
        make_cert("cross-check: degree-2 relation space dimension", 2, expected, dep.dim()));

    // quadratic parts must span Im(id - sigma)
    std::vector<typename Mat::Row> quads;
    for (int i = 0; i < dep.dim(); ++i) {
        typename Mat::Row r;
        for (const auto& [j, v] : dep.basis().row(i))
            if (j < g * g) r.push_back({j, v});
        quads.push_back(std::move(r));
    }
    Sub quad_span = Sub::from_rows(Mat::from_rows(std::move(quads), g * g));
    Sub v2 = Sub::from_rows((Mat::identity(g * g) - ql.sigma()).transpose());
    certs.push_back(
        make_bool_cert("cross-check: quadratic parts equal Im(id - sigma)", 2, quad_span == v2));
    return certs;
}

} // namespace qde
