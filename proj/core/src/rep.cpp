#include <qde/rep.hpp>

namespace qde {

std::string word_label(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += (w[i] == LegV) ? "V" : "V'";
    }
    return s;
}

Rep trivial_rep(int n) {
    Rep r;
    r.n = n;
    r.dim = 1;
    r.label = "1";
    for (int i = 0; i + 1 < n; ++i) {
        r.e.push_back(Mat(1, 1));
        r.f.push_back(Mat(1, 1));
        r.k.push_back(Mat::identity(1));
        r.kinv.push_back(Mat::identity(1));
    }
    return r;
}

Rep vector_rep(int n) {
    if (n < 2) throw error("rank parameter must be at least 2");
    Rep r;
    r.n = n;
    r.dim = n;
    r.label = "V";
    for (int i = 0; i + 1 < n; ++i) {
        Mat e(n, n), f(n, n);
        e.set(i, i + 1, RatFunc(1));
        f.set(i + 1, i, RatFunc(1));
        std::vector<RatFunc> kd(n, RatFunc(1)), kdinv(n, RatFunc(1));
        kd[i] = q_pow(1);
        kd[i + 1] = q_pow(-1);
        kdinv[i] = q_pow(-1);
        kdinv[i + 1] = q_pow(1);
        r.e.push_back(std::move(e));
        r.f.push_back(std::move(f));
        r.k.push_back(Mat::diagonal(kd));
        r.kinv.push_back(Mat::diagonal(kdinv));
    }
    return r;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
    Rep r;
    r.n = a.n;
    r.dim = a.dim * b.dim;
    r.label = a.label + "*" + b.label;
    Mat ia = Mat::identity(a.dim), ib = Mat::identity(b.dim);
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e.push_back(kron(a.e[i], ib) + kron(a.k[i], b.e[i]));
        r.f.push_back(kron(a.f[i], b.kinv[i]) + kron(ia, b.f[i]));
        r.k.push_back(kron(a.k[i], b.k[i]));
        r.kinv.push_back(kron(a.kinv[i], b.kinv[i]));
    }
    return r;
}

Rep dual_rep(const Rep& a) {
    Rep r;
    r.n = a.n;
    r.dim = a.dim;
    r.label = a.label + "'";
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e.push_back((-(a.kinv[i] * a.e[i])).transpose());
        r.f.push_back((-(a.f[i] * a.k[i])).transpose());
        r.k.push_back(a.kinv[i].transpose());
        r.kinv.push_back(a.k[i].transpose());
    }
    return r;
}

Rep word_rep(int n, const Word& w) {
    Rep r = trivial_rep(n);
    Rep v = vector_rep(n);
    Rep vd = dual_rep(v);
    bool first = true;
    for (int leg : w) {
        const Rep& next = (leg == LegV) ? v : vd;
        r = first ? next : tensor_rep(r, next);
        first = false;
    }
    r.label = word_label(w);
    return r;
}

Rep opposite_tensor_rep(const Rep& a, const Rep& b) {
    Rep ba = tensor_rep(b, a);
    Rep r;
    r.n = a.n;
    r.dim = a.dim * b.dim;
    r.label = "op(" + a.label + "*" + b.label + ")";
    for (size_t i = 0; i < ba.e.size(); ++i) {
        r.e.push_back(exchange_legs(ba.e[i], b.dim, a.dim));
        r.f.push_back(exchange_legs(ba.f[i], b.dim, a.dim));
        r.k.push_back(exchange_legs(ba.k[i], b.dim, a.dim));
        r.kinv.push_back(exchange_legs(ba.kinv[i], b.dim, a.dim));
    }
    return r;
}

namespace {

// (Lam_b phi)_{cd} = sum_a b_{ac} phi_{ad}: dual of left multiplication.
Mat lam(const Mat& b) { return kron(b.transpose(), Mat::identity(b.rows())); }
// (Rho_c phi)_{ab} = sum_d c_{bd} phi_{ad}: dual of right multiplication.
Mat rho(const Mat& c) { return kron(Mat::identity(c.rows()), c); }

} // namespace

Rep endv_dual_rep(int n) {
    Rep v = vector_rep(n);
    Rep r;
    r.n = n;
    r.dim = n * n;
    r.label = "End(V)'";
    for (int i = 0; i + 1 < n; ++i) {
        // (x phi)(a) = phi(gamma(x_(1)) a x_(2))
        r.e.push_back(-lam(v.kinv[i] * v.e[i]) + lam(v.kinv[i]) * rho(v.e[i]));
        r.f.push_back(-(lam(v.f[i] * v.k[i]) * rho(v.kinv[i])) + rho(v.f[i]));
        r.k.push_back(lam(v.kinv[i]) * rho(v.k[i]));
        r.kinv.push_back(lam(v.k[i]) * rho(v.kinv[i]));
    }
    return r;
}

bool check_rep_relations(const Rep& r) {
    int m = static_cast<int>(r.e.size());
    Mat id = Mat::identity(r.dim);
    RatFunc s = q_minus_qinv();
    auto qa = [](int i, int j) {
        if (i == j) return 2;
        return (i == j + 1 || j == i + 1) ? -1 : 0;
    };
    for (int i = 0; i < m; ++i) {
        if (r.k[i] * r.kinv[i] != id) return false;
        for (int j = 0; j < m; ++j) {
            if (r.k[i] * r.k[j] != r.k[j] * r.k[i]) return false;
            if (r.k[i] * r.e[j] * r.kinv[i] != r.e[j] * q_pow(qa(i, j))) return false;
            if (r.k[i] * r.f[j] * r.kinv[i] != r.f[j] * q_pow(-qa(i, j))) return false;
            Mat comm = r.e[i] * r.f[j] - r.f[j] * r.e[i];
            if (i == j) {
                if (comm * s != r.k[i] - r.kinv[i]) return false;
            } else {
                if (!comm.is_zero_matrix()) return false;
            }
            if (qa(i, j) == 0 && i != j) {
                if (r.e[i] * r.e[j] != r.e[j] * r.e[i]) return false;
                if (r.f[i] * r.f[j] != r.f[j] * r.f[i]) return false;
            }
            if (qa(i, j) == -1) {
                RatFunc two = q_int(2);
                Mat se = r.e[i] * r.e[i] * r.e[j] - r.e[i] * r.e[j] * r.e[i] * two +
                         r.e[j] * r.e[i] * r.e[i];
                Mat sf = r.f[i] * r.f[i] * r.f[j] - r.f[i] * r.f[j] * r.f[i] * two +
                         r.f[j] * r.f[i] * r.f[i];
                if (!se.is_zero_matrix() || !sf.is_zero_matrix()) return false;
            }
        }
    }
    return true;
}

std::vector<RatFunc> pivotal_weights(int n) {
    std::vector<RatFunc> w;
    for (int i = 0; i < n; ++i) w.push_back(q_pow(n - 1 - 2 * i));
    return w;
}

RatFunc quantum_trace(int n, const Mat& a) {
    auto u = pivotal_weights(n);
    RatFunc num(0), den(0);
    for (int i = 0; i < n; ++i) {
        num += u[i] * a.get(i, i);
        den += u[i];
    }
    return num / den;
}

std::vector<RatFunc> quantum_trace_coords(int n) {
    auto u = pivotal_weights(n);
    RatFunc den(0);
    for (int i = 0; i < n; ++i) den += u[i];
    std::vector<RatFunc> c(n * n, RatFunc(0));
    for (int i = 0; i < n; ++i) c[i * n + i] = u[i] / den;
    return c;
}

Sub invariants(const Rep& r) {
    int m = static_cast<int>(r.e.size());
    Mat stacked(3 * m * r.dim, r.dim);
    Mat id = Mat::identity(r.dim);
    int at = 0;
    auto put = [&](const Mat& x) {
        for (int i = 0; i < r.dim; ++i) stacked.row_mut(at++) = x.row(i);
    };
    for (int i = 0; i < m; ++i) {
        put(r.e[i]);
        put(r.f[i]);
        put(r.k[i] - id);
    }
    return kernel(stacked);
}

namespace {

Mat r_candidate(int n, bool lower) {
    Mat r(n * n, n * n);
    RatFunc q = q_pow(1), s = q_minus_qinv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.set(i * n + j, i * n + j, i == j ? q : RatFunc(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool pick = lower ? (i > j) : (i < j);
            if (pick) r.add_to(i * n + j, j * n + i, s);
        }
    return r;
}

bool intertwines(const Mat& r, const Rep& d, const Rep& dop) {
    for (size_t i = 0; i < d.e.size(); ++i) {
        if (r * d.e[i] != dop.e[i] * r) return false;
        if (r * d.f[i] != dop.f[i] * r) return false;
        if (r * d.k[i] != dop.k[i] * r) return false;
    }
    return true;
}

} // namespace

Mat r_matrix(int n) {
    Rep v = vector_rep(n);
    Rep d = tensor_rep(v, v);
    Rep dop = opposite_tensor_rep(v, v);
    for (bool lower : {false, true}) {
        Mat r = r_candidate(n, lower);
        if (intertwines(r, d, dop)) return r;
    }
    throw error("no R-matrix orientation intertwines the coproducts");
}

FusedR::FusedR(int n, RatFunc base_scale) : n_(n) {
    base_ = r_matrix(n) * base_scale;
    base_inv_ = inverse(base_);
    // gamma^2 = Ad(g) with rho(g) diagonal q^{1-n}, q^{3-n}, ..., q^{n-1}
    std::vector<RatFunc> gd, gdi;
    for (int i = 0; i < n; ++i) {
        gd.push_back(q_pow(1 - n + 2 * i));
        gdi.push_back(q_pow(n - 1 - 2 * i));
    }
    g_ = Mat::diagonal(gd);
    g_inv_ = Mat::diagonal(gdi);
}

int FusedR::word_dim(const Word& w) const {
    int d = 1;
    for (size_t i = 0; i < w.size(); ++i) d *= n_;
    return d;
}

const Mat& FusedR::r(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_r_.find(key);
    if (it == cache_r_.end()) it = cache_r_.emplace(key, compute_r(a, b)).first;
    return it->second;
}

const Mat& FusedR::r_inv(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_r_inv_.find(key);
    if (it == cache_r_inv_.end()) it = cache_r_inv_.emplace(key, compute_r_inv(a, b)).first;
    return it->second;
}

Mat FusedR::compute_r(const Word& a, const Word& b) {
    if (a.empty() || b.empty()) return Mat::identity(word_dim(a) * word_dim(b));
    if (a.size() > 1) {
        // (Delta (x) 1) R = R13 R23
        Word a0{a[0]}, rest(a.begin() + 1, a.end());
        std::vector<int> dims{n_, word_dim(rest), word_dim(b)};
        return embed_two_legs(r(a0, b), dims, 0, 2) * embed_two_legs(r(rest, b), dims, 1, 2);
    }
    if (b.size() > 1) {
        // (1 (x) Delta) R = R13 R12
        Word b0{b[0]}, rest(b.begin() + 1, b.end());
        std::vector<int> dims{word_dim(a), n_, word_dim(rest)};
        return embed_two_legs(r(a, rest), dims, 0, 2) * embed_two_legs(r(a, b0), dims, 0, 1);
    }
    if (a[0] == LegV && b[0] == LegV) return base_;
    if (a[0] == LegVDual) {
        // (gamma (x) 1) R = R^-1
        return partial_transpose_first(r_inv(Word{LegV}, b), n_, word_dim(b));
    }
    // (1 (x) gamma) R = (1 (x) gamma^2) R^-1
    Mat m = kron(Mat::identity(n_), g_) * base_inv_ * kron(Mat::identity(n_), g_inv_);
    return partial_transpose_second(m, n_, n_);
}

Mat FusedR::compute_r_inv(const Word& a, const Word& b) {
    if (a.empty() || b.empty()) return Mat::identity(word_dim(a) * word_dim(b));
    if (a.size() > 1) {
        Word a0{a[0]}, rest(a.begin() + 1, a.end());
        std::vector<int> dims{n_, word_dim(rest), word_dim(b)};
        return embed_two_legs(r_inv(rest, b), dims, 1, 2) * embed_two_legs(r_inv(a0, b), dims, 0, 2);
    }
    if (b.size() > 1) {
        Word b0{b[0]}, rest(b.begin() + 1, b.end());
        std::vector<int> dims{word_dim(a), n_, word_dim(rest)};
        return embed_two_legs(r_inv(a, b0), dims, 0, 1) * embed_two_legs(r_inv(a, rest), dims, 0, 2);
    }
    if (a[0] == LegV && b[0] == LegV) return base_inv_;
    if (a[0] == LegVDual) {
        // (gamma (x) 1) R^-1 = (gamma^2 (x) 1) R
        Mat m = kron(g_, Mat::identity(word_dim(b))) * r(Word{LegV}, b) *
                kron(g_inv_, Mat::identity(word_dim(b)));
        return partial_transpose_first(m, n_, word_dim(b));
    }
    // (1 (x) gamma) R^-1 = R
    return partial_transpose_second(base_, n_, n_);
}

} // namespace qde
