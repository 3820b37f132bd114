/**
 * @file linalg.hpp
 * @brief Reduced row echelon form, kernels and the subspace lattice.
 *
 * The pivot rule is fixed (leftmost nonzero column, first nonzero row)
 * so every reduced form, kernel basis and certificate is reproducible
 * byte for byte.
 */
#ifndef QDE_LINALG_HPP
#define QDE_LINALG_HPP

#include <qde/matrix.hpp>

namespace qde {

template <class F>
struct RrefResult {
    int rank = 0;
    Matrix<F> reduced;
    std::vector<int> pivots; // strictly increasing pivot columns
};

namespace detail {

// row -= f * pivot_row, merging sorted sparse rows
template <class F>
void axpy_row(typename Matrix<F>::Row& row, const F& f, const typename Matrix<F>::Row& pivot_row) {
    typename Matrix<F>::Row out;
    out.reserve(row.size() + pivot_row.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < pivot_row.size()) {
        if (b == pivot_row.size() || (a < row.size() && row[a].first < pivot_row[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || pivot_row[b].first < row[a].first) {
            out.push_back({pivot_row[b].first, -(f * pivot_row[b].second)});
            ++b;
        } else {
            F v = row[a].second - f * pivot_row[b].second;
            if (!is_zero(v)) out.push_back({row[a].first, std::move(v)});
            ++a;
            ++b;
        }
    }
    row = std::move(out);
}

template <class F>
F coeff_at(const typename Matrix<F>::Row& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : F(0);
}

} // namespace detail

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    std::vector<typename Matrix<F>::Row> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    RrefResult<F> res;
    int next = 0; // next pivot row slot
    for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
        int p = -1;
        for (int i = next; i < m.rows(); ++i) {
            if (!rows[i].empty() && rows[i].front().first == c) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[next], rows[p]);
        // normalize pivot row
        F inv = F(1) / rows[next].front().second;
        for (auto& e : rows[next]) e.second = e.second * inv;
        // eliminate the column everywhere else
        for (int i = 0; i < m.rows(); ++i) {
            if (i == next) continue;
            F f = detail::coeff_at<F>(rows[i], c);
            if (!is_zero(f)) detail::axpy_row<F>(rows[i], f, rows[next]);
        }
        res.pivots.push_back(c);
        ++next;
    }
    res.rank = next;
    res.reduced = Matrix<F>::from_rows(std::move(rows), m.cols());
    return res;
}

template <class F>
int rank(const Matrix<F>& m) { return rref(m).rank; }

/// Row-reduced basis of a subspace; equality of subspaces is equality
/// of the reduced matrices.
template <class F>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace from_rows(const Matrix<F>& rows) {
        auto r = rref(rows);
        Subspace s;
        s.ambient_ = rows.cols();
        s.basis_ = r.reduced.block(0, 0, r.rank, rows.cols());
        s.pivots_ = std::move(r.pivots);
        return s;
    }
    static Subspace zero(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<F>(0, ambient);
        return s;
    }
    static Subspace full(int ambient) { return from_rows(Matrix<F>::identity(ambient)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // residual of v after reduction against the basis; zero iff v is a member
    typename Matrix<F>::Row reduce(typename Matrix<F>::Row v) const {
        for (int i = 0; i < basis_.rows(); ++i) {
            F f = detail::coeff_at<F>(v, pivots_[i]);
            if (!is_zero(f)) detail::axpy_row<F>(v, f, basis_.row(i));
        }
        return v;
    }
    bool contains(const typename Matrix<F>::Row& v) const { return reduce(v).empty(); }
    bool contains(const Subspace& o) const {
        for (int i = 0; i < o.basis_.rows(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    // coordinates of a member vector in the reduced basis
    std::vector<F> coords(const typename Matrix<F>::Row& v) const {
        std::vector<F> c(basis_.rows(), F(0));
        for (size_t i = 0; i < pivots_.size(); ++i)
            c[i] = detail::coeff_at<F>(v, pivots_[i]);
        return c;
    }

private:
    int ambient_;
    Matrix<F> basis_;
    std::vector<int> pivots_;
};

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    auto r = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int p : r.pivots) is_pivot[p] = 1;
    std::vector<typename Matrix<F>::Row> rows;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        typename Matrix<F>::Row v;
        for (int i = 0; i < r.rank; ++i) {
            F c = detail::coeff_at<F>(r.reduced.row(i), f);
            if (!is_zero(c)) v.push_back({r.pivots[i], -c});
        }
        v.push_back({f, F(1)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(v));
    }
    return Subspace<F>::from_rows(Matrix<F>::from_rows(std::move(rows), m.cols()));
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error("ambient dimension mismatch");
    Matrix<F> stacked(a.dim() + b.dim(), a.ambient_dim());
    for (int i = 0; i < a.dim(); ++i) stacked.row_mut(i) = a.basis().row(i);
    for (int i = 0; i < b.dim(); ++i) stacked.row_mut(a.dim() + i) = b.basis().row(i);
    return Subspace<F>::from_rows(stacked);
}

// Zassenhaus: rref of [[A|A],[B|0]]; zero-left rows carry the intersection.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error("ambient dimension mismatch");
    int n = a.ambient_dim();
    Matrix<F> stacked(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i) {
        auto& row = stacked.row_mut(i);
        row = a.basis().row(i);
        for (const auto& [j, v] : a.basis().row(i)) row.push_back({n + j, v});
    }
    for (int i = 0; i < b.dim(); ++i) stacked.row_mut(a.dim() + i) = b.basis().row(i);
    auto r = rref(stacked);
    std::vector<typename Matrix<F>::Row> rows;
    for (int i = 0; i < r.rank; ++i) {
        const auto& row = r.reduced.row(i);
        if (!row.empty() && row.front().first >= n) {
            typename Matrix<F>::Row v;
            for (const auto& [j, val] : row) v.push_back({j - n, val});
            rows.push_back(std::move(v));
        }
    }
    return Subspace<F>::from_rows(Matrix<F>::from_rows(std::move(rows), n));
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        auto& row = aug.row_mut(i);
        row = m.row(i);
        row.push_back({n + i, F(1)});
    }
    auto r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] >= n) throw error("matrix not invertible");
    return r.reduced.block(0, n, n, n);
}

// Inverse through the minimal polynomial; efficient when the operator is
// semisimple with few eigenvalues (quantum Casimir blocks).
template <class F>
Matrix<F> inverse_via_minpoly(const Matrix<F>& m) {
    int n = m.rows();
    std::vector<Matrix<F>> powers{Matrix<F>::identity(n)};
    std::vector<typename Matrix<F>::Row> vecs{powers[0].vectorize()};
    for (;;) {
        powers.push_back(powers.back() * m);
        vecs.push_back(powers.back().vectorize());
        Matrix<F> stacked = Matrix<F>::from_rows(vecs, n * n);
        auto ker = kernel(stacked.transpose());
        if (ker.dim() > 0) {
            // dependence c_0 I + c_1 M + ... + c_k M^k = 0 with c_k != 0
            auto dep = ker.basis().row(0);
            std::vector<F> c(powers.size(), F(0));
            for (const auto& [j, v] : dep) c[j] = v;
            if (is_zero(c[0])) throw error("matrix not invertible");
            Matrix<F> acc(n, n);
            for (size_t j = 1; j < c.size(); ++j) acc = acc + powers[j - 1] * c[j];
            return acc * (F(-1) / c[0]);
        }
    }
}

} // namespace qde

#endif
