/**
 * @file matrix.hpp
 * @brief Sparse exact matrices over a scalar field.
 *
 * Rows are kept as column-sorted (index, value) pairs with no stored
 * zeros. The Kronecker index convention is row-major:
 * (i, j) -> i * dim_b + j, so (a (x) b)(v (x) w) = av (x) bw.
 */
#ifndef QDE_MATRIX_HPP
#define QDE_MATRIX_HPP

#include <qde/scalars.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace qde {

template <class F>
class Matrix {
public:
    using Entry = std::pair<int, F>;
    using Row = std::vector<Entry>;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].push_back({i, F(1)});
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i)
            if (!is_zero(d[i])) m.data_[i].push_back({static_cast<int>(i), d[i]});
        return m;
    }
    static Matrix from_dense(const std::vector<std::vector<F>>& d) {
        Matrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = 0; j < d[i].size(); ++j)
                if (!is_zero(d[i][j])) m.data_[i].push_back({static_cast<int>(j), d[i][j]});
        return m;
    }
    static Matrix from_rows(std::vector<Row> rows, int cols) {
        Matrix m;
        m.rows_ = static_cast<int>(rows.size());
        m.cols_ = cols;
        m.data_ = std::move(rows);
        for (auto& r : m.data_)
            std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int i) const { return data_[i]; }
    Row& row_mut(int i) { return data_[i]; }

    F get(int i, int j) const {
        const Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, int c) { return e.first < c; });
        return (it != r.end() && it->first == j) ? it->second : F(0);
    }
    void set(int i, int j, F v) {
        Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, int c) { return e.first < c; });
        if (it != r.end() && it->first == j) {
            if (is_zero(v)) r.erase(it);
            else it->second = std::move(v);
        } else if (!is_zero(v)) {
            r.insert(it, {j, std::move(v)});
        }
    }
    void add_to(int i, int j, const F& v) {
        if (is_zero(v)) return;
        Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, int c) { return e.first < c; });
        if (it != r.end() && it->first == j) {
            it->second += v;
            if (is_zero(it->second)) r.erase(it);
        } else {
            r.insert(it, {j, v});
        }
    }

    std::int64_t nnz() const {
        std::int64_t n = 0;
        for (const auto& r : data_) n += static_cast<std::int64_t>(r.size());
        return n;
    }
    bool is_zero_matrix() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& r : m.data_)
            for (auto& e : r) e.second = -e.second;
        return m;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix m = *this;
        for (int i = 0; i < o.rows_; ++i)
            for (const auto& e : o.data_[i]) m.add_to(i, e.first, e.second);
        return m;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }
    Matrix operator*(const F& s) const {
        if (is_zero(s)) return Matrix(rows_, cols_);
        Matrix m = *this;
        for (auto& r : m.data_)
            for (auto& e : r) e.second = e.second * s;
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        Matrix m(rows_, o.cols_);
        std::vector<F> scratch(o.cols_, F(0));
        std::vector<int> touched;
        for (int i = 0; i < rows_; ++i) {
            touched.clear();
            for (const auto& [k, a] : data_[i]) {
                for (const auto& [j, b] : o.data_[k]) {
                    if (is_zero(scratch[j]) ) {
                        if (std::find(touched.begin(), touched.end(), j) == touched.end())
                            touched.push_back(j);
                    }
                    scratch[j] += a * b;
                }
            }
            std::sort(touched.begin(), touched.end());
            Row& out = m.data_[i];
            for (int j : touched) {
                if (!is_zero(scratch[j])) out.push_back({j, scratch[j]});
                scratch[j] = F(0);
            }
        }
        return m;
    }

    std::vector<F> apply_vec(const std::vector<F>& v) const {
        std::vector<F> out(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) out[i] += a * v[j];
        return out;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) m.data_[j].push_back({i, a});
        return m;
    }

    template <class G, class Fn>
    Matrix<G> map(Fn&& fn) const {
        Matrix<G> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) m.set(i, j, fn(a));
        return m;
    }

    // Row-major flat view: entry (i,j) at position i*cols + j of a 1 x (rows*cols) row.
    Row vectorize() const {
        Row out;
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i])
                out.push_back({i * cols_ + j, a});
        return out;
    }

    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (const auto& [j, a] : data_[r0 + i])
                if (j >= c0 && j < c0 + nc) m.data_[i].push_back({j - c0, a});
        return m;
    }

private:
    int rows_, cols_;
    std::vector<Row> data_;
};

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, av] : a.row(i))
            for (int k = 0; k < b.rows(); ++k)
                for (const auto& [l, bv] : b.row(k))
                    m.set(i * b.rows() + k, j * b.cols() + l, av * bv);
    return m;
}

template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) m.set(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) m.set(a.rows() + i, a.cols() + j, v);
    return m;
}

// Swap permutation X (x) Y -> Y (x) X for square leg dimensions.
template <class F>
Matrix<F> swap_legs(int dim_x, int dim_y) {
    Matrix<F> m(dim_x * dim_y, dim_x * dim_y);
    for (int x = 0; x < dim_x; ++x)
        for (int y = 0; y < dim_y; ++y)
            m.set(y * dim_x + x, x * dim_y + y, F(1));
    return m;
}

// Conjugate a matrix on X (x) Y by the flip: returns the matrix of
// (swap) M (swap^-1) on Y (x) X, i.e. the same operator with legs exchanged.
template <class F>
Matrix<F> exchange_legs(const Matrix<F>& m, int dim_x, int dim_y) {
    Matrix<F> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        int x = r / dim_y, y = r % dim_y;
        for (const auto& [c, v] : m.row(r)) {
            int xp = c / dim_y, yp = c % dim_y;
            out.set(y * dim_x + x, yp * dim_x + xp, v);
        }
    }
    return out;
}

// Partial transpose on the first / second leg of a square bipartite operator.
template <class F>
Matrix<F> partial_transpose_first(const Matrix<F>& m, int dim_x, int dim_y) {
    Matrix<F> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        int x = r / dim_y, y = r % dim_y;
        for (const auto& [c, v] : m.row(r)) {
            int xp = c / dim_y, yp = c % dim_y;
            out.set(xp * dim_y + y, x * dim_y + yp, v);
        }
    }
    return out;
}

template <class F>
Matrix<F> partial_transpose_second(const Matrix<F>& m, int dim_x, int dim_y) {
    Matrix<F> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        int x = r / dim_y, y = r % dim_y;
        for (const auto& [c, v] : m.row(r)) {
            int xp = c / dim_y, yp = c % dim_y;
            out.set(x * dim_y + yp, xp * dim_y + y, v);
        }
    }
    return out;
}

// Embed a two-leg operator into a tensor product of square factors,
// acting on legs (i, j), i < j, identity elsewhere.
template <class F>
Matrix<F> embed_two_legs(const Matrix<F>& m, const std::vector<int>& dims, int leg_i, int leg_j) {
    int total = 1;
    for (int d : dims) total *= d;
    int di = dims[leg_i], dj = dims[leg_j];
    // strides in the row-major flattening
    std::vector<int> stride(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
        stride[k] = stride[k + 1] * dims[k + 1];
    // enumerate assignments of the other legs
    std::vector<int> other;
    for (int k = 0; k < static_cast<int>(dims.size()); ++k)
        if (k != leg_i && k != leg_j) other.push_back(k);
    int rest = 1;
    for (int k : other) rest *= dims[k];

    Matrix<F> out(total, total);
    for (int r = 0; r < m.rows(); ++r) {
        int xi = r / dj, xj = r % dj;
        for (const auto& [c, v] : m.row(r)) {
            int yi = c / dj, yj = c % dj;
            for (int a = 0; a < rest; ++a) {
                int base = 0, acc = a;
                for (int t = static_cast<int>(other.size()) - 1; t >= 0; --t) {
                    int k = other[t];
                    base += (acc % dims[k]) * stride[k];
                    acc /= dims[k];
                }
                out.add_to(base + xi * stride[leg_i] + xj * stride[leg_j],
                           base + yi * stride[leg_i] + yj * stride[leg_j], v);
            }
        }
    }
    return out;
}

} // namespace qde

#endif
