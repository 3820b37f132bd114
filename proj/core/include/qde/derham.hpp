/**
 * @file derham.hpp
 * @brief The quantum de Rham complex on the quantum Lie algebra: realized
 *        symmetric and antisymmetric components of the tensor algebra with
 *        their quotient bijections, the braided product on the form
 *        algebra, the differential, and the d^2 = 0 / exactness
 *        certificates.
 */
#ifndef QDE_DERHAM_HPP
#define QDE_DERHAM_HPP

#include <qde/graded.hpp>

#include <map>
#include <utility>

namespace qde {

enum class PartKind { Sym, Ext };

// A basis of the same subspace whose rows stay linearly independent at
// q = 1: invertible row operations over Q(q) only, so the span is kept.
Mat flat_basis(const Sub& s);

/// A component of the quadratic algebra realized inside the tensor power:
/// the subspace, the quotient projection onto component coordinates, and
/// its right inverse (the realization map).
struct RealizedComponent {
    PartKind kind = PartKind::Sym;
    int degree = 0;
    Sub space;    // subspace of L^{(x) degree}
    Mat proj;     // dim x g^degree; projection along the relation slabs
    Mat proj_inv; // g^degree x dim; proj * proj_inv = identity
};

/// Element of the form algebra in bidegree (k, m): a vector in the
/// realization W^k (x) V^m.
struct OmegaElement {
    int k = 0;
    int m = 0;
    std::vector<RatFunc> coords;
};

class DeRhamComplex {
public:
    explicit DeRhamComplex(QuantumLie& ql);

    int gen_dim() const { return g_; }
    const Sub& v2() const { return v2_; }
    const Sub& w2() const { return w2_; }
    const Mat& r_ll() const { return r_ll_; }

    const RealizedComponent& component(PartKind kind, int degree);
    long long bidegree_dim(int k, int m);

    // Coordinate matrix of d from (k, m) to (k - 1, m + 1), k >= 1.
    const Mat& differential(int k, int m);
    // Whether the leg-transfer image escaped the target realization and the
    // invariant projection was composed in (reported, not presupposed).
    bool differential_projected(int k, int m);

    // Restriction of the fused R-matrix to L^{(x) a} (x) L^{(x) b}.
    const Mat& r_power(int a, int b);
    // Braided exchange V-part (x) W-part -> W-part (x) V-part used by the
    // product: flip composed with the fused R.
    Mat leg_exchange(int m, int k);

    OmegaElement unit() const;
    OmegaElement basis_element(int k, int m, int index);
    OmegaElement product(const OmegaElement& x, const OmegaElement& y);
    OmegaElement d(const OmegaElement& x);

    // Number of nonzero coordinates of d(xy) - (dx y + (-1)^{m_x} x dy).
    // The graded Leibniz rule is measured and reported, never assumed.
    long long leibniz_defect(const OmegaElement& x, const OmegaElement& y);

    std::vector<GradedCert> d_squared_cert(int k_max, int m_max);
    std::vector<GradedCert> exactness_cert(int total_max);

private:
    Mat build_differential(int k, int m, bool& projected);

    QuantumLie& ql_;
    int g_;
    Sub v2_, w2_;
    Mat r_ll_;
    std::map<std::pair<int, int>, RealizedComponent> comps_;
    std::map<std::pair<int, int>, Mat> diffs_;
    std::map<std::pair<int, int>, bool> diff_projected_;
    std::map<std::pair<int, int>, Mat> rpow_;
};

} // namespace qde

#endif
