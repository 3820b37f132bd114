/**
 * @file rep.hpp
 * @brief Finite-dimensional modules over the quantized enveloping algebra
 *        of sl(n): generator actions, coproduct fusion, duals, the dual of
 *        End(V), the vector R-matrix and its fused relatives, quantum trace
 *        and invariant subspaces.
 *
 * Conventions (fixed once, everything downstream is covariant in them):
 *   Delta(E) = E (x) 1 + K (x) E,  Delta(F) = F (x) K^-1 + 1 (x) F,
 *   Delta(K) = K (x) K,  gamma(E) = -K^-1 E,  gamma(F) = -F K,
 *   gamma(K) = K^-1.
 */
#ifndef QDE_REP_HPP
#define QDE_REP_HPP

#include <qde/linalg.hpp>

#include <map>
#include <string>

namespace qde {

using Mat = Matrix<RatFunc>;
using Sub = Subspace<RatFunc>;

struct Rep {
    int n = 0;   // rank parameter of sl(n)
    int dim = 0;
    std::vector<Mat> e, f, k, kinv; // indexed by simple root 0..n-2
    std::string label;
};

// Tensor word letters.
enum Leg : int { LegV = 0, LegVDual = 1 };
using Word = std::vector<int>;

std::string word_label(const Word& w);

Rep trivial_rep(int n);
Rep vector_rep(int n);
Rep tensor_rep(const Rep& a, const Rep& b);
Rep dual_rep(const Rep& a);
Rep word_rep(int n, const Word& w);
// End(V)^* with (x phi)(a) = phi(gamma(x_(1)) a x_(2)); dimension n^2,
// coordinates phi_{ab} = phi(e_ab) indexed row-major.
Rep endv_dual_rep(int n);

// Defining relations of the quantized Serre-free presentation, checked
// exactly on a constructed module.
bool check_rep_relations(const Rep& r);

// Diagonal of the pivotal element: q^{n-1}, q^{n-3}, ..., q^{1-n}.
std::vector<RatFunc> pivotal_weights(int n);

// Tr(a) = tr(u a) / tr(u), the unique invariant functional normalized
// with Tr(id) = 1.
RatFunc quantum_trace(int n, const Mat& a);
// Coordinates of Tr as an element of End(V)^*.
std::vector<RatFunc> quantum_trace_coords(int n);

// Vector R-matrix on V (x) V. The orientation of the off-diagonal
// nilpotent term is solved from the intertwining contract rather than
// asserted.
Mat r_matrix(int n);

// Joint invariants: v with e v = 0, f v = 0, k v = v.
Sub invariants(const Rep& r);

// Action of the opposite coproduct on a (x) b: tau Delta(x) tau.
Rep opposite_tensor_rep(const Rep& a, const Rep& b);

/// Fused R-matrices for tensor words in {V, V*}, built recursively from
/// the vector R-matrix by the coproduct fusion rules and, for dual legs,
/// the antipode partial transposes. Caches per word pair.
class FusedR {
public:
    explicit FusedR(int n, RatFunc base_scale = RatFunc(1));

    int n() const { return n_; }
    int word_dim(const Word& w) const;

    const Mat& r(const Word& a, const Word& b);
    const Mat& r_inv(const Word& a, const Word& b);

private:
    Mat compute_r(const Word& a, const Word& b);
    Mat compute_r_inv(const Word& a, const Word& b);

    int n_;
    Mat base_, base_inv_;
    Mat g_, g_inv_; // rho of the grouplike implementing gamma^2 = Ad(g)
    std::map<std::pair<Word, Word>, Mat> cache_r_, cache_r_inv_;
};

} // namespace qde

#endif
