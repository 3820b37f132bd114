/**
 * @file graded.hpp
 * @brief Quadratic / quadratic-linear graded algebra engine: relation
 *        subspaces, graded dimensions, PBW certificates, the deformed
 *        Killing form, the symmetric complement and the involution
 *        built from it.
 */
#ifndef QDE_GRADED_HPP
#define QDE_GRADED_HPP

#include <qde/cert.hpp>
#include <qde/qlie.hpp>

#include <optional>
#include <string>

namespace qde {

/// Quadratic relation data for T(L)/<rel2>, optionally with a linear part
/// (the quadratic-linear family; the linear map is scaled by t at use sites).
struct QuadraticData {
    int gen_dim = 0;
    Sub rel2;                      // subspace of L (x) L
    std::optional<Mat> linear_part; // map L (x) L -> L applied to rel2
    std::string label;
};

// rel2 = Im(id - sigma); dimension must be C(gen_dim, 2).
QuadraticData sym_relations(const QuantumLie& ql);

// rel2 = the symmetric complement w2; no linear part.
QuadraticData ext_relations(const QuantumLie& ql, const Sub& w2);

// The invariant bilinear form on L, normalized so its q = 1 limit is the
// classical Killing form of the generator basis. Throws
// "invariant form not unique" if the invariance system has solution
// dimension != 1.
Mat killing_form(const QuantumLie& ql);

struct W2Result {
    Sub w2;
    bool used_braided_fallback = false;
    // whether w2 coincides with ker(id - sigma) (reported, not assumed)
    bool eigen_route_agrees = false;
};

// Orthogonal complement of Im(id - sigma) under the degree-2 extension of b;
// primary convention B2(a(x)b, c(x)d) = B(a,c)B(b,d), with a braided
// middle-leg fallback if directness or invariance fails.
W2Result w2_complement(const QuantumLie& ql, const Mat& b);

// The involution with eigenvalue -1 on v2 and +1 on w2.
Mat sigma_bar(const Sub& v2, const Sub& w2);

// dim of the degree-k component of T(L)/<rel2>.
long long graded_dim(const QuadraticData& qd, int k);

// PBW certificates for the quadratic-linear family: structural
// (Braverman-Gaitsgory conditions on the degree-3 overlap), realization
// (filtered dimensions of ordered monomials at t = 1 in the horizon), and
// the first-order Poisson (Jacobi) checks for the t- and (q-1)-directions.
std::vector<GradedCert> pbw_check(QuantumLie& ql, int D);

// Invariants of the module inside a subspace of L^{(x) k}: solution space of
// the trivial-action conditions restricted to `ambient_sub`.
Sub invariant_subspace(const QuantumLie& ql, const Sub& ambient_sub, int k);

// k-th symmetric part W^k of T^k(L): intersection of all embedded copies of
// w2 (k = 0, 1 give the full space).
Sub symmetric_part(const QuantumLie& ql, const Sub& w2, int k);

// k-th antisymmetric part V^k, same construction over v2.
Sub antisymmetric_part(const QuantumLie& ql, const Sub& v2, int k);

} // namespace qde

#endif
