/**
 * @file qlie.hpp
 * @brief The quantum Lie algebra on the dual of End(V): the Q-operator,
 *        the equivariant map f, the quantum Casimir, the braiding sigma
 *        and the bracket extracted from the coproduct split, horizon
 *        realizations, and the defining-relation certificates.
 */
#ifndef QDE_QLIE_HPP
#define QDE_QLIE_HPP

#include <qde/cert.hpp>
#include <qde/rep.hpp>

namespace qde {

// (rho (x) pi_word)(R21 R) on V (x) word.
Mat q_on(FusedR& fr, const Word& word);

// Realization of f(phi) on the module `word`: contract the first leg of
// q_on against the functional coordinates phi_{ab}.
Mat f_map(FusedR& fr, const std::vector<RatFunc>& phi, const Word& word);

// Quantum Casimir C_V = f(Tr) on the module `word`.
Mat c_v(FusedR& fr, const Word& word);

// Exact inverse, minimal-polynomial route; throws "Casimir not invertible".
Mat c_v_inverse(const Mat& c);

// Basis of {phi : phi(id) = 0} in End(V)* coordinates: first the diagonal
// differences e*_{ii} - e*_{i+1,i+1}, then e*_{ab}, a != b, row-major.
Mat lie_generators(int n);

/// The computed structure on L_V. All coordinate operators are expressed
/// in the lie_generators basis; sigma and bracket carry the full
/// certification payload of the construction.
class QuantumLie {
public:
    explicit QuantumLie(int n, RatFunc r_scale = RatFunc(1));

    int n() const { return n_; }
    int dim_l() const { return dim_l_; }
    FusedR& fused() { return fused_; }
    const Rep& endv() const { return endv_; }
    const Word& endv_word() const { return word_e_; }
    const Mat& iso() const { return j_; }
    const Mat& iso_inv() const { return j_inv_; }

    const Mat& gen_basis() const { return gen_basis_; } // dim_l x n^2
    const Mat& gen_proj() const { return proj_; }       // dim_l x n^2
    const std::vector<RatFunc>& trq() const { return trq_; }

    const Mat& sigma() const { return sigma_; }     // dim_l^2 x dim_l^2
    const Mat& bracket() const { return bracket_; } // dim_l x dim_l^2

    // raw operators on End(V)* (x) End(V)* and End(V)* coordinates
    const Mat& sigma_ee() const { return sigma_ee_; }
    const Mat& bracket_ee() const { return bracket_ee_; }

    // R with one leg on End(V)*, transported through the module isomorphism
    const Mat& r_ev() const { return r_ev_; } // on E (x) V
    const Mat& r_ve() const { return r_ve_; } // on V (x) E
    const Mat& q_ve() const { return q_ve_; } // Q on V (x) E

    // generator phi_a coordinates in End(V)*
    std::vector<RatFunc> generator(int a) const;

    // Adjoint action matrices on L coordinates (restriction of endv).
    const std::vector<Mat>& act_e() const { return act_e_; }
    const std::vector<Mat>& act_f() const { return act_f_; }
    const std::vector<Mat>& act_k() const { return act_k_; }
    const std::vector<Mat>& act_kinv() const { return act_kinv_; }
    Rep adjoint_rep() const; // the same data packaged as a Rep

    // (q - q^-1)^-1 f(phi_a) on `word`; entries must be regular at q = 1
    // ("generator not divisible" otherwise).
    Mat realize_generator(int a, const Word& word);

private:
    int n_, dim_l_;
    FusedR fused_;
    Rep endv_;
    Word word_e_;
    Mat j_, j_inv_;
    Mat gen_basis_, proj_;
    std::vector<RatFunc> trq_;
    Mat sigma_, bracket_;
    Mat sigma_ee_, bracket_ee_;
    Mat r_ev_, r_ve_, q_ve_;
    std::vector<Mat> act_e_, act_f_, act_k_, act_kinv_;
};

/// Block realization on the horizon module, the direct sum of V^{(x) k}
/// for k = 0..K.
struct Horizon {
    int K = 0;
    int dim = 0;
    std::vector<Mat> xhat;   // normalized generators, one per basis functional
    std::vector<Mat> xtilde; // C_V^-1-normalized generators
    Mat c;                   // C_V on the horizon
    Mat c_inv;
};

Horizon build_horizon(QuantumLie& ql, int K);

// product-form and normalized-form relation certificates in the horizon
// realization, plus horizon stability K -> K+1.
std::vector<GradedCert> verify_relations(QuantumLie& ql, int K);

// Independent route: the full degree-2 linear-dependency kernel among
// products of normalized generators, compared against Im(id - sigma).
std::vector<GradedCert> re_algebra_cross_check(QuantumLie& ql, int K = 3);

} // namespace qde

#endif
