/**
 * @file orbit.hpp
 * @brief Quantization of regular semisimple orbits: the invariant
 *        subalgebra of the quadratic-linear family, its centrality and
 *        freeness evidence, the character attached to an orbit point, and
 *        the quotient family with flatness certificates.
 */
#ifndef QDE_ORBIT_HPP
#define QDE_ORBIT_HPP

#include <qde/derham.hpp>

namespace qde {

using MatT = Matrix<RatFuncT>;
using SubT = Subspace<RatFuncT>;

/// Regular semisimple orbit data: a traceless diagonal point with pairwise
/// distinct eigenvalues.
struct OrbitSpec {
    int n = 0;
    std::vector<Rat> eigenvalues;
};

// throws "orbit data invalid" on repeated eigenvalues or nonzero trace
void validate_orbit(const OrbitSpec& o);

/// The invariant subalgebra realized degree by degree inside the symmetric
/// components, with a product basis generated by limit-matched generators.
struct InvariantAlgebra {
    int max_degree = 0;
    std::vector<Sub> degree; // invariants of L^{(x) k}, k = 0..D
    std::vector<int> generator_degrees;
    std::vector<std::vector<RatFunc>> generators; // ambient tensors
    // per degree: generator multiset (indices into generators) and the
    // realized product tensor
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<RatFunc>>>> basis;
    std::vector<GradedCert> certs;
};

/// Character values: constant in q and t, fixed by classical evaluation of
/// the q = 1 limit invariants at the orbit point.
struct CharacterData {
    std::vector<Rat> generator_values;
    std::vector<std::vector<Rat>> basis_values; // aligned with basis lists
};

class OrbitFamily {
public:
    OrbitFamily(QuantumLie& ql, DeRhamComplex& dr, int max_degree);

    int max_degree() const { return d_; }
    const InvariantAlgebra& invariants();

    // classical power-sum tensor of degree k (symmetrized), on L coordinates
    std::vector<Rat> classical_power_sum(int k) const;
    // value of a classical tensor at the orbit point
    Rat evaluate_classical(const std::vector<Rat>& tensor, int k, const OrbitSpec& o) const;

    CharacterData build_character(const OrbitSpec& o);

    std::vector<GradedCert> centrality_cert();
    GradedCert freeness_evidence();
    std::vector<GradedCert> quotient_cert(const OrbitSpec& o);
    std::vector<GradedCert> kks_cert(const OrbitSpec& o);
    std::vector<GradedCert> composition_cert();

private:
    std::vector<RatFunc> product_tensor(const std::vector<RatFunc>& u, int ku,
                                        const std::vector<RatFunc>& v, int kv);
    // rows of the quadratic-linear ideal slice through filtered degree cap,
    // optionally extended by the character relations of `chi`
    std::vector<typename MatT::Row> ideal_rows(int cap, const CharacterData* chi,
                                               const OrbitSpec* o);

    QuantumLie& ql_;
    DeRhamComplex& dr_;
    int d_, g_;
    bool built_ = false;
    InvariantAlgebra inv_;
    std::vector<Matrix<Rat>> psi_; // classical dual basis matrices, traceless
};

// coefficients 0..D of 1 / ((1 - z^2) ... (1 - z^n)): the classical
// invariant Hilbert function of sl(n)
std::vector<long long> invariant_hilbert(int n, int D);
// coefficients 0..D of (1 - z^2) ... (1 - z^n) / (1 - z)^(n^2 - 1): the
// classical harmonic Hilbert function
std::vector<long long> harmonic_hilbert(int n, int D);

} // namespace qde

#endif
