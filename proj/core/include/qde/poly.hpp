/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a field.
 *
 * Coefficient vector trimmed so the leading coefficient is nonzero
 * (the zero polynomial has an empty vector, degree -1).
 */
#ifndef QDE_POLY_HPP
#define QDE_POLY_HPP

#include <qde/rational.hpp>

#include <utility>
#include <vector>

namespace qde {

template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(F c) {
        if (!is_zero(c)) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // c * x^k
    static Poly monomial(F c, int k) {
        Poly p;
        if (is_zero(c)) return p;
        p.coeffs_.assign(k + 1, F(0));
        p.coeffs_[k] = std::move(c);
        return p;
    }
    static Poly x() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    const F& lead() const { return coeffs_.back(); }
    const F& coeff(int k) const {
        static const F zero{0};
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : zero;
    }
    const std::vector<F>& coeffs() const { return coeffs_; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<F> c(std::max(coeffs_.size(), o.coeffs_.size()), F(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return Poly();
        std::vector<F> c(coeffs_.size() + o.coeffs_.size() - 1, F(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero(coeffs_[i])) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return Poly(std::move(c));
    }
    Poly operator*(const F& s) const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero_poly()) throw error("division by zero polynomial");
        Poly q, r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.coeffs_.assign(a.degree() - b.degree() + 1, F(0));
        F binv = F(1) / b.lead();
        while (!r.is_zero_poly() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F c = r.lead() * binv;
            q.coeffs_[k] = c;
            // r -= c x^k b
            for (int i = 0; i <= b.degree(); ++i)
                r.coeffs_[i + k] -= c * b.coeffs_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Poly monic() const {
        if (is_zero_poly()) return *this;
        return *this * (F(1) / lead());
    }

    F eval(const F& x0) const {
        F acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x0 + coeffs_[i];
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

// Monic gcd via the Euclidean algorithm.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = Poly<F>::divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {

// Primitive integer coefficient vector of a rational polynomial.
inline std::vector<mpz_class> primitive_int(const Poly<Rat>& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g(0);
    for (const auto& c : p.coeffs()) {
        Rat s = c * Rat(l);
        out.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& c : out) c /= g;
    return out;
}

inline void strip_content(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    mpz_class g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v) c /= g;
}

} // namespace detail

// Primitive pseudo-remainder sequence over Z: avoids the coefficient
// blow-up of naive Euclid over Q.
template <>
inline Poly<Rat> poly_gcd<Rat>(Poly<Rat> pa, Poly<Rat> pb) {
    if (pa.is_zero_poly()) return pb.monic();
    if (pb.is_zero_poly()) return pa.monic();
    std::vector<mpz_class> a = detail::primitive_int(pa);
    std::vector<mpz_class> b = detail::primitive_int(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // pseudo-remainder of a by b
        std::vector<mpz_class> r = a;
        const mpz_class& lead = b.back();
        while (r.size() >= b.size()) {
            mpz_class c = r.back();
            size_t k = r.size() - b.size();
            // r = lead * r - c * x^k * b  (top coefficient cancels)
            for (auto& x : r) x *= lead;
            for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        detail::strip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(x);
    return Poly<Rat>(std::move(c)).monic();
}

} // namespace qde

#endif
