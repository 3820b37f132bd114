/**
 * @file fracfield.hpp
 * @brief Fraction field of a univariate polynomial ring over a field.
 *
 * Canonical form: denominator monic and nonzero, gcd(num, den) = 1,
 * zero element stored as 0/1. Equality is representation equality.
 */
#ifndef QDE_FRACFIELD_HPP
#define QDE_FRACFIELD_HPP

#include <qde/poly.hpp>

namespace qde {

template <class F, char Var>
class RFrac {
public:
    using P = Poly<F>;

    RFrac() : num_(), den_(F(1)) {}
    RFrac(int c) : num_(F(c)), den_(F(1)) {}
    explicit RFrac(F c) : num_(std::move(c)), den_(F(1)) {}
    explicit RFrac(P num) : num_(std::move(num)), den_(F(1)) {}
    RFrac(P num, P den) { normalize(std::move(num), std::move(den)); }

    static RFrac var(int k = 1) { return RFrac(P::monomial(F(1), k)); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero_val() const { return num_.is_zero_poly(); }
    bool is_one_val() const { return num_.degree() == 0 && den_.degree() == 0 && is_one_coeff(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const RFrac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RFrac& o) const { return !(*this == o); }

    RFrac operator-() const {
        RFrac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RFrac operator+(const RFrac& o) const {
        if (is_zero_val()) return o;
        if (o.is_zero_val()) return *this;
        // cross-reduce through the denominator gcd
        P g = poly_gcd(den_, o.den_);
        auto [db, r1] = P::divmod(o.den_, g);
        auto [da, r2] = P::divmod(den_, g);
        (void)r1; (void)r2;
        return RFrac(num_ * db + o.num_ * da, den_ * db);
    }
    RFrac operator-(const RFrac& o) const { return *this + (-o); }
    RFrac operator*(const RFrac& o) const {
        if (is_zero_val() || o.is_zero_val()) return RFrac();
        P g1 = poly_gcd(num_, o.den_);
        P g2 = poly_gcd(o.num_, den_);
        auto [a, ra] = P::divmod(num_, g1);
        auto [d2, rd2] = P::divmod(o.den_, g1);
        auto [c, rc] = P::divmod(o.num_, g2);
        auto [d1, rd1] = P::divmod(den_, g2);
        (void)ra; (void)rd2; (void)rc; (void)rd1;
        RFrac r;
        r.num_ = a * c;
        r.den_ = d1 * d2;
        F lead = r.den_.lead();
        if (!is_one(lead)) {
            F inv = F(1) / lead;
            r.num_ = r.num_ * inv;
            r.den_ = r.den_ * inv;
        }
        return r;
    }
    RFrac operator/(const RFrac& o) const {
        if (o.is_zero_val()) throw error("division by zero polynomial");
        RFrac inv;
        inv.normalize(o.den_, o.num_);
        return *this * inv;
    }
    RFrac& operator+=(const RFrac& o) { return *this = *this + o; }
    RFrac& operator-=(const RFrac& o) { return *this = *this - o; }
    RFrac& operator*=(const RFrac& o) { return *this = *this * o; }
    RFrac& operator/=(const RFrac& o) { return *this = *this / o; }

    // Exact value at a point of the coefficient field; the canonical form
    // already has removable singularities cancelled.
    F eval(const F& x0) const {
        F d = den_.eval(x0);
        if (is_zero(d)) throw error("evaluation at pole");
        return num_.eval(x0) / d;
    }

private:
    bool is_one_coeff() const { return is_one(num_.lead()) && is_one(den_.lead()); }

    void normalize(P num, P den) {
        if (den.is_zero_poly()) throw error("division by zero polynomial");
        if (num.is_zero_poly()) {
            num_ = P();
            den_ = P(F(1));
            return;
        }
        P g = poly_gcd(num, den);
        if (g.degree() > 0) {
            auto [n2, rn] = P::divmod(num, g);
            auto [d2, rd] = P::divmod(den, g);
            (void)rn; (void)rd;
            num = std::move(n2);
            den = std::move(d2);
        }
        F inv = F(1) / den.lead();
        num_ = num * inv;
        den_ = den * inv;
    }

    P num_; // gcd(num, den) = 1
    P den_; // monic
};

template <class F, char Var>
bool is_zero(const RFrac<F, Var>& a) { return a.is_zero_val(); }
template <class F, char Var>
bool is_one(const RFrac<F, Var>& a) { return a.is_one_val(); }

} // namespace qde

#endif
