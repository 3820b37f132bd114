#include <qde/scalars.hpp>

#include <cctype>
#include <sstream>
#include <vector>

namespace qde {

RatFunc q_pow(int k) {
    if (k >= 0) return RatFunc(QPoly::monomial(Rat(1), k));
    return RatFunc(QPoly(Rat(1)), QPoly::monomial(Rat(1), -k));
}

RatFunc q_minus_qinv() { return q_pow(1) - q_pow(-1); }

RatFunc q_int(int k) {
    if (k == 0) return RatFunc();
    return (q_pow(k) - q_pow(-k)) / q_minus_qinv();
}

RatFunc ratfunc_from(const Rat& r) { return RatFunc(QPoly(r)); }
RatFunc ratfunc_from(long num, long den) { return RatFunc(QPoly(rat_from(num, den))); }

RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den) { return RatFunc(num, den); }

Rat eval_at(const RatFunc& f, const Rat& q0) { return f.eval(q0); }

bool regular_at(const RatFunc& f, const Rat& q0) { return !is_zero(f.den().eval(q0)); }

namespace {

// Joint positive scale making both polynomials integer with content 1.
void integer_scale(const QPoly& num, const QPoly& den, std::vector<mpz_class>& ni,
                   std::vector<mpz_class>& di) {
    mpz_class l(1);
    for (const auto& c : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g(0);
    auto scale = [&](const QPoly& p, std::vector<mpz_class>& out) {
        out.clear();
        for (const auto& c : p.coeffs()) {
            Rat s = c * Rat(l);
            out.push_back(s.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
        }
    };
    scale(num, ni);
    scale(den, di);
    if (g != 0 && g != 1) {
        for (auto& c : ni) c /= g;
        for (auto& c : di) c /= g;
    }
}

std::string print_int_poly(const std::vector<mpz_class>& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        mpz_class a = abs(c[k]);
        bool neg = c[k] < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (k == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
    }
    return s;
}

struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    explicit PolyParser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw error("bad rational function literal: " + s);
        return mpz_class(s.substr(start, pos - start));
    }

    // term := [int ['*']] ['q' ['^' int]]
    void term(int sign, std::vector<Rat>& coeffs) {
        skip();
        mpz_class c(1);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = integer();
            have_coeff = true;
            eat('*');
        }
        int deg = 0;
        if (eat('q')) {
            deg = 1;
            if (eat('^')) deg = static_cast<int>(integer().get_si());
        } else if (!have_coeff) {
            throw error("bad rational function literal: " + s);
        }
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] += sign * Rat(c);
    }

    QPoly poly() {
        std::vector<Rat> coeffs;
        int sign = eat('-') ? -1 : 1;
        term(sign, coeffs);
        for (;;) {
            skip();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            term(sign, coeffs);
        }
        return QPoly(std::move(coeffs));
    }
};

} // namespace

std::string to_string(const RatFunc& f) {
    std::vector<mpz_class> ni, di;
    integer_scale(f.num(), f.den(), ni, di);
    return "(" + print_int_poly(ni) + ")/(" + print_int_poly(di) + ")";
}

RatFunc ratfunc_parse(const std::string& text) {
    PolyParser p(text);
    QPoly num, den(Rat(1));
    if (p.eat('(')) {
        num = p.poly();
        if (!p.eat(')')) throw error("bad rational function literal: " + text);
        if (p.eat('/')) {
            if (!p.eat('(')) throw error("bad rational function literal: " + text);
            den = p.poly();
            if (!p.eat(')')) throw error("bad rational function literal: " + text);
        }
    } else {
        num = p.poly();
    }
    p.skip();
    if (p.pos != text.size()) throw error("bad rational function literal: " + text);
    return RatFunc(num, den);
}

std::string to_string(const RatFuncT& f) {
    auto poly_str = [](const TPoly& p) {
        if (p.is_zero_poly()) return std::string("0");
        std::string s;
        for (int k = p.degree(); k >= 0; --k) {
            if (is_zero(p.coeff(k))) continue;
            if (!s.empty()) s += " + ";
            s += to_string(p.coeff(k));
            if (k == 1) s += "*t";
            else if (k > 1) s += "*t^" + std::to_string(k);
        }
        return s;
    };
    return "[" + poly_str(f.num()) + "]/[" + poly_str(f.den()) + "]";
}

RatFunc eval_t(const RatFuncT& f, const RatFunc& t0) {
    RatFunc d = f.den().eval(t0);
    if (is_zero(d)) throw error("evaluation at pole");
    return f.num().eval(t0) / d;
}

} // namespace qde
