/**
 * @file scalars.hpp
 * @brief Concrete scalar fields of the engine.
 *
 * RatFunc  — Q(q), the certification field.
 * TPoly    — polynomials in t over Q(q).
 * RatFuncT — Q(q)(t), used where t stays symbolic in linear algebra.
 *
 * Canonical text form for RatFunc: integer-coefficient polynomials in q
 * joined by `/`, e.g. `(q^2 - 1)/(q)`. Printing and parsing round-trip
 * bit-exactly.
 */
#ifndef QDE_SCALARS_HPP
#define QDE_SCALARS_HPP

#include <qde/fracfield.hpp>

#include <string>

namespace qde {

using QPoly = Poly<Rat>;
using RatFunc = RFrac<Rat, 'q'>;
using TPoly = Poly<RatFunc>;
using RatFuncT = RFrac<RatFunc, 't'>;

// q^k, k may be negative
RatFunc q_pow(int k);
inline RatFunc q_var() { return RatFunc::var(); }
// q - q^-1  =  (q^2 - 1)/q
RatFunc q_minus_qinv();
// [k]_q = (q^k - q^-k)/(q - q^-1)
RatFunc q_int(int k);

RatFunc ratfunc_from(const Rat& r);
RatFunc ratfunc_from(long num, long den = 1);

// Reduced canonical form of num/den; throws on zero denominator.
RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den);

// Exact value at q0; throws "evaluation at pole" when the canonical
// denominator vanishes there.
Rat eval_at(const RatFunc& f, const Rat& q0);
bool regular_at(const RatFunc& f, const Rat& q0);

std::string to_string(const RatFunc& f);
RatFunc ratfunc_parse(const std::string& text);

std::string to_string(const RatFuncT& f);
inline RatFuncT t_var() { return RatFuncT::var(); }

// t |-> t0
RatFunc eval_t(const RatFuncT& f, const RatFunc& t0);

} // namespace qde

#endif
