#include <qde/orbit.hpp>

#include <algorithm>
#include <map>

namespace qde {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Rat eval1(const RatFunc& v) { return eval_at(v, Rat(1)); }

RatFuncT lift_t(const RatFunc& v) { return RatFuncT(v); }

// coefficient-wise q = 1 evaluation of a t-fraction
RatFuncT eval_q1(const RatFuncT& v) {
    auto map_poly = [](const Poly<RatFunc>& p) {
        std::vector<RatFunc> c;
        for (const auto& x : p.coeffs()) c.push_back(ratfunc_from(eval_at(x, Rat(1))));
        return Poly<RatFunc>(std::move(c));
    };
    return RatFuncT(map_poly(v.num()), map_poly(v.den()));
}

std::vector<long long> series_inverse_of(const std::vector<long long>& p, int D) {
    // coefficients of 1/p(z) to degree D, p(0) = 1
    std::vector<long long> out(D + 1, 0);
    out[0] = 1;
    for (int k = 1; k <= D; ++k) {
        long long s = 0;
        for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j) s += p[j] * out[k - j];
        out[k] = -s;
    }
    return out;
}

std::vector<long long> series_mul(const std::vector<long long>& a, const std::vector<long long>& b,
                                  int D) {
    std::vector<long long> out(D + 1, 0);
    for (int i = 0; i <= D && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= D && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long long> cyclotomic_like(int n, int D) {
    // (1 - z^2)(1 - z^3) ... (1 - z^n), truncated
    std::vector<long long> p(D + 1, 0);
    p[0] = 1;
    for (int d = 2; d <= n; ++d) {
        std::vector<long long> f(D + 1, 0);
        f[0] = 1;
        if (d <= D) f[d] = -1;
        p = series_mul(p, f, D);
    }
    return p;
}

} // namespace

std::vector<long long> invariant_hilbert(int n, int D) {
    return series_inverse_of(cyclotomic_like(n, D), D);
}

std::vector<long long> harmonic_hilbert(int n, int D) {
    int g = n * n - 1;
    std::vector<long long> denom(D + 1, 0);
    // (1 - z)^g coefficients
    denom[0] = 1;
    for (int rep = 0; rep < g; ++rep) {
        std::vector<long long> f(D + 1, 0);
        f[0] = 1;
        if (D >= 1) f[1] = -1;
        denom = series_mul(denom, f, D);
    }
    return series_mul(cyclotomic_like(n, D), series_inverse_of(denom, D), D);
}

void validate_orbit(const OrbitSpec& o) {
    if (o.n < 2 || static_cast<int>(o.eigenvalues.size()) != o.n) throw error("orbit data invalid");
    Rat s(0);
    for (const auto& x : o.eigenvalues) s += x;
    if (!is_zero(s)) throw error("orbit data invalid");
    for (size_t i = 0; i < o.eigenvalues.size(); ++i)
        for (size_t j = i + 1; j < o.eigenvalues.size(); ++j)
            if (o.eigenvalues[i] == o.eigenvalues[j]) throw error("orbit data invalid");
}

OrbitFamily::OrbitFamily(QuantumLie& ql, DeRhamComplex& dr, int max_degree)
    : ql_(ql), dr_(dr), d_(max_degree), g_(ql.dim_l()) {
    int n = ql.n();
    // classical dual basis of the generator functionals, made traceless so
    // that X(xi) = sum_a x_a(xi) psi_a recovers xi on traceless matrices
    for (int a = 0; a < g_; ++a) {
        Matrix<Rat> m(n, n);
        Rat tr(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat v = eval1(ql.gen_proj().get(a, i * n + j));
                if (!is_zero(v)) m.set(i, j, v);
                if (i == j) tr += v;
            }
        Rat shift = tr / Rat(n);
        for (int i = 0; i < n; ++i) m.add_to(i, i, -shift);
        psi_.push_back(std::move(m));
    }
}

std::vector<Rat> OrbitFamily::classical_power_sum(int k) const {
    int amb = static_cast<int>(ipow(g_, k));
    std::vector<Rat> out(amb, Rat(0));
    // tr(psi_{a_1} ... psi_{a_k}), symmetrized over all orderings
    std::vector<int> idx(k, 0);
    std::vector<Rat> tensor(amb, Rat(0));
    for (int flat = 0; flat < amb; ++flat) {
        int rem = flat;
        for (int i = k - 1; i >= 0; --i) {
            idx[i] = rem % g_;
            rem /= g_;
        }
        Matrix<Rat> p = psi_[idx[0]];
        for (int i = 1; i < k; ++i) p = p * psi_[idx[i]];
        Rat tr(0);
        for (int i = 0; i < p.rows(); ++i) tr += p.get(i, i);
        tensor[flat] = tr;
    }
    // symmetrize
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    long long count = 0;
    do {
        ++count;
        for (int flat = 0; flat < amb; ++flat) {
            int rem = flat;
            for (int i = k - 1; i >= 0; --i) {
                idx[i] = rem % g_;
                rem /= g_;
            }
            int dst = 0;
            for (int i = 0; i < k; ++i) dst = dst * g_ + idx[perm[i]];
            out[dst] += tensor[flat];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rat inv = Rat(1) / Rat(static_cast<long>(count));
    for (auto& v : out) v *= inv;
    return out;
}

Rat OrbitFamily::evaluate_classical(const std::vector<Rat>& tensor, int k,
                                    const OrbitSpec& o) const {
    int n = ql_.n();
    std::vector<Rat> xval(g_, Rat(0));
    for (int a = 0; a < g_; ++a)
        for (int i = 0; i < n; ++i)
            xval[a] += eval1(ql_.gen_basis().get(a, i * n + i)) * o.eigenvalues[i];
    Rat out(0);
    std::vector<int> idx(k, 0);
    for (int flat = 0; flat < static_cast<int>(tensor.size()); ++flat) {
        if (is_zero(tensor[flat])) continue;
        int rem = flat;
        Rat prod = tensor[flat];
        for (int i = k - 1; i >= 0; --i) {
            prod *= xval[rem % g_];
            rem /= g_;
        }
        out += prod;
    }
    return out;
}

std::vector<RatFunc> OrbitFamily::product_tensor(const std::vector<RatFunc>& u, int ku,
                                                 const std::vector<RatFunc>& v, int kv) {
    if (ku == 0) return v;
    if (kv == 0) return u;
    const RealizedComponent& w = dr_.component(PartKind::Sym, ku + kv);
    std::vector<RatFunc> joint(u.size() * v.size(), RatFunc(0));
    for (size_t i = 0; i < u.size(); ++i) {
        if (is_zero(u[i])) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) joint[i * v.size() + j] = u[i] * v[j];
    }
    return (w.proj_inv * w.proj).apply_vec(joint);
}

const InvariantAlgebra& OrbitFamily::invariants() {
    if (built_) return inv_;
    inv_.max_degree = d_;
    auto classical = invariant_hilbert(ql_.n(), d_);
    for (int k = 0; k <= d_; ++k) {
        Sub ik = invariant_subspace(ql_, dr_.component(PartKind::Sym, k).space, k);
        inv_.certs.push_back(make_cert("invariant hilbert function at degree " + std::to_string(k),
                                       k, classical[k], ik.dim()));
        inv_.degree.push_back(std::move(ik));
    }

    // trivial action: every generator acts by the counit on the invariants
    bool trivial = true;
    for (int k = 1; k <= d_ && trivial; ++k) {
        if (inv_.degree[k].dim() == 0) continue;
        Rep rep = ql_.adjoint_rep();
        for (int i = 1; i < k; ++i) rep = tensor_rep(rep, ql_.adjoint_rep());
        Mat bt = inv_.degree[k].basis().transpose();
        for (size_t s = 0; s < rep.e.size() && trivial; ++s) {
            Mat ze = rep.e[s] * bt, zf = rep.f[s] * bt,
                zk = rep.k[s] * bt - bt;
            auto nonzero = [](const Mat& m) {
                for (int r = 0; r < m.rows(); ++r)
                    if (!m.row(r).empty()) return true;
                return false;
            };
            if (nonzero(ze) || nonzero(zf) || nonzero(zk)) trivial = false;
        }
    }
    inv_.certs.push_back(make_bool_cert("invariants carry the trivial action", d_, trivial));

    // generators where the product span does not exhaust the degree, chosen
    // by matching the q = 1 limit to the classical power sum
    inv_.basis.assign(d_ + 1, {});
    inv_.basis[0].push_back({{}, {RatFunc(1)}});
    for (int k = 1; k <= d_; ++k) {
        // products of existing generators in nondecreasing order
        std::vector<std::pair<std::vector<int>, std::vector<RatFunc>>> prods;
        for (size_t s = 0; s < inv_.generators.size(); ++s) {
            int ds = inv_.generator_degrees[s];
            if (ds > k) continue;
            for (const auto& [idx, tens] : inv_.basis[k - ds]) {
                if (!idx.empty() && idx.back() > static_cast<int>(s)) continue;
                auto nidx = idx;
                nidx.push_back(static_cast<int>(s));
                prods.push_back({std::move(nidx),
                                 product_tensor(tens, k - ds, inv_.generators[s], ds)});
            }
        }
        // closure: all products are invariant
        bool closed = true;
        for (const auto& [idx, tens] : prods) {
            typename Mat::Row r;
            for (int j = 0; j < static_cast<int>(tens.size()); ++j)
                if (!is_zero(tens[j])) r.push_back({j, tens[j]});
            if (!inv_.degree[k].contains(r)) closed = false;
        }
        inv_.certs.push_back(
            make_bool_cert("products of invariants stay invariant at degree " + std::to_string(k),
                           k, closed));
        // spanning check
        std::vector<typename Mat::Row> rows;
        for (const auto& [idx, tens] : prods) {
            typename Mat::Row r;
            for (int j = 0; j < static_cast<int>(tens.size()); ++j)
                if (!is_zero(tens[j])) r.push_back({j, tens[j]});
            rows.push_back(std::move(r));
        }
        int amb = static_cast<int>(ipow(g_, k));
        long long span = rank(Mat::from_rows(std::move(rows), amb));
        if (span < inv_.degree[k].dim()) {
            // new generator: the Q(q) combination of a flat basis whose
            // q = 1 limit is exactly the classical power sum
            Mat fb = flat_basis(inv_.degree[k]);
            std::vector<Rat> target = classical_power_sum(k);
            // solve sum_i c_i fb_i(1) = target over the rationals
            std::vector<typename Mat::Row> sys;
            for (int i = 0; i < fb.rows(); ++i) {
                typename Mat::Row r;
                for (const auto& [j, v] : fb.row(i)) r.push_back({j, ratfunc_from(eval1(v))});
                sys.push_back(std::move(r));
            }
            {
                typename Mat::Row r;
                for (int j = 0; j < amb; ++j)
                    if (!is_zero(target[j])) r.push_back({j, ratfunc_from(target[j])});
                sys.push_back(std::move(r));
            }
            Sub dep = kernel(Mat::from_rows(std::move(sys), amb).transpose());
            if (dep.dim() != 1) throw error("character inconsistent");
            std::vector<RatFunc> coef(fb.rows() + 1, RatFunc(0));
            for (const auto& [j, v] : dep.basis().row(0)) coef[j] = v;
            if (is_zero(coef[fb.rows()])) throw error("character inconsistent");
            std::vector<RatFunc> gen(amb, RatFunc(0));
            for (int i = 0; i < fb.rows(); ++i) {
                RatFunc c = RatFunc(0) - coef[i] / coef[fb.rows()];
                if (is_zero(c)) continue;
                for (const auto& [j, v] : fb.row(i)) gen[j] += c * v;
            }
            inv_.generator_degrees.push_back(k);
            inv_.generators.push_back(gen);
            int s = static_cast<int>(inv_.generators.size()) - 1;
            prods.push_back({{s}, std::move(gen)});
        }
        // basis = independent subset of the products, greedily in order
        Sub acc = Sub::zero(amb);
        for (const auto& [idx, tens] : prods) {
            typename Mat::Row r;
            for (int j = 0; j < static_cast<int>(tens.size()); ++j)
                if (!is_zero(tens[j])) r.push_back({j, tens[j]});
            if (!acc.contains(r)) {
                std::vector<typename Mat::Row> all;
                for (int i = 0; i < acc.dim(); ++i) all.push_back(acc.basis().row(i));
                all.push_back(r);
                acc = Sub::from_rows(Mat::from_rows(std::move(all), amb));
                inv_.basis[k].push_back({idx, tens});
            }
        }
        inv_.certs.push_back(make_cert("product basis spans the invariants at degree " +
                                           std::to_string(k),
                                       k, inv_.degree[k].dim(),
                                       static_cast<long long>(inv_.basis[k].size())));
    }
    built_ = true;
    return inv_;
}

CharacterData OrbitFamily::build_character(const OrbitSpec& o) {
    validate_orbit(o);
    const InvariantAlgebra& ia = invariants();
    CharacterData chi;
    for (size_t s = 0; s < ia.generators.size(); ++s) {
        int k = ia.generator_degrees[s];
        chi.generator_values.push_back(evaluate_classical(classical_power_sum(k), k, o));
    }
    chi.basis_values.assign(d_ + 1, {});
    for (int k = 0; k <= d_; ++k)
        for (const auto& [idx, tens] : ia.basis[k]) {
            Rat v(1);
            for (int s : idx) v *= chi.generator_values[s];
            chi.basis_values[k].push_back(v);
        }
    // multiplicativity on all products representable within the cutoff
    for (int ka = 2; ka <= d_; ++ka)
        for (int kb = ka; ka + kb <= d_; ++kb)
            for (size_t ia_i = 0; ia_i < ia.basis[ka].size(); ++ia_i)
                for (size_t ib_i = 0; ib_i < ia.basis[kb].size(); ++ib_i) {
                    auto prod = product_tensor(ia.basis[ka][ia_i].second, ka,
                                               ia.basis[kb][ib_i].second, kb);
                    // expand in the degree ka+kb basis
                    int amb = static_cast<int>(prod.size());
                    std::vector<typename Mat::Row> sys;
                    for (const auto& [idx, tens] : ia.basis[ka + kb]) {
                        typename Mat::Row r;
                        for (int j = 0; j < amb; ++j)
                            if (!is_zero(tens[j])) r.push_back({j, tens[j]});
                        sys.push_back(std::move(r));
                    }
                    {
                        typename Mat::Row r;
                        for (int j = 0; j < amb; ++j)
                            if (!is_zero(prod[j])) r.push_back({j, prod[j]});
                        sys.push_back(std::move(r));
                    }
                    int nb = static_cast<int>(ia.basis[ka + kb].size());
                    Sub dep = kernel(Mat::from_rows(std::move(sys), amb).transpose());
                    if (dep.dim() != 1) throw error("character inconsistent");
                    std::vector<RatFunc> c(nb + 1, RatFunc(0));
                    for (const auto& [j, v] : dep.basis().row(0)) c[j] = v;
                    if (is_zero(c[nb])) throw error("character inconsistent");
                    RatFunc lam(0);
                    for (int j = 0; j < nb; ++j)
                        lam += (RatFunc(0) - c[j] / c[nb]) * ratfunc_from(chi.basis_values[ka + kb][j]);
                    RatFunc want = ratfunc_from(chi.basis_values[ka][ia_i] * chi.basis_values[kb][ib_i]);
                    if (!(lam == want)) throw error("character inconsistent");
                }
    return chi;
}

std::vector<typename MatT::Row> OrbitFamily::ideal_rows(int cap, const CharacterData* chi,
                                                        const OrbitSpec* o) {
    const InvariantAlgebra& ia = invariants();
    std::vector<long long> offset(cap + 2, 0);
    for (int i = 1; i <= cap + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);

    std::vector<typename MatT::Row> rows;
    // basis of the quadratic relations that stays regular and full rank at q = 1
    Mat v2b = flat_basis(dr_.v2());
    const Mat& beta = ql_.bracket();
    RatFuncT t = t_var();

    for (int left = 0; left + 2 <= cap; ++left)
        for (int right = 0; left + 2 + right <= cap; ++right) {
            long long dl = ipow(g_, left), drr = ipow(g_, right);
            for (int rr = 0; rr < v2b.rows(); ++rr) {
                std::vector<RatFunc> rvec(g_ * g_, RatFunc(0));
                for (const auto& [j, v] : v2b.row(rr)) rvec[j] = v;
                auto bvec = beta.apply_vec(rvec);
                for (long long a = 0; a < dl; ++a)
                    for (long long b = 0; b < drr; ++b) {
                        typename MatT::Row row;
                        int top = left + 2 + right;
                        for (int j = 0; j < g_ * g_; ++j)
                            if (!is_zero(rvec[j]))
                                row.push_back({static_cast<int>(offset[top] +
                                                               (a * g_ * g_ + j) * drr + b),
                                               lift_t(rvec[j])});
                        int low = left + 1 + right;
                        for (int j = 0; j < g_; ++j)
                            if (!is_zero(bvec[j]))
                                row.push_back({static_cast<int>(offset[low] + (a * g_ + j) * drr + b),
                                               RatFuncT(0) - t * lift_t(bvec[j])});
                        std::sort(row.begin(), row.end(),
                                  [](const auto& x, const auto& y) { return x.first < y.first; });
                        rows.push_back(std::move(row));
                    }
            }
        }

    if (chi != nullptr) {
        for (size_t s = 0; s < ia.generators.size(); ++s) {
            int dgen = ia.generator_degrees[s];
            const auto& gen = ia.generators[s];
            Rat lam = chi->generator_values[s];
            for (int left = 0; left + dgen <= cap; ++left)
                for (int right = 0; left + dgen + right <= cap; ++right) {
                    long long dl = ipow(g_, left), drr = ipow(g_, right);
                    long long mid = ipow(g_, dgen);
                    for (long long a = 0; a < dl; ++a)
                        for (long long b = 0; b < drr; ++b) {
                            typename MatT::Row row;
                            int top = left + dgen + right;
                            for (long long j = 0; j < mid; ++j)
                                if (!is_zero(gen[j]))
                                    row.push_back({static_cast<int>(offset[top] + (a * mid + j) * drr + b),
                                                   lift_t(gen[j])});
                            int low = left + right;
                            row.push_back({static_cast<int>(offset[low] + a * drr + b),
                                           RatFuncT(0) - RatFuncT(ratfunc_from(lam))});
                            std::sort(row.begin(), row.end(),
                                      [](const auto& x, const auto& y) { return x.first < y.first; });
                            rows.push_back(std::move(row));
                        }
                }
        }
        (void)o;
    }
    return rows;
}

std::vector<GradedCert> OrbitFamily::centrality_cert() {
    std::vector<GradedCert> out;
    const InvariantAlgebra& ia = invariants();
    for (int k = 2; k < d_; ++k) {
        if (ia.basis[k].empty()) continue;
        int cap = k + 1;
        std::vector<long long> offset(cap + 2, 0);
        for (int i = 1; i <= cap + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);
        long long amb = offset[cap + 1];
        SubT slice = SubT::from_rows(
            MatT::from_rows(ideal_rows(cap, nullptr, nullptr), static_cast<int>(amb)));
        bool central = true;
        for (const auto& [idx, tens] : ia.basis[k])
            for (int a = 0; a < g_ && central; ++a) {
                typename MatT::Row row;
                long long mid = ipow(g_, k);
                for (long long j = 0; j < mid; ++j) {
                    if (is_zero(tens[j])) continue;
                    row.push_back({static_cast<int>(offset[cap] + j * g_ + a), lift_t(tens[j])});
                    row.push_back({static_cast<int>(offset[cap] + a * mid + j),
                                   RatFuncT(0) - lift_t(tens[j])});
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                // merge duplicate positions
                typename MatT::Row merged;
                for (auto& e : row) {
                    if (!merged.empty() && merged.back().first == e.first)
                        merged.back().second += e.second;
                    else
                        merged.push_back(e);
                }
                typename MatT::Row clean;
                for (auto& e : merged)
                    if (!is_zero(e.second)) clean.push_back(e);
                if (!slice.contains(clean)) central = false;
            }
        out.push_back(make_bool_cert("invariants are central through filtered degree " +
                                         std::to_string(k + 1),
                                     k, central));
    }
    return out;
}

GradedCert OrbitFamily::freeness_evidence() {
    const InvariantAlgebra& ia = invariants();
    QuadraticData sym = sym_relations(ql_);
    auto harm = harmonic_hilbert(ql_.n(), d_);
    bool ok = true;
    for (int k = 0; k <= d_; ++k) {
        long long conv = 0;
        for (int j = 0; j <= k; ++j) conv += ia.degree[j].dim() * harm[k - j];
        if (conv != graded_dim(sym, k)) ok = false;
    }
    return make_bool_cert("hilbert factorization over the invariants", d_, ok);
}

std::vector<GradedCert> OrbitFamily::quotient_cert(const OrbitSpec& o) {
    std::vector<GradedCert> out;
    CharacterData chi = build_character(o);

    // classical oracle: flip relations and classical power sums minus their
    // values, computed entirely at the rational level
    auto classical_filtered = [&](int k) -> long long {
        std::vector<long long> offset(k + 2, 0);
        for (int i = 1; i <= k + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);
        long long amb = offset[k + 1];
        std::vector<typename Mat::Row> rows;
        // commutativity relations
        for (int left = 0; left + 2 <= k; ++left)
            for (int right = 0; left + 2 + right <= k; ++right) {
                long long dl = ipow(g_, left), drr = ipow(g_, right);
                int top = left + 2 + right;
                for (int x = 0; x < g_; ++x)
                    for (int y = x + 1; y < g_; ++y)
                        for (long long a = 0; a < dl; ++a)
                            for (long long b = 0; b < drr; ++b) {
                                typename Mat::Row r;
                                long long p1 = offset[top] + (a * g_ * g_ + x * g_ + y) * drr + b;
                                long long p2 = offset[top] + (a * g_ * g_ + y * g_ + x) * drr + b;
                                r.push_back({static_cast<int>(std::min(p1, p2)),
                                             p1 < p2 ? RatFunc(1) : RatFunc(-1)});
                                r.push_back({static_cast<int>(std::max(p1, p2)),
                                             p1 < p2 ? RatFunc(-1) : RatFunc(1)});
                                rows.push_back(std::move(r));
                            }
            }
        // character relations from the classical power sums
        for (int dgen = 2; dgen <= ql_.n(); ++dgen) {
            if (dgen > k) continue;
            auto ps = classical_power_sum(dgen);
            Rat lam = evaluate_classical(ps, dgen, o);
            for (int left = 0; left + dgen <= k; ++left)
                for (int right = 0; left + dgen + right <= k; ++right) {
                    long long dl = ipow(g_, left), drr = ipow(g_, right);
                    long long mid = ipow(g_, dgen);
                    int top = left + dgen + right;
                    for (long long a = 0; a < dl; ++a)
                        for (long long b = 0; b < drr; ++b) {
                            typename Mat::Row r;
                            for (long long j = 0; j < mid; ++j)
                                if (!is_zero(ps[j]))
                                    r.push_back({static_cast<int>(offset[top] + (a * mid + j) * drr + b),
                                                 ratfunc_from(ps[j])});
                            r.push_back({static_cast<int>(offset[left + right] + a * drr + b),
                                         ratfunc_from(-lam)});
                            std::sort(r.begin(), r.end(),
                                      [](const auto& x, const auto& y) { return x.first < y.first; });
                            rows.push_back(std::move(r));
                        }
                }
        }
        return amb - rank(Mat::from_rows(std::move(rows), static_cast<int>(amb)));
    };

    for (int k = 0; k <= d_; ++k) {
        long long expected = classical_filtered(k);
        std::vector<long long> offset(k + 2, 0);
        for (int i = 1; i <= k + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);
        long long amb = offset[k + 1];
        auto rows = ideal_rows(k, &chi, &o);

        auto dim_of = [&](auto&& transform, const char* label) {
            std::vector<typename MatT::Row> copy;
            for (const auto& r : rows) {
                typename MatT::Row nr;
                for (const auto& [j, v] : r) {
                    RatFuncT w = transform(v);
                    if (!is_zero(w)) nr.push_back({j, w});
                }
                copy.push_back(std::move(nr));
            }
            long long dim = amb - rank(MatT::from_rows(std::move(copy), static_cast<int>(amb)));
            out.push_back(make_cert(std::string("quotient filtered dimension, ") + label +
                                        ", degree " + std::to_string(k),
                                    k, expected, dim));
        };
        dim_of([](const RatFuncT& v) { return v; }, "t symbolic");
        dim_of([](const RatFuncT& v) { return RatFuncT(eval_t(v, RatFunc(0))); }, "t = 0");
        dim_of([](const RatFuncT& v) { return RatFuncT(eval_t(v, RatFunc(1))); }, "t = 1");
        dim_of([](const RatFuncT& v) { return eval_q1(RatFuncT(eval_t(v, RatFunc(0)))); },
               "t = 0, q = 1");
        dim_of([](const RatFuncT& v) { return eval_q1(RatFuncT(eval_t(v, RatFunc(1)))); },
               "t = 1, q = 1");
    }
    return out;
}

std::vector<GradedCert> OrbitFamily::kks_cert(const OrbitSpec& o) {
    std::vector<GradedCert> out;
    CharacterData chi = build_character(o);
    int cap = 2;
    std::vector<long long> offset(cap + 2, 0);
    for (int i = 1; i <= cap + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);
    long long amb = offset[cap + 1];
    auto rows = ideal_rows(cap, &chi, &o);
    std::vector<typename MatT::Row> sp;
    for (auto& r : rows) {
        typename MatT::Row nr;
        for (auto& [j, v] : r) {
            RatFuncT w = eval_q1(v);
            if (!is_zero(w)) nr.push_back({j, w});
        }
        sp.push_back(std::move(nr));
    }
    SubT slice = SubT::from_rows(MatT::from_rows(std::move(sp), static_cast<int>(amb)));

    // classical structure constants at q = 1
    Mat br1(g_, g_ * g_);
    for (int c = 0; c < g_; ++c)
        for (const auto& [j, v] : ql_.bracket().row(c)) {
            Rat x = eval1(v);
            if (!is_zero(x)) br1.set(c, j, ratfunc_from(x));
        }
    RatFuncT t = t_var();
    bool ok = true;
    for (int a = 0; a < g_ && ok; ++a)
        for (int b = a + 1; b < g_; ++b) {
            typename MatT::Row row;
            long long p1 = offset[2] + a * g_ + b;
            long long p2 = offset[2] + b * g_ + a;
            row.push_back({static_cast<int>(std::min(p1, p2)),
                           p1 < p2 ? RatFuncT(1) : RatFuncT(-1)});
            row.push_back({static_cast<int>(std::max(p1, p2)),
                           p1 < p2 ? RatFuncT(-1) : RatFuncT(1)});
            // bracket of the antisymmetrized tensor, matching the family's
            // own normalization of the linear term
            for (int c = 0; c < g_; ++c) {
                RatFunc f = br1.get(c, a * g_ + b) - br1.get(c, b * g_ + a);
                if (!is_zero(f)) row.push_back({static_cast<int>(offset[1] + c),
                                                RatFuncT(0) - t * lift_t(f)});
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (!slice.contains(row)) {
                ok = false;
                break;
            }
        }
    out.push_back(make_bool_cert("commutators reduce to the t-scaled bracket at q = 1", 2, ok));
    return out;
}

std::vector<GradedCert> OrbitFamily::composition_cert() {
    std::vector<GradedCert> out;
    for (int k = 0; k <= d_; ++k) {
        std::vector<long long> offset(k + 2, 0);
        for (int i = 1; i <= k + 1; ++i) offset[i] = offset[i - 1] + ipow(g_, i - 1);
        long long amb = offset[k + 1];
        auto rows = ideal_rows(k, nullptr, nullptr);
        long long slice_rank = rank(MatT::from_rows(
            std::vector<typename MatT::Row>(rows.begin(), rows.end()), static_cast<int>(amb)));
        long long wdim = 0;
        for (int j = 0; j <= k; ++j) {
            const RealizedComponent& w = dr_.component(PartKind::Sym, j);
            wdim += w.space.dim();
            for (int i = 0; i < w.space.dim(); ++i) {
                typename MatT::Row r;
                for (const auto& [c, v] : w.space.basis().row(i))
                    r.push_back({static_cast<int>(offset[j] + c), lift_t(v)});
                rows.push_back(std::move(r));
            }
        }
        long long joint = rank(MatT::from_rows(std::move(rows), static_cast<int>(amb)));
        bool ok = (joint == slice_rank + wdim) && (joint == amb);
        out.push_back(make_bool_cert("symmetric realization spans the filtered family at degree " +
                                         std::to_string(k),
                                     k, ok));
    }
    return out;
}

} // namespace qde
