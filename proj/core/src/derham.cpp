#include <qde/derham.hpp>

namespace qde {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Mat slab_rows(const Mat& sbasis, int g, int left, int right) {
    Mat m = sbasis;
    if (left > 0) m = kron(Mat::identity(static_cast<int>(ipow(g, left))), m);
    if (right > 0) m = kron(m, Mat::identity(static_cast<int>(ipow(g, right))));
    return m;
}

// span of all embedded relation slabs inside L^{(x) k}
Sub slab_span(const Mat& sbasis, int g, int k) {
    std::vector<typename Mat::Row> rows;
    for (int i = 0; i + 2 <= k; ++i) {
        Mat slab = slab_rows(sbasis, g, i, k - 2 - i);
        for (int r = 0; r < slab.rows(); ++r) rows.push_back(slab.row(r));
    }
    return Sub::from_rows(Mat::from_rows(std::move(rows), static_cast<int>(ipow(g, k))));
}

} // namespace

// Rows are rescaled by powers of (q - 1), and rational dependencies of the
// specialized rows are lifted to Q(q)-combinations and divided out. All
// steps are invertible row operations, so the generic span is kept.
Mat flat_basis(const Sub& s) {
    RatFunc qm1 = q_var() - RatFunc(1);
    int cols = s.basis().cols();
    std::vector<std::vector<std::pair<int, RatFunc>>> rows(s.dim());
    for (int i = 0; i < s.dim(); ++i)
        for (const auto& [j, v] : s.basis().row(i)) rows[i].push_back({j, v});
    auto rescale = [&](std::vector<std::pair<int, RatFunc>>& ent) {
        auto all_regular = [&] {
            for (auto& [j, v] : ent)
                if (!regular_at(v, Rat(1))) return false;
            return true;
        };
        auto all_vanish = [&] {
            for (auto& [j, v] : ent)
                if (!is_zero(eval_at(v, Rat(1)))) return false;
            return true;
        };
        while (!all_regular())
            for (auto& [j, v] : ent) v = v * qm1;
        while (all_vanish())
            for (auto& [j, v] : ent) v = v / qm1;
    };
    for (;;) {
        std::vector<typename Mat::Row> spec;
        for (auto& ent : rows) {
            rescale(ent);
            typename Mat::Row r;
            for (auto& [j, v] : ent) {
                Rat x = eval_at(v, Rat(1));
                if (!is_zero(x)) r.push_back({j, ratfunc_from(x)});
            }
            spec.push_back(std::move(r));
        }
        Sub dep = kernel(Mat::from_rows(std::move(spec), cols).transpose());
        if (dep.dim() == 0) break;
        for (int v = 0; v < dep.dim(); ++v) {
            int pivot = dep.basis().row(v).front().first;
            std::vector<RatFunc> combo(cols, RatFunc(0));
            for (const auto& [i, c] : dep.basis().row(v))
                for (const auto& [j, w] : rows[i]) combo[j] += c * w;
            rows[pivot].clear();
            for (int j = 0; j < cols; ++j)
                if (!is_zero(combo[j])) rows[pivot].push_back({j, combo[j]});
        }
    }
    std::vector<typename Mat::Row> out;
    for (auto& ent : rows) out.push_back(typename Mat::Row(ent.begin(), ent.end()));
    return Mat::from_rows(std::move(out), cols);
}

DeRhamComplex::DeRhamComplex(QuantumLie& ql) : ql_(ql), g_(ql.dim_l()) {
    v2_ = sym_relations(ql).rel2;
    w2_ = w2_complement(ql, killing_form(ql)).w2;

    // restriction of the End(V)*-leg R-matrix to L (x) L; the submodule is
    // preserved leg-wise, verified exactly below
    const Word& we = ql.endv_word();
    Mat jj = kron(ql.iso(), ql.iso());
    Mat jj_inv = kron(ql.iso_inv(), ql.iso_inv());
    Mat r_ee = jj_inv * ql.fused().r(we, we) * jj;
    Mat incl = ql.gen_basis().transpose(); // n^2 x g
    Mat incl2 = kron(incl, incl);
    Mat proj2 = kron(ql.gen_proj(), ql.gen_proj());
    r_ll_ = proj2 * r_ee * incl2;
    if (!(r_ee * incl2 == incl2 * r_ll_)) throw error("restriction escapes submodule");
}

const RealizedComponent& DeRhamComplex::component(PartKind kind, int degree) {
    auto key = std::make_pair(static_cast<int>(kind), degree);
    auto it = comps_.find(key);
    if (it != comps_.end()) return it->second;

    RealizedComponent c;
    c.kind = kind;
    c.degree = degree;
    int amb = static_cast<int>(ipow(g_, degree));
    const Sub& part2 = (kind == PartKind::Sym) ? w2_ : v2_; // the component
    const Sub& rel2 = (kind == PartKind::Sym) ? v2_ : w2_;  // the quotient kernel
    if (degree < 2) {
        c.space = Sub::from_rows(Mat::identity(amb));
        c.proj = Mat::identity(amb);
        c.proj_inv = Mat::identity(amb);
        return comps_.emplace(key, std::move(c)).first->second;
    }
    c.space = (kind == PartKind::Sym) ? symmetric_part(ql_, part2, degree)
                                      : antisymmetric_part(ql_, part2, degree);
    Sub rel = slab_span(rel2.basis(), g_, degree);
    if (c.space.dim() + rel.dim() != amb) throw error("realization not complementary");
    if (c.space.dim() == 0) {
        c.proj = Mat(0, amb);
        c.proj_inv = Mat(amb, 0);
        return comps_.emplace(key, std::move(c)).first->second;
    }
    // columns: component basis followed by the relation span; the inverse
    // rows over the component block give the quotient projection. Both
    // bases are taken in q = 1-adapted form so every coordinate matrix of
    // the complex specializes to its classical counterpart at full rank.
    Mat fb = flat_basis(c.space);
    Mat rb = flat_basis(rel);
    Mat cols(amb, amb);
    int at = 0;
    for (int i = 0; i < fb.rows(); ++i, ++at)
        for (const auto& [j, v] : fb.row(i)) cols.set(j, at, v);
    for (int i = 0; i < rb.rows(); ++i, ++at)
        for (const auto& [j, v] : rb.row(i)) cols.set(j, at, v);
    Mat inv = inverse(cols);
    c.proj = inv.block(0, 0, c.space.dim(), amb);
    c.proj_inv = fb.transpose();
    return comps_.emplace(key, std::move(c)).first->second;
}

long long DeRhamComplex::bidegree_dim(int k, int m) {
    return static_cast<long long>(component(PartKind::Sym, k).space.dim()) *
           component(PartKind::Ext, m).space.dim();
}

Mat DeRhamComplex::build_differential(int k, int m, bool& projected) {
    const RealizedComponent& wk = component(PartKind::Sym, k);
    const RealizedComponent& vm = component(PartKind::Ext, m);
    const RealizedComponent& wk1 = component(PartKind::Sym, k - 1);
    const RealizedComponent& vm1 = component(PartKind::Ext, m + 1);

    Mat incl = kron(wk.proj_inv, vm.proj_inv);
    Mat transfer = vm1.proj_inv * vm1.proj; // projection of L^{(x) m+1} onto V^{m+1}
    Mat amb = kron(Mat::identity(static_cast<int>(ipow(g_, k - 1))), transfer) * incl;

    // does the image lie in W^{k-1} (x) V^{m+1}?
    projected = false;
    if (wk1.space.dim() > 0 && vm1.space.dim() > 0) {
        Sub target = Sub::from_rows(kron(wk1.space.basis(), vm1.space.basis()));
        Mat cols = amb.transpose();
        for (int j = 0; j < cols.rows() && !projected; ++j)
            if (!target.contains(cols.row(j))) projected = true;
    }
    return kron(wk1.proj, vm1.proj) * amb;
}

const Mat& DeRhamComplex::differential(int k, int m) {
    if (k < 1) throw error("differential needs symmetric degree");
    auto key = std::make_pair(k, m);
    auto it = diffs_.find(key);
    if (it != diffs_.end()) return it->second;
    bool projected = false;
    Mat d = build_differential(k, m, projected);
    diff_projected_[key] = projected;
    return diffs_.emplace(key, std::move(d)).first->second;
}

bool DeRhamComplex::differential_projected(int k, int m) {
    differential(k, m);
    return diff_projected_.at({k, m});
}

const Mat& DeRhamComplex::r_power(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = rpow_.find(key);
    if (it != rpow_.end()) return it->second;
    Mat res;
    if (a == 1 && b == 1) {
        res = r_ll_;
    } else if (b > 1) {
        // R_{A, B (x) C} = R_{A,C}^{13} R_{A,B}^{12}
        int da = static_cast<int>(ipow(g_, a));
        int db = static_cast<int>(ipow(g_, b - 1));
        Mat r12 = kron(r_power(a, b - 1), Mat::identity(g_));
        Mat to_acb = kron(Mat::identity(da), swap_legs<RatFunc>(db, g_));
        Mat to_abc = kron(Mat::identity(da), swap_legs<RatFunc>(g_, db));
        Mat r13 = to_abc * kron(r_power(a, 1), Mat::identity(db)) * to_acb;
        res = r13 * r12;
    } else {
        // R_{A (x) B, C} = R_{A,C}^{13} R_{B,C}^{23}
        int da = static_cast<int>(ipow(g_, a - 1));
        Mat r23 = kron(Mat::identity(da), r_ll_);
        Mat sw = kron(Mat::identity(da), swap_legs<RatFunc>(g_, g_));
        Mat r13 = sw * kron(r_power(a - 1, 1), Mat::identity(g_)) * sw;
        res = r13 * r23;
    }
    return rpow_.emplace(key, std::move(res)).first->second;
}

Mat DeRhamComplex::leg_exchange(int m, int k) {
    int dm = static_cast<int>(ipow(g_, m));
    int dk = static_cast<int>(ipow(g_, k));
    if (m == 0 || k == 0) return Mat::identity(dm * dk);
    return swap_legs<RatFunc>(dm, dk) * r_power(m, k);
}

OmegaElement DeRhamComplex::unit() const {
    return OmegaElement{0, 0, {RatFunc(1)}};
}

OmegaElement DeRhamComplex::basis_element(int k, int m, int index) {
    OmegaElement x{k, m, std::vector<RatFunc>(bidegree_dim(k, m), RatFunc(0))};
    x.coords.at(index) = RatFunc(1);
    return x;
}

OmegaElement DeRhamComplex::product(const OmegaElement& x, const OmegaElement& y) {
    const RealizedComponent& wk1 = component(PartKind::Sym, x.k);
    const RealizedComponent& vm1 = component(PartKind::Ext, x.m);
    const RealizedComponent& wk2 = component(PartKind::Sym, y.k);
    const RealizedComponent& vm2 = component(PartKind::Ext, y.m);
    auto ax = kron(wk1.proj_inv, vm1.proj_inv).apply_vec(x.coords);
    auto ay = kron(wk2.proj_inv, vm2.proj_inv).apply_vec(y.coords);
    std::vector<RatFunc> full(ax.size() * ay.size(), RatFunc(0));
    for (size_t i = 0; i < ax.size(); ++i) {
        if (is_zero(ax[i])) continue;
        for (size_t j = 0; j < ay.size(); ++j)
            if (!is_zero(ay[j])) full[i * ay.size() + j] = ax[i] * ay[j];
    }
    int dk1 = static_cast<int>(ipow(g_, x.k));
    int dm2 = static_cast<int>(ipow(g_, y.m));
    Mat mover = kron(Mat::identity(dk1), kron(leg_exchange(x.m, y.k), Mat::identity(dm2)));
    auto moved = mover.apply_vec(full);
    OmegaElement out{x.k + y.k, x.m + y.m, {}};
    out.coords = kron(component(PartKind::Sym, out.k).proj, component(PartKind::Ext, out.m).proj)
                     .apply_vec(moved);
    return out;
}

OmegaElement DeRhamComplex::d(const OmegaElement& x) {
    OmegaElement out{x.k > 0 ? x.k - 1 : 0, x.m + 1, {}};
    out.coords.assign(static_cast<size_t>(bidegree_dim(out.k, out.m)), RatFunc(0));
    if (x.k == 0) return out;
    out.coords = differential(x.k, x.m).apply_vec(x.coords);
    return out;
}

long long DeRhamComplex::leibniz_defect(const OmegaElement& x, const OmegaElement& y) {
    OmegaElement lhs = d(product(x, y));
    OmegaElement t1 = product(d(x), y);
    OmegaElement t2 = product(x, d(y));
    RatFunc sign = (x.m % 2 == 0) ? RatFunc(1) : RatFunc(-1);
    long long bad = 0;
    for (size_t i = 0; i < lhs.coords.size(); ++i)
        if (!is_zero(lhs.coords[i] - t1.coords[i] - sign * t2.coords[i])) ++bad;
    return bad;
}

std::vector<GradedCert> DeRhamComplex::d_squared_cert(int k_max, int m_max) {
    std::vector<GradedCert> out;
    for (int k = 0; k <= k_max; ++k)
        for (int m = 0; m <= m_max; ++m) {
            std::string ctx = "d squared vanishes at (" + std::to_string(k) + ", " +
                              std::to_string(m) + ")";
            long long bad = 0;
            if (k >= 2 && bidegree_dim(k, m) > 0) {
                Mat comp = differential(k - 1, m + 1) * differential(k, m);
                for (int i = 0; i < comp.rows(); ++i) bad += static_cast<long long>(comp.row(i).size());
            }
            out.push_back(make_cert(std::move(ctx), k + m, 0, bad));
        }
    return out;
}

std::vector<GradedCert> DeRhamComplex::exactness_cert(int total_max) {
    std::vector<GradedCert> out;
    out.push_back(make_cert("cohomology of the constants at (0, 0)", 0, 1, bidegree_dim(0, 0)));
    for (int total = 1; total <= total_max; ++total) {
        for (int k = total; k >= 0; --k) {
            int m = total - k;
            long long dim = bidegree_dim(k, m);
            long long out_rank = (k >= 1 && dim > 0) ? rank(differential(k, m)) : 0;
            long long in_rank =
                (k < total && bidegree_dim(k + 1, m - 1) > 0) ? rank(differential(k + 1, m - 1)) : 0;
            std::string ctx = "exactness at (" + std::to_string(k) + ", " + std::to_string(m) + ")";
            out.push_back(make_cert(std::move(ctx), total, dim - out_rank, in_rank));
        }
    }
    return out;
}

} // namespace qde
