/**
 * @file qdcert.cpp
 * @brief Certification front end: runs the R-matrix, quantum Lie,
 *        flatness, de Rham and orbit suites, emits JSON reports, diffs
 *        them, and dumps representation and operator matrices.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <qde/orbit.hpp>

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <queue>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace qde;

namespace {

constexpr const char* kEngineVersion = "0.1.0";

// digest of the fixed convention choices, embedded in every report so that
// cross-version diffs are detectable
std::string conventions_digest() {
    const char* text =
        "coproduct E:E1+KE F:FKinv+1F K:KK; antipode E:-KinvE F:-FK K:Kinv; "
        "R gl-normalized; pivotal q^(n-1)..q^(1-n); dual via antipode transpose; "
        "sigma from coproduct split; killing normalized at q=1; braided W2 pairing";
    unsigned long long h = 1469598103934665603ull;
    for (const char* p = text; *p; ++p) {
        h ^= static_cast<unsigned long long>(*p);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Mat eval1m(const Mat& m) {
    return m.map<RatFunc>([](const RatFunc& v) { return ratfunc_from(eval_at(v, Rat(1))); });
}

bool mat_zero(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) return false;
    return true;
}

// ---------------------------------------------------------------- suites

std::vector<GradedCert> rmatrix_suite(int n) {
    std::vector<GradedCert> out;
    Mat r = r_matrix(n);
    int d = n * n;
    Mat id = Mat::identity(n);
    Mat r12 = kron(r, id);
    Mat r23 = kron(id, r);
    Mat p23 = kron(id, swap_legs<RatFunc>(n, n));
    Mat r13 = p23 * r12 * p23;
    out.push_back(make_bool_cert("rmatrix: yang-baxter", n, r12 * r13 * r23 == r23 * r13 * r12));

    Mat rt = swap_legs<RatFunc>(n, n) * r;
    Mat idv = Mat::identity(d);
    out.push_back(make_bool_cert("rmatrix: hecke quadratic",
                                 n, mat_zero((rt - idv * q_pow(1)) * (rt + idv * q_pow(-1)))));

    Rep v = vector_rep(n);
    Rep vv = tensor_rep(v, v);
    Rep op = opposite_tensor_rep(v, v);
    bool inter = true;
    for (size_t i = 0; i < vv.e.size(); ++i) {
        if (!(r * vv.e[i] == op.e[i] * r)) inter = false;
        if (!(r * vv.f[i] == op.f[i] * r)) inter = false;
        if (!(r * vv.k[i] == op.k[i] * r)) inter = false;
    }
    out.push_back(make_bool_cert("rmatrix: coproduct intertwining", n, inter));
    out.push_back(make_bool_cert("rmatrix: identity at q = 1", n, eval1m(r) == idv));
    return out;
}

std::vector<GradedCert> qlie_suite(int n, int horizon) {
    std::vector<GradedCert> out;
    QuantumLie ql(n);
    int g = ql.dim_l();

    // Q commutes with every generator action, words of length 1..horizon
    {
        bool ok = true;
        Word w;
        for (int len = 1; len <= horizon && ok; ++len) {
            w.push_back(len == 2 ? LegVDual : LegV); // one dual leg mixed in
            Mat q = q_on(ql.fused(), w);
            Rep rep = tensor_rep(vector_rep(n), word_rep(n, w));
            for (size_t i = 0; i < rep.e.size() && ok; ++i)
                ok = (q * rep.e[i] == rep.e[i] * q) && (q * rep.f[i] == rep.f[i] * q) &&
                     (q * rep.k[i] == rep.k[i] * q);
        }
        out.push_back(make_bool_cert("qlie: q-operator invariance", horizon, ok));
    }

    out.push_back(make_bool_cert("qlie: sigma is the flip at q = 1", 2,
                                 eval1m(ql.sigma()) == swap_legs<RatFunc>(g, g)));
    {
        // bracket at q = 1: the commutator bracket of the realized generators
        std::vector<Mat> rv;
        for (int a = 0; a < g; ++a) rv.push_back(eval1m(ql.realize_generator(a, {LegV})));
        Mat br1 = eval1m(ql.bracket());
        bool ok = true;
        for (int a = 0; a < g && ok; ++a)
            for (int b = 0; b < g && ok; ++b) {
                Mat want(n, n);
                for (int c = 0; c < g; ++c) {
                    RatFunc f = br1.get(c, a * g + b);
                    if (!is_zero(f)) want = want + rv[c] * f;
                }
                ok = (rv[a] * rv[b] - rv[b] * rv[a] == want);
            }
        out.push_back(make_bool_cert("qlie: bracket is the commutator at q = 1", 2, ok));
    }
    out.push_back(make_bool_cert("qlie: casimir is the identity at q = 1", 1,
                                 eval1m(c_v(ql.fused(), {LegV})) == Mat::identity(n)));
    {
        QuantumLie ql2(n, q_pow(2));
        out.push_back(make_bool_cert("qlie: base rescaling leaves sigma unchanged", 2,
                                     ql2.sigma() == ql.sigma()));
        out.push_back(make_bool_cert("qlie: base rescaling leaves bracket unchanged", 2,
                                     ql2.bracket() == ql.bracket()));
    }
    for (auto& c : verify_relations(ql, horizon)) out.push_back(std::move(c));
    return out;
}

std::vector<GradedCert> flatness_suite(int n, int D, const std::string& algebra) {
    std::vector<GradedCert> out;
    QuantumLie ql(n);
    int g = ql.dim_l();
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    if (algebra == "sym" || algebra == "both") {
        QuadraticData qd = sym_relations(ql);
        for (int k = 0; k <= D; ++k)
            out.push_back(make_cert("flatness: symmetric algebra dimension", k,
                                    binom(g + k - 1, k), graded_dim(qd, k)));
    }
    if (algebra == "ext" || algebra == "both") {
        Mat b = killing_form(ql);
        QuadraticData qd = ext_relations(ql, w2_complement(ql, b).w2);
        for (int k = 0; k <= D; ++k)
            out.push_back(make_cert("flatness: exterior algebra dimension", k, binom(g, k),
                                    graded_dim(qd, k)));
    }
    if (algebra == "qlinear") {
        for (auto& c : pbw_check(ql, D)) out.push_back(std::move(c));
    }
    return out;
}

std::vector<GradedCert> derham_suite(int n, int kmax, int mmax) {
    std::vector<GradedCert> out;
    QuantumLie ql(n);
    DeRhamComplex dr(ql);
    int g = dr.gen_dim();
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    for (int k = 0; k <= kmax; ++k)
        out.push_back(make_cert("derham: symmetric component dimension", k, binom(g + k - 1, k),
                                dr.component(PartKind::Sym, k).space.dim()));
    for (int m = 0; m <= mmax; ++m)
        out.push_back(make_cert("derham: antisymmetric component dimension", m, binom(g, m),
                                dr.component(PartKind::Ext, m).space.dim()));
    for (auto& c : dr.d_squared_cert(kmax, mmax)) out.push_back(std::move(c));
    for (auto& c : dr.exactness_cert(kmax)) out.push_back(std::move(c));
    return out;
}

std::vector<GradedCert> orbit_suite(int n, const std::vector<Rat>& eigenvalues, int D) {
    std::vector<GradedCert> out;
    QuantumLie ql(n);
    DeRhamComplex dr(ql);
    OrbitFamily fam(ql, dr, D);
    OrbitSpec o{n, eigenvalues};
    validate_orbit(o);
    for (auto c : fam.invariants().certs) out.push_back(std::move(c));
    for (auto& c : fam.centrality_cert()) out.push_back(std::move(c));
    out.push_back(fam.freeness_evidence());
    for (auto& c : fam.quotient_cert(o)) out.push_back(std::move(c));
    for (auto& c : fam.kks_cert(o)) out.push_back(std::move(c));
    for (auto& c : fam.composition_cert()) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------- report

json certs_to_json(const std::vector<GradedCert>& cs) {
    json arr = json::array();
    for (const auto& c : cs)
        arr.push_back(json{{"context", c.context},
                           {"degree", c.degree},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass}});
    return arr;
}

struct RunConfig {
    int n = 2;
    int max_degree = 4;
    int horizon = 5;
    std::vector<std::string> suites{"rmatrix", "qlie", "flatness", "derham", "orbit"};
    std::string specializations = "generic";
    std::string report_path;
    int thread_count = 1;
    std::vector<Rat> eigenvalues{Rat(1), Rat(-1)};
    bool with_timing = false;
};

// bounded worker pool; results are stored by task index, so aggregation is
// independent of scheduling order
std::vector<std::vector<GradedCert>> run_pool(
    const std::vector<std::function<std::vector<GradedCert>()>>& tasks, int threads,
    std::vector<long long>& millis) {
    std::vector<std::vector<GradedCert>> results(tasks.size());
    millis.assign(tasks.size(), 0);
    std::mutex mu;
    size_t next = 0;
    auto worker = [&] {
        for (;;) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= tasks.size()) return;
                idx = next++;
            }
            auto start = std::chrono::steady_clock::now();
            auto res = tasks[idx]();
            auto stop = std::chrono::steady_clock::now();
            results[idx] = std::move(res);
            millis[idx] =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        }
    };
    int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

int run_command(const RunConfig& cfg) {
    std::vector<std::string> order{"rmatrix", "qlie", "flatness", "derham", "orbit"};
    std::vector<std::string> selected;
    for (const auto& s : order)
        if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end())
            selected.push_back(s);

    int n = cfg.n, D = cfg.max_degree, K = cfg.horizon;
    std::vector<std::function<std::vector<GradedCert>()>> tasks;
    for (const auto& s : selected) {
        if (s == "rmatrix") tasks.push_back([n] { return rmatrix_suite(n); });
        if (s == "qlie")
            tasks.push_back([n, K] { return qlie_suite(n, std::min(K, n == 2 ? 3 : 2)); });
        if (s == "flatness") tasks.push_back([n, D] { return flatness_suite(n, D, "both"); });
        if (s == "derham")
            tasks.push_back([n, D] { return derham_suite(n, std::min(D, 3), std::min(D, 3)); });
        if (s == "orbit") {
            auto ev = cfg.eigenvalues;
            tasks.push_back([n, D, ev] { return orbit_suite(n, ev, std::min(D, 3)); });
        }
    }
    std::vector<long long> millis;
    auto results = run_pool(tasks, cfg.thread_count, millis);

    bool overall = true;
    json suites = json::array();
    for (size_t i = 0; i < selected.size(); ++i) {
        bool pass = all_pass(results[i]);
        overall = overall && pass;
        suites.push_back(
            json{{"name", selected[i]}, {"pass", pass}, {"certs", certs_to_json(results[i])}});
        std::cout << (pass ? "pass" : "FAIL") << "  " << selected[i] << "  ("
                  << results[i].size() << " certificates, " << millis[i] << " ms)\n";
    }

    json timing = json::object();
    if (cfg.with_timing)
        for (size_t i = 0; i < selected.size(); ++i) timing[selected[i]] = millis[i];

    std::string evs;
    for (size_t i = 0; i < cfg.eigenvalues.size(); ++i) {
        if (i) evs += ",";
        evs += to_string(cfg.eigenvalues[i]);
    }
    json report{{"schema", 1},
                {"engine_version", kEngineVersion},
                {"conventions", conventions_digest()},
                {"config",
                 json{{"n", cfg.n},
                      {"max_degree", cfg.max_degree},
                      {"horizon", cfg.horizon},
                      {"suites", selected},
                      {"specializations", cfg.specializations},
                      {"eigenvalues", evs}}},
                {"suites", suites},
                {"timing", timing},
                {"overall_pass", overall}};
    if (!cfg.report_path.empty()) {
        std::ofstream f(cfg.report_path);
        f << report.dump(2) << "\n";
    }
    std::cout << (overall ? "overall: pass" : "overall: FAIL") << "\n";
    return overall ? 0 : 1;
}

// structural diff, ignoring the timing block and the echoed thread count
void strip_volatile(json& j) {
    j.erase("timing");
    if (j.contains("config") && j["config"].contains("thread_count"))
        j["config"].erase("thread_count");
}

int diff_command(const std::string& a, const std::string& b) {
    std::ifstream fa(a), fb(b);
    if (!fa || !fb) {
        std::cerr << "cannot open report\n";
        return 2;
    }
    json ja = json::parse(fa), jb = json::parse(fb);
    strip_volatile(ja);
    strip_volatile(jb);
    if (ja == jb) return 0;
    // descend one level for a readable summary
    for (auto& [key, va] : ja.items()) {
        if (!jb.contains(key))
            std::cout << "only in first: " << key << "\n";
        else if (jb[key] != va)
            std::cout << "differs: " << key << "\n";
    }
    for (auto& [key, vb] : jb.items())
        if (!ja.contains(key)) std::cout << "only in second: " << key << "\n";
    return 1;
}

void write_report_file(const std::string& path, const std::string& name,
                       const std::vector<GradedCert>& certs) {
    if (path.empty()) return;
    json report{{"schema", 1},
                {"engine_version", kEngineVersion},
                {"conventions", conventions_digest()},
                {"suite", name},
                {"pass", all_pass(certs)},
                {"certs", certs_to_json(certs)}};
    std::ofstream f(path);
    f << report.dump(2) << "\n";
}

void dump_matrix(std::ostream& os, const Mat& m) {
    os << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) os << i << " " << j << " " << to_string(v) << "\n";
}

std::vector<Rat> parse_eigenvalues(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
    return out;
}

int print_certs(const std::vector<GradedCert>& certs) {
    for (const auto& c : certs)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.context << "  [degree " << c.degree
                  << ", expected " << c.expected << ", computed " << c.computed << "]\n";
    return all_pass(certs) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification suites for the quantized algebra family"};
    app.require_subcommand(1);

    int default_threads = 1;
    if (const char* env = std::getenv("QDCERT_THREADS")) default_threads = std::atoi(env);

    try {
        // rmatrix-check
        auto* rm = app.add_subcommand("rmatrix-check", "R-matrix identities");
        int rm_n = 2;
        std::string rm_report;
        rm->add_option("--n", rm_n)->check(CLI::Range(2, 6));
        rm->add_option("--report", rm_report);

        // qlie
        auto* qs = app.add_subcommand("qlie", "quantum Lie structure certificates");
        int q_n = 2, q_k = 3;
        std::string q_dump, q_report;
        qs->add_option("--n", q_n)->check(CLI::Range(2, 4));
        qs->add_option("--horizon", q_k)->check(CLI::Range(2, 6));
        qs->add_option("--dump", q_dump)->check(CLI::IsMember({"sigma", "bracket", "cv"}));
        qs->add_option("--report", q_report);

        // flatness
        auto* fs = app.add_subcommand("flatness", "graded dimension certificates");
        int f_n = 2, f_d = 4;
        std::string f_alg = "both", f_report;
        fs->add_option("--n", f_n)->check(CLI::Range(2, 4));
        fs->add_option("--max-degree", f_d)->check(CLI::Range(2, 6));
        fs->add_option("--algebra", f_alg)->check(CLI::IsMember({"sym", "ext", "both", "qlinear"}));
        fs->add_option("--report", f_report);

        // derham
        auto* ds = app.add_subcommand("derham", "de Rham complex certificates");
        int d_n = 2, d_k = 3, d_m = 3;
        std::string d_report;
        std::vector<int> d_dump;
        ds->add_option("--n", d_n)->check(CLI::Range(2, 3));
        ds->add_option("--max-k", d_k)->check(CLI::Range(0, 4));
        ds->add_option("--max-m", d_m)->check(CLI::Range(0, 4));
        ds->add_option("--report", d_report);
        ds->add_option("--dump-d", d_dump)->expected(2);

        // orbit
        auto* os_ = app.add_subcommand("orbit", "orbit quantization certificates");
        int o_n = 2, o_d = 3;
        std::string o_ev = "1,-1", o_report;
        os_->add_option("--n", o_n)->check(CLI::Range(2, 3));
        os_->add_option("--eigenvalues", o_ev);
        os_->add_option("--max-degree", o_d)->check(CLI::Range(2, 4));
        os_->add_option("--report", o_report);

        // run
        auto* rs = app.add_subcommand("run", "full certification run");
        RunConfig cfg;
        cfg.thread_count = default_threads;
        std::string suites_arg = "all", run_ev = "1,-1";
        rs->add_option("--n", cfg.n)->check(CLI::Range(2, 3));
        rs->add_option("--max-degree", cfg.max_degree)->check(CLI::Range(2, 6));
        rs->add_option("--horizon", cfg.horizon)->check(CLI::Range(2, 6));
        rs->add_option("--suites", suites_arg);
        rs->add_option("--eigenvalues", run_ev);
        rs->add_option("--report", cfg.report_path);
        rs->add_option("--threads", cfg.thread_count)->check(CLI::Range(1, 64));
        rs->add_flag("--timing", cfg.with_timing);

        // diff
        auto* df = app.add_subcommand("diff", "structural report diff");
        std::string diff_a, diff_b;
        df->add_option("a", diff_a)->required();
        df->add_option("b", diff_b)->required();

        // dump-rep
        auto* dr_ = app.add_subcommand("dump-rep", "dump word module generator matrices");
        int w_n = 2;
        std::string w_word = "v", w_out = "rep";
        dr_->add_option("--n", w_n)->check(CLI::Range(2, 4));
        dr_->add_option("--word", w_word);
        dr_->add_option("--out", w_out);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        if (rm->parsed()) {
            auto certs = rmatrix_suite(rm_n);
            write_report_file(rm_report, "rmatrix", certs);
            return print_certs(certs);
        }
        if (qs->parsed()) {
            if (!q_dump.empty()) {
                QuantumLie ql(q_n);
                if (q_dump == "sigma") dump_matrix(std::cout, ql.sigma());
                if (q_dump == "bracket") dump_matrix(std::cout, ql.bracket());
                if (q_dump == "cv") dump_matrix(std::cout, c_v(ql.fused(), {LegV}));
                return 0;
            }
            auto certs = qlie_suite(q_n, q_k);
            write_report_file(q_report, "qlie", certs);
            return print_certs(certs);
        }
        if (fs->parsed()) {
            auto certs = flatness_suite(f_n, f_d, f_alg);
            write_report_file(f_report, "flatness", certs);
            return print_certs(certs);
        }
        if (ds->parsed()) {
            if (!d_dump.empty()) {
                QuantumLie ql(d_n);
                DeRhamComplex dr(ql);
                dump_matrix(std::cout, dr.differential(d_dump[0], d_dump[1]));
                return 0;
            }
            auto certs = derham_suite(d_n, d_k, d_m);
            write_report_file(d_report, "derham", certs);
            return print_certs(certs);
        }
        if (os_->parsed()) {
            auto certs = orbit_suite(o_n, parse_eigenvalues(o_ev), o_d);
            write_report_file(o_report, "orbit", certs);
            return print_certs(certs);
        }
        if (rs->parsed()) {
            if (suites_arg != "all") {
                cfg.suites.clear();
                std::stringstream ss(suites_arg);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.suites.push_back(item);
            }
            cfg.eigenvalues = parse_eigenvalues(run_ev);
            if (cfg.max_degree < 2 || cfg.horizon < cfg.max_degree) {
                std::cerr << "invalid config: need max-degree >= 2 and horizon >= max-degree\n";
                return 2;
            }
            return run_command(cfg);
        }
        if (df->parsed()) return diff_command(diff_a, diff_b);
        if (dr_->parsed()) {
            Word w;
            std::stringstream ss(w_word);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "v")
                    w.push_back(LegV);
                else if (item == "v*")
                    w.push_back(LegVDual);
                else {
                    std::cerr << "word letters are v and v*\n";
                    return 2;
                }
            }
            Rep rep = word_rep(w_n, w);
            json sidecar{{"word", word_label(w)}, {"dimension", rep.dim}, {"n", w_n}};
            std::ofstream(w_out + ".json") << sidecar.dump(2) << "\n";
            for (size_t i = 0; i < rep.e.size(); ++i) {
                std::ofstream fe(w_out + "_e" + std::to_string(i) + ".txt");
                dump_matrix(fe, rep.e[i]);
                std::ofstream ff(w_out + "_f" + std::to_string(i) + ".txt");
                dump_matrix(ff, rep.f[i]);
                std::ofstream fk(w_out + "_k" + std::to_string(i) + ".txt");
                dump_matrix(fk, rep.k[i]);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
