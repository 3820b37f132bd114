/**
 * @file cert.hpp
 * @brief Per-check certificate records: expected vs computed counts.
 */
#ifndef QDE_CERT_HPP
#define QDE_CERT_HPP

#include <string>
#include <vector>

namespace qde {

struct GradedCert {
    std::string context;
    int degree = 0;
    long long expected = 0;
    long long computed = 0;
    bool pass = false;
};

inline GradedCert make_cert(std::string context, int degree, long long expected,
                            long long computed) {
    GradedCert c;
    c.context = std::move(context);
    c.degree = degree;
    c.expected = expected;
    c.computed = computed;
    c.pass = (expected == computed);
    return c;
}

// boolean checks encoded as expected 1, computed 0/1
inline GradedCert make_bool_cert(std::string context, int degree, bool ok) {
    return make_cert(std::move(context), degree, 1, ok ? 1 : 0);
}

inline bool all_pass(const std::vector<GradedCert>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

} // namespace qde

#endif
