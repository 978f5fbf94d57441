#include "sqw/bounds.hpp"

#include <cmath>
#include <limits>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

constexpr unsigned __int128 kSat = ~(unsigned __int128)0;

unsigned __int128 sat_mul(unsigned __int128 a, unsigned __int128 b) {
    if (a != 0 && b > kSat / a) return kSat;
    return a * b;
}

unsigned __int128 sat_pow(uint64_t base, unsigned exp) {
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < exp; ++i) v = sat_mul(v, base);
    return v;
}

void check_domain(uint64_t p, unsigned r) {
    if (p < 3 || p % 2 == 0) throw ConfigError("p must be an odd prime >= 3");
    if (r < 2) throw ConfigError("r must be >= 2");
}

}  // namespace

double bound_main(uint64_t p, unsigned r, uint64_t w_size) {
    check_domain(p, r);
    if (w_size < 1) throw ConfigError("w_size must be >= 1");
    double w = double(w_size), pd = double(p), rd = double(r);
    double t1 = std::pow(w, 1.0 - 1.0 / (2.0 * rd)) * std::pow(pd, 0.25) * std::sqrt(2.0 * rd - 1.0);
    double t2 = std::pow(w, 1.0 / (2.0 * rd)) *
                (0.25 * std::pow(pd, 0.75) * std::pow(rd, 1.5) + std::sqrt(pd));
    return 0.5 * (t1 + t2 + 1.0);
}

double bound_dms(uint64_t p, unsigned r, uint64_t d_size) {
    check_domain(p, r);
    if (d_size < 2 || d_size > p - 1)
        throw ConfigError("equal-digit-set bound needs 2 <= |D| <= p-1");
    double pd = double(p);
    double base = double(d_size) + pd * std::sqrt(pd - double(d_size));
    return std::pow(base, double(r)) / (2.0 * std::pow(pd, double(r) / 2.0));
}

PriorThresholds thresholds_prior(uint64_t p, unsigned r) {
    check_domain(p, r);
    PriorThresholds out;
    double pd = double(p), rd = double(r);
    double sp = std::sqrt(pd);
    out.thm_b_applicable = (2.0 * rd - 1.0) <= sp;
    double delta = std::pow(sp * (2.0 * rd - 1.0), 2.0 - rd);
    out.thm_b = (1.0 + delta) * (2.0 * rd - 1.0) * sp;
    if (r >= 20) {
        double cr = std::exp((4.0 * std::log(rd) + 8.0) / rd);
        out.thm_c = cr * sp * std::exp((std::log(pd) + 4.0 * std::log(std::log(pd))) / rd);
    }
    return out;
}

Corollary1Result corollary1_check(uint64_t p, unsigned r, double eps, uint64_t prod_d) {
    check_domain(p, r);
    if (eps <= 0) throw ConfigError("eps must be positive");
    Corollary1Result out;
    double pd = double(p), rd = double(r);
    out.threshold = std::pow(2.0 * rd - 1.0, rd) * std::pow(pd, rd * (0.5 + eps));
    // non-integral exponent: compare in logs
    double lhs = std::log(double(prod_d));
    double rhs = rd * std::log(2.0 * rd - 1.0) + rd * (0.5 + eps) * std::log(pd);
    out.satisfied = prod_d > 0 && lhs >= rhs - 1e-12;
    out.budget = std::pow(pd, -eps / 2.0) +
                 std::pow(rd, 2.0 - rd) * std::pow(pd, 1.0 - rd / 2.0) *
                     std::pow(pd, -(2.0 * rd - 1.0) * eps / 2.0);
    return out;
}

Corollary2Result corollary2_check(uint64_t p, unsigned r, uint64_t prod_d) {
    check_domain(p, r);
    Corollary2Result out;
    double pd = double(p), rd = double(r);
    out.threshold = 8.0 * std::pow(2.0 * rd - 1.0, rd) * std::pow(pd, rd / 2.0);
    if (r % 2 == 0) {
        // threshold = 8 (2r-1)^r p^(r/2) is an integer
        unsigned __int128 t = sat_mul(8, sat_mul(sat_pow(2 * r - 1, r), sat_pow(p, r / 2)));
        out.satisfied = (unsigned __int128)prod_d >= t;
    } else {
        // compare squares: prod^2 vs 64 (2r-1)^(2r) p^r
        unsigned __int128 lhs2 = sat_mul(prod_d, prod_d);
        unsigned __int128 t2 = sat_mul(64, sat_mul(sat_pow(2 * r - 1, 2 * r), sat_pow(p, r)));
        out.satisfied = lhs2 >= t2;
    }
    out.threshold_exceeds_field = out.threshold > std::pow(pd, rd);
    return out;
}

}  // namespace sqw
