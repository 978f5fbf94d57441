#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sqw/counting.hpp"
#include "sqw/digit_space.hpp"

namespace sqw {

struct ChainCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    bool vacuous = false;
};

// Every intermediate quantity of the deviation-bound proof on one concrete
// instance, plus the full inequality chain with pass flags. A and the A_d
// are exact integers (for s = 2 each inner character sum is an integer).
struct DiagnosticsReport {
    unsigned pivot = 1;  // 1-based
    int64_t A = 0;
    std::map<unsigned, int64_t> A_d;
    std::map<unsigned, uint64_t> strata_sizes;
    double S1 = 0.0;
    double S2 = 0.0;
    int64_t char_sum_w = 0;  // sum over W of chi, exact
    uint64_t deviation_num = 0;
    uint64_t w_size = 0;
    std::vector<ChainCheck> chain;
    bool all_pass = false;
};

// pivot = 0 selects the default policy (largest digit set)
DiagnosticsReport compute_chain(const FieldCtx& ctx, const DigitSpec& spec, unsigned pivot = 0,
                                uint64_t cap = kDefaultEnumCap);

// worst-case divisor inequality sum_{d|r, d>1} sqrt(d) <= r^(3/2)/2,
// for every 2 <= r <= r_max
struct S2CheckRow {
    unsigned r;
    double lhs;
    double rhs;
    bool pass;
};

std::vector<S2CheckRow> s2_combinatorial_check(unsigned r_max);

// The character sum sum_{xi in F_p} chi_s((xi+alpha)(xi+beta)^(s-1)) for
// non-conjugate degree-r alpha, beta, against the bound (2r-1) sqrt(p).
// For s > 2 the sum is accumulated exactly as integer coefficients over the
// root-of-unity basis; only the final magnitude is floating point.
struct LemmaReport {
    uint64_t s = 2;
    FieldElement alpha, beta;
    std::vector<int64_t> coeffs;  // counts per zeta_s^k
    int64_t int_value = 0;        // the exact sum when s = 2
    double magnitude = 0.0;
    double bound = 0.0;
    bool pass = false;
};

LemmaReport wan_lemma_sum(const FieldCtx& ctx, uint64_t s, const FieldElement& alpha,
                          const FieldElement& beta);

// The pivot-selection function
//   H(x) = x^(-1/2) p^(1/4) (2r-1)^(1/2) |W| + x^(1/2) (p^(3/4) r^(3/2)/4 + p^(1/2))
struct HCurve {
    std::vector<double> xs;
    std::vector<double> values;
    double grid_argmin = 0.0;
    double stationary_point = 0.0;  // closed form from H'(x) = 0
};

double h_value(uint64_t p, unsigned r, uint64_t w_size, double x);
HCurve h_curve(uint64_t p, unsigned r, uint64_t w_size, const std::vector<double>& grid);

}  // namespace sqw
