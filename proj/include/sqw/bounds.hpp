#pragma once

#include <cstdint>
#include <optional>

namespace sqw {

// Main deviation bound:
//   1/2 * ( |W|^(1-1/(2r)) p^(1/4) (2r-1)^(1/2)
//         + |W|^(1/(2r)) (p^(3/4) r^(3/2) / 4 + p^(1/2)) + 1 )
double bound_main(uint64_t p, unsigned r, uint64_t w_size);

// Equal-digit-set deviation bound (|D| + p sqrt(p-|D|))^r / (2 sqrt(q));
// defined for 2 <= d_size <= p-1.
double bound_dms(uint64_t p, unsigned r, uint64_t d_size);

// Digit-set-size thresholds from earlier existence results. thm_b needs
// 2r-1 <= sqrt(p); thm_c only exists for r >= 20. Violated hypotheses are
// flagged, not thrown.
struct PriorThresholds {
    std::optional<double> thm_b;
    bool thm_b_applicable = false;
    std::optional<double> thm_c;
};

PriorThresholds thresholds_prior(uint64_t p, unsigned r);

// Density corollary: prod |D_i| >= (2r-1)^r p^(r(1/2+eps)) forces
// |W cap Q| / |W| = 1/2 + O(p^(-eps/2)). budget is the explicit pre-O
// expression p^(-eps/2) + r^(2-r) p^(1-r/2) p^(-(2r-1)eps/2); the absolute
// constant behind the O is unspecified, so the flag records that the
// budget carries an implicit constant 1.
struct Corollary1Result {
    bool satisfied = false;
    double threshold = 0.0;
    double budget = 0.0;
    bool constant_unspecified = true;
};

Corollary1Result corollary1_check(uint64_t p, unsigned r, double eps, uint64_t prod_d);

// Existence corollary: prod |D_i| >= 8 (2r-1)^r p^(r/2) forces a nonzero
// square in W. The comparison is exact: integer-vs-integer for even r,
// squared integers for odd r (half-integer exponent).
struct Corollary2Result {
    bool satisfied = false;
    double threshold = 0.0;
    bool threshold_exceeds_field = false;  // threshold > q: unsatisfiable
};

Corollary2Result corollary2_check(uint64_t p, unsigned r, uint64_t prod_d);

}  // namespace sqw
