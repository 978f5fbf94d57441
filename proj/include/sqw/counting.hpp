#pragma once

#include <cstdint>

#include "sqw/digit_space.hpp"

namespace sqw {

// Exact square census of W. deviation_num is the numerator of the exact
// rational | |W cap Q| - |W|/2 | = deviation_num / 2; no floats anywhere.
struct CountReport {
    uint64_t w_size = 0;
    uint64_t squares = 0;            // |W cap Q|
    uint64_t squares_with_zero = 0;  // |W cap Q_0|
    int64_t char_sum = 0;            // sum over W of chi(x), exact
    bool zero_in_w = false;
    uint64_t deviation_num = 0;      // |2*squares - w_size|

    double deviation() const { return double(deviation_num) / 2.0; }
};

// Streams W through the quadratic character and counts chi(x) = +1 hits.
CountReport count_squares_enum(const FieldCtx& ctx, const DigitSpec& spec,
                               uint64_t cap = kDefaultEnumCap);

// Same counts via the character-sum identity: with S = sum chi(x) over W,
// |W cap Q| = (|W| + S)/2 when 0 not in W, (|W| - 1 + S)/2 otherwise.
// Throws ParityViolation if the relevant numerator is odd.
CountReport count_squares_identity(const FieldCtx& ctx, const DigitSpec& spec,
                                   uint64_t cap = kDefaultEnumCap);

}  // namespace sqw
