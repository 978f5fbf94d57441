#include "sqw/counting.hpp"

#include <cstdlib>

namespace sqw {

namespace {

uint64_t abs_diff2(uint64_t squares, uint64_t w) {
    uint64_t two_sq = 2 * squares;
    return two_sq >= w ? two_sq - w : w - two_sq;
}

}  // namespace

CountReport count_squares_enum(const FieldCtx& ctx, const DigitSpec& spec, uint64_t cap) {
    ctx.ensure_dlog_table();  // fast chi lookups when q is small enough
    CountReport rep;
    rep.w_size = spec.w_size();
    for_each_w(ctx, spec, [&](const FieldElement& x) {
        int c = ctx.quadratic_char(x);
        if (c > 0) ++rep.squares;
        rep.char_sum += c;
        if (c == 0) rep.zero_in_w = true;
    }, cap);
    rep.squares_with_zero = rep.squares + (rep.zero_in_w ? 1 : 0);
    rep.deviation_num = abs_diff2(rep.squares, rep.w_size);
    return rep;
}

CountReport count_squares_identity(const FieldCtx& ctx, const DigitSpec& spec, uint64_t cap) {
    ctx.ensure_dlog_table();
    CountReport rep;
    rep.w_size = spec.w_size();
    for_each_w(ctx, spec, [&](const FieldElement& x) {
        int c = ctx.quadratic_char(x);
        rep.char_sum += c;
        if (c == 0) rep.zero_in_w = true;
    }, cap);
    int64_t numer = int64_t(rep.w_size) - (rep.zero_in_w ? 1 : 0) + rep.char_sum;
    if (numer < 0 || numer % 2 != 0)
        throw ParityViolation("character-sum identity produced an odd or negative numerator");
    rep.squares = uint64_t(numer) / 2;
    rep.squares_with_zero = rep.squares + (rep.zero_in_w ? 1 : 0);
    rep.deviation_num = abs_diff2(rep.squares, rep.w_size);
    return rep;
}

}  // namespace sqw
