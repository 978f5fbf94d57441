#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqw/field.hpp"

namespace sqw {

inline constexpr uint64_t kDefaultEnumCap = 100'000'000;  // 10^8

// r elements of F_{p^r} linearly independent over F_p. Stores the inverse of
// the coefficient matrix so decode is a single matrix-vector product mod p.
class Basis {
public:
    static Basis make(const FieldCtx& ctx, std::vector<FieldElement> elements);
    static Basis polynomial(const FieldCtx& ctx);  // {1, t, t^2, ...}

    const std::vector<FieldElement>& elements() const { return elems_; }
    const FieldElement& at(unsigned i) const { return elems_[i]; }  // 0-based

    FieldElement encode(const FieldCtx& ctx, const std::vector<uint64_t>& digits) const;
    std::vector<uint64_t> decode(const FieldCtx& ctx, const FieldElement& x) const;

private:
    std::vector<FieldElement> elems_;
    std::vector<std::vector<uint64_t>> inv_;  // r x r, M^-1 mod p
};

// Digit-restricted product set W(D_1,...,D_r): digits c_i drawn from the
// per-position sets D_i subset of [0, p).
struct DigitSpec {
    Basis basis;
    std::vector<std::vector<uint64_t>> digit_sets;  // sorted, deduplicated

    uint64_t w_size() const;
    bool zero_tuple_allowed() const;  // 0 in every D_i
    // default pivot policy: largest digit set (first on ties), 1-based
    unsigned default_pivot() const;
};

DigitSpec make_digit_spec(const FieldCtx& ctx, Basis basis,
                          std::vector<std::vector<uint64_t>> digit_sets);

// Digit-set spec grammar: `full`, `range:a..b`, `list:3,5,7`, `random:k:seed`.
struct DigitSetSpec {
    std::string raw;
    std::optional<uint64_t> seed;  // present for `random`
    std::vector<uint64_t> digits;  // realized set
};

DigitSetSpec parse_digit_set(const std::string& text, uint64_t p);

// Visits every element of W exactly once, in lexicographic digit order
// (last position varies fastest). fn(element) or fn(element, digits).
void for_each_w(const FieldCtx& ctx, const DigitSpec& spec,
                const std::function<void(const FieldElement&)>& fn,
                uint64_t cap = kDefaultEnumCap);

std::vector<FieldElement> enumerate_w(const FieldCtx& ctx, const DigitSpec& spec,
                                      uint64_t cap = kDefaultEnumCap);

// Subfield strata of the tail digit combinations sum c_j b_j (j != pivot),
// with b_j = a_j / a_pivot: L_d holds the tuples whose combination has
// degree exactly d over F_p.
struct StrataReport {
    unsigned pivot = 1;                           // 1-based
    std::map<unsigned, uint64_t> sizes;           // d -> |L_d|, every d | r
    uint64_t tail_total = 0;                      // prod |D_j|, j != pivot
    std::map<unsigned, std::vector<std::vector<uint64_t>>> members;  // only under member_cap
};

StrataReport stratify(const FieldCtx& ctx, const DigitSpec& spec, unsigned pivot,
                      uint64_t cap = kDefaultEnumCap, uint64_t member_cap = 0);

// tail elements sum c_j b_j grouped by degree d; the workhorse behind both
// stratify and the proof diagnostics
std::map<unsigned, std::vector<FieldElement>> stratify_elements(const FieldCtx& ctx,
                                                                const DigitSpec& spec,
                                                                unsigned pivot,
                                                                uint64_t cap = kDefaultEnumCap);

std::vector<unsigned> divisors_of(unsigned n);

}  // namespace sqw
