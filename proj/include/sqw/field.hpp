#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqw/errors.hpp"

namespace sqw {

// Element of F_{p^r}: coefficient vector of length r in the polynomial basis
// of the field modulus, each entry reduced mod p.
struct FieldElement {
    std::vector<uint64_t> coeffs;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const {
        for (uint64_t c : coeffs)
            if (c) return false;
        return true;
    }
};

// Value of a multiplicative character of order s: the root-of-unity index
// k in [0, s), i.e. chi(x) = zeta_s^k, or the zero flag for the argument 0.
struct CharValue {
    uint64_t order = 2;
    uint64_t index = 0;
    bool zero = false;

    // sign for s = 2: +1, -1, or 0
    int sign() const { return zero ? 0 : (index == 0 ? 1 : -1); }
};

bool is_prime_u64(uint64_t n);

// Polynomials over Z_p as coefficient vectors, constant term first.
// The text format is comma-separated in the same order: "1,0,1" = x^2 + 1.
std::vector<uint64_t> parse_poly(const std::string& text, uint64_t p);
std::string format_poly(const std::vector<uint64_t>& coeffs);

// Deterministic search: lexicographically smallest monic irreducible of
// degree r over Z_p, comparing coefficient tuples with the constant term
// last. Returns the full coefficient list of length r+1 (leading 1 included).
std::vector<uint64_t> find_irreducible(uint64_t p, unsigned r);

bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p);

// F_{p^r} = Z_p[x]/(modulus). Immutable after construction; the generator
// and discrete-log table are built once on demand behind a mutex and then
// frozen, so concurrent readers are safe.
class FieldCtx {
public:
    // Caps: fields larger than kFieldCap are refused outright; the full
    // dlog table is only built for q <= dlog_table_cap (BSGS otherwise).
    static constexpr uint64_t kFieldCap = uint64_t(1) << 40;
    static constexpr uint64_t kDefaultDlogTableCap = uint64_t(1) << 24;

    FieldCtx(uint64_t p, unsigned r,
             std::optional<std::vector<uint64_t>> modulus = std::nullopt);

    uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    uint64_t q() const { return q_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {std::vector<uint64_t>(r_, 0)}; }
    FieldElement one() const { return from_prime(1); }
    // embedding of a prime-field residue
    FieldElement from_prime(uint64_t c) const;
    // the residue class of x (zero when r = 1)
    FieldElement gen_t() const;
    FieldElement from_coeffs(std::vector<uint64_t> c) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, uint64_t e) const;

    // x^(p^k)
    FieldElement frobenius(const FieldElement& x, unsigned k) const;
    // smallest d | r with x^(p^d) = x
    unsigned degree_over_prime(const FieldElement& x) const;
    bool are_conjugate(const FieldElement& x, const FieldElement& y) const;

    // quadratic character: 0 at 0, else x^((q-1)/2) interpreted as +-1
    int quadratic_char(const FieldElement& x) const;
    // character of order s (requires s | q-1, s >= 2); for s = 2 agrees
    // with quadratic_char
    CharValue mult_char(uint64_t s, const FieldElement& x) const;

    // generator of the multiplicative group; found by seeded random trial
    // the first time it is needed and cached for the lifetime of the ctx
    const FieldElement& generator() const;
    // override the cached generator (order is verified); must be called
    // before any dlog has been taken
    void set_generator(const FieldElement& g);

    uint64_t discrete_log(const FieldElement& x) const;

    // builds the full index->exponent table when q <= dlog_table_cap;
    // no-op above the cap (discrete_log then falls back to BSGS)
    void ensure_dlog_table() const;

    void set_dlog_table_cap(uint64_t cap) { dlog_table_cap_ = cap; }

    // bijection F_q <-> [0, q): sum of c_i p^i
    uint64_t index_of(const FieldElement& x) const;
    FieldElement element_at(uint64_t idx) const;

    const std::vector<std::pair<uint64_t, unsigned>>& group_order_factors() const;

private:
    uint64_t p_;
    unsigned r_;
    uint64_t q_;
    std::vector<uint64_t> modulus_;  // length r+1, monic
    uint64_t dlog_table_cap_ = kDefaultDlogTableCap;

    mutable std::mutex mu_;
    mutable std::optional<FieldElement> generator_;
    mutable std::vector<uint32_t> dlog_table_;  // index -> exponent, empty if unbuilt
    mutable bool dlog_used_ = false;
    mutable std::vector<std::pair<uint64_t, unsigned>> qm1_factors_;

    FieldElement reduce_product(std::vector<uint64_t>& prod) const;
    uint64_t dlog_bsgs(const FieldElement& x) const;
    void find_generator_locked() const;
};

}  // namespace sqw
