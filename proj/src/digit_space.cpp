#include "sqw/digit_space.hpp"

#include <algorithm>
#include <sstream>

#include "sqw/rng.hpp"

namespace sqw {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)a * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t res = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) res = mulmod(res, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return res;
}

// Gauss-Jordan inverse of an r x r matrix mod p; empty result if singular
std::vector<std::vector<uint64_t>> invert_mod_p(std::vector<std::vector<uint64_t>> m,
                                                uint64_t p) {
    unsigned r = unsigned(m.size());
    std::vector<std::vector<uint64_t>> inv(r, std::vector<uint64_t>(r, 0));
    for (unsigned i = 0; i < r; ++i) inv[i][i] = 1;
    for (unsigned col = 0; col < r; ++col) {
        unsigned piv = col;
        while (piv < r && m[piv][col] == 0) ++piv;
        if (piv == r) return {};
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        uint64_t d = powmod_u64(m[col][col], p - 2, p);
        for (unsigned j = 0; j < r; ++j) {
            m[col][j] = mulmod(m[col][j], d, p);
            inv[col][j] = mulmod(inv[col][j], d, p);
        }
        for (unsigned row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            uint64_t f = m[row][col];
            for (unsigned j = 0; j < r; ++j) {
                m[row][j] = (m[row][j] + p - mulmod(f, m[col][j], p)) % p;
                inv[row][j] = (inv[row][j] + p - mulmod(f, inv[col][j], p)) % p;
            }
        }
    }
    return inv;
}

}  // namespace

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

Basis Basis::make(const FieldCtx& ctx, std::vector<FieldElement> elements) {
    if (elements.size() != ctx.r()) throw NotIndependent("a basis needs exactly r elements");
    // rows = basis elements' coefficient vectors; invertibility = independence
    std::vector<std::vector<uint64_t>> m(ctx.r(), std::vector<uint64_t>(ctx.r()));
    for (unsigned i = 0; i < ctx.r(); ++i) {
        if (elements[i].coeffs.size() != ctx.r())
            throw DimensionMismatch("basis element has wrong dimension");
        // column j of M is the coefficient vector of a_{j+1}
        for (unsigned j = 0; j < ctx.r(); ++j) m[j][i] = elements[i].coeffs[j];
    }
    auto inv = invert_mod_p(std::move(m), ctx.p());
    if (inv.empty()) throw NotIndependent("elements are linearly dependent over F_p");
    Basis b;
    b.elems_ = std::move(elements);
    b.inv_ = std::move(inv);
    return b;
}

Basis Basis::polynomial(const FieldCtx& ctx) {
    std::vector<FieldElement> elems;
    FieldElement e = ctx.one();
    for (unsigned i = 0; i < ctx.r(); ++i) {
        elems.push_back(e);
        if (i + 1 < ctx.r()) e = ctx.mul(e, ctx.gen_t());
    }
    return make(ctx, std::move(elems));
}

FieldElement Basis::encode(const FieldCtx& ctx, const std::vector<uint64_t>& digits) const {
    if (digits.size() != ctx.r()) throw DimensionMismatch("digit tuple has wrong length");
    FieldElement x = ctx.zero();
    for (unsigned i = 0; i < ctx.r(); ++i) {
        FieldElement term = ctx.mul(ctx.from_prime(digits[i]), elems_[i]);
        x = ctx.add(x, term);
    }
    return x;
}

std::vector<uint64_t> Basis::decode(const FieldCtx& ctx, const FieldElement& x) const {
    std::vector<uint64_t> out(ctx.r(), 0);
    for (unsigned i = 0; i < ctx.r(); ++i) {
        unsigned __int128 acc = 0;
        for (unsigned j = 0; j < ctx.r(); ++j) acc += (unsigned __int128)inv_[i][j] * x.coeffs[j];
        out[i] = uint64_t(acc % ctx.p());
    }
    return out;
}

uint64_t DigitSpec::w_size() const {
    uint64_t n = 1;
    for (const auto& d : digit_sets) n *= d.size();
    return n;
}

bool DigitSpec::zero_tuple_allowed() const {
    for (const auto& d : digit_sets)
        if (!std::binary_search(d.begin(), d.end(), uint64_t(0))) return false;
    return true;
}

unsigned DigitSpec::default_pivot() const {
    unsigned best = 1;
    for (unsigned i = 2; i <= digit_sets.size(); ++i)
        if (digit_sets[i - 1].size() > digit_sets[best - 1].size()) best = i;
    return best;
}

DigitSpec make_digit_spec(const FieldCtx& ctx, Basis basis,
                          std::vector<std::vector<uint64_t>> digit_sets) {
    if (digit_sets.size() != ctx.r())
        throw ConfigError("need exactly r digit sets, got " + std::to_string(digit_sets.size()));
    for (auto& d : digit_sets) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        if (d.empty()) throw ConfigError("digit sets must be nonempty");
        if (d.back() >= ctx.p()) throw ConfigError("digit out of range [0, p)");
    }
    return DigitSpec{std::move(basis), std::move(digit_sets)};
}

DigitSetSpec parse_digit_set(const std::string& text, uint64_t p) {
    DigitSetSpec out;
    out.raw = text;
    auto bad = [&](const std::string& why) {
        return ConfigError("bad digit-set spec '" + text + "': " + why);
    };
    if (text == "full") {
        for (uint64_t v = 0; v < p; ++v) out.digits.push_back(v);
        return out;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad("expected full|range:a..b|list:...|random:k:seed");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (kind == "range") {
            auto dots = rest.find("..");
            if (dots == std::string::npos) throw bad("range needs a..b");
            uint64_t a = std::stoull(rest.substr(0, dots));
            uint64_t b = std::stoull(rest.substr(dots + 2));
            if (a > b || b >= p) throw bad("range out of [0, p)");
            for (uint64_t v = a; v <= b; ++v) out.digits.push_back(v);
        } else if (kind == "list") {
            std::stringstream ss(rest);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                uint64_t v = std::stoull(tok);
                if (v >= p) throw bad("digit " + tok + " out of [0, p)");
                out.digits.push_back(v);
            }
            if (out.digits.empty()) throw bad("empty list");
        } else if (kind == "random") {
            auto c2 = rest.find(':');
            if (c2 == std::string::npos) throw bad("random needs k:seed");
            uint64_t k = std::stoull(rest.substr(0, c2));
            uint64_t seed = std::stoull(rest.substr(c2 + 1));
            if (k < 1 || k > p) throw bad("subset size out of [1, p]");
            out.seed = seed;
            out.digits = sample_subset(p, k, seed);
        } else {
            throw bad("unknown kind '" + kind + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw bad("malformed number");
    }
    std::sort(out.digits.begin(), out.digits.end());
    out.digits.erase(std::unique(out.digits.begin(), out.digits.end()), out.digits.end());
    return out;
}

void for_each_w(const FieldCtx& ctx, const DigitSpec& spec,
                const std::function<void(const FieldElement&)>& fn, uint64_t cap) {
    if (spec.w_size() > cap)
        throw CapExceeded("|W| = " + std::to_string(spec.w_size()) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    const unsigned r = ctx.r();
    // per-position scaled basis elements d * a_i, so the odometer only adds
    std::vector<std::vector<FieldElement>> terms(r);
    for (unsigned i = 0; i < r; ++i)
        for (uint64_t d : spec.digit_sets[i])
            terms[i].push_back(ctx.mul(ctx.from_prime(d), spec.basis.at(i)));

    std::vector<size_t> pos(r, 0);
    // prefix[i] = sum of terms[0..i] at the current digits
    std::vector<FieldElement> prefix(r);
    FieldElement acc = ctx.zero();
    for (unsigned i = 0; i < r; ++i) {
        acc = ctx.add(acc, terms[i][0]);
        prefix[i] = acc;
    }
    while (true) {
        fn(prefix[r - 1]);
        // advance the odometer, last position fastest
        unsigned i = r;
        while (i-- > 0) {
            if (++pos[i] < terms[i].size()) break;
            pos[i] = 0;
            if (i == 0) return;
        }
        FieldElement base = (i == 0) ? ctx.zero() : prefix[i - 1];
        for (unsigned j = i; j < r; ++j) {
            base = ctx.add(base, terms[j][pos[j]]);
            prefix[j] = base;
        }
    }
}

std::vector<FieldElement> enumerate_w(const FieldCtx& ctx, const DigitSpec& spec, uint64_t cap) {
    std::vector<FieldElement> out;
    out.reserve(spec.w_size());
    for_each_w(ctx, spec, [&](const FieldElement& x) { out.push_back(x); }, cap);
    return out;
}

std::map<unsigned, std::vector<FieldElement>> stratify_elements(const FieldCtx& ctx,
                                                                const DigitSpec& spec,
                                                                unsigned pivot, uint64_t cap) {
    const unsigned r = ctx.r();
    if (pivot < 1 || pivot > r) throw ConfigError("pivot index out of [1, r]");
    uint64_t tail = 1;
    for (unsigned i = 0; i < r; ++i)
        if (i != pivot - 1) tail *= spec.digit_sets[i].size();
    if (tail > cap) throw CapExceeded("tail tuple count exceeds the cap");

    // normalized tail basis b_j = a_j / a_pivot
    FieldElement apiv_inv = ctx.inv(spec.basis.at(pivot - 1));
    std::vector<std::vector<FieldElement>> terms;
    for (unsigned i = 0; i < r; ++i) {
        if (i == pivot - 1) continue;
        FieldElement b = ctx.mul(spec.basis.at(i), apiv_inv);
        std::vector<FieldElement> t;
        for (uint64_t d : spec.digit_sets[i]) t.push_back(ctx.mul(ctx.from_prime(d), b));
        terms.push_back(std::move(t));
    }

    std::map<unsigned, std::vector<FieldElement>> strata;
    for (unsigned d : divisors_of(r)) strata[d];
    if (terms.empty()) {  // r = 1: the single empty tuple sums to 0
        strata[1].push_back(ctx.zero());
        return strata;
    }
    std::vector<size_t> pos(terms.size(), 0);
    std::vector<FieldElement> prefix(terms.size());
    FieldElement acc = ctx.zero();
    for (size_t i = 0; i < terms.size(); ++i) {
        acc = ctx.add(acc, terms[i][0]);
        prefix[i] = acc;
    }
    while (true) {
        const FieldElement& t = prefix.back();
        strata[ctx.degree_over_prime(t)].push_back(t);
        size_t i = terms.size();
        bool done = false;
        while (i-- > 0) {
            if (++pos[i] < terms[i].size()) break;
            pos[i] = 0;
            if (i == 0) {
                done = true;
                break;
            }
        }
        if (done) return strata;
        FieldElement base = (i == 0) ? ctx.zero() : prefix[i - 1];
        for (size_t j = i; j < terms.size(); ++j) {
            base = ctx.add(base, terms[j][pos[j]]);
            prefix[j] = base;
        }
    }
}

StrataReport stratify(const FieldCtx& ctx, const DigitSpec& spec, unsigned pivot, uint64_t cap,
                      uint64_t member_cap) {
    const unsigned r = ctx.r();
    if (pivot < 1 || pivot > r) throw ConfigError("pivot index out of [1, r]");
    StrataReport rep;
    rep.pivot = pivot;
    rep.tail_total = 1;
    for (unsigned i = 0; i < r; ++i)
        if (i != pivot - 1) rep.tail_total *= spec.digit_sets[i].size();
    if (rep.tail_total > cap) throw CapExceeded("tail tuple count exceeds the cap");

    auto strata = stratify_elements(ctx, spec, pivot, cap);
    for (const auto& [d, elems] : strata) rep.sizes[d] = elems.size();
    if (member_cap > 0 && rep.tail_total <= member_cap) {
        // re-walk tuples to attach the digit tuples themselves
        FieldElement apiv_inv = ctx.inv(spec.basis.at(pivot - 1));
        std::vector<unsigned> tail_idx;
        for (unsigned i = 0; i < r; ++i)
            if (i != pivot - 1) tail_idx.push_back(i);
        std::vector<size_t> pos(tail_idx.size(), 0);
        bool done = tail_idx.empty();
        while (!done) {
            FieldElement t = ctx.zero();
            std::vector<uint64_t> tuple;
            for (size_t k = 0; k < tail_idx.size(); ++k) {
                uint64_t dgt = spec.digit_sets[tail_idx[k]][pos[k]];
                tuple.push_back(dgt);
                FieldElement b = ctx.mul(spec.basis.at(tail_idx[k]), apiv_inv);
                t = ctx.add(t, ctx.mul(ctx.from_prime(dgt), b));
            }
            rep.members[ctx.degree_over_prime(t)].push_back(std::move(tuple));
            size_t i = tail_idx.size();
            done = true;
            while (i-- > 0) {
                if (++pos[i] < spec.digit_sets[tail_idx[i]].size()) {
                    done = false;
                    break;
                }
                pos[i] = 0;
            }
        }
    }
    return rep;
}

}  // namespace sqw
