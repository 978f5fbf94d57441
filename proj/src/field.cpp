#include "sqw/field.hpp"

#include "sqw/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sqw {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)a * b % p);
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

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

uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

using Poly = std::vector<uint64_t>;  // constant term first

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g (g nonzero), in place
void poly_mod(Poly& f, const Poly& g, uint64_t p) {
    uint64_t lead_inv = invmod(g.back(), p);
    poly_trim(f);
    while (f.size() >= g.size()) {
        uint64_t c = mulmod(f.back(), lead_inv, p);
        size_t off = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            f[off + i] = submod(f[off + i], mulmod(c, g[i], p), p);
        poly_trim(f);
    }
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + (unsigned __int128)a[i] * b[j]) % p;
    }
    poly_mod(prod, m, p);
    return prod;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint64_t p) {
    Poly res{1};
    poly_mod(base, m, p);
    while (e) {
        if (e & 1) res = poly_mulmod(res, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return res;
}

// x^(p^k) mod m, by k successive p-th powers
Poly poly_frob(unsigned k, const Poly& m, uint64_t p) {
    Poly t{0, 1};
    poly_mod(t, m, p);
    for (unsigned i = 0; i < k; ++i) t = poly_powmod(t, p, m, p);
    return t;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> parse_poly(const std::string& text, uint64_t p) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad polynomial coefficient: '" + tok + "'");
        }
        if (pos != tok.size()) throw ConfigError("bad polynomial coefficient: '" + tok + "'");
        long long m = v % (long long)p;
        if (m < 0) m += (long long)p;
        out.push_back(uint64_t(m));
    }
    if (out.empty()) throw ConfigError("empty polynomial");
    return out;
}

std::string format_poly(const std::vector<uint64_t>& coeffs) {
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs[i]);
    }
    return s;
}

bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p) {
    Poly f = poly;
    poly_trim(f);
    if (f.size() < 2) return false;
    unsigned r = unsigned(f.size() - 1);
    if (r == 1) return true;
    // x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) = 1 for each prime l | r
    Poly xr = poly_frob(r, f, p);
    Poly x{0, 1};
    poly_mod(x, f, p);
    if (xr != x) return false;
    for (uint64_t l : prime_factors_u64(r)) {
        Poly g = poly_frob(unsigned(r / l), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = submod(g[1], 1, p);
        poly_trim(g);
        Poly d = poly_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

std::vector<uint64_t> find_irreducible(uint64_t p, unsigned r) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw ConfigError("degree must be >= 1");
    // scan non-leading coefficient tuples (c_{r-1},...,c_1,c_0) in lex order,
    // which is numeric order of sum c_i p^i
    double qd = std::pow(double(p), double(r));
    if (qd > double(FieldCtx::kFieldCap))
        throw CapExceeded("p^r exceeds the field cap 2^40");
    uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    for (uint64_t n = 0; n < q; ++n) {
        std::vector<uint64_t> f(r + 1, 0);
        uint64_t m = n;
        for (unsigned i = 0; i < r; ++i) {
            f[i] = m % p;
            m /= p;
        }
        f[r] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable)", 4);
}

FieldCtx::FieldCtx(uint64_t p, unsigned r, std::optional<std::vector<uint64_t>> modulus)
    : p_(p), r_(r) {
    if (p == 2) throw EvenCharacteristic("characteristic 2 is excluded; p must be odd");
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw ConfigError("extension degree must be >= 1");
    double qd = std::pow(double(p), double(r));
    if (qd > double(kFieldCap)) throw CapExceeded("p^r exceeds the field cap 2^40");
    q_ = 1;
    for (unsigned i = 0; i < r; ++i) q_ *= p;
    if (modulus) {
        modulus_ = *modulus;
        for (auto& c : modulus_) c %= p;
        if (modulus_.size() != size_t(r) + 1 || modulus_.back() != 1)
            throw NotIrreducible("modulus must be monic of degree exactly r");
        if (!is_irreducible(modulus_, p))
            throw NotIrreducible("modulus " + format_poly(modulus_) + " is reducible mod " +
                                 std::to_string(p));
    } else {
        modulus_ = find_irreducible(p, r);
    }
}

FieldElement FieldCtx::from_prime(uint64_t c) const {
    FieldElement x = zero();
    x.coeffs[0] = c % p_;
    return x;
}

FieldElement FieldCtx::gen_t() const {
    FieldElement x = zero();
    if (r_ >= 2)
        x.coeffs[1] = 1;
    return x;
}

FieldElement FieldCtx::from_coeffs(std::vector<uint64_t> c) const {
    if (c.size() != r_) throw DimensionMismatch("coefficient vector has wrong length");
    for (auto& v : c) v %= p_;
    return {std::move(c)};
}

FieldElement FieldCtx::add(const FieldElement& x, const FieldElement& y) const {
    if (x.coeffs.size() != r_ || y.coeffs.size() != r_)
        throw DimensionMismatch("element dimension mismatch");
    FieldElement z = zero();
    for (unsigned i = 0; i < r_; ++i) {
        uint64_t s = x.coeffs[i] + y.coeffs[i];
        z.coeffs[i] = s >= p_ ? s - p_ : s;
    }
    return z;
}

FieldElement FieldCtx::sub(const FieldElement& x, const FieldElement& y) const {
    if (x.coeffs.size() != r_ || y.coeffs.size() != r_)
        throw DimensionMismatch("element dimension mismatch");
    FieldElement z = zero();
    for (unsigned i = 0; i < r_; ++i) z.coeffs[i] = submod(x.coeffs[i], y.coeffs[i], p_);
    return z;
}

FieldElement FieldCtx::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement FieldCtx::mul(const FieldElement& x, const FieldElement& y) const {
    if (x.coeffs.size() != r_ || y.coeffs.size() != r_)
        throw DimensionMismatch("element dimension mismatch");
    std::vector<uint64_t> prod(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i) {
        if (!x.coeffs[i]) continue;
        for (unsigned j = 0; j < r_; ++j)
            prod[i + j] = uint64_t(((unsigned __int128)x.coeffs[i] * y.coeffs[j] + prod[i + j]) % p_);
    }
    std::vector<uint64_t> v = prod;
    // reduce by the monic modulus
    for (unsigned i = 2 * r_ - 2; i >= r_ && i < 2 * r_; --i) {
        uint64_t c = v[i];
        if (c) {
            for (unsigned j = 0; j < r_; ++j)
                v[i - r_ + j] = submod(v[i - r_ + j], mulmod(c, modulus_[j], p_), p_);
        }
        v[i] = 0;
        if (i == r_) break;
    }
    v.resize(r_);
    return {std::move(v)};
}

FieldElement FieldCtx::pow(const FieldElement& x, uint64_t e) const {
    FieldElement res = one();
    FieldElement base = x;
    while (e) {
        if (e & 1) res = mul(res, base);
        base = mul(base, base);
        e >>= 1;
    }
    return res;
}

FieldElement FieldCtx::inv(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroInverse("inverse of zero");
    return pow(x, q_ - 2);
}

FieldElement FieldCtx::frobenius(const FieldElement& x, unsigned k) const {
    FieldElement y = x;
    for (unsigned i = 0, kk = k % r_; i < kk; ++i) y = pow(y, p_);
    return y;
}

unsigned FieldCtx::degree_over_prime(const FieldElement& x) const {
    // the Frobenius orbit size of x; always a divisor of r
    FieldElement y = x;
    for (unsigned d = 1; d < r_; ++d) {
        y = pow(y, p_);
        if (y == x) return d;
    }
    return r_;
}

bool FieldCtx::are_conjugate(const FieldElement& x, const FieldElement& y) const {
    FieldElement z = x;
    for (unsigned k = 0; k < r_; ++k) {
        if (z == y) return true;
        z = pow(z, p_);
    }
    return false;
}

int FieldCtx::quadratic_char(const FieldElement& x) const {
    if (x.is_zero()) return 0;
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (!dlog_table_.empty()) return (dlog_table_[index_of(x)] & 1) ? -1 : 1;
    }
    FieldElement v = pow(x, (q_ - 1) / 2);
    if (v == one()) return 1;
    if (v == from_prime(p_ - 1)) return -1;
    throw Error("quadratic character evaluated to a non-unit (arithmetic bug)", 4);
}

const std::vector<std::pair<uint64_t, unsigned>>& FieldCtx::group_order_factors() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (qm1_factors_.empty()) {
        uint64_t n = q_ - 1;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                unsigned e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                qm1_factors_.emplace_back(d, e);
            }
        }
        if (n > 1) qm1_factors_.emplace_back(n, 1);
    }
    return qm1_factors_;
}

void FieldCtx::find_generator_locked() const {
    // deterministic seeded trial: candidate has order q-1 iff g^((q-1)/l) != 1
    // for every prime l | q-1
    auto factors = [&] {
        std::vector<uint64_t> fs;
        uint64_t n = q_ - 1;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                fs.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) fs.push_back(n);
        return fs;
    }();
    SplitMix64 rng{0x5EEDF1E1D5EEDULL ^ q_};
    while (true) {
        uint64_t idx = 1 + rng.next() % (q_ - 1);
        FieldElement g = element_at(idx);
        bool ok = true;
        for (uint64_t l : factors) {
            if (pow(g, (q_ - 1) / l) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            return;
        }
    }
}

const FieldElement& FieldCtx::generator() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!generator_) find_generator_locked();
    return *generator_;
}

void FieldCtx::set_generator(const FieldElement& g) {
    std::lock_guard<std::mutex> lock(mu_);
    if (dlog_used_) throw ConfigError("generator already in use; set it before taking dlogs");
    if (g.is_zero()) throw NotGenerator("zero cannot generate the multiplicative group");
    uint64_t n = q_ - 1;
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    for (uint64_t l : fs)
        if (pow(g, (q_ - 1) / l) == one())
            throw NotGenerator("element does not have multiplicative order q-1");
    generator_ = g;
}

void FieldCtx::ensure_dlog_table() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!dlog_table_.empty()) return;
    if (q_ > dlog_table_cap_) return;
    if (!generator_) find_generator_locked();
    dlog_used_ = true;
    dlog_table_.assign(q_, 0xFFFFFFFFu);
    FieldElement x = one();
    for (uint64_t k = 0; k + 1 < q_; ++k) {
        dlog_table_[index_of(x)] = uint32_t(k);
        x = mul(x, *generator_);
    }
}

uint64_t FieldCtx::dlog_bsgs(const FieldElement& x) const {
    const FieldElement& g = generator();
    uint64_t n = q_ - 1;
    uint64_t m = uint64_t(std::ceil(std::sqrt(double(n))));
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(size_t(m) * 2);
    FieldElement e = one();
    for (uint64_t j = 0; j < m; ++j) {
        baby.emplace(index_of(e), j);
        e = mul(e, g);
    }
    FieldElement giant_step = inv(pow(g, m));
    FieldElement cur = x;
    for (uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(index_of(cur));
        if (it != baby.end()) return (i * m + it->second) % n;
        cur = mul(cur, giant_step);
    }
    throw Error("BSGS failed to find a discrete log (arithmetic bug)", 4);
}

uint64_t FieldCtx::discrete_log(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroArgument("discrete log of zero");
    ensure_dlog_table();
    {
        std::lock_guard<std::mutex> lock(mu_);
        dlog_used_ = true;
        if (!dlog_table_.empty()) return dlog_table_[index_of(x)];
    }
    return dlog_bsgs(x);
}

CharValue FieldCtx::mult_char(uint64_t s, const FieldElement& x) const {
    if (s < 2 || (q_ - 1) % s != 0)
        throw OrderDoesNotDivide("character order " + std::to_string(s) +
                                 " does not divide q-1 = " + std::to_string(q_ - 1));
    if (x.is_zero()) return {s, 0, true};
    return {s, discrete_log(x) % s, false};
}

uint64_t FieldCtx::index_of(const FieldElement& x) const {
    uint64_t idx = 0;
    for (unsigned i = r_; i-- > 0;) idx = idx * p_ + x.coeffs[i];
    return idx;
}

FieldElement FieldCtx::element_at(uint64_t idx) const {
    FieldElement x = zero();
    for (unsigned i = 0; i < r_; ++i) {
        x.coeffs[i] = idx % p_;
        idx /= p_;
    }
    return x;
}

}  // namespace sqw
