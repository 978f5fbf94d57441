#include "sqw/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sqw/rng.hpp"

namespace sqw {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string join_sizes(const DigitSpec& spec) {
    std::string s;
    for (size_t i = 0; i < spec.digit_sets.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(spec.digit_sets[i].size());
    }
    return s;
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> parts) {
    SplitMix64 rng(base);
    uint64_t h = rng.next();
    for (uint64_t v : parts) {
        SplitMix64 s(h ^ (v * 0x2545F4914F6CDD1DULL));
        h = s.next();
    }
    return h;
}

InstanceConfig instance_config_from_json(const nlohmann::json& j) {
    InstanceConfig cfg;
    try {
        cfg.p = j.at("p").get<uint64_t>();
        cfg.r = j.at("r").get<unsigned>();
        if (j.contains("modulus")) cfg.modulus = j.at("modulus").get<std::string>();
        for (const auto& d : j.at("digits")) cfg.digits.push_back(d.get<std::string>());
        if (j.contains("pivot")) cfg.pivot = j.at("pivot").get<unsigned>();
        if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
        if (j.contains("cap")) cfg.cap = j.at("cap").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad instance config: ") + e.what());
    }
    return cfg;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    try {
        for (const auto& v : j.at("p")) cfg.ps.push_back(v.get<uint64_t>());
        for (const auto& v : j.at("r")) cfg.rs.push_back(v.get<unsigned>());
        if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
        if (j.contains("sizes"))
            for (const auto& v : j.at("sizes")) cfg.sizes.push_back(v.get<uint64_t>());
        if (j.contains("seeds_per")) cfg.seeds_per = j.at("seeds_per").get<unsigned>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
        if (j.contains("pivot")) cfg.pivot = j.at("pivot").get<unsigned>();
        if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
        if (j.contains("cap")) cfg.cap = j.at("cap").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad sweep config: ") + e.what());
    }
    if (cfg.family != "random" && cfg.family != "full")
        throw ConfigError("sweep family must be 'random' or 'full'");
    return cfg;
}

LemmaSweepConfig lemma_config_from_json(const nlohmann::json& j) {
    LemmaSweepConfig cfg;
    try {
        for (const auto& v : j.at("p")) cfg.ps.push_back(v.get<uint64_t>());
        for (const auto& v : j.at("r")) cfg.rs.push_back(v.get<unsigned>());
        if (j.contains("s")) cfg.s = j.at("s").get<uint64_t>();
        if (j.contains("pair_cap")) cfg.pair_cap = j.at("pair_cap").get<uint64_t>();
        if (j.contains("samples")) cfg.samples = j.at("samples").get<uint64_t>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad lemma sweep config: ") + e.what());
    }
    return cfg;
}

nlohmann::json to_json(const CountReport& rep) {
    return {
        {"w_size", rep.w_size},
        {"squares", rep.squares},
        {"squares_with_zero", rep.squares_with_zero},
        {"char_sum", std::to_string(rep.char_sum)},
        {"zero_in_w", rep.zero_in_w},
        {"deviation_num", std::to_string(rep.deviation_num)},
        {"deviation_den", "2"},
    };
}

nlohmann::json to_json(const DiagnosticsReport& rep) {
    nlohmann::json ad = nlohmann::json::object();
    for (const auto& [d, v] : rep.A_d) ad[std::to_string(d)] = std::to_string(v);
    nlohmann::json strata = nlohmann::json::object();
    for (const auto& [d, v] : rep.strata_sizes) strata[std::to_string(d)] = v;
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& c : rep.chain)
        chain.push_back({{"name", c.name},
                         {"lhs", c.lhs},
                         {"rhs", c.rhs},
                         {"pass", c.pass},
                         {"vacuous", c.vacuous}});
    return {
        {"pivot", rep.pivot},
        {"A", std::to_string(rep.A)},
        {"A_d", ad},
        {"strata", strata},
        {"S1", rep.S1},
        {"S2", rep.S2},
        {"char_sum", std::to_string(rep.char_sum_w)},
        {"chain", chain},
        {"all_pass", rep.all_pass},
    };
}

nlohmann::json to_json(const LemmaReport& rep, const FieldCtx& ctx) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int64_t c : rep.coeffs) coeffs.push_back(std::to_string(c));
    return {
        {"s", rep.s},
        {"alpha", format_poly(rep.alpha.coeffs)},
        {"beta", format_poly(rep.beta.coeffs)},
        {"coeffs", coeffs},
        {"int_value", std::to_string(rep.int_value)},
        {"magnitude", rep.magnitude},
        {"bound", rep.bound},
        {"pass", rep.pass},
        {"p", ctx.p()},
        {"r", ctx.r()},
    };
}

nlohmann::json to_json(const StrataReport& rep) {
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [d, v] : rep.sizes) sizes[std::to_string(d)] = v;
    nlohmann::json j = {
        {"pivot", rep.pivot},
        {"tail_total", rep.tail_total},
        {"sizes", sizes},
    };
    if (!rep.members.empty()) {
        nlohmann::json m = nlohmann::json::object();
        for (const auto& [d, tuples] : rep.members) m[std::to_string(d)] = tuples;
        j["members"] = m;
    }
    return j;
}

nlohmann::json field_info(uint64_t p, unsigned r, const std::optional<std::string>& modulus) {
    std::optional<std::vector<uint64_t>> mod;
    if (modulus) mod = parse_poly(*modulus, p);
    FieldCtx ctx(p, r, mod);
    return {
        {"p", ctx.p()},
        {"r", ctx.r()},
        {"q", ctx.q()},
        {"modulus", format_poly(ctx.modulus())},
        {"generator", format_poly(ctx.generator().coeffs)},
    };
}

InstanceResult run_instance(const InstanceConfig& cfg) {
    std::optional<std::vector<uint64_t>> mod;
    if (cfg.modulus) mod = parse_poly(*cfg.modulus, cfg.p);
    FieldCtx ctx(cfg.p, cfg.r, mod);
    if (cfg.digits.size() != cfg.r)
        throw ConfigError("need exactly r digit-set specs, got " +
                          std::to_string(cfg.digits.size()));

    std::vector<DigitSetSpec> dsets;
    std::vector<std::vector<uint64_t>> sets;
    for (const auto& text : cfg.digits) {
        dsets.push_back(parse_digit_set(text, cfg.p));
        sets.push_back(dsets.back().digits);
    }
    DigitSpec spec = make_digit_spec(ctx, Basis::polynomial(ctx), std::move(sets));
    unsigned pivot = cfg.pivot ? cfg.pivot : spec.default_pivot();

    CountReport en = count_squares_enum(ctx, spec, cfg.cap);
    CountReport id = count_squares_identity(ctx, spec, cfg.cap);
    bool identity_ok = en.squares == id.squares && en.char_sum == id.char_sum &&
                       en.zero_in_w == id.zero_in_w;
    DiagnosticsReport diag = compute_chain(ctx, spec, pivot, cfg.cap);

    nlohmann::json bounds = nlohmann::json::object();
    bool cor_sound = true;
    if (cfg.r >= 2) {
        double bm = bound_main(cfg.p, cfg.r, en.w_size);
        bounds["main"] = bm;
        bounds["main_str"] = fmt6(bm);
        bool equal_sets = true;
        for (size_t i = 1; i < spec.digit_sets.size(); ++i)
            equal_sets = equal_sets && spec.digit_sets[i] == spec.digit_sets[0];
        size_t dsz = spec.digit_sets[0].size();
        if (equal_sets && dsz >= 2 && dsz <= cfg.p - 1)
            bounds["dms"] = bound_dms(cfg.p, cfg.r, dsz);
        PriorThresholds prior = thresholds_prior(cfg.p, cfg.r);
        bounds["thm_b_threshold"] = *prior.thm_b;
        bounds["thm_b_applicable"] = prior.thm_b_applicable;
        if (prior.thm_c) bounds["thm_c_threshold"] = *prior.thm_c;
        Corollary1Result c1 = corollary1_check(cfg.p, cfg.r, cfg.eps, en.w_size);
        Corollary2Result c2 = corollary2_check(cfg.p, cfg.r, en.w_size);
        bounds["cor1"] = {{"eps", cfg.eps},
                          {"satisfied", c1.satisfied},
                          {"threshold", c1.threshold},
                          {"budget", c1.budget},
                          {"constant_unspecified", c1.constant_unspecified}};
        bounds["cor2"] = {{"satisfied", c2.satisfied},
                          {"threshold", c2.threshold},
                          {"threshold_exceeds_field", c2.threshold_exceeds_field}};
        if (c2.satisfied && en.squares < 1) cor_sound = false;
        if (c1.satisfied) {
            double ratio = std::abs(double(en.squares) / double(en.w_size) - 0.5);
            bounds["cor1"]["observed_ratio"] = ratio;
            if (ratio > c1.budget) cor_sound = false;
        }
    }

    nlohmann::json digits = nlohmann::json::array();
    for (const auto& d : dsets) {
        nlohmann::json dj = {{"spec", d.raw}, {"set", d.digits}};
        if (d.seed) dj["seed"] = *d.seed;
        digits.push_back(dj);
    }

    InstanceResult out;
    out.soundness_ok = identity_ok && diag.all_pass && cor_sound;
    out.report = {
        {"field", field_info(cfg.p, cfg.r, cfg.modulus)},
        {"digits", digits},
        {"pivot", pivot},
        {"count", to_json(en)},
        {"identity_ok", identity_ok},
        {"bounds", bounds},
        {"diagnostics", to_json(diag)},
        {"soundness_ok", out.soundness_ok},
    };

    std::ostringstream row;
    row << cfg.p << ',' << cfg.r << ',' << join_sizes(spec) << ',' << en.w_size << ','
        << en.squares << ',' << double(en.deviation_num) / 2.0 << ','
        << (cfg.r >= 2 ? fmt6(bound_main(cfg.p, cfg.r, en.w_size)) : "") << ','
        << (bounds.contains("dms") ? fmt6(bounds["dms"].get<double>()) : "") << ','
        << (cfg.r >= 2 ? (bounds["cor1"]["satisfied"].get<bool>() ? "1" : "0") : "") << ','
        << (cfg.r >= 2 ? (bounds["cor2"]["satisfied"].get<bool>() ? "1" : "0") : "") << ','
        << (diag.all_pass ? "1" : "0") << ',' << (out.soundness_ok ? "1" : "0") << ',';
    std::string dspec;
    for (size_t i = 0; i < cfg.digits.size(); ++i) {
        if (i) dspec += ';';
        dspec += cfg.digits[i];
    }
    row << csv_escape(dspec) << ',';
    out.csv_row = row.str();
    return out;
}

const char* kSweepCsvHeader =
    "p,r,sizes,w_size,squares,deviation,bound_main,dms_bound,cor1,cor2,chain_pass,pass,digits,"
    "error";
const char* kLemmaCsvHeader =
    "p,r,s,pairs_tested,mode,max_abs_sum,bound,max_ratio,bound_trivial,pass,error";

SweepResult run_sweep(const SweepConfig& cfg) {
    SweepResult out;
    out.all_pass = true;
    std::ostringstream csv;
    csv << kSweepCsvHeader << '\n';
    for (uint64_t p : cfg.ps) {
        for (unsigned r : cfg.rs) {
            std::vector<uint64_t> sizes = cfg.sizes;
            if (sizes.empty())
                for (uint64_t k = 2; k <= p; ++k) sizes.push_back(k);
            for (uint64_t k : sizes) {
                if (k > p) continue;
                unsigned reps = cfg.family == "random" ? cfg.seeds_per : 1;
                for (unsigned si = 0; si < reps; ++si) {
                    InstanceConfig icfg;
                    icfg.p = p;
                    icfg.r = r;
                    icfg.pivot = cfg.pivot;
                    icfg.eps = cfg.eps;
                    icfg.cap = cfg.cap;
                    for (unsigned pos = 0; pos < r; ++pos) {
                        if (cfg.family == "full" || k == p) {
                            icfg.digits.push_back("full");
                        } else {
                            uint64_t s = derive_seed(cfg.seed, {p, r, k, si, pos});
                            icfg.digits.push_back("random:" + std::to_string(k) + ":" +
                                                  std::to_string(s));
                        }
                    }
                    try {
                        InstanceResult res = run_instance(icfg);
                        csv << res.csv_row << '\n';
                        ++out.rows;
                        if (!res.soundness_ok) out.all_pass = false;
                    } catch (const Error& e) {
                        csv << p << ',' << r << ",,,,,,,,,,0,," << csv_escape(e.what()) << '\n';
                        ++out.rows;
                        out.all_pass = false;
                    }
                }
            }
        }
    }
    out.csv = csv.str();
    return out;
}

SweepResult run_lemma_sweep(const LemmaSweepConfig& cfg) {
    SweepResult out;
    out.all_pass = true;
    std::ostringstream csv;
    csv << kLemmaCsvHeader << '\n';
    for (uint64_t p : cfg.ps) {
        for (unsigned r : cfg.rs) {
            try {
                FieldCtx ctx(p, r);
                if ((ctx.q() - 1) % cfg.s != 0)
                    throw OrderDoesNotDivide("s = " + std::to_string(cfg.s) +
                                             " does not divide q-1");
                if (ctx.q() > 10'000'000)
                    throw CapExceeded("field too large for a generator scan");
                ctx.ensure_dlog_table();
                std::vector<FieldElement> gens;
                for (uint64_t i = 1; i < ctx.q(); ++i) {
                    FieldElement x = ctx.element_at(i);
                    if (ctx.degree_over_prime(x) == ctx.r()) gens.push_back(std::move(x));
                }
                uint64_t n = gens.size();
                bool exhaustive = n * n <= cfg.pair_cap;
                uint64_t pairs = 0;
                double max_mag = 0;
                if (exhaustive) {
                    for (uint64_t i = 0; i < n; ++i)
                        for (uint64_t j = 0; j < n; ++j) {
                            if (i == j || ctx.are_conjugate(gens[i], gens[j])) continue;
                            LemmaReport rep = wan_lemma_sum(ctx, cfg.s, gens[i], gens[j]);
                            max_mag = std::max(max_mag, rep.magnitude);
                            ++pairs;
                        }
                } else {
                    SplitMix64 rng(derive_seed(cfg.seed, {p, r, cfg.s}));
                    while (pairs < cfg.samples) {
                        const FieldElement& a = gens[rng.bounded(n)];
                        const FieldElement& b = gens[rng.bounded(n)];
                        if (a == b || ctx.are_conjugate(a, b)) continue;
                        LemmaReport rep = wan_lemma_sum(ctx, cfg.s, a, b);
                        max_mag = std::max(max_mag, rep.magnitude);
                        ++pairs;
                    }
                }
                double bound = (2.0 * r - 1.0) * std::sqrt(double(p));
                bool trivial = bound >= double(p);
                bool pass = max_mag <= bound + 1e-9;
                if (!pass) out.all_pass = false;
                csv << p << ',' << r << ',' << cfg.s << ',' << pairs << ','
                    << (exhaustive ? "exhaustive" : "sampled") << ',' << fmt6(max_mag) << ','
                    << fmt6(bound) << ',' << fmt6(bound > 0 ? max_mag / bound : 0.0) << ','
                    << (trivial ? "1" : "0") << ',' << (pass ? "1" : "0") << ",\n";
                ++out.rows;
            } catch (const Error& e) {
                csv << p << ',' << r << ',' << cfg.s << ",,,,,,,0," << csv_escape(e.what())
                    << '\n';
                ++out.rows;
                out.all_pass = false;
            }
        }
    }
    out.csv = csv.str();
    return out;
}

}  // namespace sqw
