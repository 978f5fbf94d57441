#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sqw/harness.hpp"

using namespace sqw;

namespace {

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("run_instance on the full-digit F_9 config") {
    InstanceConfig cfg;
    cfg.p = 3;
    cfg.r = 2;
    cfg.digits = {"full", "full"};
    InstanceResult res = run_instance(cfg);
    CHECK(res.soundness_ok);
    CHECK(res.report["count"]["squares"] == 4);
    CHECK(res.report["count"]["char_sum"] == "0");
    CHECK(res.report["diagnostics"]["all_pass"] == true);
    CHECK(res.report["identity_ok"] == true);
}

TEST_CASE("config rejection") {
    InstanceConfig cfg;
    cfg.p = 2;
    cfg.r = 3;
    cfg.digits = {"full", "full", "full"};
    CHECK_THROWS_AS(run_instance(cfg), EvenCharacteristic);

    InstanceConfig bad;
    bad.p = 5;
    bad.r = 2;
    bad.digits = {"full"};
    CHECK_THROWS_AS(run_instance(bad), ConfigError);

    InstanceConfig capped;
    capped.p = 7;
    capped.r = 3;
    capped.digits = {"full", "full", "full"};
    capped.cap = 10;
    CHECK_THROWS_AS(run_instance(capped), CapExceeded);
}

TEST_CASE("determinism: identical configs give identical reports") {
    InstanceConfig cfg;
    cfg.p = 11;
    cfg.r = 2;
    cfg.digits = {"random:5:12345", "random:7:999"};
    std::string a = run_instance(cfg).report.dump();
    std::string b = run_instance(cfg).report.dump();
    CHECK(a == b);
}

TEST_CASE("instance config from JSON, flags semantics") {
    nlohmann::json j = {
        {"p", 7}, {"r", 2}, {"digits", {"full", "list:0,2,3"}}, {"pivot", 1}, {"eps", 0.2}};
    InstanceConfig cfg = instance_config_from_json(j);
    CHECK(cfg.p == 7);
    CHECK(cfg.digits.size() == 2);
    CHECK(cfg.pivot == 1);
    CHECK(run_instance(cfg).soundness_ok);
    CHECK_THROWS_AS(instance_config_from_json(nlohmann::json{{"p", 7}}), ConfigError);
}

TEST_CASE("run_sweep") {
    SweepConfig cfg;
    cfg.ps = {3, 5};
    cfg.rs = {2};
    cfg.sizes = {2, 3};
    cfg.seeds_per = 2;
    cfg.seed = 77;
    SweepResult res = run_sweep(cfg);
    CHECK(res.all_pass);
    CHECK(res.rows == 2 * 1 * 2 * 2);
    CHECK(count_lines(res.csv) == res.rows + 1);
    CHECK(res.csv.rfind("p,r,sizes", 0) == 0);
    // determinism
    CHECK(run_sweep(cfg).csv == res.csv);

    SweepConfig empty;
    empty.ps = {};
    empty.rs = {2};
    SweepResult er = run_sweep(empty);
    CHECK(er.rows == 0);
    CHECK(er.csv == std::string(kSweepCsvHeader) + "\n");
}

TEST_CASE("run_lemma_sweep") {
    LemmaSweepConfig cfg;
    cfg.ps = {5, 11};
    cfg.rs = {2};
    cfg.s = 2;
    SweepResult res = run_lemma_sweep(cfg);
    CHECK(res.all_pass);
    CHECK(res.rows == 2);
    std::istringstream ss(res.csv);
    std::string header, row5, row11;
    std::getline(ss, header);
    std::getline(ss, row5);
    std::getline(ss, row11);
    // p=5: bound 3*sqrt(5) ~ 6.708 exceeds the trivial bound p=5
    CHECK(row5.find(",exhaustive,") != std::string::npos);
    CHECK(row5.find(",1,1,") != std::string::npos);  // bound_trivial=1, pass=1
    CHECK(row11.find(",0,1,") != std::string::npos);

    // s does not divide q-1: error row, not a throw
    LemmaSweepConfig bad;
    bad.ps = {5};
    bad.rs = {2};
    bad.s = 7;  // q-1 = 24
    SweepResult br = run_lemma_sweep(bad);
    CHECK(br.rows == 1);
    CHECK_FALSE(br.all_pass);
    CHECK(br.csv.find("does not divide") != std::string::npos);
}

TEST_CASE("corollary-2 scenario row appears in a sweep") {
    InstanceConfig cfg;
    cfg.p = 73;
    cfg.r = 2;
    cfg.digits = {"random:72:1", "full"};
    InstanceResult res = run_instance(cfg);
    CHECK(res.report["bounds"]["cor2"]["satisfied"] == true);
    CHECK(res.report["count"]["squares"].get<uint64_t>() >= 1);
    CHECK(res.soundness_ok);
    CHECK(res.csv_row.find(",1,1,1,") != std::string::npos);  // cor1,cor2,chain_pass
}
