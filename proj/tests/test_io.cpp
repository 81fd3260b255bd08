#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "spinchain/io.hpp"

namespace sc = spinchain;

TEST_CASE("config parsing: sections, comments, defaults") {
    sc::ConfigFile cfg = sc::ConfigFile::parse_text(
        "top = 1\n"
        "[model]\n"
        "type = xxz   # trailing comment\n"
        "delta = 2.5\n"
        "kT = 0.1, 0.5, 1.0\n"
        "\n"
        "[solver]\n"
        "refine = 0\n");
    CHECK(cfg.get("top") == "1");
    CHECK(cfg.get("model.type") == "xxz");
    CHECK(cfg.get_double("model.delta") == 2.5);
    CHECK(cfg.get_double("model.missing", 7.0) == 7.0);
    CHECK(cfg.get_double_list("model.kT") == std::vector<double>{0.1, 0.5, 1.0});
    CHECK_THROWS_AS((void)cfg.get("model.absent"), std::invalid_argument);
    CHECK_THROWS_AS((void)sc::ConfigFile::parse_text("justakey\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)sc::ConfigFile::parse_text("[broken\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)sc::ConfigFile::parse_text("k = notanumber\n").get_double("k"),
                    std::invalid_argument);
}

TEST_CASE("boolean keys") {
    sc::ConfigFile cfg = sc::ConfigFile::parse_text("a = true\nb = 0\nc = maybe\n");
    CHECK(cfg.get_bool("a", false));
    CHECK(!cfg.get_bool("b", true));
    CHECK(cfg.get_bool("missing", true));
    CHECK_THROWS_AS((void)cfg.get_bool("c", false), std::invalid_argument);
}

TEST_CASE("format_double is the shortest round-trippable representation") {
    for (double v : {0.1, 1.0 / 3.0, 2.0, -1.5e-300, 6.02e23, 0.0,
                     std::numeric_limits<double>::denorm_min()}) {
        CHECK(sc::parse_double(sc::format_double(v)) == v);
    }
    CHECK(sc::format_double(1.0) == "1");
    CHECK(sc::format_double(0.5) == "0.5");
    CHECK(sc::format_double(std::numeric_limits<double>::quiet_NaN()) == "NaN");
    CHECK_THROWS_AS((void)sc::parse_double("12abc"), std::invalid_argument);
}

TEST_CASE("sweep CSV round-trips bit-exactly") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<sc::SweepRow> rows;
    for (int i = 0; i < 200; ++i) {
        sc::SweepRow r;
        r.tuning = u(rng);
        r.kT = std::abs(u(rng));
        r.quantity = i % 2 ? "TQD" : "Sz";
        r.value = i % 17 == 0 ? std::numeric_limits<double>::quiet_NaN() : u(rng) / 3.0;
        r.branch = i % 2 ? "Branch1" : "";
        rows.push_back(r);
    }
    std::stringstream ss;
    sc::write_sweep_csv(ss, rows);
    std::vector<sc::SweepRow> back = sc::parse_sweep_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].tuning == rows[i].tuning);
        CHECK(back[i].kT == rows[i].kT);
        CHECK(back[i].quantity == rows[i].quantity);
        if (std::isnan(rows[i].value))
            CHECK(std::isnan(back[i].value));
        else
            CHECK(back[i].value == rows[i].value);
        CHECK(back[i].branch == rows[i].branch);
    }
}

TEST_CASE("CSV headers and NaN policy") {
    std::stringstream ss;
    sc::write_sweep_csv(ss, {});
    CHECK(ss.str() == "tuning,kT,quantity,value,branch\n");
    std::stringstream cs;
    sc::write_cp_csv(cs, {{0.1, "TQD", "no-estimate",
                           std::numeric_limits<double>::quiet_NaN(),
                           std::numeric_limits<double>::quiet_NaN()}});
    CHECK(cs.str() == "kT,estimator,method,location,uncertainty\n0.1,TQD,no-estimate,NaN,NaN\n");
    std::stringstream js;
    sc::write_cp_jsonl(js, {{0.1, "TQD", "no-estimate",
                             std::numeric_limits<double>::quiet_NaN(), 0.5}});
    CHECK(js.str() ==
          "{\"kT\":0.1,\"estimator\":\"TQD\",\"method\":\"no-estimate\","
          "\"location\":null,\"uncertainty\":0.5}\n");
}
