#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mq/serialize.hpp"
#include "mq/config.hpp"

#include <cstdio>
#include <fstream>
#include <random>

using namespace mq;

TEST_CASE("round trips") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    SUBCASE("series") {
        for (int trial = 0; trial < 20; ++trial) {
            QSeries s(8);
            for (int n = 0; n <= 8; ++n) s.set(n, rat(num(rng), den(rng)));
            CHECK(QSeries::parse(s.str()) == s);
        }
    }
    SUBCASE("coordinate-ring elements") {
        OTElement y = yukawa_ot(YukawaVariant::Disc);
        CHECK(OTElement::parse(y.str()) == y);
        OTElement f(wp_var(0, 2) * wp_var(6) + wp_const(rat(3, 7)), 2, 1, 1);
        CHECK(OTElement::parse(f.str()) == f);
    }
}

TEST_CASE("lie basis json shape") {
    Json j = lie_basis_json(1);
    REQUIRE(j.size() == 6);
    CHECK(j[0]["h"] == 1);
    bool found_t = false;
    for (const auto& e : j)
        if (e["name"] == "t") {
            found_t = true;
            CHECK(e["entries"][3][0] == "-1");
        }
    CHECK(found_t);
}

TEST_CASE("manifest carries the arbitration outcomes") {
    Manifest m;
    m.command = "verify";
    Json j = m.to_json();
    CHECK(j["schema"] == "1");
    CHECK(j["arbitration"].contains("yukawa"));
    CHECK(j["arbitration"].contains("kappa"));
    CHECK(j["arbitration"].contains("genus2_normalization_mu"));
}

TEST_CASE("config parsing") {
    const char* path = "mq_test_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "order = 10\n";
        f << "chi_a = -200  # trailing comment\n";
        f << "yukawa_variant = disc\n";
        f << "gap_scale = 5/144\n";
    }
    Config cfg = Config::from_file(path);
    CHECK(cfg.get_long("order", 0) == 10);
    CHECK(cfg.get_rat("chi_a", Rat(0)) == Rat(-200));
    CHECK(cfg.get("yukawa_variant", "") == "disc");
    CHECK(cfg.get_rat("gap_scale", Rat(0)) == rat(5, 144));
    CHECK(cfg.get_long("missing", 42) == 42);
    std::remove(path);
}

TEST_CASE("determinism: identical inputs produce identical artifacts") {
    Json a, b;
    a["basis"] = lie_basis_json(2);
    b["basis"] = lie_basis_json(2);
    CHECK(a.dump() == b.dump());
}
