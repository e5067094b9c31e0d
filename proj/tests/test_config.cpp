#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/config.h"

using namespace star;

static const char* kSample = R"(
# device under test
[device]
chi_hz = 380e3, 410e3
kappa_hz = 180e3   ; trailing comment
flag = true

[run]
fock_dim = 10
label = paper two qubit
)";

TEST_CASE("parse sections, scalars, vectors, comments") {
    Config cfg = Config::from_string(kSample);
    CHECK(cfg.has("device", "chi_hz"));
    CHECK_FALSE(cfg.has("device", "missing"));
    auto chi = cfg.get_vector("device", "chi_hz");
    REQUIRE(chi.size() == 2);
    CHECK(chi[0] == doctest::Approx(380e3));
    CHECK(chi[1] == doctest::Approx(410e3));
    CHECK(cfg.get_double("device", "kappa_hz") == doctest::Approx(180e3));
    CHECK(cfg.get_int("run", "fock_dim") == 10);
    CHECK(cfg.get_string("run", "label") == "paper two qubit");
    CHECK(cfg.get_bool("device", "flag", false));
    CHECK(cfg.get_double("run", "absent", 2.5) == doctest::Approx(2.5));
}

TEST_CASE("errors carry the offending key") {
    Config cfg = Config::from_string(kSample);
    CHECK_THROWS_WITH_AS(cfg.get_double("device", "nope"),
                         doctest::Contains("nope"), ConfigError);
    CHECK_THROWS_WITH_AS(cfg.get_double("nosec", "x"), doctest::Contains("nosec"), ConfigError);
    CHECK_THROWS_AS(cfg.get_double("run", "label"), ConfigError);
    CHECK_THROWS_AS(Config::from_string("key = 1\n"), ConfigError);       // outside section
    CHECK_THROWS_AS(Config::from_string("[sec\nkey = 1\n"), ConfigError); // unterminated
    CHECK_THROWS_AS(Config::from_string("[s]\nnovalue\n"), ConfigError);
}

TEST_CASE("set and dotted overrides") {
    Config cfg = Config::from_string(kSample);
    cfg.set("device.kappa_hz", "90e3");
    CHECK(cfg.get_double("device", "kappa_hz") == doctest::Approx(90e3));
    cfg.set("newsec", "k", "1");
    CHECK(cfg.get_int("newsec", "k") == 1);
    CHECK_THROWS_AS(cfg.set("nodot", "v"), ConfigError);
}

TEST_CASE("round trip through to_string") {
    Config cfg = Config::from_string(kSample);
    Config again = Config::from_string(cfg.to_string());
    CHECK(again.get_vector("device", "chi_hz")[1] == doctest::Approx(410e3));
    CHECK(again.get_string("run", "label") == "paper two qubit");
}

TEST_CASE("missing file is a config error") {
    CHECK_THROWS_WITH_AS(Config::from_file("/no/such/file.cfg"),
                         doctest::Contains("/no/such/file.cfg"), ConfigError);
}
