#include "doctest.h"
#include "flexisec/config.hpp"

#include <stdexcept>

using namespace flexisec;

TEST_CASE("key=value parsing with comments and blank lines") {
    const Config cfg = Config::parse_string(
        "# scenario header comment\n"
        "mode = 7\n"
        "\n"
        "topology= chain   # trailing comment\n"
        "  nodes =4\n"
        "label = multi word value\n");
    CHECK(cfg.entries().size() == 4);
    CHECK(cfg.get_string("mode", "") == "7");
    CHECK(cfg.get_string("topology", "") == "chain");
    CHECK(cfg.get_u64("nodes", 0) == 4);
    CHECK(cfg.get_string("label", "") == "multi word value");
}

TEST_CASE("lookups and fallbacks") {
    const Config cfg = Config::parse_string("present = 1\n");
    CHECK(cfg.has("present"));
    CHECK_FALSE(cfg.has("absent"));
    CHECK(cfg.get("absent") == std::nullopt);
    CHECK(cfg.get_u64("absent", 99) == 99);
    CHECK(cfg.get_double("absent", 0.5) == 0.5);
    CHECK(cfg.get_string("absent", "dflt") == "dflt");
    CHECK(cfg.get_bool("absent", true) == true);
}

TEST_CASE("typed getters reject malformed values") {
    const Config cfg = Config::parse_string(
        "n = 12x\n"
        "d = 0.5.5\n"
        "b = yep\n"
        "neg = -3\n");
    CHECK_THROWS_AS(cfg.get_u64("n", 0), std::runtime_error);
    CHECK_THROWS_AS(cfg.get_double("d", 0), std::runtime_error);
    CHECK_THROWS_AS(cfg.get_bool("b", false), std::runtime_error);
    CHECK_THROWS_AS(cfg.get_u64("neg", 0), std::runtime_error);
}

TEST_CASE("boolean spellings") {
    const Config cfg = Config::parse_string(
        "a = true\nb = false\nc = 1\nd = 0\ne = on\nf = off\n");
    CHECK(cfg.get_bool("a", false));
    CHECK_FALSE(cfg.get_bool("b", true));
    CHECK(cfg.get_bool("c", false));
    CHECK_FALSE(cfg.get_bool("d", true));
    CHECK(cfg.get_bool("e", false));
    CHECK_FALSE(cfg.get_bool("f", true));
}

TEST_CASE("syntax errors are loud") {
    CHECK_THROWS_AS(Config::parse_string("no equals sign\n"), std::runtime_error);
    CHECK_THROWS_AS(Config::parse_string("= value without key\n"), std::runtime_error);
    CHECK_THROWS_AS(Config::parse_string("dup = 1\ndup = 2\n"), std::runtime_error);
}

TEST_CASE("unknown-key guard") {
    const Config cfg = Config::parse_string("mode = 7\nnodez = 4\n");
    CHECK_THROWS_AS(cfg.require_known_keys({"mode", "nodes"}), std::runtime_error);
    const Config ok = Config::parse_string("mode = 7\nnodes = 4\n");
    CHECK_NOTHROW(ok.require_known_keys({"mode", "nodes", "ticks"}));
}

TEST_CASE("missing file is an error") {
    CHECK_THROWS_AS(Config::parse_file("/nonexistent/path.scenario"), std::runtime_error);
}
