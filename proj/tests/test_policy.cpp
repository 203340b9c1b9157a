#include "doctest.h"
#include "flexisec/policy.hpp"

#include <cmath>
#include <stdexcept>

using namespace flexisec;

TEST_CASE("the nine policy rows") {
    const auto& rows = flexi_modes();
    REQUIRE(rows.size() == 9);
    struct Want {
        int id;
        const char* name;
        ModeAlgo algo;
        std::size_t tag_len;
        bool replay, conf, auth, hash;
    };
    const Want want[] = {
        {1, "Null", ModeAlgo::none, 0, false, false, false, false},
        {2, "FlexiSecHASH", ModeAlgo::sha1_digest, 20, false, false, false, true},
        {3, "FlexiSecAUTH64", ModeAlgo::cbc_mac, 8, false, false, true, false},
        {4, "FlexiSecAUTH32", ModeAlgo::cbc_mac, 4, false, false, true, false},
        {5, "FlexiSecAUTH_ENC64", ModeAlgo::ocb, 8, false, true, true, false},
        {6, "FlexiSecAUTH_ENC32", ModeAlgo::ocb, 4, false, true, true, false},
        {7, "FlexiSecAUTH_REPP64", ModeAlgo::cbc_mac, 8, true, false, true, false},
        {8, "FlexiSecAUTH_REPP32", ModeAlgo::cbc_mac, 4, true, false, true, false},
        {9, "FlexiSec_AUTH_ENC_REPP64", ModeAlgo::ocb, 8, true, true, true, false},
    };
    for (const Want& w : want) {
        const FlexiMode& m = rows[static_cast<std::size_t>(w.id - 1)];
        INFO("row " << w.id);
        CHECK(m.id == w.id);
        CHECK(m.name == w.name);
        CHECK(m.algo == w.algo);
        CHECK(m.tag_len == w.tag_len);
        CHECK(m.replay == w.replay);
        CHECK(m.confidentiality == w.conf);
        CHECK(m.authentication == w.auth);
        CHECK(m.unkeyed_hash == w.hash);
    }
}

TEST_CASE("mode lookup by id and name") {
    CHECK(select_mode(1).name == "Null");
    CHECK(select_mode(9).id == 9);
    CHECK_THROWS_AS(select_mode(0), std::invalid_argument);
    CHECK_THROWS_AS(select_mode(10), std::invalid_argument);

    CHECK(select_mode("FlexiSecAUTH_REPP64").id == 7);
    // Row 9 answers to both spellings.
    CHECK(select_mode("FlexiSec_AUTH_ENC_REPP64").id == 9);
    CHECK(select_mode("FlexiSecAUTH_ENC_REPP64").id == 9);
    CHECK_THROWS_AS(select_mode("FlexiSecAUTH128"), std::invalid_argument);
}

TEST_CASE("tier-driven cipher prescription") {
    const FlexiMode& m = select_mode(7);
    CHECK(select_cipher(m, ResourceTier::low_storage_energy) == "xxtea_opt");
    CHECK(select_cipher(m, ResourceTier::high_storage_energy) == "aes_speed");
    CHECK_THROWS_AS(select_cipher(select_mode(1), ResourceTier::low_storage_energy),
                    std::invalid_argument);
}

TEST_CASE("throughput model") {
    // 64-bit block at 8 MHz: cycle counts straight from the cost model.
    CHECK(throughput_bps(64, 8e6, 1000) == doctest::Approx(512000.0));
    CHECK(throughput_bps(64, 8e6, 2000) == doctest::Approx(256000.0));
    CHECK_THROWS_AS(throughput_bps(64, 8e6, 0), std::invalid_argument);
}

TEST_CASE("mac forgery horizon") {
    // Expected blind-injection time: 2^(bits-1) packets of 68 bytes.
    // 19.2 kbps: 2^31 * 68 * 8 / 19200 / 86400 days.
    CHECK(forgery_days(32, 68, 19200) == doctest::Approx(704.2288197531).epsilon(1e-9));
    CHECK(forgery_days(32, 68, 250000) == doctest::Approx(54.0847733570).epsilon(1e-9));

    // With the attempt rate rounded up to a multiple of 40/s, the figures
    // drop toward the coarser published estimates (621 and 52 days).
    CHECK(forgery_days_rounded_rate(32, 68, 19200) == doctest::Approx(621.3783703704).epsilon(1e-9));
    CHECK(forgery_days_rounded_rate(32, 68, 250000) == doctest::Approx(51.7815308642).epsilon(1e-9));
    CHECK(std::abs(forgery_days_rounded_rate(32, 68, 19200) - 621) < 1.0);
    CHECK(std::abs(forgery_days_rounded_rate(32, 68, 250000) - 52) < 1.0);

    // Each extra MAC bit doubles the horizon.
    CHECK(forgery_days(33, 68, 19200) == doctest::Approx(2 * forgery_days(32, 68, 19200)));
    // A 64-bit MAC is out of reach at sensor bandwidths.
    CHECK(forgery_days(64, 68, 250000) > 1e11);

    CHECK_THROWS_AS(forgery_days(0, 68, 19200), std::invalid_argument);
    CHECK_THROWS_AS(forgery_days(32, 68, 0), std::invalid_argument);
}
