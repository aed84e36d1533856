#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdea/errors.hpp"
#include "bdea/keyex.hpp"
#include "bdea/radix.hpp"
#include "support/fixtures.hpp"

using namespace bdea;

namespace {

// Brute-force repeated multiplication, independent of square-and-multiply.
std::uint64_t powmod_slow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    unsigned __int128 acc = 1 % m;
    for (std::uint64_t i = 0; i < exp; ++i) {
        acc = acc * base % m;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

TEST_CASE("modpow known answers") {
    CHECK(modpow(5, 6, 23) == 8);    // 5^6 = 15625 = 679*23 + 8
    CHECK(modpow(5, 15, 23) == 19);
    CHECK(modpow(5, 0, 23) == 1);
    CHECK(modpow(0, 0, 7) == 1);
    CHECK_THROWS_AS(modpow(2, 3, 1), ModulusOutOfRange);
    CHECK_THROWS_AS(modpow(2, 3, 1ULL << 62), ModulusOutOfRange);
}

TEST_CASE("modpow agrees with the repeated-multiplication oracle") {
    XorShift64Star rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t m = 2 + rng.below(10000);
        const std::uint64_t base = rng.below(100000);
        const std::uint64_t exp = rng.below(2000);
        CHECK(modpow(base, exp, m) == powmod_slow(base, exp, m));
    }
}

TEST_CASE("is_probable_prime") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(3));
    CHECK(is_probable_prime(23));
    CHECK(is_probable_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_probable_prime(0));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(561));      // Carmichael
    CHECK_FALSE(is_probable_prime(1ULL << 40));
    CHECK_FALSE(is_probable_prime(2305843009213693951ULL - 2));
}

TEST_CASE("dh toy vector") {
    const DhParams params = DhParams::create(23, 5);
    const DhKeyPair alice = make_keypair(params, 6);
    const DhKeyPair bob = make_keypair(params, 15);
    CHECK(alice.X == 8);
    CHECK(bob.X == 19);
    CHECK(dh_shared(params, 6, bob.X) == 2);
    CHECK(dh_shared(params, 15, alice.X) == 2);

    CHECK(dh_shared(params, 1, 19) == 19);  // x = 1 returns the peer value
    CHECK_THROWS_AS(dh_shared(params, 6, 0), PublicValueOutOfRange);
    CHECK_THROWS_AS(dh_shared(params, 6, 23), PublicValueOutOfRange);
}

TEST_CASE("dh params validation") {
    CHECK_THROWS_AS(DhParams::create(4, 2), BadDhParams);    // even
    CHECK_THROWS_AS(DhParams::create(9, 2), BadDhParams);    // composite
    CHECK_THROWS_AS(DhParams::create(23, 1), BadDhParams);   // g too small
    CHECK_THROWS_AS(DhParams::create(23, 23), BadDhParams);  // g too large
    CHECK_THROWS_AS(DhParams::create((1ULL << 62) + 1, 2), BadDhParams);
}

TEST_CASE("dh symmetry property") {
    XorShift64Star rng(777);
    const std::uint64_t primes[] = {23, 101, 65537, 4294967311ULL, 2305843009213693951ULL};
    for (std::uint64_t p : primes) {
        const DhParams params = DhParams::create(p, 2 + rng.below(p - 2));
        for (int trial = 0; trial < 10; ++trial) {
            const std::uint64_t a = 1 + rng.below(p - 2);
            const std::uint64_t b = 1 + rng.below(p - 2);
            const std::uint64_t A = make_keypair(params, a).X;
            const std::uint64_t B = make_keypair(params, b).X;
            if (A == 0 || B == 0) continue;  // g a multiple of p cannot happen; guard anyway
            CHECK(dh_shared(params, a, B) == dh_shared(params, b, A));
        }
    }
}

TEST_CASE("derive_private stays in range") {
    XorShift64Star rng(31337);
    for (std::uint64_t p : {3ULL, 5ULL, 23ULL, 2305843009213693951ULL}) {
        const DhParams params = DhParams::create(p, 2);
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint64_t x = derive_private(params, rng.next());
            CHECK(x >= 1);
            CHECK(x <= p - 2);
        }
    }
}

TEST_CASE("keystream known answer and prefix property") {
    CHECK(text_to_hex(keystream(2, 32)) == fixtures::kKeystream2Hex);
    CHECK(keystream(2, 0).empty());

    const Bytes k16 = keystream(2, 16);
    const Bytes k8 = keystream(2, 8);
    CHECK(Bytes(k16.begin(), k16.begin() + 8) == k8);

    // zero secret falls back to the fixed nonzero seed
    CHECK(keystream(0, 16) == keystream(0, 16));
    CHECK(keystream(0, 8) != keystream(1, 8));
}

TEST_CASE("bundle serialization golden bytes") {
    const KeyBundle kb{Primer("A"), Primer("T"), default_pattern(), hex_to_text("70746F")};
    CHECK(text_to_hex(serialize_bundle(kb)) == fixtures::kSampleBundleHex);

    const KeyBundle parsed = parse_bundle(serialize_bundle(kb));
    CHECK(parsed == kb);
}

TEST_CASE("wrap/unwrap round trip") {
    XorShift64Star rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const KeyBundle kb{Primer(fixtures::random_dna(rng, 1 + rng.below(8))),
                           Primer(fixtures::random_dna(rng, 1 + rng.below(8))),
                           enumerate_patterns()[rng.below(24)],
                           fixtures::random_bytes(rng, rng.below(64))};
        const std::uint64_t secret = rng.next();
        CHECK(unwrap_bundle(wrap_bundle(kb, secret), secret) == kb);
    }
}

TEST_CASE("unwrap with a wrong secret almost always fails") {
    const KeyBundle kb{Primer("GATTACA"), Primer("TAG"), default_pattern(),
                       bytes_of("half of the message")};
    const std::uint64_t secret = 0xFEEDFACE;
    const Bytes wrapped = wrap_bundle(kb, secret);

    XorShift64Star rng(2024);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint64_t wrong = rng.next();
        if (wrong == secret) wrong ^= 1;
        try {
            (void)unwrap_bundle(wrapped, wrong);
        } catch (const MalformedBundle&) {
            ++failures;
        }
    }
    CHECK(failures > 990);
}

TEST_CASE("parse_bundle rejects malformed input") {
    const KeyBundle kb{Primer("AC"), Primer("GT"), default_pattern(), {0x01, 0x02}};
    const Bytes good = serialize_bundle(kb);

    SUBCASE("truncated") {
        for (std::size_t keep = 0; keep < good.size(); ++keep) {
            Bytes cut(good.begin(), good.begin() + keep);
            CHECK_THROWS_AS(parse_bundle(cut), MalformedBundle);
        }
    }
    SUBCASE("trailing garbage") {
        Bytes extra = good;
        extra.push_back(0x00);
        CHECK_THROWS_AS(parse_bundle(extra), MalformedBundle);
    }
    SUBCASE("bad primer length") {
        Bytes bad = good;
        bad[0] = 0;
        CHECK_THROWS_AS(parse_bundle(bad), MalformedBundle);
    }
    SUBCASE("non-DNA primer byte") {
        Bytes bad = good;
        bad[1] = 'Z';
        CHECK_THROWS_AS(parse_bundle(bad), MalformedBundle);
    }
    SUBCASE("pattern not a permutation") {
        Bytes bad = good;
        bad[6] = bad[7];  // duplicate a base inside the pattern field
        CHECK_THROWS_AS(parse_bundle(bad), MalformedBundle);
    }
}
