#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdea/errors.hpp"
#include "bdea/huffman.hpp"
#include "bdea/radix.hpp"
#include "support/fixtures.hpp"

using namespace bdea;

TEST_CASE("code lengths for the amplified fixture") {
    // counts tallied from the fixture: A=29, C=7, G=4, T=56
    const std::array<std::uint32_t, 4> counts{29, 7, 4, 56};
    const auto lens = huffman_code_lengths(counts);
    CHECK(lens[0] == 2);  // A
    CHECK(lens[1] == 3);  // C
    CHECK(lens[2] == 3);  // G
    CHECK(lens[3] == 1);  // T
}

TEST_CASE("golden blob for the amplified fixture") {
    const CompressedBlob blob = compress(fixtures::kAmplified);
    CHECK(blob.counts == std::array<std::uint32_t, 4>{29, 7, 4, 56});
    // 56*1 + 29*2 + 7*3 + 4*3 = 147 bits -> 19 body bytes
    CHECK(blob.body.size() == 19);
    CHECK(text_to_hex(blob.serialize()) == fixtures::kGoldenBlobHex);

    // tighter than 2-bit packing: 147 < 2 * 96
    const std::size_t packed_bits = 2 * fixtures::kAmplified.size();
    CHECK(147 < packed_bits);

    CHECK(decompress(blob) == fixtures::kAmplified);
}

TEST_CASE("compress is deterministic") {
    CHECK(compress(fixtures::kAmplified).serialize() ==
          compress(fixtures::kAmplified).serialize());
}

TEST_CASE("degenerate inputs") {
    SUBCASE("single-symbol run uses the 1-bit code 0") {
        const CompressedBlob blob = compress("AAAA");
        CHECK(blob.counts == std::array<std::uint32_t, 4>{4, 0, 0, 0});
        CHECK(blob.body == Bytes{0x00});
        CHECK(decompress(blob) == "AAAA");
    }
    SUBCASE("empty sequence") {
        const CompressedBlob blob = compress("");
        CHECK(blob.counts == std::array<std::uint32_t, 4>{0, 0, 0, 0});
        CHECK(blob.body.empty());
        CHECK(decompress(blob).empty());
    }
    SUBCASE("one base") {
        CompressedBlob blob;
        blob.counts = {1, 0, 0, 0};
        blob.body = {0x00};
        CHECK(decompress(blob) == "A");
    }
}

TEST_CASE("parse/serialize round trip and errors") {
    const CompressedBlob blob = compress(fixtures::kAmplified);
    const Bytes raw = blob.serialize();
    CHECK(CompressedBlob::parse(raw) == blob);

    SUBCASE("truncated body") {
        Bytes chopped(raw.begin(), raw.end() - 1);
        const CompressedBlob parsed = CompressedBlob::parse(chopped);
        CHECK_THROWS_AS(decompress(parsed), TruncatedBody);
    }
    SUBCASE("truncated header") {
        Bytes chopped(raw.begin(), raw.begin() + 10);
        CHECK_THROWS_AS(CompressedBlob::parse(chopped), TruncatedBody);
    }
    SUBCASE("bad magic") {
        Bytes bad = raw;
        bad[0] ^= 0xFF;
        CHECK_THROWS_AS(CompressedBlob::parse(bad), BlobBadMagic);
    }
    SUBCASE("nonzero padding") {
        Bytes bad = raw;
        bad.back() |= 0x01;  // 147 bits used, bit 152 is padding
        CHECK_THROWS_AS(decompress(CompressedBlob::parse(bad)), MalformedPadding);
    }
    SUBCASE("stray one bit under the single-symbol code") {
        CompressedBlob blob1;
        blob1.counts = {3, 0, 0, 0};
        blob1.body = {0x40};  // second symbol bit is 1
        CHECK_THROWS_AS(decompress(blob1), MalformedPadding);
    }
}

TEST_CASE("kraft equality when all four symbols occur") {
    XorShift64Star rng(4444);
    for (int trial = 0; trial < 40; ++trial) {
        DnaSequence d = "ACGT" + fixtures::random_dna(rng, rng.below(500));
        const auto lens = huffman_code_lengths(compress(d).counts);
        double kraft = 0.0;
        for (unsigned l : lens) {
            REQUIRE(l > 0);
            kraft += 1.0 / static_cast<double>(1u << l);
        }
        CHECK(kraft == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("round trip on random sequences") {
    XorShift64Star rng(0xDC);
    for (int trial = 0; trial < 60; ++trial) {
        const DnaSequence d = fixtures::random_dna(rng, rng.below(2000));
        CHECK(decompress(compress(d)) == d);
    }
    // one large skewed stream
    DnaSequence big;
    big.reserve(1000000);
    for (std::size_t i = 0; i < 1000000; ++i) {
        const std::uint64_t r = rng.below(10);
        big.push_back(r < 7 ? 'T' : (r < 9 ? 'A' : 'C'));
    }
    CHECK(decompress(compress(big)) == big);
}
