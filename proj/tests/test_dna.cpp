#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bdea/dna.hpp"
#include "bdea/errors.hpp"
#include "bdea/radix.hpp"
#include "support/fixtures.hpp"

using namespace bdea;

TEST_CASE("default pattern maps the coding table") {
    const CodingPattern p = default_pattern();
    CHECK(p.base_for(0b00) == 'A');
    CHECK(p.base_for(0b01) == 'T');
    CHECK(p.base_for(0b10) == 'G');
    CHECK(p.base_for(0b11) == 'C');
    CHECK(p.str() == "ATGC");
    CHECK(encode_bits(bits_from_string("00011011"), p) == "ATGC");
}

TEST_CASE("pattern_from_string") {
    const CodingPattern p = CodingPattern::from_string("CTAG");
    CHECK(p.base_for(0) == 'C');
    CHECK(p.base_for(1) == 'T');
    CHECK(p.base_for(2) == 'A');
    CHECK(p.base_for(3) == 'G');

    CHECK(CodingPattern::from_string("atgc") == default_pattern());
    CHECK_THROWS_AS(CodingPattern::from_string("AATC"), NotAPermutation);
    CHECK_THROWS_AS(CodingPattern::from_string("ACGTX"), NotAPermutation);
    CHECK_THROWS_AS(CodingPattern::from_string("ACGU"), NotAPermutation);
}

TEST_CASE("enumerate_patterns is the 24 permutations in order") {
    const auto patterns = enumerate_patterns();
    CHECK(patterns.size() == 24);
    CHECK(patterns.front().str() == "ACGT");
    CHECK(patterns.back().str() == "TGCA");

    std::set<std::string> distinct;
    for (const auto& p : patterns) distinct.insert(p.str());
    CHECK(distinct.size() == 24);
    CHECK(std::is_sorted(distinct.begin(), distinct.end()));
}

TEST_CASE("encode_bits known answers") {
    const CodingPattern p = default_pattern();
    CHECK(encode_bits(hex_to_bits(fixtures::kSampleHex), p) == fixtures::kSampleDna);
    CHECK(encode_bits(bits_from_string("00"), p) == "A");
    CHECK(encode_bits({}, p).empty());
    CHECK_THROWS_AS(encode_bits(bits_from_string("010"), p), OddBitLength);
}

TEST_CASE("decode_dna inverts") {
    const CodingPattern p = default_pattern();
    CHECK(decode_dna(fixtures::kSampleDna, p) == hex_to_bits(fixtures::kSampleHex));
    CHECK(bits_to_string(decode_dna("A", p)) == "00");
    CHECK_THROWS_AS(decode_dna("AXGT", p), InvalidBase);
}

TEST_CASE("bijection across all 24 patterns") {
    XorShift64Star rng(24);
    const auto patterns = enumerate_patterns();
    for (const auto& p : patterns) {
        for (int trial = 0; trial < 5; ++trial) {
            BitString bits;
            const std::size_t pairs = rng.below(60);
            for (std::size_t i = 0; i < 2 * pairs; ++i) {
                bits.push_back(static_cast<std::uint8_t>(rng.below(2)));
            }
            const DnaSequence dna = encode_bits(bits, p);
            CHECK(dna.size() == bits.size() / 2);
            CHECK(decode_dna(dna, p) == bits);
        }
    }
}

TEST_CASE("distinct patterns give distinct encodings of 00011011") {
    const BitString probe = bits_from_string("00011011");
    std::set<std::string> encodings;
    for (const auto& p : enumerate_patterns()) {
        encodings.insert(encode_bits(probe, p));
    }
    CHECK(encodings.size() == 24);
}
