#pragma once

#include <string>

#include "bdea/bytes.hpp"
#include "bdea/rng.hpp"

namespace fixtures {

// Built-in known-answer chain for the sample text "crypto" with primers
// (A, T) and the default coding pattern.
inline const std::string kSampleText = "crypto";
inline const std::string kSampleHex = "63727970746F";
inline const std::string kSampleBits =
    "011000110111001001111001011100000111010001101111";
inline const std::string kSampleDna = "TGACTCAGTCGTTCAATCTATGCC";

// Amplified stream for the sample, primers p1="A", p2="T".
inline const std::string kAmplified =
    "TTATGTATATATCTATTTATCTATATATGTATTTATCTATGTATTTATTTATCTATATATATATTTATCTATTTATAT"
    "ATTTATGTATCTATCTAT";

// Same stream with block index 2 ("ATAT") dropped; kept as a legacy
// fixture variant.
inline const std::string kAmplifiedDroppedBlock =
    "TTATGTATCTATTTATCTATATATGTATTTATCTATGTATTTATTTATCTATATATATATTTATCTATTTATATATTT"
    "ATGTATCTATCTAT";

// compress(kAmplified), serialized.
inline const std::string kGoldenBlobHex =
    "DC010000001D00000007000000040000003827493213249D0993A109924909909213A64C80";

// keystream(secret=2, n=32), computed with a separately written
// implementation of the same recurrence.
inline const std::string kKeystream2Hex =
    "8FC99C9712D9BA3A579F4D51C0F2CA3A764935F6EC531BCB94A9EDDC31DD9857";

// Serialized key bundle for primers (A, T), pattern ATGC, k_b = 70 74 6F.
inline const std::string kSampleBundleHex = "01410154415447430000000370746F";

inline bdea::Bytes random_bytes(bdea::XorShift64Star& rng, std::size_t n) {
    bdea::Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng.below(256));
    return out;
}

inline bdea::DnaSequence random_dna(bdea::XorShift64Star& rng, std::size_t n) {
    static const char bases[4] = {'A', 'C', 'G', 'T'};
    bdea::DnaSequence out(n, 'A');
    for (auto& c : out) c = bases[rng.below(4)];
    return out;
}

}  // namespace fixtures
