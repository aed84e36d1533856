#pragma once

#include <array>
#include <vector>

#include "bdea/bytes.hpp"

namespace bdea {

// Bijection between 2-bit values and the four bases. map[v] is the base
// encoding value v; the four entries are a permutation of {A,C,G,T},
// so there are 4! = 24 patterns. Identity is the 4-character string.
class CodingPattern {
public:
    // s must be a permutation of ACGT (case-insensitive), e.g. "CTAG".
    static CodingPattern from_string(std::string_view s);  // NotAPermutation

    char base_for(unsigned value) const { return map_[value & 3]; }
    unsigned value_of(char base) const;  // InvalidBase outside {A,C,G,T}

    std::string str() const { return std::string(map_.begin(), map_.end()); }

    bool operator==(const CodingPattern&) const = default;

private:
    explicit CodingPattern(std::array<char, 4> map);
    std::array<char, 4> map_;
    std::array<std::int8_t, 256> value_of_;
};

// 00->A, 01->T, 10->G, 11->C.
CodingPattern default_pattern();

// All 24 patterns in lexicographic order of their strings ("ACGT" first).
std::vector<CodingPattern> enumerate_patterns();

DnaSequence encode_bits(const BitString& bits, const CodingPattern& p);  // OddBitLength
BitString decode_dna(const DnaSequence& dna, const CodingPattern& p);    // InvalidBase

}  // namespace bdea
