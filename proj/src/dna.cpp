#include "bdea/dna.hpp"

#include <algorithm>
#include <cctype>

#include "bdea/errors.hpp"

namespace bdea {

CodingPattern::CodingPattern(std::array<char, 4> map) : map_(map) {
    value_of_.fill(-1);
    for (unsigned v = 0; v < 4; ++v) {
        value_of_[static_cast<unsigned char>(map_[v])] = static_cast<std::int8_t>(v);
    }
}

CodingPattern CodingPattern::from_string(std::string_view s) {
    if (s.size() != 4) throw NotAPermutation("pattern must have exactly 4 characters");
    std::array<char, 4> map{};
    for (std::size_t i = 0; i < 4; ++i) {
        map[i] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    }
    std::array<char, 4> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<char, 4>{'A', 'C', 'G', 'T'}) {
        throw NotAPermutation("pattern must be a permutation of ACGT");
    }
    return CodingPattern(map);
}

unsigned CodingPattern::value_of(char base) const {
    const std::int8_t v = value_of_[static_cast<unsigned char>(base)];
    if (v < 0) throw InvalidBase(std::string("not a base in this pattern: '") + base + "'");
    return static_cast<unsigned>(v);
}

CodingPattern default_pattern() {
    return CodingPattern::from_string("ATGC");
}

std::vector<CodingPattern> enumerate_patterns() {
    std::string bases = "ACGT";
    std::vector<CodingPattern> out;
    out.reserve(24);
    do {
        out.push_back(CodingPattern::from_string(bases));
    } while (std::next_permutation(bases.begin(), bases.end()));
    return out;
}

DnaSequence encode_bits(const BitString& bits, const CodingPattern& p) {
    if (bits.size() % 2 != 0) throw OddBitLength("bit count must be even");
    DnaSequence out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        out.push_back(p.base_for(static_cast<unsigned>((bits[i] << 1) | bits[i + 1])));
    }
    return out;
}

BitString decode_dna(const DnaSequence& dna, const CodingPattern& p) {
    BitString out;
    out.reserve(dna.size() * 2);
    for (char base : dna) {
        const unsigned v = p.value_of(base);
        out.push_back(static_cast<std::uint8_t>((v >> 1) & 1));
        out.push_back(static_cast<std::uint8_t>(v & 1));
    }
    return out;
}

}  // namespace bdea
