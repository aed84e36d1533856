#pragma once

#include "bdea/bytes.hpp"

namespace bdea {

inline constexpr std::size_t kMaxPrimerLen = 64;

// Short DNA sequence acting as key material for amplification.
class Primer {
public:
    // Uppercases and validates: 1..64 bases from {A,C,G,T}.
    explicit Primer(std::string_view seq);  // InvalidPrimer, InvalidBase

    const DnaSequence& seq() const { return seq_; }
    std::size_t size() const { return seq_.size(); }

    bool operator==(const Primer&) const = default;

private:
    DnaSequence seq_;
};

struct PrimerPair {
    Primer p1;
    Primer p2;
};

// Every message base expands to the block  b . p2 . p1 . p2 .
std::size_t block_len(const PrimerPair& pp);  // 1 + |p1| + 2*|p2|

DnaSequence amplify(const DnaSequence& msg, const PrimerPair& pp);

// Verifies primer placement in every block and recovers the leading
// bases. Any length or slot mismatch throws BiologicalPollution.
DnaSequence deamplify(const DnaSequence& amplified, const PrimerPair& pp);

}  // namespace bdea
