#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdea/pipeline.hpp"

namespace bdea {

struct SearchReport {
    std::uint64_t trials = 0;
    // Matching (p1, p2) sequences, sorted by (|p1|, p1, |p2|, p2).
    std::vector<std::pair<std::string, std::string>> matches;
    double elapsed_seconds = 0.0;
};

// Exact 4^(l1+l2) as a decimal string (overflows u64 for realistic
// primer lengths).
std::string search_space(unsigned l1, unsigned l2);

// Exhaustive primer search: tries every pair with lengths 1..max_len,
// counting a candidate as a match only when the full decrypt path
// (de-amplification plus envelope CRC) succeeds. max_len is capped at 6
// to stay desk-scale.
SearchReport brute_force(const CipherContainer& c, const Bytes& k_b,
                         const CodingPattern& pattern, unsigned max_len);  // MaxLenExceeded

enum class MutationKind {
    PrimerBase,   // change one base of one primer
    PatternSwap,  // swap two positions of the coding pattern
    KbByte,       // change one byte of k_b
};

// Applies `mutations` random single-component bundle mutations and
// returns the fraction for which decrypt raises an error. Deterministic
// under a fixed seed. `only` restricts the mutation kind.
double corruption_probe(const CipherContainer& c, const KeyBundle& kb,
                        unsigned mutations, std::uint64_t seed,
                        std::optional<MutationKind> only = std::nullopt);

}  // namespace bdea
