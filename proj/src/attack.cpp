#include "bdea/attack.hpp"

#include <algorithm>
#include <chrono>

#include "bdea/errors.hpp"
#include "bdea/rng.hpp"

namespace bdea {

namespace {

constexpr char kBases[4] = {'A', 'C', 'G', 'T'};

// idx in [0, 4^len) -> primer string, most significant base first.
// Index order equals lexicographic order since A<C<G<T.
std::string primer_at(std::uint64_t idx, unsigned len) {
    std::string s(len, 'A');
    for (unsigned k = 0; k < len; ++k) {
        s[k] = kBases[(idx >> (2 * (len - 1 - k))) & 3];
    }
    return s;
}

int base_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        default: return 3;
    }
}

}  // namespace

std::string search_space(unsigned l1, unsigned l2) {
    // 2^(2*(l1+l2)) as exact decimal, little-endian digit vector.
    std::vector<std::uint8_t> digits{1};
    for (unsigned i = 0; i < 2 * (l1 + l2); ++i) {
        unsigned carry = 0;
        for (auto& d : digits) {
            const unsigned v = d * 2 + carry;
            d = static_cast<std::uint8_t>(v % 10);
            carry = v / 10;
        }
        if (carry) digits.push_back(static_cast<std::uint8_t>(carry));
    }
    std::string out(digits.rbegin(), digits.rend());
    for (auto& c : out) c += '0';
    return out;
}

SearchReport brute_force(const CipherContainer& c, const Bytes& k_b,
                         const CodingPattern& pattern, unsigned max_len) {
    if (max_len > 6) throw MaxLenExceeded("max_len is capped at 6");

    const auto t0 = std::chrono::steady_clock::now();
    const DnaSequence amplified = decompress(c.blob);

    SearchReport report;
    for (unsigned l1 = 1; l1 <= max_len; ++l1) {
        for (std::uint64_t i1 = 0; i1 < (1ULL << (2 * l1)); ++i1) {
            const Primer p1(primer_at(i1, l1));
            for (unsigned l2 = 1; l2 <= max_len; ++l2) {
                for (std::uint64_t i2 = 0; i2 < (1ULL << (2 * l2)); ++i2) {
                    ++report.trials;
                    const Primer p2(primer_at(i2, l2));
                    try {
                        const KeyBundle candidate{p1, p2, pattern, k_b};
                        (void)decrypt_amplified(amplified, c.mode, candidate);
                        report.matches.emplace_back(p1.seq(), p2.seq());
                    } catch (const Error&) {
                    }
                }
            }
        }
    }

    std::sort(report.matches.begin(), report.matches.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.first.size(), a.first, a.second.size(), a.second) <
               std::make_tuple(b.first.size(), b.first, b.second.size(), b.second);
    });

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

double corruption_probe(const CipherContainer& c, const KeyBundle& kb,
                        unsigned mutations, std::uint64_t seed,
                        std::optional<MutationKind> only) {
    if (mutations == 0) return 0.0;
    XorShift64Star rng(seed);
    unsigned errored = 0;

    for (unsigned trial = 0; trial < mutations; ++trial) {
        KeyBundle mutant = kb;
        MutationKind kind = only ? *only : static_cast<MutationKind>(rng.below(3));
        if (kind == MutationKind::KbByte && kb.k_b.empty()) {
            kind = MutationKind::PrimerBase;  // no-XOR bundles have no k_b
        }
        switch (kind) {
            case MutationKind::PrimerBase: {
                const bool first = rng.below(2) == 0;
                DnaSequence seq = (first ? mutant.primer1 : mutant.primer2).seq();
                const std::size_t pos = rng.below(seq.size());
                const int old = base_index(seq[pos]);
                seq[pos] = kBases[(old + 1 + rng.below(3)) % 4];
                (first ? mutant.primer1 : mutant.primer2) = Primer(seq);
                break;
            }
            case MutationKind::PatternSwap: {
                std::string p = mutant.pattern.str();
                const std::size_t a = rng.below(4);
                const std::size_t b = (a + 1 + rng.below(3)) % 4;
                std::swap(p[a], p[b]);
                mutant.pattern = CodingPattern::from_string(p);
                break;
            }
            case MutationKind::KbByte: {
                const std::size_t pos = rng.below(mutant.k_b.size());
                mutant.k_b[pos] ^= static_cast<std::uint8_t>(1 + rng.below(255));
                break;
            }
        }
        try {
            (void)decrypt(c, mutant);
        } catch (const Error&) {
            ++errored;
        }
    }
    return static_cast<double>(errored) / static_cast<double>(mutations);
}

}  // namespace bdea
