#pragma once

#include "bdea/bytes.hpp"
#include "bdea/dna.hpp"
#include "bdea/pcr.hpp"

namespace bdea {

// Educational-strength Diffie-Hellman over a caller-chosen group. The
// modulus is capped below 2^62 so modular products fit 128-bit
// arithmetic; do not use this for anything that needs real security.
inline constexpr std::uint64_t kMaxModulus = 1ULL << 62;

struct DhParams {
    std::uint64_t p;  // odd prime, 3 <= p < 2^62
    std::uint64_t g;  // 2 <= g < p

    static DhParams create(std::uint64_t p, std::uint64_t g);  // BadDhParams
};

struct DhKeyPair {
    std::uint64_t x;  // private exponent, 1 <= x < p-1
    std::uint64_t X;  // g^x mod p
};

bool is_probable_prime(std::uint64_t n);

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);  // ModulusOutOfRange

// Deterministic private exponent from a seed (tests, reproducible demos).
std::uint64_t derive_private(const DhParams& params, std::uint64_t seed);
DhKeyPair make_keypair(const DhParams& params, std::uint64_t private_exponent);

std::uint64_t dh_shared(const DhParams& params, std::uint64_t my_private,
                        std::uint64_t peer_public);  // PublicValueOutOfRange

// xorshift64* bytes derived from the shared secret; deterministic, any
// prefix of a longer stream equals the shorter stream.
Bytes keystream(std::uint64_t secret, std::size_t n);

// The transported key material: two primers, the coding pattern and the
// key half k_b.
struct KeyBundle {
    Primer primer1;
    Primer primer2;
    CodingPattern pattern;
    Bytes k_b;

    bool operator==(const KeyBundle&) const = default;
};

// Plain serialized layout (.bdk files):
//   |p1| u8, p1 ASCII, |p2| u8, p2 ASCII, pattern 4 chars,
//   |k_b| u32 big-endian, k_b
Bytes serialize_bundle(const KeyBundle& kb);
KeyBundle parse_bundle(std::span<const std::uint8_t> raw);  // MalformedBundle

// Wire form: serialized bundle XORed with keystream(secret). Unwrapping
// with the wrong secret is detected by the parse-time validation with
// high probability; the envelope CRC downstream is authoritative.
Bytes wrap_bundle(const KeyBundle& kb, std::uint64_t secret);
KeyBundle unwrap_bundle(std::span<const std::uint8_t> wrapped, std::uint64_t secret);

}  // namespace bdea
