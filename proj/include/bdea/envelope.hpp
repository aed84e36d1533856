#pragma once

#include "bdea/bytes.hpp"

namespace bdea {

// Self-validating plaintext container, frozen layout (version byte governs
// evolution):
//
//   magic      2 bytes   0xBD 0xEA
//   version    1 byte    0x01
//   plain_len  4 bytes   u32 big-endian, bytes of original plaintext
//   crc32      4 bytes   u32 big-endian, CRC-32 of original plaintext
//   payload    plain_len bytes
//   padding    zero bytes so the total length is even
//
// The CRC is an integrity hint for wrong-key detection, not a security
// mechanism (no MAC).
inline constexpr std::uint8_t kEnvelopeMagic0 = 0xBD;
inline constexpr std::uint8_t kEnvelopeMagic1 = 0xEA;
inline constexpr std::uint8_t kEnvelopeVersion = 0x01;
inline constexpr std::size_t kEnvelopeHeaderLen = 11;

struct HalfPair {
    Bytes k_a;
    Bytes k_b;
};

Bytes build_envelope(const Bytes& plain);  // TooLarge if |plain| >= 2^32

// First half is the message k_a, second half the key k_b.
HalfPair split_halves(const Bytes& envelope);  // OddLength

Bytes xor_bytes(const Bytes& a, const Bytes& b);  // LengthMismatch

// Rebuilds k_a = xored ^ k_b, validates the envelope and returns the
// payload. Throws LengthMismatch, BadMagic, BadVersion or CrcMismatch;
// each signals a wrong or corrupted key.
Bytes combine_and_open(const Bytes& xored, const Bytes& k_b);

}  // namespace bdea
