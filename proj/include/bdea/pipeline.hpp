#pragma once

#include "bdea/bytes.hpp"
#include "bdea/dna.hpp"
#include "bdea/huffman.hpp"
#include "bdea/keyex.hpp"
#include "bdea/pcr.hpp"

namespace bdea {

// Versioned ciphertext container:
//   magic  5 bytes  "BDEA1"
//   mode   1 byte   0x00 standard (envelope + XOR), 0x01 no-XOR
//   blob   CompressedBlob
inline constexpr std::uint8_t kModeStandard = 0x00;
inline constexpr std::uint8_t kModeNoXor = 0x01;

struct CipherContainer {
    std::uint8_t mode = kModeStandard;
    CompressedBlob blob;

    Bytes serialize() const;
    static CipherContainer parse(std::span<const std::uint8_t> raw);  // BadContainer

    bool operator==(const CipherContainer&) const = default;
};

struct KeyMaterial {
    PrimerPair pp;
    CodingPattern pattern;
};

struct EncryptResult {
    CipherContainer container;
    KeyBundle bundle;
};

// envelope -> split -> XOR -> bits -> DNA coding -> amplify -> compress.
// Deterministic: no nonce, same plaintext and keys give the same
// container (an ECB-like property; see the README security notes).
EncryptResult encrypt(const Bytes& plain, const KeyMaterial& km);

// Reduced mode: hex bits of the plaintext feed the DNA coding directly,
// no envelope, no split, no XOR. Matches the built-in known-answer
// vectors; provides no wrong-key detection.
CipherContainer encrypt_noxor(const Bytes& plain, const KeyMaterial& km);

// Inverts either mode based on the container's mode byte. Wrong primers
// throw BiologicalPollution; a wrong k_b throws CrcMismatch / BadMagic /
// BadVersion; malformed containers throw BadContainer.
Bytes decrypt(const CipherContainer& c, const KeyBundle& kb);

// decrypt minus the decompress stage. The attack bench inflates the blob
// once and runs this per candidate.
Bytes decrypt_amplified(const DnaSequence& amplified, std::uint8_t mode, const KeyBundle& kb);

}  // namespace bdea
