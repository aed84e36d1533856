#pragma once

#include <array>

#include "bdea/bytes.hpp"

namespace bdea {

// Order-0 canonical Huffman over {A,C,G,T}. Frozen blob layout:
//
//   magic   2 bytes   0xDC 0x01
//   counts  4 x u32 big-endian, occurrences of A, C, G, T in that order
//   body    Huffman codewords, MSB first, zero-padded to a byte boundary
//
// The decoder rebuilds the identical tree from the counts; tie-breaking
// in the tree build is fully deterministic.
inline constexpr std::uint8_t kBlobMagic0 = 0xDC;
inline constexpr std::uint8_t kBlobMagic1 = 0x01;
inline constexpr std::size_t kBlobHeaderLen = 18;

struct CompressedBlob {
    std::array<std::uint32_t, 4> counts{};  // A, C, G, T
    Bytes body;

    Bytes serialize() const;
    static CompressedBlob parse(std::span<const std::uint8_t> raw);  // BlobBadMagic, TruncatedBody

    std::uint64_t base_count() const;
    bool operator==(const CompressedBlob&) const = default;
};

// Code lengths per symbol (0 for absent symbols). Tree built by repeated
// lowest-weight merge; ties resolved by weight, then leaves in symbol
// order A<C<G<T, then merged nodes in creation order. A lone distinct
// symbol gets the 1-bit code 0. Exposed for tests.
std::array<unsigned, 4> huffman_code_lengths(const std::array<std::uint32_t, 4>& counts);

CompressedBlob compress(const DnaSequence& dna);  // TooLarge past u32 counts
DnaSequence decompress(const CompressedBlob& blob);  // TruncatedBody, MalformedPadding

}  // namespace bdea
