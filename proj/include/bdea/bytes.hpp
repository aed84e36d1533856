#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bdea {

using Bytes = std::vector<std::uint8_t>;

// One element per bit, each 0 or 1. Kept flat for simple slicing and
// deterministic bit order (most significant bit first everywhere).
using BitString = std::vector<std::uint8_t>;

// Characters restricted to {A,C,G,T}; validated at the boundaries.
using DnaSequence = std::string;

Bytes bytes_of(std::string_view s);
std::string string_of(const Bytes& b);

std::string bits_to_string(const BitString& b);
BitString bits_from_string(std::string_view s);  // accepts only '0'/'1'

bool is_dna(std::string_view s);
void require_dna(std::string_view s);  // throws InvalidBase

void put_u32_be(Bytes& out, std::uint32_t v);
std::uint32_t get_u32_be(std::span<const std::uint8_t> in, std::size_t offset);
void put_u64_be(Bytes& out, std::uint64_t v);
std::uint64_t get_u64_be(std::span<const std::uint8_t> in, std::size_t offset);

}  // namespace bdea
