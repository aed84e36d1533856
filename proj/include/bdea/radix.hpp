#pragma once

#include "bdea/bytes.hpp"

namespace bdea {

// Canonical hex is uppercase; parsing accepts either case.
std::string text_to_hex(const Bytes& input);
Bytes hex_to_text(std::string_view hex);  // OddLength, InvalidDigit

// 4 bits per digit / 8 bits per byte, most significant bit first.
BitString hex_to_bits(std::string_view hex);  // InvalidDigit
std::string bits_to_hex(const BitString& bits);  // LengthNotMultipleOf4

BitString bytes_to_bits(const Bytes& input);
Bytes bits_to_bytes(const BitString& bits);  // LengthNotMultipleOf8

}  // namespace bdea
