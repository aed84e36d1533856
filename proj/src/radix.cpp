#include "bdea/radix.hpp"

#include "bdea/errors.hpp"

namespace bdea {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

unsigned nibble_of(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw InvalidDigit(std::string("not a hex digit: '") + c + "'");
}

}  // namespace

std::string text_to_hex(const Bytes& input) {
    std::string out;
    out.reserve(input.size() * 2);
    for (std::uint8_t b : input) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xF]);
    }
    return out;
}

Bytes hex_to_text(std::string_view hex) {
    if (hex.size() % 2 != 0) throw OddLength("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>((nibble_of(hex[i]) << 4) | nibble_of(hex[i + 1])));
    }
    return out;
}

BitString hex_to_bits(std::string_view hex) {
    BitString out;
    out.reserve(hex.size() * 4);
    for (char c : hex) {
        unsigned v = nibble_of(c);
        for (int shift = 3; shift >= 0; --shift) {
            out.push_back(static_cast<std::uint8_t>((v >> shift) & 1));
        }
    }
    return out;
}

std::string bits_to_hex(const BitString& bits) {
    if (bits.size() % 4 != 0) throw LengthNotMultipleOf4("bit count not a multiple of 4");
    std::string out;
    out.reserve(bits.size() / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned v = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3];
        out.push_back(kHexDigits[v]);
    }
    return out;
}

BitString bytes_to_bits(const Bytes& input) {
    BitString out;
    out.reserve(input.size() * 8);
    for (std::uint8_t b : input) {
        for (int shift = 7; shift >= 0; --shift) {
            out.push_back(static_cast<std::uint8_t>((b >> shift) & 1));
        }
    }
    return out;
}

Bytes bits_to_bytes(const BitString& bits) {
    if (bits.size() % 8 != 0) throw LengthNotMultipleOf8("bit count not a multiple of 8");
    Bytes out;
    out.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned b = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            b = (b << 1) | bits[i + j];
        }
        out.push_back(static_cast<std::uint8_t>(b));
    }
    return out;
}

}  // namespace bdea
