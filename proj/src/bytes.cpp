#include "bdea/bytes.hpp"

#include "bdea/errors.hpp"

namespace bdea {

Bytes bytes_of(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string string_of(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

std::string bits_to_string(const BitString& b) {
    std::string out;
    out.reserve(b.size());
    for (auto bit : b) out.push_back(bit ? '1' : '0');
    return out;
}

BitString bits_from_string(std::string_view s) {
    BitString out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw InvalidDigit("bit string may contain only 0 and 1");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

bool is_dna(std::string_view s) {
    for (char c : s) {
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return false;
    }
    return true;
}

void require_dna(std::string_view s) {
    if (!is_dna(s)) throw InvalidBase("sequence contains a base outside {A,C,G,T}");
}

void put_u32_be(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32_be(std::span<const std::uint8_t> in, std::size_t offset) {
    return (static_cast<std::uint32_t>(in[offset]) << 24) |
           (static_cast<std::uint32_t>(in[offset + 1]) << 16) |
           (static_cast<std::uint32_t>(in[offset + 2]) << 8) |
           static_cast<std::uint32_t>(in[offset + 3]);
}

void put_u64_be(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(v >> shift));
    }
}

std::uint64_t get_u64_be(std::span<const std::uint8_t> in, std::size_t offset) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        v = (v << 8) | in[offset + i];
    }
    return v;
}

}  // namespace bdea
