#include "bdea/envelope.hpp"

#include "bdea/crc32.hpp"
#include "bdea/errors.hpp"

namespace bdea {

Bytes build_envelope(const Bytes& plain) {
    if (plain.size() >= (1ULL << 32)) throw TooLarge("plaintext must be under 2^32 bytes");
    Bytes out;
    out.reserve(kEnvelopeHeaderLen + plain.size() + 1);
    out.push_back(kEnvelopeMagic0);
    out.push_back(kEnvelopeMagic1);
    out.push_back(kEnvelopeVersion);
    put_u32_be(out, static_cast<std::uint32_t>(plain.size()));
    put_u32_be(out, crc32(plain));
    out.insert(out.end(), plain.begin(), plain.end());
    if (out.size() % 2 != 0) out.push_back(0x00);
    return out;
}

HalfPair split_halves(const Bytes& envelope) {
    if (envelope.size() % 2 != 0) throw OddLength("cannot split an odd-length sequence");
    const std::size_t half = envelope.size() / 2;
    return HalfPair{
        Bytes(envelope.begin(), envelope.begin() + half),
        Bytes(envelope.begin() + half, envelope.end()),
    };
}

Bytes xor_bytes(const Bytes& a, const Bytes& b) {
    if (a.size() != b.size()) throw LengthMismatch("xor operands differ in length");
    Bytes out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

Bytes combine_and_open(const Bytes& xored, const Bytes& k_b) {
    Bytes envelope = xor_bytes(xored, k_b);  // k_a
    envelope.insert(envelope.end(), k_b.begin(), k_b.end());

    if (envelope.size() < kEnvelopeHeaderLen) {
        throw BadMagic("envelope shorter than its header");
    }
    if (envelope[0] != kEnvelopeMagic0 || envelope[1] != kEnvelopeMagic1) {
        throw BadMagic("envelope magic mismatch");
    }
    if (envelope[2] != kEnvelopeVersion) {
        throw BadVersion("unsupported envelope version");
    }
    const std::uint32_t plain_len = get_u32_be(envelope, 3);
    const std::uint32_t stored_crc = get_u32_be(envelope, 7);
    if (plain_len > envelope.size() - kEnvelopeHeaderLen) {
        // Length field points past the envelope, so the stored CRC cannot
        // match any payload.
        throw CrcMismatch("length field exceeds envelope capacity");
    }
    Bytes plain(envelope.begin() + kEnvelopeHeaderLen,
                envelope.begin() + kEnvelopeHeaderLen + plain_len);
    if (crc32(plain) != stored_crc) {
        throw CrcMismatch("payload CRC does not match");
    }
    return plain;
}

}  // namespace bdea
