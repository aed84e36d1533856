#include "bdea/pipeline.hpp"

#include <cstring>

#include "bdea/envelope.hpp"
#include "bdea/errors.hpp"
#include "bdea/radix.hpp"

namespace bdea {

namespace {

constexpr char kContainerMagic[5] = {'B', 'D', 'E', 'A', '1'};
constexpr std::size_t kContainerHeaderLen = 6;

}  // namespace

Bytes CipherContainer::serialize() const {
    Bytes out;
    const Bytes raw_blob = blob.serialize();
    out.reserve(kContainerHeaderLen + raw_blob.size());
    out.insert(out.end(), std::begin(kContainerMagic), std::end(kContainerMagic));
    out.push_back(mode);
    out.insert(out.end(), raw_blob.begin(), raw_blob.end());
    return out;
}

CipherContainer CipherContainer::parse(std::span<const std::uint8_t> raw) {
    if (raw.size() < kContainerHeaderLen) throw BadContainer("container shorter than its header");
    if (std::memcmp(raw.data(), kContainerMagic, sizeof(kContainerMagic)) != 0) {
        throw BadContainer("container magic mismatch");
    }
    const std::uint8_t mode = raw[5];
    if (mode != kModeStandard && mode != kModeNoXor) {
        throw BadContainer("unknown container mode");
    }
    CipherContainer c;
    c.mode = mode;
    try {
        c.blob = CompressedBlob::parse(raw.subspan(kContainerHeaderLen));
    } catch (const BlobBadMagic& e) {
        throw BadContainer(e.what());
    } catch (const TruncatedBody& e) {
        throw BadContainer(e.what());
    }
    return c;
}

EncryptResult encrypt(const Bytes& plain, const KeyMaterial& km) {
    const Bytes env = build_envelope(plain);
    HalfPair halves = split_halves(env);
    const Bytes xored = xor_bytes(halves.k_a, halves.k_b);
    const DnaSequence dna = encode_bits(bytes_to_bits(xored), km.pattern);
    CipherContainer c;
    c.mode = kModeStandard;
    c.blob = compress(amplify(dna, km.pp));
    KeyBundle kb{km.pp.p1, km.pp.p2, km.pattern, std::move(halves.k_b)};
    return EncryptResult{std::move(c), std::move(kb)};
}

CipherContainer encrypt_noxor(const Bytes& plain, const KeyMaterial& km) {
    const DnaSequence dna = encode_bits(bytes_to_bits(plain), km.pattern);
    CipherContainer c;
    c.mode = kModeNoXor;
    c.blob = compress(amplify(dna, km.pp));
    return c;
}

Bytes decrypt_amplified(const DnaSequence& amplified, std::uint8_t mode, const KeyBundle& kb) {
    const PrimerPair pp{kb.primer1, kb.primer2};
    const DnaSequence dna = deamplify(amplified, pp);
    const BitString bits = decode_dna(dna, kb.pattern);
    if (bits.size() % 8 != 0) throw BadContainer("recovered bit count is not byte-aligned");
    const Bytes bytes = bits_to_bytes(bits);
    if (mode == kModeNoXor) return bytes;
    return combine_and_open(bytes, kb.k_b);
}

Bytes decrypt(const CipherContainer& c, const KeyBundle& kb) {
    if (c.mode != kModeStandard && c.mode != kModeNoXor) {
        throw BadContainer("unknown container mode");
    }
    return decrypt_amplified(decompress(c.blob), c.mode, kb);
}

}  // namespace bdea
