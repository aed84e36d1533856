#include "bdea/keyex.hpp"

#include <initializer_list>

#include "bdea/errors.hpp"
#include "bdea/rng.hpp"

namespace bdea {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// No range cap; Miller-Rabin needs the full u64 domain.
std::uint64_t powmod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m < 2 || m >= kMaxModulus) throw ModulusOutOfRange("modulus must be in [2, 2^62)");
    return powmod_raw(base, exp, m);
}

DhParams DhParams::create(std::uint64_t p, std::uint64_t g) {
    if (p < 3 || p >= kMaxModulus || (p & 1) == 0 || !is_probable_prime(p)) {
        throw BadDhParams("p must be an odd prime in [3, 2^62)");
    }
    if (g < 2 || g >= p) {
        throw BadDhParams("g must be in [2, p)");
    }
    return DhParams{p, g};
}

std::uint64_t derive_private(const DhParams& params, std::uint64_t seed) {
    XorShift64Star rng(seed);
    return 1 + rng.next() % (params.p - 2);  // in [1, p-2]
}

DhKeyPair make_keypair(const DhParams& params, std::uint64_t private_exponent) {
    if (private_exponent < 1 || private_exponent > params.p - 2) {
        throw BadDhParams("private exponent must be in [1, p-2]");
    }
    return DhKeyPair{private_exponent, modpow(params.g, private_exponent, params.p)};
}

std::uint64_t dh_shared(const DhParams& params, std::uint64_t my_private,
                        std::uint64_t peer_public) {
    if (peer_public == 0 || peer_public >= params.p) {
        throw PublicValueOutOfRange("peer public value must be in (0, p)");
    }
    return modpow(peer_public, my_private, params.p);
}

Bytes keystream(std::uint64_t secret, std::size_t n) {
    XorShift64Star rng(secret);
    Bytes out;
    out.reserve(n + 8);
    while (out.size() < n) {
        put_u64_be(out, rng.next());
    }
    out.resize(n);
    return out;
}

Bytes serialize_bundle(const KeyBundle& kb) {
    if (kb.k_b.size() >= (1ULL << 32)) throw TooLarge("k_b exceeds the u32 length field");
    Bytes out;
    out.reserve(2 + kb.primer1.size() + kb.primer2.size() + 4 + 4 + kb.k_b.size());
    out.push_back(static_cast<std::uint8_t>(kb.primer1.size()));
    for (char c : kb.primer1.seq()) out.push_back(static_cast<std::uint8_t>(c));
    out.push_back(static_cast<std::uint8_t>(kb.primer2.size()));
    for (char c : kb.primer2.seq()) out.push_back(static_cast<std::uint8_t>(c));
    for (char c : kb.pattern.str()) out.push_back(static_cast<std::uint8_t>(c));
    put_u32_be(out, static_cast<std::uint32_t>(kb.k_b.size()));
    out.insert(out.end(), kb.k_b.begin(), kb.k_b.end());
    return out;
}

namespace {

std::string take_dna(std::span<const std::uint8_t> raw, std::size_t& pos, std::size_t n) {
    if (raw.size() - pos < n) throw MalformedBundle("bundle truncated");
    std::string s(raw.begin() + pos, raw.begin() + pos + n);
    pos += n;
    if (!is_dna(s)) throw MalformedBundle("bundle field is not a DNA sequence");
    return s;
}

}  // namespace

KeyBundle parse_bundle(std::span<const std::uint8_t> raw) {
    std::size_t pos = 0;
    auto take_u8 = [&]() -> std::uint8_t {
        if (pos >= raw.size()) throw MalformedBundle("bundle truncated");
        return raw[pos++];
    };

    const std::uint8_t len1 = take_u8();
    if (len1 < 1 || len1 > kMaxPrimerLen) throw MalformedBundle("primer1 length out of range");
    const std::string p1 = take_dna(raw, pos, len1);
    const std::uint8_t len2 = take_u8();
    if (len2 < 1 || len2 > kMaxPrimerLen) throw MalformedBundle("primer2 length out of range");
    const std::string p2 = take_dna(raw, pos, len2);

    const std::string pattern_str = take_dna(raw, pos, 4);
    if (raw.size() - pos < 4) throw MalformedBundle("bundle truncated");
    const std::uint32_t kb_len = get_u32_be(raw, pos);
    pos += 4;
    if (raw.size() - pos != kb_len) throw MalformedBundle("k_b length field does not match");

    CodingPattern pattern = default_pattern();
    try {
        pattern = CodingPattern::from_string(pattern_str);
    } catch (const NotAPermutation&) {
        throw MalformedBundle("pattern is not a permutation of ACGT");
    }

    return KeyBundle{Primer(p1), Primer(p2), pattern,
                     Bytes(raw.begin() + pos, raw.end())};
}

Bytes wrap_bundle(const KeyBundle& kb, std::uint64_t secret) {
    Bytes plain = serialize_bundle(kb);
    const Bytes ks = keystream(secret, plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) plain[i] ^= ks[i];
    return plain;
}

KeyBundle unwrap_bundle(std::span<const std::uint8_t> wrapped, std::uint64_t secret) {
    Bytes plain(wrapped.begin(), wrapped.end());
    const Bytes ks = keystream(secret, plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) plain[i] ^= ks[i];
    return parse_bundle(plain);
}

}  // namespace bdea
