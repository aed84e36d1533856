#include "bdea/huffman.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "bdea/errors.hpp"

namespace bdea {

namespace {

constexpr char kSymbols[4] = {'A', 'C', 'G', 'T'};

int symbol_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
    }
}

struct Code {
    std::uint32_t bits = 0;
    unsigned len = 0;
};

// Canonical assignment: shorter codes first, then symbol order A<C<G<T.
std::array<Code, 4> canonical_codes(const std::array<unsigned, 4>& lens) {
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(lens[a], a) < std::tie(lens[b], b);
    });
    std::array<Code, 4> codes{};
    std::uint32_t code = 0;
    unsigned prev_len = 0;
    for (int s : order) {
        if (lens[s] == 0) continue;
        if (prev_len != 0) code = (code + 1) << (lens[s] - prev_len);
        codes[s] = Code{code, lens[s]};
        prev_len = lens[s];
    }
    return codes;
}

class BitWriter {
public:
    void put(std::uint32_t bits, unsigned len) {
        for (int shift = static_cast<int>(len) - 1; shift >= 0; --shift) {
            if (fill_ == 0) out_.push_back(0);
            out_.back() |= static_cast<std::uint8_t>(((bits >> shift) & 1) << (7 - fill_));
            fill_ = (fill_ + 1) % 8;
        }
    }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
    unsigned fill_ = 0;
};

class BitReader {
public:
    explicit BitReader(const Bytes& data) : data_(data) {}

    unsigned next() {
        if (pos_ >= data_.size() * 8) throw TruncatedBody("body ends before the last symbol");
        const unsigned bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
        ++pos_;
        return bit;
    }

    bool rest_is_zero() const {
        for (std::size_t i = pos_; i < data_.size() * 8; ++i) {
            if ((data_[i / 8] >> (7 - i % 8)) & 1) return false;
        }
        return true;
    }

private:
    const Bytes& data_;
    std::size_t pos_ = 0;
};

}  // namespace

std::array<unsigned, 4> huffman_code_lengths(const std::array<std::uint32_t, 4>& counts) {
    struct Node {
        std::uint64_t weight;
        int kind;  // 0 = leaf, 1 = merged
        int idx;   // symbol index for leaves, creation order for merges
        std::array<bool, 4> members;
    };

    std::vector<Node> nodes;
    for (int s = 0; s < 4; ++s) {
        if (counts[s] > 0) {
            std::array<bool, 4> m{};
            m[s] = true;
            nodes.push_back(Node{counts[s], 0, s, m});
        }
    }

    std::array<unsigned, 4> lens{};
    if (nodes.empty()) return lens;
    if (nodes.size() == 1) {
        lens[nodes[0].idx] = 1;  // lone symbol gets the 1-bit code 0
        return lens;
    }

    int creation = 0;
    while (nodes.size() > 1) {
        std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
            return std::tie(a.weight, a.kind, a.idx) < std::tie(b.weight, b.kind, b.idx);
        });
        Node merged{nodes[0].weight + nodes[1].weight, 1, creation++, {}};
        for (int s = 0; s < 4; ++s) {
            merged.members[s] = nodes[0].members[s] || nodes[1].members[s];
            if (merged.members[s]) ++lens[s];
        }
        nodes.erase(nodes.begin(), nodes.begin() + 2);
        nodes.push_back(merged);
    }
    return lens;
}

Bytes CompressedBlob::serialize() const {
    Bytes out;
    out.reserve(kBlobHeaderLen + body.size());
    out.push_back(kBlobMagic0);
    out.push_back(kBlobMagic1);
    for (std::uint32_t c : counts) put_u32_be(out, c);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

CompressedBlob CompressedBlob::parse(std::span<const std::uint8_t> raw) {
    if (raw.size() < kBlobHeaderLen) throw TruncatedBody("blob shorter than its header");
    if (raw[0] != kBlobMagic0 || raw[1] != kBlobMagic1) throw BlobBadMagic("blob magic mismatch");
    CompressedBlob blob;
    for (std::size_t s = 0; s < 4; ++s) {
        blob.counts[s] = get_u32_be(raw, 2 + 4 * s);
    }
    blob.body.assign(raw.begin() + kBlobHeaderLen, raw.end());
    return blob;
}

std::uint64_t CompressedBlob::base_count() const {
    std::uint64_t total = 0;
    for (std::uint32_t c : counts) total += c;
    return total;
}

CompressedBlob compress(const DnaSequence& dna) {
    std::array<std::uint64_t, 4> tally{};
    for (char c : dna) {
        const int s = symbol_index(c);
        if (s < 0) throw InvalidBase(std::string("not a base: '") + c + "'");
        ++tally[s];
    }

    CompressedBlob blob;
    for (int s = 0; s < 4; ++s) {
        if (tally[s] >= (1ULL << 32)) throw TooLarge("symbol count exceeds the u32 header field");
        blob.counts[s] = static_cast<std::uint32_t>(tally[s]);
    }

    const auto codes = canonical_codes(huffman_code_lengths(blob.counts));
    BitWriter writer;
    for (char c : dna) {
        const Code& code = codes[symbol_index(c)];
        writer.put(code.bits, code.len);
    }
    blob.body = writer.take();
    return blob;
}

DnaSequence decompress(const CompressedBlob& blob) {
    const auto lens = huffman_code_lengths(blob.counts);
    const auto codes = canonical_codes(lens);
    unsigned max_len = 0;
    for (unsigned l : lens) max_len = std::max(max_len, l);

    DnaSequence out;
    out.reserve(blob.base_count());
    BitReader reader(blob.body);
    for (std::uint64_t i = 0; i < blob.base_count(); ++i) {
        std::uint32_t acc = 0;
        unsigned acc_len = 0;
        int sym = -1;
        while (sym < 0) {
            if (acc_len >= max_len) {
                // Only reachable in the single-symbol code {0}: a stray 1 bit.
                throw MalformedPadding("body bit does not decode to a symbol");
            }
            acc = (acc << 1) | reader.next();
            ++acc_len;
            for (int s = 0; s < 4; ++s) {
                if (codes[s].len == acc_len && codes[s].bits == acc) {
                    sym = s;
                    break;
                }
            }
        }
        out.push_back(kSymbols[sym]);
    }
    if (!reader.rest_is_zero()) {
        throw MalformedPadding("trailing padding bits must be zero");
    }
    return out;
}

}  // namespace bdea
