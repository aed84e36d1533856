#include "bdea/pcr.hpp"

#include <cctype>

#include "bdea/errors.hpp"

namespace bdea {

Primer::Primer(std::string_view seq) {
    if (seq.empty() || seq.size() > kMaxPrimerLen) {
        throw InvalidPrimer("primer length must be 1..64 bases");
    }
    seq_.reserve(seq.size());
    for (char c : seq) {
        seq_.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    require_dna(seq_);
}

std::size_t block_len(const PrimerPair& pp) {
    return 1 + pp.p1.size() + 2 * pp.p2.size();
}

DnaSequence amplify(const DnaSequence& msg, const PrimerPair& pp) {
    const DnaSequence& p1 = pp.p1.seq();
    const DnaSequence& p2 = pp.p2.seq();
    DnaSequence out;
    out.reserve(msg.size() * block_len(pp));
    for (char base : msg) {
        out.push_back(base);
        out.append(p2);
        out.append(p1);
        out.append(p2);
    }
    return out;
}

DnaSequence deamplify(const DnaSequence& amplified, const PrimerPair& pp) {
    const std::size_t bl = block_len(pp);
    if (amplified.size() % bl != 0) {
        throw BiologicalPollution("amplified length is not a whole number of blocks");
    }
    const DnaSequence& p1 = pp.p1.seq();
    const DnaSequence& p2 = pp.p2.seq();
    DnaSequence msg;
    msg.reserve(amplified.size() / bl);
    for (std::size_t off = 0; off < amplified.size(); off += bl) {
        std::string_view block(amplified.data() + off, bl);
        if (block.substr(1, p2.size()) != p2 ||
            block.substr(1 + p2.size(), p1.size()) != p1 ||
            block.substr(1 + p2.size() + p1.size(), p2.size()) != p2) {
            throw BiologicalPollution("primer slots do not match");
        }
        msg.push_back(block[0]);
    }
    return msg;
}

}  // namespace bdea
