#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bdea/attack.hpp"
#include "bdea/crc32.hpp"
#include "bdea/errors.hpp"
#include "bdea/keyex.hpp"
#include "bdea/pipeline.hpp"
#include "bdea/radix.hpp"

namespace py = pybind11;
using namespace bdea;

namespace {

Bytes to_bytes(const py::bytes& b) {
    const std::string s = b;
    return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(const Bytes& b) {
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

CodingPattern pattern_of(const std::string& s) { return CodingPattern::from_string(s); }

KeyMaterial km_of(const std::string& p1, const std::string& p2, const std::string& pattern) {
    return KeyMaterial{{Primer(p1), Primer(p2)}, pattern_of(pattern)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "DNA-coding cipher pipeline (educational strength only)";

    // exception mapping, most-derived first
    static py::exception<BiologicalPollution> exc_pollution(m, "BiologicalPollution");
    static py::exception<WrongKey> exc_wrong_key(m, "WrongKeyError");
    static py::exception<Error> exc_error(m, "BdeaError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BiologicalPollution& e) {
            exc_pollution(e.what());
        } catch (const WrongKey& e) {
            exc_wrong_key(e.what());
        } catch (const Error& e) {
            exc_error(e.what());
        }
    });

    // ---- radix ----
    m.def("text_to_hex", [](const py::bytes& b) { return text_to_hex(to_bytes(b)); });
    m.def("hex_to_text", [](const std::string& h) { return from_bytes(hex_to_text(h)); });
    m.def("hex_to_bits", [](const std::string& h) { return bits_to_string(hex_to_bits(h)); });
    m.def("bits_to_hex", [](const std::string& b) { return bits_to_hex(bits_from_string(b)); });

    // ---- DNA coding ----
    m.def(
        "encode_dna",
        [](const std::string& bits, const std::string& pattern) {
            return encode_bits(bits_from_string(bits), pattern_of(pattern));
        },
        py::arg("bits"), py::arg("pattern") = "ATGC");
    m.def(
        "decode_dna",
        [](const std::string& dna, const std::string& pattern) {
            require_dna(dna);
            return bits_to_string(decode_dna(dna, pattern_of(pattern)));
        },
        py::arg("dna"), py::arg("pattern") = "ATGC");
    m.def("enumerate_patterns", [] {
        std::vector<std::string> out;
        for (const auto& p : enumerate_patterns()) out.push_back(p.str());
        return out;
    });

    // ---- amplification ----
    m.def("amplify", [](const std::string& msg, const std::string& p1, const std::string& p2) {
        require_dna(msg);
        return amplify(msg, {Primer(p1), Primer(p2)});
    });
    m.def("deamplify",
          [](const std::string& amp, const std::string& p1, const std::string& p2) {
              require_dna(amp);
              return deamplify(amp, {Primer(p1), Primer(p2)});
          });

    // ---- compression ----
    m.def("compress_dna", [](const std::string& dna) {
        return from_bytes(compress(dna).serialize());
    });
    m.def("decompress_dna", [](const py::bytes& blob) {
        return decompress(CompressedBlob::parse(to_bytes(blob)));
    });

    // ---- pipeline ----
    m.def(
        "encrypt",
        [](const py::bytes& plain, const std::string& p1, const std::string& p2,
           const std::string& pattern) {
            const EncryptResult r = encrypt(to_bytes(plain), km_of(p1, p2, pattern));
            return py::make_tuple(from_bytes(r.container.serialize()),
                                  from_bytes(serialize_bundle(r.bundle)));
        },
        py::arg("plaintext"), py::arg("primer1"), py::arg("primer2"),
        py::arg("pattern") = "ATGC");
    m.def(
        "encrypt_noxor",
        [](const py::bytes& plain, const std::string& p1, const std::string& p2,
           const std::string& pattern) {
            return from_bytes(
                encrypt_noxor(to_bytes(plain), km_of(p1, p2, pattern)).serialize());
        },
        py::arg("plaintext"), py::arg("primer1"), py::arg("primer2"),
        py::arg("pattern") = "ATGC");
    m.def("decrypt", [](const py::bytes& container, const py::bytes& bundle) {
        return from_bytes(
            decrypt(CipherContainer::parse(to_bytes(container)), parse_bundle(to_bytes(bundle))));
    });
    m.def(
        "make_bundle",
        [](const std::string& p1, const std::string& p2, const std::string& pattern,
           const py::bytes& k_b) {
            return from_bytes(serialize_bundle(
                KeyBundle{Primer(p1), Primer(p2), pattern_of(pattern), to_bytes(k_b)}));
        },
        py::arg("primer1"), py::arg("primer2"), py::arg("pattern") = "ATGC",
        py::arg("k_b") = py::bytes());

    // ---- key agreement ----
    m.def("modpow", &modpow);
    m.def("dh_public", [](std::uint64_t p, std::uint64_t g, std::uint64_t x) {
        return make_keypair(DhParams::create(p, g), x).X;
    });
    m.def("dh_shared",
          [](std::uint64_t p, std::uint64_t g, std::uint64_t x, std::uint64_t peer) {
              return dh_shared(DhParams::create(p, g), x, peer);
          });
    m.def("keystream", [](std::uint64_t secret, std::size_t n) {
        return from_bytes(keystream(secret, n));
    });
    m.def("wrap_bundle", [](const py::bytes& bundle, std::uint64_t secret) {
        return from_bytes(wrap_bundle(parse_bundle(to_bytes(bundle)), secret));
    });
    m.def("unwrap_bundle", [](const py::bytes& wrapped, std::uint64_t secret) {
        return from_bytes(serialize_bundle(unwrap_bundle(to_bytes(wrapped), secret)));
    });
    m.def("crc32", [](const py::bytes& data) { return crc32(to_bytes(data)); });

    // ---- attack bench ----
    m.def("search_space", [](unsigned l1, unsigned l2) {
        return py::int_(py::str(search_space(l1, l2)));  // exact big integer
    });
    m.def(
        "brute_force",
        [](const py::bytes& container, const py::bytes& k_b, const std::string& pattern,
           unsigned max_len) {
            const SearchReport r = brute_force(CipherContainer::parse(to_bytes(container)),
                                               to_bytes(k_b), pattern_of(pattern), max_len);
            py::dict out;
            out["trials"] = r.trials;
            out["matches"] = r.matches;
            out["elapsed_seconds"] = r.elapsed_seconds;
            return out;
        },
        py::arg("container"), py::arg("k_b"), py::arg("pattern"), py::arg("max_len"));
    m.def(
        "corruption_probe",
        [](const py::bytes& container, const py::bytes& bundle, unsigned mutations,
           std::uint64_t seed, const std::string& only) {
            std::optional<MutationKind> kind;
            if (only == "primer") kind = MutationKind::PrimerBase;
            else if (only == "pattern") kind = MutationKind::PatternSwap;
            else if (only == "k_b") kind = MutationKind::KbByte;
            else if (only != "all") throw Error("only must be primer|pattern|k_b|all");
            return corruption_probe(CipherContainer::parse(to_bytes(container)),
                                    parse_bundle(to_bytes(bundle)), mutations, seed, kind);
        },
        py::arg("container"), py::arg("bundle"), py::arg("mutations"), py::arg("seed") = 1,
        py::arg("only") = "all");
}
