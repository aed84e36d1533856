"""DNA-coding cipher pipeline (educational strength only).

Thin wrapper over the C++ core. The main operations:

- staged codecs: text_to_hex / hex_to_bits / encode_dna / amplify / compress_dna
  and their inverses
- pipeline: encrypt / decrypt / encrypt_noxor / make_bundle
- key agreement: dh_public / dh_shared / keystream / wrap_bundle / unwrap_bundle
- attack bench: search_space / brute_force / corruption_probe
"""

from ._core import (  # noqa: F401
    BdeaError,
    BiologicalPollution,
    WrongKeyError,
    amplify,
    bits_to_hex,
    brute_force,
    compress_dna,
    corruption_probe,
    crc32,
    deamplify,
    decode_dna,
    decompress_dna,
    decrypt,
    dh_public,
    dh_shared,
    encode_dna,
    encrypt,
    encrypt_noxor,
    enumerate_patterns,
    hex_to_bits,
    hex_to_text,
    keystream,
    make_bundle,
    modpow,
    search_space,
    text_to_hex,
    unwrap_bundle,
    wrap_bundle,
)

__all__ = [
    "BdeaError",
    "BiologicalPollution",
    "WrongKeyError",
    "amplify",
    "bits_to_hex",
    "brute_force",
    "compress_dna",
    "corruption_probe",
    "crc32",
    "deamplify",
    "decode_dna",
    "decompress_dna",
    "decrypt",
    "dh_public",
    "dh_shared",
    "encode_dna",
    "encrypt",
    "encrypt_noxor",
    "enumerate_patterns",
    "hex_to_bits",
    "hex_to_text",
    "keystream",
    "make_bundle",
    "modpow",
    "search_space",
    "text_to_hex",
    "unwrap_bundle",
    "wrap_bundle",
]

__version__ = "0.1.0"
