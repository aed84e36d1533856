#pragma once

#include <stdexcept>
#include <string>

namespace bdea {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input shape violations ----
struct OddLength : Error { using Error::Error; };
struct InvalidDigit : Error { using Error::Error; };
struct LengthNotMultipleOf4 : Error { using Error::Error; };
struct LengthNotMultipleOf8 : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct OddBitLength : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct InvalidBase : Error { using Error::Error; };
struct InvalidPrimer : Error { using Error::Error; };

// ---- wrong-key signals raised when opening an envelope ----
// Grouped under WrongKey so callers can treat "the supplied key half is
// wrong or the transmitted stream was corrupted" uniformly.
struct WrongKey : Error { using Error::Error; };
struct BadMagic : WrongKey { using WrongKey::WrongKey; };
struct BadVersion : WrongKey { using WrongKey::WrongKey; };
struct CrcMismatch : WrongKey { using WrongKey::WrongKey; };

// Wrong primer pair during de-amplification.
struct BiologicalPollution : Error { using Error::Error; };

// ---- malformed serialized artifacts ----
struct BlobBadMagic : Error { using Error::Error; };
struct TruncatedBody : Error { using Error::Error; };
struct MalformedPadding : Error { using Error::Error; };
struct BadContainer : Error { using Error::Error; };
struct MalformedBundle : Error { using Error::Error; };

// ---- key agreement ----
struct ModulusOutOfRange : Error { using Error::Error; };
struct PublicValueOutOfRange : Error { using Error::Error; };
struct BadDhParams : Error { using Error::Error; };

// ---- wire protocol ----
struct FrameTooLarge : Error { using Error::Error; };
struct UnexpectedFrameType : Error { using Error::Error; };
struct TransportClosed : Error { using Error::Error; };
struct RemoteError : Error {
    RemoteError(std::uint8_t reason_code, const std::string& what)
        : Error(what), reason(reason_code) {}
    std::uint8_t reason;
};

// ---- attack bench ----
struct MaxLenExceeded : Error { using Error::Error; };

}  // namespace bdea
