#pragma once

#include "bdea/errors.hpp"
#include "bdea/keyex.hpp"
#include "bdea/pipeline.hpp"

namespace bdea {

// Frozen wire format:
//   magic    4 bytes  "BDEA"
//   version  1 byte   0x01
//   ftype    1 byte
//   len      u32 big-endian, payload length, capped at 64 MiB
//   payload  len bytes
//
// One session per connection, strict ordering:
//   ClientHello -> ServerHello -> WrappedKeyBundle -> Ciphertext -> Ack
// ClientHello carries p, g, A as 8-byte big-endian; ServerHello carries B.
// Ack carries the CRC-32 of the original plaintext. Error carries a one
// byte reason code.
inline constexpr std::size_t kMaxFramePayload = 1ULL << 26;
inline constexpr std::uint8_t kFrameVersion = 0x01;

enum class FrameType : std::uint8_t {
    ClientHello = 1,
    ServerHello = 2,
    WrappedKeyBundle = 3,
    Ciphertext = 4,
    Ack = 5,
    Error = 6,
};

inline constexpr std::uint8_t kReasonPollution = 1;
inline constexpr std::uint8_t kReasonCrc = 2;
inline constexpr std::uint8_t kReasonMalformed = 3;

struct Frame {
    FrameType type;
    Bytes payload;

    bool operator==(const Frame&) const = default;
};

// Blocking reliable byte stream. read_some blocks until at least one
// byte is available and returns 0 only on orderly close.
class ByteStream {
public:
    virtual ~ByteStream() = default;
    virtual std::size_t read_some(std::span<std::uint8_t> out) = 0;
    virtual void write_all(std::span<const std::uint8_t> data) = 0;  // TransportClosed
};

Bytes encode_frame(const Frame& f);  // FrameTooLarge
Frame decode_frame(std::span<const std::uint8_t> raw);  // for tests; same checks as read_frame
Frame read_frame(ByteStream& s);  // FrameTooLarge, UnexpectedFrameType, TransportClosed
void write_frame(ByteStream& s, const Frame& f);

// Sender half: hello exchange, derive the shared secret, ship the
// wrapped bundle and the ciphertext, then verify the Ack CRC.
void send_session(ByteStream& s, const Bytes& plaintext, const KeyMaterial& km,
                  const DhParams& dh, std::uint64_t seed);

// Receiver half: mirrors send_session; returns the recovered plaintext
// and emits the Ack. Decrypt failures are reported to the peer as an
// Error frame (reason 1 pollution, 2 crc, 3 malformed), then rethrown.
Bytes recv_session(ByteStream& s, std::uint64_t dh_seed);

std::uint8_t reason_for_error(const Error& e);

// ---- TCP transport (thread-per-session servers are built on these) ----
class TcpStream final : public ByteStream {
public:
    static TcpStream connect(const std::string& host, std::uint16_t port);
    ~TcpStream() override;
    TcpStream(TcpStream&& other) noexcept;
    TcpStream& operator=(TcpStream&& other) noexcept;
    TcpStream(const TcpStream&) = delete;

    std::size_t read_some(std::span<std::uint8_t> out) override;
    void write_all(std::span<const std::uint8_t> data) override;

    explicit TcpStream(int fd) : fd_(fd) {}

private:
    int fd_ = -1;
};

class TcpListener {
public:
    static TcpListener bind(const std::string& host, std::uint16_t port);
    ~TcpListener();
    TcpListener(TcpListener&& other) noexcept;
    TcpListener(const TcpListener&) = delete;

    TcpStream accept();
    std::uint16_t port() const { return port_; }

private:
    TcpListener(int fd, std::uint16_t port) : fd_(fd), port_(port) {}
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

}  // namespace bdea
