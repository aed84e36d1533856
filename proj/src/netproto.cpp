#include "bdea/netproto.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>

#include "bdea/crc32.hpp"
#include "bdea/errors.hpp"

namespace bdea {

namespace {

constexpr std::uint8_t kFrameMagic[4] = {'B', 'D', 'E', 'A'};
constexpr std::size_t kFrameHeaderLen = 10;

void read_exact(ByteStream& s, std::span<std::uint8_t> out) {
    std::size_t got = 0;
    while (got < out.size()) {
        const std::size_t n = s.read_some(out.subspan(got));
        if (n == 0) throw TransportClosed("peer closed the stream mid-frame");
        got += n;
    }
}

FrameType checked_type(std::uint8_t t) {
    if (t < 1 || t > 6) throw UnexpectedFrameType("unknown frame type " + std::to_string(t));
    return static_cast<FrameType>(t);
}

void check_header(std::span<const std::uint8_t> header) {
    if (std::memcmp(header.data(), kFrameMagic, sizeof(kFrameMagic)) != 0) {
        throw UnexpectedFrameType("bad frame magic");
    }
    if (header[4] != kFrameVersion) {
        throw UnexpectedFrameType("unsupported frame version");
    }
}

// Best effort: the peer may already be gone.
void send_error_frame(ByteStream& s, std::uint8_t reason) {
    try {
        write_frame(s, Frame{FrameType::Error, Bytes{reason}});
    } catch (const Error&) {
    }
}

Frame expect_frame(ByteStream& s, FrameType want) {
    Frame f = read_frame(s);
    if (f.type == FrameType::Error) {
        const std::uint8_t reason = f.payload.empty() ? 0 : f.payload[0];
        throw RemoteError(reason, "peer reported error, reason " + std::to_string(reason));
    }
    if (f.type != want) throw UnexpectedFrameType("frame out of order");
    return f;
}

}  // namespace

std::uint8_t reason_for_error(const Error& e) {
    if (dynamic_cast<const BiologicalPollution*>(&e) != nullptr) return kReasonPollution;
    if (dynamic_cast<const WrongKey*>(&e) != nullptr) return kReasonCrc;
    return kReasonMalformed;
}

Bytes encode_frame(const Frame& f) {
    if (f.payload.size() > kMaxFramePayload) throw FrameTooLarge("frame payload exceeds 64 MiB");
    Bytes out;
    out.reserve(kFrameHeaderLen + f.payload.size());
    out.insert(out.end(), std::begin(kFrameMagic), std::end(kFrameMagic));
    out.push_back(kFrameVersion);
    out.push_back(static_cast<std::uint8_t>(f.type));
    put_u32_be(out, static_cast<std::uint32_t>(f.payload.size()));
    out.insert(out.end(), f.payload.begin(), f.payload.end());
    return out;
}

Frame decode_frame(std::span<const std::uint8_t> raw) {
    if (raw.size() < kFrameHeaderLen) throw UnexpectedFrameType("frame shorter than its header");
    check_header(raw.first(kFrameHeaderLen));
    const std::uint32_t len = get_u32_be(raw, 6);
    if (len > kMaxFramePayload) throw FrameTooLarge("frame payload exceeds 64 MiB");
    if (raw.size() != kFrameHeaderLen + len) throw UnexpectedFrameType("frame length mismatch");
    return Frame{checked_type(raw[5]), Bytes(raw.begin() + kFrameHeaderLen, raw.end())};
}

Frame read_frame(ByteStream& s) {
    std::array<std::uint8_t, kFrameHeaderLen> header{};
    read_exact(s, header);
    check_header(header);
    const std::uint32_t len = get_u32_be(header, 6);
    if (len > kMaxFramePayload) throw FrameTooLarge("frame payload exceeds 64 MiB");
    Frame f{checked_type(header[5]), Bytes(len)};
    read_exact(s, f.payload);
    return f;
}

void write_frame(ByteStream& s, const Frame& f) {
    const Bytes raw = encode_frame(f);
    s.write_all(raw);
}

void send_session(ByteStream& s, const Bytes& plaintext, const KeyMaterial& km,
                  const DhParams& dh, std::uint64_t seed) {
    try {
        const std::uint64_t x = derive_private(dh, seed);
        const DhKeyPair kp = make_keypair(dh, x);

        Bytes hello;
        put_u64_be(hello, dh.p);
        put_u64_be(hello, dh.g);
        put_u64_be(hello, kp.X);
        write_frame(s, Frame{FrameType::ClientHello, std::move(hello)});

        const Frame server = expect_frame(s, FrameType::ServerHello);
        if (server.payload.size() != 8) {
            throw UnexpectedFrameType("ServerHello payload must be 8 bytes");
        }
        const std::uint64_t secret = dh_shared(dh, x, get_u64_be(server.payload, 0));

        EncryptResult enc = encrypt(plaintext, km);
        write_frame(s, Frame{FrameType::WrappedKeyBundle, wrap_bundle(enc.bundle, secret)});
        write_frame(s, Frame{FrameType::Ciphertext, enc.container.serialize()});

        const Frame ack = expect_frame(s, FrameType::Ack);
        if (ack.payload.size() != 4 || get_u32_be(ack.payload, 0) != crc32(plaintext)) {
            throw UnexpectedFrameType("Ack CRC does not match the sent plaintext");
        }
    } catch (const RemoteError&) {
        throw;  // the peer already knows
    } catch (const TransportClosed&) {
        throw;  // nobody left to notify
    } catch (const Error& e) {
        send_error_frame(s, reason_for_error(e));
        throw;
    }
}

Bytes recv_session(ByteStream& s, std::uint64_t dh_seed) {
    try {
        const Frame hello = expect_frame(s, FrameType::ClientHello);
        if (hello.payload.size() != 24) throw UnexpectedFrameType("ClientHello payload must be 24 bytes");
        const std::uint64_t p = get_u64_be(hello.payload, 0);
        const std::uint64_t g = get_u64_be(hello.payload, 8);
        const std::uint64_t client_public = get_u64_be(hello.payload, 16);

        const DhParams dh = DhParams::create(p, g);
        if (client_public == 0 || client_public >= dh.p) {
            throw PublicValueOutOfRange("client public value must be in (0, p)");
        }

        const std::uint64_t x = derive_private(dh, dh_seed);
        const DhKeyPair kp = make_keypair(dh, x);
        Bytes server_hello;
        put_u64_be(server_hello, kp.X);
        write_frame(s, Frame{FrameType::ServerHello, std::move(server_hello)});
        const std::uint64_t secret = dh_shared(dh, x, client_public);

        const Frame wrapped = expect_frame(s, FrameType::WrappedKeyBundle);
        const KeyBundle kb = unwrap_bundle(wrapped.payload, secret);

        const Frame ct = expect_frame(s, FrameType::Ciphertext);
        const CipherContainer container = CipherContainer::parse(ct.payload);
        Bytes plain = decrypt(container, kb);

        Bytes ack;
        put_u32_be(ack, crc32(plain));
        write_frame(s, Frame{FrameType::Ack, std::move(ack)});
        return plain;
    } catch (const RemoteError&) {
        throw;  // the peer already knows
    } catch (const TransportClosed&) {
        throw;  // nobody left to notify
    } catch (const Error& e) {
        send_error_frame(s, reason_for_error(e));
        throw;
    }
}

// ---- TCP ----

namespace {

int resolve_and_open(const std::string& host, std::uint16_t port, bool listening) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    if (listening) hints.ai_flags = AI_PASSIVE;

    addrinfo* result = nullptr;
    const std::string port_str = std::to_string(port);
    const int rc = ::getaddrinfo(host.empty() ? nullptr : host.c_str(), port_str.c_str(),
                                 &hints, &result);
    if (rc != 0) throw TransportClosed(std::string("getaddrinfo: ") + gai_strerror(rc));

    int fd = -1;
    int last_errno = 0;
    for (addrinfo* ai = result; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            last_errno = errno;
            continue;
        }
        if (listening) {
            int one = 1;
            ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
            if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 16) == 0) break;
        } else {
            if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        }
        last_errno = errno;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(result);
    if (fd < 0) {
        throw TransportClosed(std::string(listening ? "bind/listen: " : "connect: ") +
                              std::strerror(last_errno));
    }
    return fd;
}

}  // namespace

TcpStream TcpStream::connect(const std::string& host, std::uint16_t port) {
    return TcpStream(resolve_and_open(host, port, false));
}

TcpStream::~TcpStream() {
    if (fd_ >= 0) ::close(fd_);
}

TcpStream::TcpStream(TcpStream&& other) noexcept : fd_(other.fd_) {
    other.fd_ = -1;
}

TcpStream& TcpStream::operator=(TcpStream&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) ::close(fd_);
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

std::size_t TcpStream::read_some(std::span<std::uint8_t> out) {
    while (true) {
        const ssize_t n = ::recv(fd_, out.data(), out.size(), 0);
        if (n >= 0) return static_cast<std::size_t>(n);
        if (errno == EINTR) continue;
        throw TransportClosed(std::string("recv: ") + std::strerror(errno));
    }
}

void TcpStream::write_all(std::span<const std::uint8_t> data) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw TransportClosed(std::string("send: ") + std::strerror(errno));
        }
        sent += static_cast<std::size_t>(n);
    }
}

TcpListener TcpListener::bind(const std::string& host, std::uint16_t port) {
    const int fd = resolve_and_open(host, port, true);
    sockaddr_storage addr{};
    socklen_t len = sizeof(addr);
    std::uint16_t bound = port;
    if (::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) == 0) {
        if (addr.ss_family == AF_INET) {
            bound = ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
        } else if (addr.ss_family == AF_INET6) {
            bound = ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port);
        }
    }
    return TcpListener(fd, bound);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

TcpListener::TcpListener(TcpListener&& other) noexcept : fd_(other.fd_), port_(other.port_) {
    other.fd_ = -1;
}

TcpStream TcpListener::accept() {
    while (true) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) return TcpStream(fd);
        if (errno == EINTR) continue;
        throw TransportClosed(std::string("accept: ") + std::strerror(errno));
    }
}

}  // namespace bdea
