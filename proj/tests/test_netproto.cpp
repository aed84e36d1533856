#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <thread>

#include "bdea/crc32.hpp"
#include "bdea/errors.hpp"
#include "bdea/netproto.hpp"
#include "support/fixtures.hpp"
#include "support/pipe.hpp"

using namespace bdea;
using testsupport::make_pipe;
using testsupport::TamperWriter;

namespace {

KeyMaterial sample_km() {
    return KeyMaterial{{Primer("A"), Primer("T")}, default_pattern()};
}

DhParams toy_dh() { return DhParams::create(23, 5); }

}  // namespace

TEST_CASE("frame codec round trip") {
    XorShift64Star rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const Frame f{static_cast<FrameType>(1 + rng.below(6)),
                      fixtures::random_bytes(rng, rng.below(300))};
        CHECK(decode_frame(encode_frame(f)) == f);
    }
}

TEST_CASE("frame codec rejects malformed frames") {
    const Frame f{FrameType::Ack, {1, 2, 3, 4}};
    const Bytes good = encode_frame(f);

    SUBCASE("short") {
        CHECK_THROWS_AS(decode_frame(Bytes{0x42}), UnexpectedFrameType);
    }
    SUBCASE("bad magic") {
        Bytes bad = good;
        bad[0] = 'X';
        CHECK_THROWS_AS(decode_frame(bad), UnexpectedFrameType);
    }
    SUBCASE("bad version") {
        Bytes bad = good;
        bad[4] = 0x02;
        CHECK_THROWS_AS(decode_frame(bad), UnexpectedFrameType);
    }
    SUBCASE("unknown type") {
        Bytes bad = good;
        bad[5] = 9;
        CHECK_THROWS_AS(decode_frame(bad), UnexpectedFrameType);
    }
    SUBCASE("length mismatch") {
        Bytes bad = good;
        bad.push_back(0);
        CHECK_THROWS_AS(decode_frame(bad), UnexpectedFrameType);
    }
    SUBCASE("oversized payload") {
        Bytes header = {'B', 'D', 'E', 'A', 0x01, 0x05, 0x04, 0x00, 0x00, 0x01};
        CHECK_THROWS_AS(decode_frame(header), FrameTooLarge);  // len = 2^26 + 1
    }
}

TEST_CASE("frames over a pipe") {
    auto [client, server] = make_pipe();
    XorShift64Star rng(9);
    const Frame f{FrameType::Ciphertext, fixtures::random_bytes(rng, 4096)};
    write_frame(*client, f);
    CHECK(read_frame(*server) == f);
}

TEST_CASE("loopback session recovers the plaintext") {
    auto [client, server] = make_pipe();
    const Bytes plain = bytes_of("crypto");

    auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 99); });
    send_session(*client, plain, sample_km(), toy_dh(), 42);
    CHECK(receiver.get() == plain);
}

TEST_CASE("zero-length plaintext session") {
    auto [client, server] = make_pipe();
    auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 5); });
    send_session(*client, {}, sample_km(), toy_dh(), 6);
    CHECK(receiver.get().empty());
    CHECK(crc32({}) == 0x00000000u);  // the Ack the sender just verified
}

TEST_CASE("out-of-order frame") {
    auto [client, server] = make_pipe();
    auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 1); });

    write_frame(*client, Frame{FrameType::Ciphertext, {0xAA}});
    CHECK_THROWS_AS(receiver.get(), UnexpectedFrameType);
    // the receiver reported the failure before rethrowing
    const Frame err = read_frame(*client);
    CHECK(err.type == FrameType::Error);
    REQUIRE(err.payload.size() == 1);
    CHECK(err.payload[0] == kReasonMalformed);
}

TEST_CASE("client hello with out-of-range parameters") {
    auto [client, server] = make_pipe();
    auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 1); });

    Bytes hello;
    put_u64_be(hello, 4);  // not an odd prime
    put_u64_be(hello, 2);
    put_u64_be(hello, 3);
    write_frame(*client, Frame{FrameType::ClientHello, hello});

    CHECK_THROWS_AS(receiver.get(), BadDhParams);
    const Frame err = read_frame(*client);
    CHECK(err.type == FrameType::Error);
    CHECK(err.payload == Bytes{kReasonMalformed});
}

TEST_CASE("tampered bundle frame produces an error, never a wrong plaintext") {
    XorShift64Star rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto [client, server] = make_pipe();
        // client frame index 1 is the WrappedKeyBundle
        TamperWriter tamperer(*client, 1, rng.below(15),
                              static_cast<std::uint8_t>(1 + rng.below(255)));

        auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 7); });
        CHECK_THROWS_AS(
            send_session(tamperer, bytes_of("tamper-evident"), sample_km(), toy_dh(), trial + 1),
            RemoteError);
        CHECK_THROWS_AS(receiver.get(), Error);
    }
}

TEST_CASE("tampered ciphertext frame reports pollution, crc or malformed") {
    XorShift64Star rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto [client, server] = make_pipe();
        TamperWriter tamperer(*client, 2, rng.below(40),
                              static_cast<std::uint8_t>(1 + rng.below(255)));

        auto receiver = std::async(std::launch::async, [&] { return recv_session(*server, 8); });
        try {
            send_session(tamperer, bytes_of("sixteen byte msg"), sample_km(), toy_dh(), trial + 1);
            FAIL("tampered session must not complete");
        } catch (const RemoteError& e) {
            CHECK(e.reason >= 1);
            CHECK(e.reason <= 3);
        }
        CHECK_THROWS_AS(receiver.get(), Error);
    }
}

TEST_CASE("tcp loopback session") {
    TcpListener listener = TcpListener::bind("127.0.0.1", 0);
    const std::uint16_t port = listener.port();
    REQUIRE(port != 0);

    auto receiver = std::async(std::launch::async, [&] {
        TcpStream conn = listener.accept();
        return recv_session(conn, 21);
    });

    XorShift64Star rng(14);
    const Bytes plain = fixtures::random_bytes(rng, 100000);
    TcpStream client = TcpStream::connect("127.0.0.1", port);
    send_session(client, plain, sample_km(), toy_dh(), 22);
    CHECK(receiver.get() == plain);
}

TEST_CASE("concurrent independent sessions") {
    TcpListener listener = TcpListener::bind("127.0.0.1", 0);
    const std::uint16_t port = listener.port();

    constexpr int kSessions = 4;
    auto serve = std::async(std::launch::async, [&] {
        std::vector<std::thread> workers;
        std::vector<Bytes> results(kSessions);
        for (int i = 0; i < kSessions; ++i) {
            TcpStream conn = listener.accept();
            workers.emplace_back(
                [&results, i](TcpStream c) { results[i] = recv_session(c, 100 + i); },
                std::move(conn));
        }
        for (auto& w : workers) w.join();
        return results;
    });

    std::vector<Bytes> sent(kSessions);
    std::vector<std::thread> clients;
    XorShift64Star rng(15);
    for (int i = 0; i < kSessions; ++i) {
        sent[i] = fixtures::random_bytes(rng, 2000 + 100 * i);
        clients.emplace_back([&, i] {
            TcpStream c = TcpStream::connect("127.0.0.1", port);
            send_session(c, sent[i], sample_km(), toy_dh(), 200 + i);
        });
    }
    for (auto& c : clients) c.join();

    std::vector<Bytes> received = serve.get();
    std::sort(received.begin(), received.end());
    std::sort(sent.begin(), sent.end());
    CHECK(received == sent);
}
