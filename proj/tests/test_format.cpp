#include "ecf/format.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "ecf/container.hpp"
#include "ecf/error.hpp"
#include "ecf/wire.hpp"

namespace {

using ecf::Bytes;
using ecf::Errc;
using ecf::Error;
using ecf::PrivateBody;
using ecf::PublicHeader;
using ecf::RecipientBlock;
using ecf::RecipientInfo;

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return Errc::io_error;
}

RecipientBlock patterned_block(std::uint8_t base) {
    RecipientBlock block;
    std::iota(block.identification_tag.begin(), block.identification_tag.end(), base);
    std::iota(block.ephemeral_public_key.begin(), block.ephemeral_public_key.end(),
              static_cast<std::uint8_t>(base + 0x20));
    std::iota(block.aes_pre_key_1.begin(), block.aes_pre_key_1.end(),
              static_cast<std::uint8_t>(base + 0x40));
    return block;
}

PublicHeader sample_header(std::uint32_t block_count) {
    PublicHeader h;
    h.cipher_suite_id = ecf::kSuiteAesGcmSha512;
    h.private_length = 156;
    h.salt.fill(0xA1);
    h.symmetric_nonce.fill(0xB2);
    for (std::uint32_t i = 0; i < block_count; ++i) {
        h.blocks.push_back(patterned_block(static_cast<std::uint8_t>(i * 3)));
    }
    h.public_header_length = static_cast<std::uint32_t>(h.serialized_size());
    return h;
}

TEST(PublicHeaderFormat, FieldLayoutIsExact) {
    const PublicHeader h = sample_header(1);
    const Bytes bytes = ecf::serialize_public_header(h);
    ASSERT_EQ(bytes.size(), 128u);  // 48 general + one 80-byte block

    EXPECT_EQ(ecf::decode_u32(ecf::as_view(bytes).subspan(0, 4)), 1u);    // version
    EXPECT_EQ(ecf::decode_u32(ecf::as_view(bytes).subspan(4, 4)), 1u);    // suite
    EXPECT_EQ(ecf::decode_u32(ecf::as_view(bytes).subspan(8, 4)), 128u);  // header length
    EXPECT_EQ(ecf::decode_u32(ecf::as_view(bytes).subspan(12, 4)), 156u); // private length
    EXPECT_EQ(ecf::decode_u32(ecf::as_view(bytes).subspan(16, 4)), 1u);   // block count
    for (std::size_t i = 20; i < 36; ++i) EXPECT_EQ(bytes[i], 0xA1);      // salt
    for (std::size_t i = 36; i < 48; ++i) EXPECT_EQ(bytes[i], 0xB2);      // nonce
    EXPECT_EQ(bytes[48], 0x00);  // first tag byte of the block
    EXPECT_EQ(bytes[64], 0x20);  // first ephemeral key byte
    EXPECT_EQ(bytes[96], 0x40);  // first pre key byte
}

TEST(PublicHeaderFormat, RoundTripsWithManyBlocks) {
    for (std::uint32_t m : {0u, 1u, 2u, 8u, 19u}) {
        PublicHeader h = sample_header(m);
        const Bytes bytes = ecf::serialize_public_header(h);
        EXPECT_EQ(bytes.size(), 48u + 80u * m);
        EXPECT_EQ(ecf::parse_public_header(ecf::as_view(bytes)), h);
    }
}

TEST(PublicHeaderFormat, IgnoresTrailingCiphertext) {
    const PublicHeader h = sample_header(2);
    Bytes bytes = ecf::serialize_public_header(h);
    bytes.resize(bytes.size() + 300, 0xEE);  // pretend ciphertext follows
    EXPECT_EQ(ecf::parse_public_header(ecf::as_view(bytes)), h);
}

TEST(PublicHeaderFormat, RejectsShortInput) {
    const Bytes tiny(47, 0);
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(tiny)); }),
              Errc::truncated);
}

TEST(PublicHeaderFormat, RejectsWrongVersion) {
    Bytes bytes = ecf::serialize_public_header(sample_header(1));
    bytes[0] = 2;
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(bytes)); }),
              Errc::unsupported_version);
}

TEST(PublicHeaderFormat, RejectsUnknownSuite) {
    Bytes bytes = ecf::serialize_public_header(sample_header(1));
    bytes[4] = 7;
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(bytes)); }),
              Errc::unsupported_suite);
}

TEST(PublicHeaderFormat, RejectsInconsistentLength) {
    Bytes bytes = ecf::serialize_public_header(sample_header(1));
    bytes[8] = 0x7F;  // header length no longer equals 48 + 80m
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(bytes)); }),
              Errc::length_mismatch);
}

TEST(PublicHeaderFormat, RejectsBlockCountBeyondInput) {
    Bytes bytes = ecf::serialize_public_header(sample_header(1));
    // Raise the block count and the declared length consistently; the input
    // is now shorter than both claim.
    const auto count = ecf::encode_u32(3);
    std::copy(count.begin(), count.end(), bytes.begin() + 16);
    const auto length = ecf::encode_u32(48 + 80 * 3);
    std::copy(length.begin(), length.end(), bytes.begin() + 8);
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(bytes)); }),
              Errc::truncated);
}

TEST(PublicHeaderFormat, HugeBlockCountDoesNotOverflow) {
    Bytes bytes = ecf::serialize_public_header(sample_header(0));
    const auto count = ecf::encode_u32(0xFFFFFFFF);
    std::copy(count.begin(), count.end(), bytes.begin() + 16);
    // 48 + 80 * 2^32 wraps a 32-bit accumulator; the parser must not be
    // fooled into accepting the stale length field.
    EXPECT_EQ(code_of([&] { (void)ecf::parse_public_header(ecf::as_view(bytes)); }),
              Errc::length_mismatch);
}

PrivateBody sample_body(const ecf::CipherSuite& suite) {
    PrivateBody body;
    body.content_type = ecf::kContentTypeBlob;
    body.public_header_hash.assign(suite.hash_length, 0x11);
    RecipientInfo alice;
    alice.public_key.fill(0xAA);
    alice.name = "alice";
    alice.name_signature.fill(0xA5);
    RecipientInfo bob;
    bob.public_key.fill(0xBB);
    bob.name = "b\xC3\xB6"; // UTF-8 two-byte character
    bob.name_signature.fill(0xB5);
    body.recipients = {alice, bob};
    body.content = {1, 2, 3, 4, 5};
    body.private_hash.assign(suite.hash_length, 0x22);
    return body;
}

TEST(PrivateBodyFormat, RoundTripsBothSuites) {
    for (std::uint32_t suite_id : {1u, 2u}) {
        const ecf::CipherSuite& suite = ecf::suite_from_id(suite_id);
        const PrivateBody body = sample_body(suite);
        const Bytes bytes = ecf::serialize_private_body(body, suite);
        EXPECT_EQ(ecf::parse_private_body(ecf::as_view(bytes), suite), body);
    }
}

TEST(PrivateBodyFormat, EmptyBodySizes) {
    // Four u32 fields plus two digests; 140 bytes with SHA-512, 76 with
    // SHA-256.
    for (auto [suite_id, expected] : {std::pair{1u, 140u}, std::pair{2u, 76u}}) {
        const ecf::CipherSuite& suite = ecf::suite_from_id(suite_id);
        PrivateBody body;
        body.public_header_hash.assign(suite.hash_length, 0);
        body.private_hash.assign(suite.hash_length, 0);
        EXPECT_EQ(ecf::serialize_private_body(body, suite).size(), expected);
    }
}

TEST(PrivateBodyFormat, PrefixStopsBeforePrivateHash) {
    const ecf::CipherSuite& suite = ecf::suite_from_id(1);
    const PrivateBody body = sample_body(suite);
    const Bytes full = ecf::serialize_private_body(body, suite);
    const Bytes prefix = ecf::serialize_private_body_prefix(body, suite);
    ASSERT_EQ(full.size(), prefix.size() + suite.hash_length);
    EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), full.begin()));
}

TEST(PrivateBodyFormat, RejectsTrailingByte) {
    const ecf::CipherSuite& suite = ecf::suite_from_id(1);
    Bytes bytes = ecf::serialize_private_body(sample_body(suite), suite);
    bytes.push_back(0x00);
    EXPECT_EQ(code_of([&] { (void)ecf::parse_private_body(ecf::as_view(bytes), suite); }),
              Errc::length_mismatch);
}

TEST(PrivateBodyFormat, RejectsTruncation) {
    const ecf::CipherSuite& suite = ecf::suite_from_id(1);
    const Bytes bytes = ecf::serialize_private_body(sample_body(suite), suite);
    for (std::size_t keep : {0u, 3u, 70u, 150u}) {
        ASSERT_LT(keep, bytes.size());
        const ecf::ByteView cut = ecf::as_view(bytes).first(keep);
        EXPECT_EQ(code_of([&] { (void)ecf::parse_private_body(cut, suite); }),
                  Errc::truncated);
    }
}

TEST(PrivateBodyFormat, RejectsWrongDigestLengthOnSerialize) {
    const ecf::CipherSuite& suite = ecf::suite_from_id(1);
    PrivateBody body = sample_body(suite);
    body.public_header_hash.resize(32);  // SHA-256 length under suite 1
    EXPECT_EQ(code_of([&] { (void)ecf::serialize_private_body(body, suite); }),
              Errc::length_mismatch);
}

TEST(PrivateBodyFormat, RecipientCountIsNotPreallocated) {
    // A claimed count of 2^32-1 recipients with no data must fail cleanly.
    const ecf::CipherSuite& suite = ecf::suite_from_id(2);
    ecf::ByteWriter w;
    w.u32(0);                      // content type
    w.bytes(Bytes(32, 0x11));      // public header hash
    w.u32(0xFFFFFFFF);             // recipient count
    const Bytes bytes = w.take();
    EXPECT_EQ(code_of([&] { (void)ecf::parse_private_body(ecf::as_view(bytes), suite); }),
              Errc::truncated);
}

}  // namespace
