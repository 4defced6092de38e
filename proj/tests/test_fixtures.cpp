// Golden-file tests. The committed fixtures must regenerate byte for byte
// from their recorded seeds, parse to the expected structures, and decrypt
// to the expected plaintexts. A failure here means the on-disk format
// drifted; regenerate deliberately with make-fixtures only after deciding
// the change is intended.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "ecf/error.hpp"
#include "ecf/format.hpp"
#include "support/fixtures_common.hpp"
#include "support/oracle.hpp"

namespace {

using ecf::Bytes;
using ecf::Errc;
using ecf::Error;

// Seed 0x11 repeated, through the signature scheme's key derivation.
constexpr const char* kAlicePublicHex =
    "d04ab232742bb4ab3a1368bd4615e4e6d0224ab71a016baf8520a332c9778737";

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return Errc::io_error;
}

Bytes read_fixture(const char* name) {
    const std::filesystem::path path = std::filesystem::path(ECF_FIXTURE_DIR) / name;
    std::ifstream in(path, std::ios::binary);
    EXPECT_TRUE(in.good()) << "missing fixture " << path.string();
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Fixtures, CommittedFilesRegenerateByteForByte) {
    EXPECT_EQ(read_fixture("suite1.ecf"), fixtures::suite1_container());
    EXPECT_EQ(read_fixture("suite2.ecf"), fixtures::suite2_container());
    EXPECT_EQ(read_fixture("identity.ecfk"), fixtures::keystore_file());
    EXPECT_EQ(read_fixture("alice.pub"), fixtures::descriptor_file());
}

TEST(Fixtures, RecordedIdentityMatchesTheFrozenPublicKey) {
    const ecf::Identity alice = fixtures::alice();
    EXPECT_EQ(ecf::to_hex(ecf::as_view(alice.public_key())), kAlicePublicHex);
    // Cross-checked against the second signature implementation.
    std::array<std::uint8_t, 32> seed = fixtures::filled(0x11);
    EXPECT_EQ(oracle::ed25519_seed_to_public(seed), alice.public_key());
}

TEST(Fixtures, PublicHeadersParseAndReserializeExactly) {
    struct Case {
        const char* name;
        std::uint32_t suite_id;
        std::uint32_t min_blocks;
    };
    for (const Case& c : {Case{"suite1.ecf", 1, 2}, Case{"suite2.ecf", 2, 3}}) {
        const Bytes file = read_fixture(c.name);
        const ecf::PublicHeader header = ecf::parse_public_header(ecf::as_view(file));
        EXPECT_EQ(header.container_version, ecf::kContainerVersion) << c.name;
        EXPECT_EQ(header.cipher_suite_id, c.suite_id) << c.name;
        EXPECT_GE(header.recipient_count(), c.min_blocks) << c.name;
        EXPECT_LE(header.recipient_count(), 8u) << c.name;
        EXPECT_EQ(header.public_header_length, header.serialized_size()) << c.name;

        const Bytes reserialized = ecf::serialize_public_header(header);
        const Bytes prefix(file.begin(), file.begin() + header.serialized_size());
        EXPECT_EQ(reserialized, prefix) << c.name;
    }
}

TEST(Fixtures, Suite1DecryptsForBothRecipientsAndExcludesOthers) {
    const Bytes file = read_fixture("suite1.ecf");
    for (const ecf::Identity& who : {fixtures::alice(), fixtures::bob()}) {
        const ecf::EncryptedContainer container =
            ecf::EncryptedContainer::load(ecf::as_view(file), who);
        EXPECT_EQ(container.content(), fixtures::suite1_content());
        ASSERT_EQ(container.recipients().size(), 2u);
        EXPECT_EQ(container.recipients()[0].name, "alice");
        EXPECT_EQ(container.recipients()[1].name, "bob");
    }
    const ecf::Identity outsider = fixtures::carol();
    EXPECT_EQ(code_of([&] {
                  (void)ecf::EncryptedContainer::load(ecf::as_view(file), outsider);
              }),
              Errc::not_a_recipient);
}

TEST(Fixtures, Suite2DecryptsForAllThreeRecipients) {
    const Bytes file = read_fixture("suite2.ecf");
    for (const ecf::Identity& who : {fixtures::alice(), fixtures::bob(), fixtures::carol()}) {
        const ecf::EncryptedContainer container =
            ecf::EncryptedContainer::load(ecf::as_view(file), who);
        EXPECT_EQ(container.content(), fixtures::suite2_content());
        ASSERT_EQ(container.recipients().size(), 3u);
        EXPECT_EQ(container.recipients()[2].name, "carol");
    }
}

TEST(Fixtures, KeystoreOpensWithTheRecordedPassword) {
    const Bytes file = read_fixture("identity.ecfk");
    const ecf::Identity identity =
        ecf::load_identity(ecf::as_view(file), fixtures::kKeystorePassword);
    EXPECT_EQ(ecf::to_hex(ecf::as_view(identity.public_key())), kAlicePublicHex);
    EXPECT_EQ(identity.x25519_public_key(), fixtures::alice().x25519_public_key());

    EXPECT_EQ(code_of([&] { (void)ecf::load_identity(ecf::as_view(file), "wrong"); }),
              Errc::authentication_failed);
}

TEST(Fixtures, DescriptorParsesVerifiesAndReserializes) {
    const Bytes file = read_fixture("alice.pub");
    const ecf::RecipientDescriptor descriptor =
        ecf::RecipientDescriptor::parse(ecf::as_view(file));
    EXPECT_EQ(descriptor.name, "alice");
    EXPECT_EQ(ecf::to_hex(ecf::as_view(descriptor.public_key)), kAlicePublicHex);
    EXPECT_TRUE(descriptor.verify());
    EXPECT_EQ(descriptor.serialize(), file);
}

}  // namespace
