#ifndef ECF_TESTS_SUPPORT_VECTORS_HPP
#define ECF_TESTS_SUPPORT_VECTORS_HPP

// Known-answer vectors the primitive layer is pinned against. Hash vectors
// from FIPS 180-4 examples, X25519 from RFC 7748 section 5.2, Ed25519 from
// RFC 8032 section 7.1, AES-256-GCM from the NIST CAVP set (McGrew-Viega
// test cases 13-15). The Ed25519-to-X25519 conversion answers were computed
// with an independent implementation of the birational map and frozen here.

namespace vectors {

inline constexpr const char* kSha512Empty =
    "cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
    "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e";
inline constexpr const char* kSha512Abc =
    "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
    "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f";
inline constexpr const char* kSha256Empty =
    "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855";
inline constexpr const char* kSha256Abc =
    "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad";

// RFC 7748 section 5.2, first and second Diffie-Hellman vectors.
inline constexpr const char* kX25519Scalar1 =
    "a546e36bf0527c9d3b16154b82465edd62144c0ac1fc5a18506a2244ba449ac4";
inline constexpr const char* kX25519Point1 =
    "e6db6867583030db3594c1a424b15f7c726624ec26b3353b10a903a6d0ab1c4c";
inline constexpr const char* kX25519Result1 =
    "c3da55379de9c6908e94ea4df28d084f32eccf03491c71f754b4075577a28552";
inline constexpr const char* kX25519Scalar2 =
    "4b66e9d4d1b4673c5ad22691957d6af5c11b6421e0ea01d42ca4169e7918ba0d";
inline constexpr const char* kX25519Point2 =
    "e5210f12786811d3f4b7959d0538ae2c31dbe7106fc03c3efc4cd549c715a493";
inline constexpr const char* kX25519Result2 =
    "95cbde9476e8907d7aade45cb4b873f88b595a68799fa152e6f8f7647aac7957";

// RFC 8032 section 7.1, TEST 1 (empty message), TEST 2 (one byte 0x72),
// TEST 3 (two bytes af82).
inline constexpr const char* kEdSeed1 =
    "9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60";
inline constexpr const char* kEdPublic1 =
    "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a";
inline constexpr const char* kEdMessage1 = "";
inline constexpr const char* kEdSignature1 =
    "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e06522490155"
    "5fb8821590a33bacc61e39701cf9b46bd25bf5f0595bbe24655141438e7a100b";
inline constexpr const char* kEdSeed2 =
    "4ccd089b28ff96da9db6c346ec114e0f5b8a319f35aba624da8cf6ed4fb8a6fb";
inline constexpr const char* kEdPublic2 =
    "3d4017c3e843895a92b70aa74d1b7ebc9c982ccf2ec4968cc0cd55f12af4660c";
inline constexpr const char* kEdMessage2 = "72";
inline constexpr const char* kEdSignature2 =
    "92a009a9f0d4cab8720e820b5f642540a2b27b5416503f8fb3762223ebdb69da"
    "085ac1e43e15996e458f3613d0f11d8c387b2eaeb4302aeeb00d291612bb0c00";
inline constexpr const char* kEdSeed3 =
    "c5aa8df43f9f837bedb7442f31dcb7b166d38535076f094b85ce3a2e0b4458f7";
inline constexpr const char* kEdPublic3 =
    "fc51cd8e6218a1a38da47ed00230f0580816ed13ba3303ac5deb911548908025";
inline constexpr const char* kEdMessage3 = "af82";
inline constexpr const char* kEdSignature3 =
    "6291d657deec24024827e69c3abe01a30ce548a284743a445e3680d7db5ac3ac"
    "18ff9b538d16f290ae67f760984dc6594a7c15e9716ed28dc027beceea1ec40a";

// AES-256-GCM, McGrew-Viega test cases 13, 14, 15 (no AAD).
inline constexpr const char* kGcm13Key =
    "0000000000000000000000000000000000000000000000000000000000000000";
inline constexpr const char* kGcm13Iv = "000000000000000000000000";
inline constexpr const char* kGcm13Tag = "530f8afbc74536b9a963b4f1c4cb738b";
inline constexpr const char* kGcm14Plain = "00000000000000000000000000000000";
inline constexpr const char* kGcm14Cipher = "cea7403d4d606b6e074ec5d3baf39d18";
inline constexpr const char* kGcm14Tag = "d0d1c8a799996bf0265b98b5d48ab919";
inline constexpr const char* kGcm15Key =
    "feffe9928665731c6d6a8f9467308308feffe9928665731c6d6a8f9467308308";
inline constexpr const char* kGcm15Iv = "cafebabefacedbaddecaf888";
inline constexpr const char* kGcm15Plain =
    "d9313225f88406e5a55909c5aff5269a86a7a9531534f7da2e4c303d8a318a72"
    "1c3c0c95956809532fcf0e2449a6b525b16aedf5aa0de657ba637b391aafd255";
inline constexpr const char* kGcm15Cipher =
    "522dc1f099567d07f47f37a32a84427d643a8cdcbfe5c0c97598a2bd2555d1aa"
    "8cb08e48590dbb3da7b08b1056828838c5f61e6393ba7a0abcc9f662898015ad";
inline constexpr const char* kGcm15Tag = "b094dac5d93471bdec1a502270e3cc6c";

// Argon2id v1.3 raw outputs, frozen from an independent from-scratch
// implementation (RustCrypto argon2 0.5).
// kArgon2Ci: password "correct horse battery staple",
//   salt 000102030405060708090a0b0c0d0e0f, t=2, m=16 MiB, lanes=1, 32 bytes.
inline constexpr const char* kArgon2CiPassword = "correct horse battery staple";
inline constexpr const char* kArgon2CiSalt = "000102030405060708090a0b0c0d0e0f";
inline constexpr const char* kArgon2Ci =
    "7cfb910f4bd460566328e3bad06e93c339eea042b331c8215ee9b478f9851668";
// kArgon2FourLanes: same inputs with lanes=4.
inline constexpr const char* kArgon2FourLanes =
    "6a80c1a9a04072b180a5e72a637ad5431b93fa5d680af51155d502a324a66c1a";
// kArgon2Small: password "pw", all-zero 16-byte salt, t=2, m=8 MiB, lanes=1.
inline constexpr const char* kArgon2Small =
    "f4cfcb8c75925c508b7fbbb26bafb5caf1987db42aaf96b79c7d3dc3e67674b8";

// X25519 keys derived from the RFC 8032 Ed25519 identities above, frozen
// from an independent computation of clamp(SHA-512(seed)[0:32]) and the
// birational map u = (1+y)/(1-y).
inline constexpr const char* kEd1X25519Secret =
    "307c83864f2833cb427a2ef1c00a013cfdff2768d980c0a3a520f006904de94f";
inline constexpr const char* kEd1X25519Public =
    "d85e07ec22b0ad881537c2f44d662d1a143cf830c57aca4305d85c7a90f6b62e";
inline constexpr const char* kEd3X25519Secret =
    "909a8b755ed902849023a55b15c23d11ba4d7f4ec5c2f51b1325a181991ea95c";
inline constexpr const char* kEd3X25519Public =
    "cbb22fc9f790bd3eba9b84680c157ca4950a9894362601701f89c3c4d9fda23a";

}  // namespace vectors

#endif
