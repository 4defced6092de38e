#include "ecf/suite.hpp"

#include "ecf/error.hpp"

namespace ecf {

namespace {

constexpr CipherSuite kSuites[] = {
    {kSuiteAesGcmSha512, 64, "X25519", "AES-256-GCM", "Ed25519", "SHA-512"},
    {kSuiteAesGcmSha256, 32, "X25519", "AES-256-GCM", "Ed25519", "SHA-256"},
};

}  // namespace

bool suite_supported(std::uint32_t id) noexcept {
    for (const auto& s : kSuites) {
        if (s.id == id) {
            return true;
        }
    }
    return false;
}

const CipherSuite& suite_from_id(std::uint32_t id) {
    for (const auto& s : kSuites) {
        if (s.id == id) {
            return s;
        }
    }
    raise(Errc::unsupported_suite, "cipher suite id " + std::to_string(id));
}

}  // namespace ecf
