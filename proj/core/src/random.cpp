#include "ecf/random.hpp"

#include <sodium.h>

#include <cstring>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ecf/error.hpp"
#include "internal.hpp"

namespace ecf {

namespace detail {

void ensure_sodium() {
    static std::once_flag flag;
    static bool ok = false;
    std::call_once(flag, [] { ok = sodium_init() >= 0; });
    if (!ok) {
        raise(Errc::randomness_failure, "libsodium initialization failed");
    }
}

}  // namespace detail

void SystemRandomness::fill(std::span<std::uint8_t> out) {
    detail::ensure_sodium();
    if (!out.empty()) {
        randombytes_buf(out.data(), out.size());
    }
}

std::uint32_t SystemRandomness::uniform(std::uint32_t upper_bound) {
    detail::ensure_sodium();
    return randombytes_uniform(upper_bound);
}

SystemRandomness& system_randomness() {
    static SystemRandomness instance;
    return instance;
}

DeterministicRandomness::DeterministicRandomness(const std::array<std::uint8_t, 32>& seed)
    : seed_(seed) {
    detail::ensure_sodium();
}

void DeterministicRandomness::fill(std::span<std::uint8_t> out) {
    if (out.empty()) {
        return;
    }
    // Keystream positions are byte-addressed; regenerate from the enclosing
    // 64-byte block boundary and drop the lead-in.
    const std::uint64_t block = offset_ / 64;
    const std::size_t skip = static_cast<std::size_t>(offset_ % 64);
    static const std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> nonce{};

    std::vector<std::uint8_t> buf(skip + out.size(), 0);
    if (crypto_stream_chacha20_xor_ic(buf.data(), buf.data(), buf.size(), nonce.data(),
                                      block, seed_.data()) != 0) {
        raise(Errc::randomness_failure, "chacha20 keystream generation failed");
    }
    std::memcpy(out.data(), buf.data() + skip, out.size());
    offset_ += out.size();
}

std::uint32_t DeterministicRandomness::uniform(std::uint32_t upper_bound) {
    if (upper_bound < 2) {
        return 0;
    }
    // Rejection sampling over a little-endian u32 keystream read.
    const std::uint32_t min = static_cast<std::uint32_t>(-upper_bound) % upper_bound;
    for (;;) {
        std::uint8_t raw[4];
        fill(raw);
        std::uint32_t r = static_cast<std::uint32_t>(raw[0]) |
                          static_cast<std::uint32_t>(raw[1]) << 8 |
                          static_cast<std::uint32_t>(raw[2]) << 16 |
                          static_cast<std::uint32_t>(raw[3]) << 24;
        if (r >= min) {
            return r % upper_bound;
        }
    }
}

}  // namespace ecf
