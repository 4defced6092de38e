#include "ecf/secure.hpp"

#include <sodium.h>

#include <atomic>

namespace ecf {

namespace {
std::atomic<std::uint64_t> g_erasures{0};
}

void secure_erase(void* data, std::size_t size) noexcept {
    if (data != nullptr && size > 0) {
        sodium_memzero(data, size);
    }
    g_erasures.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t erasure_count() noexcept {
    return g_erasures.load(std::memory_order_relaxed);
}

}  // namespace ecf
