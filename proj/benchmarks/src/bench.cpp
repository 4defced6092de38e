// Timings for the operations a caller actually pays for: container write
// and load across sizes and recipient counts, per-recipient key wrapping,
// obfuscation block construction, and the keystore derivation profiles.
//
// The production derivation runs exactly once (it is sized to take seconds
// by design); use --benchmark_filter to skip or isolate it.

#include <benchmark/benchmark.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ecf/bytes.hpp"
#include "ecf/container.hpp"
#include "ecf/crypto.hpp"
#include "ecf/keystore.hpp"
#include "ecf/random.hpp"
#include "ecf/suite.hpp"

namespace {

ecf::DeterministicRandomness make_rng() {
    std::array<std::uint8_t, 32> seed{};
    seed.fill(0xB0);
    return ecf::DeterministicRandomness(seed);
}

ecf::EncryptedContainer make_container(ecf::Randomness& rng, std::uint32_t recipients,
                                       std::uint32_t content_size,
                                       std::vector<ecf::Identity>* people = nullptr) {
    ecf::EncryptedContainer container =
        ecf::EncryptedContainer::create(ecf::kSuiteAesGcmSha512, ecf::kContentTypeBlob);
    for (std::uint32_t i = 0; i < recipients; ++i) {
        ecf::Identity identity = ecf::Identity::generate(rng);
        container.add_recipient(ecf::export_descriptor(identity, "user" + std::to_string(i)));
        if (people != nullptr) {
            people->push_back(std::move(identity));
        }
    }
    ecf::Bytes content(content_size);
    rng.fill(content);
    container.set_content(std::move(content));
    return container;
}

void BM_ContainerWrite(benchmark::State& state) {
    auto rng = make_rng();
    const auto recipients = static_cast<std::uint32_t>(state.range(0));
    const auto content_size = static_cast<std::uint32_t>(state.range(1));
    ecf::EncryptedContainer container = make_container(rng, recipients, content_size);
    for (auto _ : state) {
        benchmark::DoNotOptimize(container.write(rng));
    }
    state.SetBytesProcessed(state.iterations() * content_size);
}
BENCHMARK(BM_ContainerWrite)
    ->Args({1, 1 << 10})
    ->Args({1, 1 << 16})
    ->Args({1, 1 << 20})
    ->Args({8, 1 << 10})
    ->Args({8, 1 << 20})
    ->ArgNames({"recipients", "bytes"});

void BM_ContainerLoad(benchmark::State& state) {
    auto rng = make_rng();
    const auto recipients = static_cast<std::uint32_t>(state.range(0));
    const auto content_size = static_cast<std::uint32_t>(state.range(1));
    std::vector<ecf::Identity> people;
    const ecf::EncryptedContainer container =
        make_container(rng, recipients, content_size, &people);
    const ecf::Bytes file = container.write(rng);
    const ecf::Identity& reader = people.back();  // worst case: last block scanned
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf::EncryptedContainer::load(ecf::as_view(file), reader));
    }
    state.SetBytesProcessed(state.iterations() * content_size);
}
BENCHMARK(BM_ContainerLoad)
    ->Args({1, 1 << 10})
    ->Args({1, 1 << 16})
    ->Args({1, 1 << 20})
    ->Args({8, 1 << 10})
    ->Args({8, 1 << 20})
    ->ArgNames({"recipients", "bytes"});

void BM_WrapContentKey(benchmark::State& state) {
    auto rng = make_rng();
    const auto& suite = ecf::suite_from_id(static_cast<std::uint32_t>(state.range(0)));
    const ecf::Identity recipient = ecf::Identity::generate(rng);
    ecf::ContentKey content_key;
    rng.fill(content_key.key.mutable_view());
    rng.fill(content_key.nonce);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ecf::wrap_content_key(suite, content_key, recipient.public_key(), rng));
    }
}
BENCHMARK(BM_WrapContentKey)->Arg(1)->Arg(2)->ArgName("suite");

void BM_UnwrapContentKey(benchmark::State& state) {
    auto rng = make_rng();
    const auto& suite = ecf::suite_from_id(static_cast<std::uint32_t>(state.range(0)));
    const ecf::Identity recipient = ecf::Identity::generate(rng);
    ecf::ContentKey content_key;
    rng.fill(content_key.key.mutable_view());
    rng.fill(content_key.nonce);
    const ecf::KeyWrap wrap =
        ecf::wrap_content_key(suite, content_key, recipient.public_key(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf::unwrap_content_key(suite, wrap, recipient));
    }
}
BENCHMARK(BM_UnwrapContentKey)->Arg(1)->Arg(2)->ArgName("suite");

void BM_ObfuscationBlockFast(benchmark::State& state) {
    auto rng = make_rng();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf::make_obfuscation_block_fast(rng));
    }
}
BENCHMARK(BM_ObfuscationBlockFast);

void BM_ObfuscationBlockFull(benchmark::State& state) {
    auto rng = make_rng();
    const auto& suite = ecf::suite_from_id(ecf::kSuiteAesGcmSha512);
    const auto salt = rng.bytes<16>();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf::make_obfuscation_block_full(suite, salt, rng));
    }
}
BENCHMARK(BM_ObfuscationBlockFull);

void BM_KeystoreDeriveCi(benchmark::State& state) {
    auto rng = make_rng();
    const auto salt = rng.bytes<16>();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ecf::derive_keystore_key("benchmark password", salt, ecf::KdfParameters::ci()));
    }
}
BENCHMARK(BM_KeystoreDeriveCi)->Unit(benchmark::kMillisecond);

void BM_KeystoreDeriveProduction(benchmark::State& state) {
    auto rng = make_rng();
    const auto salt = rng.bytes<16>();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf::derive_keystore_key("benchmark password", salt,
                                                          ecf::KdfParameters::production()));
    }
}
BENCHMARK(BM_KeystoreDeriveProduction)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace

BENCHMARK_MAIN();
