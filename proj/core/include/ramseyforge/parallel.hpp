#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace ramseyforge {

// Finds the smallest index in [0, count) for which `is_witness` returns
// true, or nullopt. The result is identical for any worker count: chunks
// are claimed in increasing order and a chunk is skipped only when it lies
// entirely past an already-found witness.
template <typename Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, int workers, Pred&& is_witness) {
    if (workers <= 1 || count < 2048) {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (is_witness(i)) return i;
        }
        return std::nullopt;
    }

    constexpr std::uint64_t kNoWitness = ~0ull;
    const std::uint64_t chunk = std::max<std::uint64_t>(
        64, count / (static_cast<std::uint64_t>(workers) * 16));
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{kNoWitness};

    const auto worker = [&]() {
        while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
            const std::uint64_t start = c * chunk;
            if (start >= count) return;
            if (start >= best.load(std::memory_order_acquire)) return;
            const std::uint64_t stop = std::min(count, start + chunk);
            for (std::uint64_t i = start; i < stop; ++i) {
                if (i >= best.load(std::memory_order_acquire)) break;
                if (is_witness(i)) {
                    std::uint64_t seen = best.load(std::memory_order_acquire);
                    while (i < seen &&
                           !best.compare_exchange_weak(seen, i, std::memory_order_acq_rel)) {
                    }
                    break;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    const std::uint64_t found = best.load();
    if (found == kNoWitness) return std::nullopt;
    return found;
}

}  // namespace ramseyforge
