#pragma once

#include <ngw/canonical.hpp>
#include <ngw/params.hpp>
#include <ngw/solve.hpp>

#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

namespace ngw {

// Parameter values keyed by isomorphism class. Thread-safe; concurrent
// lookups of the same class may both compute, and the first insert wins.
class SolverCache {
public:
    ValueInterval value(const Graph& g, ParamKind kind)
    {
        std::string key = canonical_code(g);
        key.push_back(static_cast<char>(kind));
        Shard& shard = shards_[std::hash<std::string>{}(key) % kShards];
        {
            std::lock_guard lock(shard.mutex);
            if (auto it = shard.values.find(key); it != shard.values.end()) {
                hits_.fetch_add(1, std::memory_order_relaxed);
                return it->second;
            }
        }
        const ValueInterval computed = parameter_value(g, kind);
        misses_.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard lock(shard.mutex);
        return shard.values.emplace(std::move(key), computed).first->second;
    }

    std::size_t hits() const noexcept { return hits_.load(); }
    std::size_t misses() const noexcept { return misses_.load(); }

private:
    static constexpr std::size_t kShards = 16;

    struct Shard {
        std::mutex mutex;
        std::unordered_map<std::string, ValueInterval> values;
    };

    std::array<Shard, kShards> shards_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

} // namespace ngw
