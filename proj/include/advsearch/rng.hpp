// Named, reproducible RNG streams.
//
// Every stochastic component draws from its own stream, derived from a
// global seed plus a label path (e.g. {"bff", example_id}). Streams are
// independent of each other and of the budget, so enlarging a budget
// extends a run's draw sequence instead of reshuffling it.

#ifndef ADVSEARCH_RNG_HPP
#define ADVSEARCH_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace advsearch {

// splitmix64 finalizer; good avalanche for seed mixing.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::string_view> path) {
    std::uint64_t s = mix64(base);
    for (auto label : path) s = mix64(s ^ hash_label(label));
    return s;
}

inline std::mt19937_64 named_stream(std::uint64_t base,
                                    std::initializer_list<std::string_view> path) {
    return std::mt19937_64(derive_seed(base, path));
}

} // namespace advsearch

#endif // ADVSEARCH_RNG_HPP
