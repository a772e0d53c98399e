#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fedaux {

// splitmix64 finalizer; used to derive independent substreams from a master
// seed plus an arbitrary sequence of labels/ids.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stream id = hash(master, labels...). Order-sensitive.
inline std::uint64_t stream_id(std::uint64_t master) { return mix64(master); }

template <typename... Rest>
std::uint64_t stream_id(std::uint64_t master, std::uint64_t part, Rest... rest) {
  return stream_id(mix64(master ^ mix64(part)), rest...);
}

template <typename... Rest>
std::uint64_t stream_id(std::uint64_t master, std::string_view part, Rest... rest) {
  return stream_id(mix64(master ^ hash_str(part)), rest...);
}

inline std::uint64_t double_bits(double v) {
  std::uint64_t b;
  static_assert(sizeof(b) == sizeof(v));
  __builtin_memcpy(&b, &v, sizeof(b));
  return b;
}

// Seeded generator with the samplers the simulator needs. Wraps mt19937_64;
// determinism holds for a fixed standard library implementation, which is all
// the reproducibility contract requires (same binary, same outputs).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform() { return unif_(gen_); }

  double normal() { return normal_(gen_); }

  double gamma(double shape) {
    std::gamma_distribution<double> d(shape, 1.0);
    return d(gen_);
  }

  // Fisher-Yates over [0, n)
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::uniform_int_distribution<std::size_t> d(0, i - 1);
      std::swap(v[i - 1], v[d(gen_)]);
    }
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fedaux
