#pragma once

#include <cstdint>
#include <random>

namespace tri3d4 {

// mt19937_64 is fully specified by the standard; the bounded draw below avoids the
// implementation-defined distributions so seeded runs agree across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tri3d4
