#include "mlcn/random.hpp"

#include "mlcn/errors.hpp"

namespace mlcn {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("Rng::below requires a positive bound");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replicate, std::uint64_t step,
                          StreamTag tag) noexcept {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ replicate);
  h = mix64(h ^ step);
  h = mix64(h ^ static_cast<std::uint64_t>(tag));
  return h;
}

}  // namespace mlcn
