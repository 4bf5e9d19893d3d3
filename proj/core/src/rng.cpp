#include "mrsk/rng.hpp"

#include "mrsk/errors.hpp"

namespace mrsk {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGamma;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t Rng::next_u64() { return splitmix64(key_ + (++counter_) * kGamma); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(errkind::OutOfRange, "below: bound must be positive");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  // Rejection on the largest multiple of bound below 2^64.
  std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t v = next_u64();
    if (v >= limit) return v % bound;
  }
}

long Rng::range(long lo, long hi) {
  if (lo > hi) fail(errkind::OutOfRange, "range: lo > hi");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::bernoulli(const Rational& p) {
  if (p < 0 || p > 1) fail(errkind::OutOfRange, "bernoulli: p outside [0, 1]");
  if (p == 0) return false;
  if (p == 1) return true;
  Integer num = p.get_num();
  Integer den = p.get_den();
  if (!den.fits_ulong_p()) {
    return below_big(den) < num;
  }
  return below(den.get_ui()) < num.get_ui();
}

Integer Rng::below_big(const Integer& bound) {
  if (bound <= 0) fail(errkind::OutOfRange, "below_big: bound must be positive");
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  for (;;) {
    Integer v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      v <<= 64;
      Integer chunk;
      std::uint64_t raw = next_u64();
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
      v |= chunk;
    }
    // Keep only `bits` bits so the rejection rate stays below 1/2.
    v >>= static_cast<unsigned long>(words * 64 - bits);
    if (v < bound) return v;
  }
}

}  // namespace mrsk
