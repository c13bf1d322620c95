#include "semigaps/sampling.hpp"

#include <numeric>
#include <vector>

namespace semigaps {

namespace {

constexpr int kMaxAttempts = 200000;

[[noreturn]] void exhausted(const char* what) {
  throw computation_error(std::string("sampler could not produce a ") + what +
                          " within the attempt budget");
}

}  // namespace

TupleSampler::TupleSampler(std::uint64_t seed) : rng_(seed) {}

std::uint64_t TupleSampler::draw(std::uint64_t lo, std::uint64_t hi) {
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  return dist(rng_);
}

GeneratorTuple TupleSampler::coprime_pair(std::uint64_t bound) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t x = draw(2, bound);
    const std::uint64_t y = draw(2, bound);
    if (x == y || std::gcd(x, y) != 1) continue;
    return validate({x, y});
  }
  exhausted("coprime pair");
}

GeneratorTuple TupleSampler::minimal_triple(std::uint64_t bound) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t x = draw(2, bound);
    const std::uint64_t y = draw(2, bound);
    const std::uint64_t z = draw(2, bound);
    if (x == y || y == z || x == z) continue;
    if (std::gcd(std::gcd(x, y), z) != 1) continue;
    const GeneratorTuple g = validate({x, y, z});
    if (!g.minimal) continue;
    return g;
  }
  exhausted("minimal triple");
}

GeneratorTuple TupleSampler::nonsymmetric_triple(std::uint64_t bound) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const GeneratorTuple g = minimal_triple(bound);
    const RelationMatrix rel = minimal_relations(g);
    if (!classify(g, rel).symmetric()) return g;
  }
  exhausted("non-symmetric triple");
}

GeneratorTuple TupleSampler::symmetric_triple(std::uint64_t bound) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t a = draw(2, bound / 2);
    const std::uint64_t b = draw(2, bound / 2);
    if (a == b || std::gcd(a, b) != 1) continue;
    const std::uint64_t scale_cap = bound / std::max(a, b);
    if (scale_cap < 2) continue;
    const std::uint64_t c = draw(2, scale_cap);

    // s ranges over small combinations x*a + y*b; the multiples of a
    // single generator and the generators themselves never survive the
    // minimality check, so they are filtered rather than excluded here.
    const std::uint64_t x = draw(0, 4);
    const std::uint64_t y = draw(0, 4);
    const std::uint64_t s = x * a + y * b;
    if (s < 2 || s > bound) continue;
    if (std::gcd(c, s) != 1) continue;

    const std::uint64_t g1 = c * a;
    const std::uint64_t g2 = c * b;
    if (g1 > bound || g2 > bound) continue;
    if (s == g1 || s == g2 || g1 == g2) continue;

    const GeneratorTuple g = validate({g1, g2, s});
    if (g.count() != 3 || !g.minimal) continue;
    const RelationMatrix rel = minimal_relations(g);
    if (classify(g, rel).symmetric()) return g;
  }
  exhausted("symmetric triple");
}

}  // namespace semigaps
