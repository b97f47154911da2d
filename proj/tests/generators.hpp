#pragma once

#include <random>
#include <vector>

#include "lieeq/root_system.hpp"
#include "lieeq/torus_chars.hpp"

// Hand-rolled generators for the property tests. Fixed seeds keep failures
// reproducible.
namespace lieeq::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  TorusPoint torus(int rank) {
    std::vector<double> th(static_cast<std::size_t>(rank));
    for (auto& v : th) v = uniform(0.0, kTwoPi);
    return TorusPoint(th);
  }

  Weight dominant(int rank, int max_level) {
    Weight w{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    const int level = integer(0, max_level);
    for (int s = 0; s < level; ++s) ++w.coords[static_cast<std::size_t>(integer(0, rank - 1))];
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lieeq::testgen
