#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieeq/torus_chars.hpp"

namespace lieeq {

enum class Provenance { Haar, UniformTorus, Kronecker, Constant, File };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view s);

/// SplitMix64 used as a counter-based generator: draw i of stream `seed` is
/// mix(seed + (i + 1) * golden_gamma). Independent seeds give independent
/// streams; the draw order inside a stream is fixed per sampler.
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

/// Finite sequence of conjugacy classes, stored as torus representatives.
struct ClassSequence {
  GroupId group{};
  std::vector<TorusPoint> points;
  Provenance provenance = Provenance::File;
  std::optional<std::uint64_t> seed;
  std::string rng;               // generator name when random
  std::uint64_t proposals = 0;   // rejection sampler proposals (haar only)

  std::size_t size() const { return points.size(); }
  double acceptance_rate() const;
};

/// Exact Haar-distributed classes: uniform proposals on [0, 2pi)^r accepted
/// with probability |Delta|^2 / 4^{|R+|}. Each proposal consumes r + 1 draws
/// (r angles then the acceptance coin). SamplerStall after
/// max(10^4, 100 * 4^{|R+|} / |W|) proposals for a single acceptance.
ClassSequence sample_haar(const RootSystemTables& t, std::size_t n, std::uint64_t seed);

/// Uniform on the torus (not Haar on classes); a negative control.
ClassSequence sample_uniform_torus(const RootSystemTables& t, std::size_t n, std::uint64_t seed);

/// theta_i = i * v mod 2pi for i = 1..n.
ClassSequence kronecker_sequence(const RootSystemTables& t, std::size_t n, const std::vector<double>& v);

ClassSequence constant_sequence(const RootSystemTables& t, std::size_t n, const TorusPoint& p);

}  // namespace lieeq
