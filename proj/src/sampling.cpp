#include "lieeq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieeq/error.hpp"

namespace lieeq {

namespace {

constexpr double kMinProposalsPerAccept = 1e4;

void require_nonempty(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sequence length must be at least 1");
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Haar: return "haar";
    case Provenance::UniformTorus: return "uniform_torus";
    case Provenance::Kronecker: return "kronecker";
    case Provenance::Constant: return "constant";
    case Provenance::File: return "file";
  }
  return "file";
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  for (auto p : {Provenance::Haar, Provenance::UniformTorus, Provenance::Kronecker, Provenance::Constant,
                 Provenance::File}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double ClassSequence::acceptance_rate() const {
  if (proposals == 0) return 1.0;
  return static_cast<double>(points.size()) / static_cast<double>(proposals);
}

ClassSequence sample_haar(const RootSystemTables& t, std::size_t n, std::uint64_t seed) {
  require_nonempty(n);
  SplitMix64 rng(seed);
  ClassSequence seq{t.group, {}, Provenance::Haar, seed, std::string(SplitMix64::kName), 0};
  seq.points.reserve(n);
  const double envelope = std::pow(4.0, static_cast<double>(t.positive_roots.size()));
  // E|Delta|^2 = |W| under uniform proposals, so a single acceptance costs
  // envelope / |W| proposals on average. B3 and C3 need ~5500.
  const double expected = envelope / static_cast<double>(t.weyl_order());
  const auto cap = static_cast<std::uint64_t>(std::max(kMinProposalsPerAccept, 100.0 * expected));
  std::vector<double> theta(static_cast<std::size_t>(t.rank));
  while (seq.points.size() < n) {
    std::uint64_t tries = 0;
    while (true) {
      if (++tries > cap) {
        throw Error(ErrorKind::SamplerStall,
                    "rejection sampler exceeded " + std::to_string(cap) + " proposals for one acceptance");
      }
      for (auto& th : theta) th = kTwoPi * rng.uniform();
      const double coin = rng.uniform();
      ++seq.proposals;
      TorusPoint p(theta);
      if (coin * envelope < std::norm(weyl_denominator(t, p))) {
        seq.points.push_back(std::move(p));
        break;
      }
    }
  }
  return seq;
}

ClassSequence sample_uniform_torus(const RootSystemTables& t, std::size_t n, std::uint64_t seed) {
  require_nonempty(n);
  SplitMix64 rng(seed);
  ClassSequence seq{t.group, {}, Provenance::UniformTorus, seed, std::string(SplitMix64::kName), 0};
  seq.points.reserve(n);
  std::vector<double> theta(static_cast<std::size_t>(t.rank));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& th : theta) th = kTwoPi * rng.uniform();
    seq.points.emplace_back(theta);
  }
  return seq;
}

ClassSequence kronecker_sequence(const RootSystemTables& t, std::size_t n, const std::vector<double>& v) {
  require_nonempty(n);
  if (static_cast<int>(v.size()) != t.rank) {
    throw Error(ErrorKind::InvalidArgument, "Kronecker direction must have one entry per torus coordinate");
  }
  ClassSequence seq{t.group, {}, Provenance::Kronecker, std::nullopt, {}, 0};
  seq.points.reserve(n);
  std::vector<double> theta(v.size());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) theta[j] = std::fmod(static_cast<double>(i) * v[j], kTwoPi);
    seq.points.emplace_back(theta);
  }
  return seq;
}

ClassSequence constant_sequence(const RootSystemTables& t, std::size_t n, const TorusPoint& p) {
  require_nonempty(n);
  if (p.rank() != t.rank) throw Error(ErrorKind::InvalidArgument, "torus point rank mismatch");
  ClassSequence seq{t.group, std::vector<TorusPoint>(n, p), Provenance::Constant, std::nullopt, {}, 0};
  return seq;
}

}  // namespace lieeq
