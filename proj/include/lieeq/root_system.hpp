#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieeq {

/// Supported compact simply-connected groups, labelled by Cartan type.
enum class GroupId { A1, A2, C2, G2, A3, B3, C3 };

std::string_view to_string(GroupId g);
std::optional<GroupId> parse_group(std::string_view label);
std::vector<GroupId> all_groups();

/// Integral weight in the fundamental-weight basis. Also labels an
/// irreducible character when dominant.
struct Weight {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  int level() const;  // sum of coordinates

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

/// Dense row-major square integer matrix. Small (rank <= 3) so value semantics
/// are fine everywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}
  IntMatrix(int n, std::vector<int> row_major);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  std::vector<int> apply(const std::vector<int>& v) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  std::int64_t determinant() const;
  const std::vector<int>& data() const { return a_; }

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

struct Root {
  std::vector<int> simple_coords;
  std::vector<int> fw_coords;
};

/// Weyl group element acting on fundamental-weight coordinates.
struct WeylElement {
  IntMatrix matrix;
  int sign = 1;    // (-1)^length
  int length = 0;  // reduced word length, from the closure BFS depth
};

struct FundamentalInfo {
  std::int64_t dimension = 0;
  int dual_index = 0;
  bool is_self_dual = true;
};

/// Immutable per-group bundle. Built once by build_tables(); read-only after.
struct RootSystemTables {
  GroupId group{};
  int rank = 0;
  IntMatrix cartan;               // simple root i has fw coords = column i
  std::vector<int> symmetrizer;   // d_i = (alpha_i, alpha_i) / 2
  std::vector<Root> positive_roots;
  std::vector<WeylElement> weyl;  // identity first, BFS order
  WeylElement w0;
  Weight rho;
  std::vector<FundamentalInfo> fundamental;
  int r1 = 0;
  int r2 = 0;
  std::int64_t M = 0;
  int dim_g = 0;

  // Gram matrix of the fundamental weights scaled to integers:
  // (lambda_i, lambda_j) = weight_gram(i, j) / gram_scale.
  IntMatrix weight_gram;
  std::int64_t gram_scale = 1;

  // Coordinate layout of the pushforward map: real characters in node
  // order, then one (Re, Im) pair per dual pair keyed by its lower index.
  std::vector<int> real_nodes;
  std::vector<int> pair_nodes;

  std::size_t weyl_order() const { return weyl.size(); }
  /// Scaled inner product on fundamental-weight coordinates.
  std::int64_t pairing(const std::vector<int>& a, const std::vector<int>& b) const;
};

RootSystemTables build_tables(GroupId group);

/// Simple reflection s_i (0-based i) on fundamental-weight coordinates.
Weight simple_reflection(const RootSystemTables& t, int i, const Weight& w);

/// Weyl dimension formula in exact integer arithmetic.
std::int64_t weyl_dimension(const RootSystemTables& t, const Weight& lam);

struct FreudenthalLimits {
  int max_level_sum = 12;
  std::size_t node_cap = 20000;
};

using WeightSystem = std::map<Weight, std::int64_t>;

/// Full weight system of the irreducible module with highest weight lam,
/// computed level by level with Freudenthal's recursion.
WeightSystem freudenthal_multiplicities(const RootSystemTables& t, const Weight& lam,
                                        const FreudenthalLimits& limits = {});

/// -w0(lam): highest weight of the dual representation.
Weight dual_weight(const RootSystemTables& t, const Weight& lam);

Weight fundamental_weight(const RootSystemTables& t, int i);

}  // namespace lieeq
