#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

/// Exact non-negative fraction, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Sparsity of a graph: every subgraph H with at least one edge satisfies
/// e(H) <= k v(H) - l. When not sparse, `witness` is a vertex set whose
/// induced subgraph violates the bound.
struct SparsityVerdict {
  bool sparse = true;
  std::optional<std::vector<int>> witness;
};

/// (k,l)-pebble game. Requires k >= 1 and 0 <= l < 2k.
SparsityVerdict is_kl_sparse(const Graph& g, int k, int l);

enum class RamseyVerdict { Ramsey, NotRamsey };

struct RamseyCertificate {
  RamseyVerdict verdict = RamseyVerdict::NotRamsey;
  std::optional<std::vector<int>> dense_witness;
  std::optional<std::vector<std::vector<Edge>>> decomposition;
};

/// Every r-edge-colouring has a monochromatic cycle iff some subgraph H has
/// e(H) >= r(v(H)-1) + 1, i.e. iff g is not (r,r)-sparse.
RamseyCertificate is_ramsey_cyclicity(const Graph& g, int r);

enum class MinimalityReason { NotRamsey, RamseyNotMinimal, Minimal };

struct MinimalityVerdict {
  bool minimal = false;
  MinimalityReason reason = MinimalityReason::NotRamsey;
};

MinimalityVerdict is_minimal_ramsey(const Graph& g, int r);

struct DenseWitness {
  std::vector<int> vertices;
};

using ForestDecomposition = std::vector<std::vector<Edge>>;

/// Partition of E(g) into r forests, or a vertex set H with
/// e(H) > r (v(H) - 1) proving that none exists.
std::variant<ForestDecomposition, DenseWitness> decompose_into_forests(const Graph& g, int r);

struct FractionalArboricity {
  Rational value;
  std::vector<int> argmax_witness;
};

/// max over subgraphs J with v(J) > 1 of e(J) / (v(J) - 1). Requires n >= 2.
FractionalArboricity fractional_arboricity(const Graph& g);

/// Checks that `forests` partitions E(g) into acyclic classes.
bool is_valid_decomposition(const Graph& g, const ForestDecomposition& forests);

}  // namespace mrc
