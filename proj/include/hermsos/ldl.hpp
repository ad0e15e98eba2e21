#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hermsos/herm_matrix.hpp"

namespace hermsos {

/// P M P* = L D L* with unit lower-triangular L and real diagonal D.
template <ScalarType S>
struct LdlFactorization {
  std::size_t size = 0;
  /// Row i of P M P* is row perm[i] of M.
  std::vector<std::size_t> perm;
  /// Row-major, unit diagonal, zero above the diagonal.
  std::vector<S> lower;
  std::vector<RealOf<S>> pivots;
  /// Permuted positions whose pivot is zero with a zero trailing block.
  std::vector<std::size_t> skipped;
  /// Set in the float tower: zero tests used a tolerance.
  bool numeric = false;

  const S& l(std::size_t i, std::size_t j) const { return lower[i * size + j]; }
  /// Number of strictly positive pivots.
  std::size_t rank() const;
  bool positive_definite() const { return rank() == size; }
};

/// A direction v with v* M v < 0.
template <ScalarType S>
struct NegativityWitness {
  std::vector<S> vector;
  RealOf<S> value;
  bool numeric = false;
};

template <ScalarType S>
using LdlResult = std::variant<LdlFactorization<S>, NegativityWitness<S>>;

struct LdlOptions {
  /// Float tower only: |pivot| <= zero_tolerance * (max initial diagonal) is zero.
  double zero_tolerance = 1e-9;
};

/// Diagonal-pivoting LDL* that either certifies M >= 0 or returns an exact
/// (exact tower) negativity witness. Pivots are chosen as the largest
/// remaining diagonal entry. Throws NonHermitian.
template <ScalarType S>
LdlResult<S> ldlt_psd(const HermMatrix<S>& m, const LdlOptions& options = {});

/// P* L D L* P, the matrix the factorization claims to represent.
template <ScalarType S>
HermMatrix<S> reconstruct(const LdlFactorization<S>& f, int n, int d);

}  // namespace hermsos
