// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "fsos/params.hpp"
#include "fsos/qseries.hpp"

namespace fsos {

// Weight multiplicity table for the level-k integrable module with highest
// weight label ell (0 <= ell <= k).  Entries are indexed by the offsets
// (p, q) of a weight lambda - p*alpha0 - q*alpha1.
struct StringTable {
  int k = 1;
  int ell = 0;
  int depth = 0;
  std::vector<std::vector<std::int64_t>> c;  // c[p][q]

  std::int64_t offset_mult(int p, int q) const;
  // Multiplicity at grade n on the string whose classical label is M.
  std::int64_t mult(long long M, int n) const;
  // Leading q-exponent of the class-M string function (M reduced mod 2k and
  // folded into [0, k]).
  double string_head(long long M) const;
  // String function as a series in q: sum_n mult(M*, n) q^(head + n).
  QSeries string_function(long long M) const;
};

// Character-series construction: alternating Weyl-orbit numerator divided by
// the product over positive roots.
StringTable build_string_table(int k, int ell, int depth);

// Independent multiplicity recursion (norm-weighted sum over positive roots);
// cross-check oracle for build_string_table.
struct FreudenthalTable {
  int k = 1;
  int ell = 0;
  std::vector<std::vector<std::int64_t>> memo;
  std::vector<std::vector<char>> have;

  std::int64_t offset_mult(int p, int q);
  std::int64_t mult(long long M, int n);
};

FreudenthalTable build_freudenthal_table(int k, int ell, int depth);

// Principally specialized character: theta-symbol numerator over the two
// specialized Euler products.
double chi_principal(int k, int ell, double x, double floor = 1e-15);

// The same character reassembled from string functions and a quadratic
// exponent lattice sum.
double chi_from_strings(int k, int ell, double x, const std::vector<StringTable>& tables,
                        int nwin = 48);

// Lattice sum with a shift parameter s; equals chi_principal for every
// integer s.
double shifted_lattice_sum(int k, int ell, int s, double x,
                           const std::vector<StringTable>& tables, int nwin = 48);

// Weighted string-function sum over heights a = m + ell + 2Z; equals
// [m]* chi^(k)_ell.  Returns (lhs, rhs).
struct PartitionIdentityValues {
  Cplx lhs{};
  Cplx rhs{};
};
PartitionIdentityValues partition_identity(int k, int ell, long long m, const ModelParams& P,
                                           const std::vector<StringTable>& tables, int awin = 40);

// Folded branching function b^(ell)_{m,a}(x) for integer r, r* = r - k.
double branching_function(int k, int r, int ell, long long m, long long a, double x,
                          const std::vector<StringTable>& tables, int jwin = 8);

// Virasoro minimal-model character (q = x^4), the k = 1 oracle for
// branching_function.
double virasoro_minimal_character(int r, long long m, long long a, double x, int depth = 64,
                                  int jwin = 8);

// max_a | lhs - rhs | over the coset decomposition
// chi^(k)_ell chi^(r-k-2)_{m-1} = sum_a b^(ell)_{m,a} chi^(r-2)_{a-1}.
double branching_identity_residual(int k, int r, int ell, long long m, double x,
                                   const std::vector<StringTable>& tables);

}  // namespace fsos
