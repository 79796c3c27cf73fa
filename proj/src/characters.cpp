// SPDX-License-Identifier: Apache-2.0
#include "fsos/characters.hpp"

#include <cmath>
#include <stdexcept>

#include "fsos/bracket.hpp"
#include "fsos/theta.hpp"

namespace fsos {

namespace {

// Reduce a class label into [0, k]: 2k-periodic and even in M.
long long fold_class(long long M, int k) {
  const long long period = 2LL * k;
  long long m = M % period;
  if (m < 0) m += period;
  if (m > k) m = period - m;
  return m;
}

double conformal_head(int k, int ell, long long Mstar) {
  const double hl = static_cast<double>(ell) * (ell + 2) / (4.0 * (k + 2));
  return hl - static_cast<double>(Mstar * Mstar) / (4.0 * k) -
         static_cast<double>(k) / (8.0 * (k + 2));
}

}  // namespace

std::int64_t StringTable::offset_mult(int p, int q) const {
  if (p < 0 || q < 0) return 0;
  if (p >= static_cast<int>(c.size()) || q >= static_cast<int>(c[p].size()))
    throw std::out_of_range("StringTable: offset beyond tabulated depth");
  return c[p][q];
}

std::int64_t StringTable::mult(long long M, int n) const {
  if (n < 0) return 0;
  if ((M - ell) % 2 != 0) return 0;
  const long long q = n + (ell - M) / 2;
  if (q < 0) return 0;
  return offset_mult(n, static_cast<int>(q));
}

double StringTable::string_head(long long M) const {
  return conformal_head(k, ell, fold_class(M, k));
}

QSeries StringTable::string_function(long long M) const {
  QSeries s;
  if ((M - ell) % 2 != 0) return s;
  const long long Mstar = fold_class(M, k);
  const double head = conformal_head(k, ell, Mstar);
  for (int n = 0; n <= depth; ++n) {
    const std::int64_t m = mult(Mstar, n);
    if (m != 0) s.add_term(head + n, static_cast<double>(m));
  }
  return s;
}

StringTable build_string_table(int k, int ell, int depth) {
  if (ell < 0 || ell > k) throw std::domain_error("build_string_table: need 0 <= ell <= k");
  const int D = depth + k + 2;
  StringTable T;
  T.k = k;
  T.ell = ell;
  T.depth = depth;
  T.c.assign(D + 1, std::vector<std::int64_t>(D + 1, 0));

  // Alternating-orbit numerator: walk (m, j) from (ell+1, 0) under
  // s1:(m,j)->(-m,j) and s0:(m,j)->(2L-m, j-(L-m)), sign per reflection.
  const long long L = k + 2;
  auto record = [&](long long m, long long j, int sign) {
    const long long p = -j;
    const long long q = p - (m - (ell + 1)) / 2;
    if (p < 0 || q < 0 || p > D || q > D) return;
    T.c[p][q] += sign;
  };
  record(ell + 1, 0, 1);
  for (int first : {0, 1}) {
    long long m = ell + 1, j = 0;
    int sign = 1;
    int next = first;
    for (int len = 1; len < 100000; ++len) {
      if (next == 0) {
        j -= L - m;
        m = 2 * L - m;
      } else {
        m = -m;
      }
      sign = -sign;
      next = 1 - next;
      record(m, j, sign);
      if (-j > 2 * D + 4) break;
    }
  }

  // Divide by prod (1 - A^a B^b) over positive roots via prefix sums.
  auto divide = [&](int a, int b) {
    for (int i = a; i <= D; ++i)
      for (int jq = b; jq <= D; ++jq) T.c[i][jq] += T.c[i - a][jq - b];
  };
  divide(0, 1);
  for (int n = 1; n <= D; ++n) {
    divide(n, n + 1);
    divide(n, n - 1);
    divide(n, n);
  }
  return T;
}

std::int64_t FreudenthalTable::offset_mult(int p, int q) {
  if (p < 0 || q < 0) return 0;
  if (p >= static_cast<int>(memo.size()) || q >= static_cast<int>(memo[p].size()))
    throw std::out_of_range("FreudenthalTable: offset beyond tabulated depth");
  return memo[p][q];
}

std::int64_t FreudenthalTable::mult(long long M, int n) {
  if (n < 0) return 0;
  if ((M - ell) % 2 != 0) return 0;
  const long long q = n + (ell - M) / 2;
  if (q < 0) return 0;
  return offset_mult(n, static_cast<int>(q));
}

FreudenthalTable build_freudenthal_table(int k, int ell, int depth) {
  const int D = depth + k + 2;
  FreudenthalTable T;
  T.k = k;
  T.ell = ell;
  T.memo.assign(D + 1, std::vector<std::int64_t>(D + 1, 0));
  T.have.assign(D + 1, std::vector<char>(D + 1, 0));
  T.memo[0][0] = 1;
  T.have[0][0] = 1;

  const double L = k + 2;
  auto get = [&](int a, int b) -> std::int64_t {
    if (a < 0 || b < 0) return 0;
    if (a > D || b > D) return 0;
    return T.have[a][b] ? T.memo[a][b] : 0;
  };

  for (int s = 1; s <= 2 * D; ++s) {
    for (int a = std::max(0, s - D); a <= std::min(D, s); ++a) {
      const int b = s - a;
      const double md = ell + 2.0 * a - 2.0 * b;  // classical label of mu
      const double norm_gap = 2.0 * L * a + 2.0 * (b - a) * (ell + 1) -
                              2.0 * static_cast<double>(b - a) * (b - a);
      double rhs = 0.0;
      // real roots alpha1 + n*delta (n >= 0): offsets (n, n+1) per step
      for (int n = 0; n <= a || n == 0; ++n) {
        if (n > 0 && n > a) break;
        for (int j = 1;; ++j) {
          const int ap = a - j * n, bp = b - j * (n + 1);
          if (ap < 0 || bp < 0) break;
          const std::int64_t mu = get(ap, bp);
          if (mu != 0) rhs += static_cast<double>(mu) * (md + 2.0 * j + n * k);
        }
      }
      // real roots n*delta - alpha1 (n >= 1): offsets (n, n-1)
      for (int n = 1; n <= a; ++n) {
        for (int j = 1;; ++j) {
          const int ap = a - j * n, bp = b - j * (n - 1);
          if (ap < 0 || bp < 0) break;
          const std::int64_t mu = get(ap, bp);
          if (mu != 0) rhs += static_cast<double>(mu) * (-md + 2.0 * j + n * k);
        }
      }
      // imaginary roots n*delta: offsets (n, n), pairing n*k
      for (int n = 1; n <= a; ++n) {
        for (int j = 1;; ++j) {
          const int ap = a - j * n, bp = b - j * n;
          if (ap < 0 || bp < 0) break;
          const std::int64_t mu = get(ap, bp);
          if (mu != 0) rhs += static_cast<double>(mu) * (n * k);
        }
      }
      rhs *= 2.0;
      std::int64_t value = 0;
      if (norm_gap != 0.0) {
        const double v = rhs / norm_gap;
        value = static_cast<std::int64_t>(std::llround(v));
        if (std::abs(v - static_cast<double>(value)) > 1e-6)
          throw std::runtime_error("freudenthal: non-integer multiplicity");
      }
      T.memo[a][b] = value;
      T.have[a][b] = 1;
    }
  }
  return T;
}

double chi_principal(int k, int ell, double x, double floor) {
  const double u = ell + 1;
  const double s = k + 2;
  const Cplx num = std::pow(x, 0.5 + u * u / s - u) *
                   theta_triple(Cplx(std::pow(x, 2.0 * u)), std::pow(x, 2.0 * s), floor);
  const Cplx den = pochhammer(Cplx(x * x), x * x, floor) *
                   pochhammer(Cplx(x * x), std::pow(x, 4.0), floor);
  return (num / den).real();
}

namespace {

const StringTable& table_for(int ell, const std::vector<StringTable>& tables) {
  for (const auto& t : tables)
    if (t.ell == ell) return t;
  throw std::invalid_argument("character tables: label not tabulated");
}

}  // namespace

double chi_from_strings(int k, int ell, double x, const std::vector<StringTable>& tables,
                        int nwin) {
  const StringTable& T = table_for(ell, tables);
  const double q = std::pow(x, 4.0);
  double total = 0.0;
  for (int M = 0; M <= 2 * k - 1; ++M) {
    if ((M - ell) % 2 != 0) continue;
    const double cM = T.string_function(M).eval(q);
    double theta = 0.0;
    for (int n = -nwin; n <= nwin; ++n) {
      const double t = n + static_cast<double>(M) / (2.0 * k);
      theta += std::pow(x, 4.0 * k * t * t - 2.0 * k * t);
    }
    total += cM * theta;
  }
  return total;
}

double shifted_lattice_sum(int k, int ell, int s, double x,
                           const std::vector<StringTable>& tables, int nwin) {
  const StringTable& T = table_for(ell, tables);
  const double q = std::pow(x, 4.0);
  double total = 0.0;
  for (int M = 0; M <= 2 * k - 1; ++M) {
    if ((M - ell) % 2 != 0) continue;
    const double cM = T.string_function(M).eval(q);
    double theta = 0.0;
    for (int n = -nwin; n <= nwin; ++n) {
      const double arg = k * (2.0 * n - s) + M + k / 2.0;
      theta += std::pow(x, arg * arg / k);
    }
    total += cM * theta;
  }
  return total * std::pow(x, -static_cast<double>(k) / 4.0);
}

PartitionIdentityValues partition_identity(int k, int ell, long long m, const ModelParams& P,
                                           const std::vector<StringTable>& tables, int awin) {
  const StringTable& T = table_for(ell, tables);
  const double x = P.x;
  const double r = P.r;
  const double rs = P.r_star();
  const double q = std::pow(x, 4.0);
  Cplx lhs = 0.0;
  for (long long t = -awin; t <= awin; ++t) {
    const long long a = m + ell + 2 * t;
    const double cls = T.string_function(a - m).eval(q);
    if (cls == 0.0) continue;
    const double e = (m * r - a * rs) * (m * r - a * rs) / (k * r * rs);
    lhs += bracket(Cplx(static_cast<double>(a)), P) * cls * std::pow(x, e);
  }
  PartitionIdentityValues out;
  out.lhs = lhs;
  out.rhs = bracket_star(Cplx(static_cast<double>(m)), P) * chi_principal(k, ell, x);
  return out;
}

double branching_function(int k, int r, int ell, long long m, long long a, double x,
                          const std::vector<StringTable>& tables, int jwin) {
  const StringTable& T = table_for(ell, tables);
  const double rs = r - k;
  const double q = std::pow(x, 4.0);
  double total = 0.0;
  for (long long j = -jwin; j <= jwin; ++j) {
    const double shifted = a + 2.0 * r * j;
    const double e_minus = (m * r - shifted * rs) * (m * r - shifted * rs) / (k * r * rs);
    const double e_plus = (m * r + shifted * rs) * (m * r + shifted * rs) / (k * r * rs);
    const double c_minus = T.string_function(a - m + 2 * r * j).eval(q);
    const double c_plus = T.string_function(a + m + 2 * r * j).eval(q);
    total += c_minus * std::pow(x, e_minus) - c_plus * std::pow(x, e_plus);
  }
  return total;
}

double virasoro_minimal_character(int r, long long m, long long a, double x, int depth,
                                  int jwin) {
  const double q = std::pow(x, 4.0);
  const double rs = r - 1;
  double euler = 1.0;
  for (int n = 1; n <= depth; ++n) euler *= 1.0 - std::pow(q, n);
  double total = 0.0;
  for (long long j = -jwin; j <= jwin; ++j) {
    const double em = 2.0 * r * rs * j + a * rs - m * r;
    const double ep = 2.0 * r * rs * j + a * rs + m * r;
    total += std::pow(q, em * em / (4.0 * r * rs)) - std::pow(q, ep * ep / (4.0 * r * rs));
  }
  return std::pow(q, -1.0 / 24.0) / euler * total;
}

double branching_identity_residual(int k, int r, int ell, long long m, double x,
                                   const std::vector<StringTable>& tables) {
  const double lhs = chi_principal(k, ell, x) * chi_principal(r - k - 2, static_cast<int>(m - 1), x);
  double rhs = 0.0;
  for (long long a = 1; a <= r - 1; ++a)
    rhs += branching_function(k, r, ell, m, a, x, tables) *
           chi_principal(r - 2, static_cast<int>(a - 1), x);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace fsos
