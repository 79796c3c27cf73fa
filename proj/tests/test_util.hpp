// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>

inline bool close(double a, double b, double tol, double floor = 1.0) {
  return std::abs(a - b) <= tol * std::max({floor, std::abs(a), std::abs(b)});
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol,
                  double floor = 1.0) {
  return std::abs(a - b) <= tol * std::max({floor, std::abs(a), std::abs(b)});
}
