// SPDX-License-Identifier: Apache-2.0
#include "fsos/qseries.hpp"

#include <algorithm>
#include <cmath>

namespace fsos {

void QSeries::add_term(double e, double c) {
  if (e >= cutoff_ || c == 0.0) return;
  auto it = terms_.lower_bound(e - fuzz_);
  if (it != terms_.end() && std::abs(it->first - e) <= fuzz_) {
    it->second += c;
  } else {
    terms_.emplace(e, c);
  }
}

double QSeries::coeff(double e) const {
  auto it = terms_.lower_bound(e - fuzz_);
  if (it != terms_.end() && std::abs(it->first - e) <= fuzz_) return it->second;
  return 0.0;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  cutoff_ = std::min(cutoff_, o.cutoff_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  cutoff_ = std::min(cutoff_, o.cutoff_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries s = *this;
  s += o;
  return s;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries s = *this;
  s -= o;
  return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries s(std::min(cutoff_, o.cutoff_), std::max(fuzz_, o.fuzz_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      if (e1 + e2 >= s.cutoff_) break;  // o.terms_ ascending in exponent
      s.add_term(e1 + e2, c1 * c2);
    }
  }
  return s;
}

QSeries& QSeries::scale(double f) {
  for (auto& [e, c] : terms_) c *= f;
  return *this;
}

QSeries QSeries::shift(double e) const {
  QSeries s(cutoff_, fuzz_);
  for (const auto& [e0, c] : terms_) s.add_term(e0 + e, c);
  return s;
}

void QSeries::prune(double floor) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < floor)
      it = terms_.erase(it);
    else
      ++it;
  }
}

double QSeries::eval(double q) const {
  double sum = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    sum += it->second * std::pow(q, it->first);
  return sum;
}

}  // namespace fsos
