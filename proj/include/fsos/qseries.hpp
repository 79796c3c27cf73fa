// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_QSERIES_HPP
#define FSOS_QSERIES_HPP

#include <map>
#include <stdexcept>

namespace fsos {

// Truncated formal series sum_e c_e q^e with real exponents.  Exponents
// within `fuzz` of an existing one are merged; exponents at or above the
// cutoff are dropped.  Ring operations keep the tighter cutoff of the
// two operands.
class QSeries {
 public:
  explicit QSeries(double cutoff = 1e300, double fuzz = 1e-12)
      : cutoff_(cutoff), fuzz_(fuzz) {
    if (!(fuzz >= 0.0)) throw std::domain_error("QSeries: fuzz must be >= 0");
  }

  double cutoff() const { return cutoff_; }
  double fuzz() const { return fuzz_; }
  const std::map<double, double>& terms() const { return terms_; }

  void add_term(double e, double c);
  double coeff(double e) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries& scale(double s);
  QSeries shift(double e) const;  // multiply by q^e

  // Drop stored coefficients with |c| < floor.
  void prune(double floor);

  double eval(double q) const;

  static QSeries one(double cutoff, double fuzz = 1e-12) {
    QSeries s(cutoff, fuzz);
    s.add_term(0.0, 1.0);
    return s;
  }

 private:
  std::map<double, double> terms_;
  double cutoff_;
  double fuzz_;
};

}  // namespace fsos

#endif
