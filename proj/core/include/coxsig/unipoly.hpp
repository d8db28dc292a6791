#pragma once

#include <string>
#include <vector>

#include "coxsig/matrix.hpp"
#include "coxsig/quad.hpp"

namespace coxsig {

/// Dense univariate polynomial in one variable (lambda), exact coefficients,
/// coefficient i is the coefficient of lambda^i; trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<QuadScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(std::size_t deg, QuadScalar coeff);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<QuadScalar>& coeffs() const { return c_; }
  QuadScalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadScalar(0); }

  QuadScalar eval(const QuadScalar& x) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  std::string str() const;

 private:
  void trim();
  std::vector<QuadScalar> c_;
};

/// Characteristic polynomial det[lambda I - m] via the Faddeev-LeVerrier
/// trace recursion; monic of degree m.rows().
UniPoly char_poly(const QMatrix& m);

}  // namespace coxsig
