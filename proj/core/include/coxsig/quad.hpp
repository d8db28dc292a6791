#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace coxsig {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown on domain violations (mixed field tags, division by zero, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact number a + b*sqrt(d) with rational a, b and d in {1, 2, 5}.
/// d == 1 always has b == 0; a value whose irrational part cancels to zero
/// is normalized back to d == 1, so purely rational values of any origin
/// compare equal and mix freely with either field.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}  // NOLINT: implicit by design
  QuadScalar(BigRat a) : a_(std::move(a)) {}
  QuadScalar(BigRat a, BigRat b, int d);

  static QuadScalar sqrt2() { return QuadScalar(0, 1, 2); }
  /// The golden ratio (1 + sqrt(5))/2, i.e. 2*cos(pi/5).
  static QuadScalar phi() { return QuadScalar(BigRat(1, 2), BigRat(1, 2), 5); }

  const BigRat& rat() const { return a_; }
  const BigRat& irr() const { return b_; }
  int disc() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return d_ == 1; }

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  QuadScalar inverse() const;

  std::string str() const;

 private:
  int common_disc(const QuadScalar& o) const;
  void normalize();

  BigRat a_;
  BigRat b_;
  int d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& q);

}  // namespace coxsig
