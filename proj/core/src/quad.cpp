#include "coxsig/quad.hpp"

#include <ostream>
#include <sstream>

namespace coxsig {

QuadScalar::QuadScalar(BigRat a, BigRat b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ != 1 && d_ != 2 && d_ != 5)
    throw domain_error("QuadScalar: discriminant must be 1, 2 or 5");
  if (d_ == 1 && b_ != 0)
    throw domain_error("QuadScalar: d=1 forces zero irrational part");
  normalize();
}

void QuadScalar::normalize() {
  if (b_ == 0) d_ = 1;
}

int QuadScalar::common_disc(const QuadScalar& o) const {
  if (d_ == o.d_) return d_;
  if (d_ == 1) return o.d_;
  if (o.d_ == 1) return d_;
  throw domain_error("QuadScalar: mixing sqrt(" + std::to_string(d_) +
                     ") with sqrt(" + std::to_string(o.d_) + ")");
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  d_ = common_disc(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  d_ = common_disc(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  d_ = common_disc(o);
  // (a1 + b1 r)(a2 + b2 r) = a1 a2 + d b1 b2 + (a1 b2 + b1 a2) r
  BigRat a = a_ * o.a_ + BigRat(d_) * b_ * o.b_;
  BigRat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw domain_error("QuadScalar: division by zero");
  // 1/(a + b r) = (a - b r)/(a^2 - d b^2); the norm is nonzero since
  // sqrt(d) is irrational for d in {2, 5}.
  BigRat n = a_ * a_ - BigRat(d_) * b_ * b_;
  QuadScalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  r.normalize();
  return r;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

std::string QuadScalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& q) {
  if (q.irr() == 0) return os << q.rat();
  if (q.rat() != 0) os << q.rat() << (q.irr() > 0 ? "+" : "");
  return os << q.irr() << "*sqrt" << q.disc();
}

}  // namespace coxsig
