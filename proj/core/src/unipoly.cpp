#include "coxsig/unipoly.hpp"

#include <sstream>

namespace coxsig {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == QuadScalar(0)) c_.pop_back();
}

UniPoly UniPoly::monomial(std::size_t deg, QuadScalar coeff) {
  std::vector<QuadScalar> c(deg + 1);
  c[deg] = std::move(coeff);
  return UniPoly(std::move(c));
}

QuadScalar UniPoly::eval(const QuadScalar& x) const {
  QuadScalar r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<QuadScalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<QuadScalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == QuadScalar(0)) continue;
    if (!first) os << " + ";
    os << "(" << c_[i] << ")";
    if (i > 0) os << "*l^" << i;
    first = false;
  }
  return os.str();
}

QuadScalar trace(const QMatrix& m) {
  QuadScalar t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

UniPoly char_poly(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw domain_error("char_poly: matrix must be square");
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1);
  // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<QuadScalar> c(n + 1);
  c[n] = QuadScalar(1);
  QMatrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      QMatrix t = m;
      for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
      m = a * t;
    }
    c[n - k] = -(trace(m) / QuadScalar(static_cast<long>(k)));
  }
  return UniPoly(std::move(c));
}

QuadScalar det(QMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw domain_error("det: matrix must be square");
  QuadScalar d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == QuadScalar(0)) ++p;
    if (p == n) return QuadScalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    QuadScalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == QuadScalar(0)) continue;
      QuadScalar f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

QMatrix solve(QMatrix m, QMatrix rhs) {
  const std::size_t n = m.rows();
  if (n != m.cols() || rhs.rows() != n) throw domain_error("solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == QuadScalar(0)) ++p;
    if (p == n) throw domain_error("solve: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < std::max(n, rhs.cols()); ++j) {
        if (j < n) std::swap(m(p, j), m(c, j));
        if (j < rhs.cols()) std::swap(rhs(p, j), rhs(c, j));
      }
    QuadScalar inv = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) m(c, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == QuadScalar(0)) continue;
      QuadScalar f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) m(r, j) -= f * m(c, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(c, j);
    }
  }
  return rhs;
}

QMatrix inverse(QMatrix m) {
  QMatrix id = QMatrix::identity(m.rows());
  return solve(std::move(m), std::move(id));
}

}  // namespace coxsig
