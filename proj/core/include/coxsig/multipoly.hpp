#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxsig/matrix.hpp"
#include "coxsig/quad.hpp"

namespace coxsig {

/// Exponent vector for a monomial in x0..x_{n-1}.
using Mono = std::vector<unsigned>;

/// Graded lexicographic order: compare total degree first, then exponents
/// left to right.  Used everywhere monomial order matters so that output
/// and division are deterministic.
struct GradedLex {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over QuadScalar in a fixed number of
/// variables x0..x_{n-1}.  Terms are kept in graded-lex order.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const QuadScalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;

  /// Terms in increasing graded-lex order (leading term last).
  const std::map<Mono, QuadScalar, GradedLex>& terms() const { return terms_; }

  void add_term(const Mono& m, const QuadScalar& c);
  QuadScalar coeff(const Mono& m) const;

  /// Leading (graded-lex maximal) term; polynomial must be nonzero.
  std::pair<Mono, QuadScalar> leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const QuadScalar& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Substitute x_i := value for each (i, value) pair, keeping the same
  /// variable count (substituted variables simply no longer occur).
  MultiPoly substitute(const std::vector<std::pair<std::size_t, QuadScalar>>& values) const;

  /// Evaluate fully at the given point (size nvars).
  QuadScalar eval(const std::vector<QuadScalar>& point) const;

  /// Exact quotient this / g, or nullopt when g does not divide this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& g) const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Mono, QuadScalar, GradedLex> terms_;
};

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along rows, memoized on the set of surviving columns.
MultiPoly poly_det(const Matrix<MultiPoly>& m);

}  // namespace coxsig
