#include "coxsig/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

namespace coxsig {

bool GradedLex::operator()(const Mono& a, const Mono& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  // Same degree: lexicographically larger exponent vector is the larger
  // monomial, so "less" means lexicographically smaller.
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const QuadScalar& c) {
  MultiPoly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  MultiPoly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, QuadScalar(1));
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Mono& lead = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0u));
}

void MultiPoly::add_term(const Mono& m, const QuadScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuadScalar MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuadScalar(0) : it->second;
}

std::pair<Mono, QuadScalar> MultiPoly::leading_term() const {
  if (terms_.empty()) throw domain_error("MultiPoly: zero polynomial has no leading term");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const QuadScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.nvars_);
  Mono m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::substitute(
    const std::vector<std::pair<std::size_t, QuadScalar>>& values) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    QuadScalar v = c;
    Mono rm = m;
    for (const auto& [i, x] : values) {
      for (unsigned e = 0; e < m[i]; ++e) v *= x;
      rm[i] = 0;
    }
    r.add_term(rm, v);
  }
  return r;
}

QuadScalar MultiPoly::eval(const std::vector<QuadScalar>& point) const {
  QuadScalar total(0);
  for (const auto& [m, c] : terms_) {
    QuadScalar v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& g) const {
  if (g.is_zero()) throw domain_error("MultiPoly: division by zero polynomial");
  MultiPoly q(nvars_);
  MultiPoly r = *this;
  const auto& [gm, gc] = *g.terms_.rbegin();
  QuadScalar gc_inv = gc.inverse();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    Mono qm(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < gm[i]) return std::nullopt;
      qm[i] = rm[i] - gm[i];
    }
    // Leading terms must cancel at every step when the division is exact,
    // since graded-lex order is compatible with multiplication.
    QuadScalar qc = rc * gc_inv;
    MultiPoly t(nvars_);
    t.add_term(qm, qc);
    q.add_term(qm, qc);
    r -= t * g;
  }
  return q;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  // Print leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    bool has_var = false;
    for (unsigned e : m) has_var = has_var || e > 0;
    if (!has_var || c != QuadScalar(1)) {
      bool plain = c.is_rational() && c.rat() >= 0;
      if (plain)
        os << c;
      else
        os << "(" << c << ")";
      if (has_var) os << "*";
    }
    bool star = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      os << name(i);
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

MultiPoly poly_det(const Matrix<MultiPoly>& mat) {
  const std::size_t n = mat.rows();
  if (n != mat.cols()) throw domain_error("poly_det: matrix must be square");
  if (n == 0) throw domain_error("poly_det: empty matrix");
  const std::size_t nv = mat(0, 0).nvars();
  if (n > 30) throw domain_error("poly_det: matrix too large");
  // Expand along successive rows; the minor reached at row r is determined
  // by the set of columns still alive, so memoize on that bitmask.
  std::unordered_map<unsigned long, MultiPoly> memo;
  auto rec = [&](auto&& self, unsigned long cols) -> MultiPoly {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    std::size_t r = n - static_cast<std::size_t>(__builtin_popcountl(cols));
    MultiPoly result(nv);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols >> c & 1)) continue;
      const MultiPoly& e = mat(r, c);
      if (!e.is_zero()) {
        MultiPoly sub = (r + 1 == n) ? MultiPoly::constant(nv, QuadScalar(1))
                                     : self(self, cols & ~(1ul << c));
        MultiPoly term = e * sub;
        if (sign < 0) term *= QuadScalar(-1);
        result += term;
      }
      sign = -sign;
    }
    memo.emplace(cols, result);
    return result;
  };
  return rec(rec, (1ul << n) - 1);
}

}  // namespace coxsig
