#include "coxsig/repr.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>

#include <json.hpp>

namespace coxsig {

MultiPoly d_poly(const Representation& rep) {
  const std::size_t n = rep.matrices.size();
  const std::size_t deg = rep.degree;
  const std::size_t nvars = n + 1;
  Matrix<MultiPoly> m(deg, deg);
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = 0; j < deg; ++j) {
      MultiPoly p(nvars);
      if (i == j) p += MultiPoly::variable(nvars, 0);
      for (std::size_t k = 0; k < n; ++k) {
        const QuadScalar& c = rep.matrices[k](i, j);
        if (c.is_zero()) continue;
        MultiPoly term = MultiPoly::variable(nvars, k + 1);
        term *= c;
        p += term;
      }
      m(i, j) = std::move(p);
    }
  return poly_det(m);
}

MultiPoly d_tilde(const Representation& rep) {
  return d_poly(rep).substitute({{0, QuadScalar(1)}});
}

Representation trivial_rep(std::size_t ngens) {
  Representation r{"trivial", 1, {}};
  for (std::size_t i = 0; i < ngens; ++i) r.matrices.push_back(QMatrix::identity(1));
  return r;
}

Representation sign_rep(std::size_t ngens) {
  Representation r{"sign", 1, {}};
  QMatrix m(1, 1);
  m(0, 0) = QuadScalar(-1);
  for (std::size_t i = 0; i < ngens; ++i) r.matrices.push_back(m);
  return r;
}

Representation reflection_rep(const CoxeterSystem& sys) {
  return Representation{"reflection", sys.rank, reflection_generators(sys)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.matrices.size() != b.matrices.size())
    throw domain_error("direct_sum: generator count mismatch");
  Representation r{a.name + "+" + b.name, a.degree + b.degree, {}};
  for (std::size_t k = 0; k < a.matrices.size(); ++k) {
    QMatrix m(r.degree, r.degree);
    for (std::size_t i = 0; i < a.degree; ++i)
      for (std::size_t j = 0; j < a.degree; ++j) m(i, j) = a.matrices[k](i, j);
    for (std::size_t i = 0; i < b.degree; ++i)
      for (std::size_t j = 0; j < b.degree; ++j)
        m(a.degree + i, a.degree + j) = b.matrices[k](i, j);
    r.matrices.push_back(std::move(m));
  }
  return r;
}

namespace {

// A tableau maps cell -> value; stored as rows of values.  A tabloid is a
// tableau up to row order, canonicalized by sorting each row.
using Rows = std::vector<std::vector<unsigned>>;

void gen_standard(const std::vector<unsigned>& lambda, Rows& cur, unsigned next,
                  unsigned n, std::vector<Rows>& out) {
  if (next > n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    std::size_t c = cur[r].size();
    if (c >= lambda[r]) continue;
    if (r > 0 && cur[r - 1].size() <= c) continue;  // cell above must be filled
    cur[r].push_back(next);
    gen_standard(lambda, cur, next + 1, n, out);
    cur[r].pop_back();
  }
}

Rows canonical_tabloid(Rows rows) {
  for (auto& r : rows) std::sort(r.begin(), r.end());
  return rows;
}

// e_T = sum over the column group of sgn(q) * tabloid(qT).
std::map<Rows, BigRat> polytabloid(const Rows& T) {
  std::size_t ncols = T.empty() ? 0 : T[0].size();
  std::vector<std::vector<unsigned>> cols(ncols);
  for (const auto& row : T)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  std::map<Rows, BigRat> vec;
  // One permutation-with-sign iterator per column, combined recursively.
  std::vector<std::vector<std::pair<std::map<unsigned, unsigned>, int>>> colperms;
  for (const auto& col : cols) {
    std::vector<std::pair<std::map<unsigned, unsigned>, int>> ps;
    std::vector<unsigned> p = col;
    std::sort(p.begin(), p.end());
    do {
      std::map<unsigned, unsigned> mp;
      for (std::size_t i = 0; i < col.size(); ++i) mp[col[i]] = p[i];
      int inv = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          auto pos = [&](unsigned v) {
            return std::find(col.begin(), col.end(), v) - col.begin();
          };
          if (pos(p[i]) > pos(p[j])) ++inv;
        }
      ps.emplace_back(std::move(mp), inv % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
    colperms.push_back(std::move(ps));
  }
  std::map<unsigned, unsigned> mapping;
  auto rec = [&](auto&& self, std::size_t c, int sgn) -> void {
    if (c == colperms.size()) {
      Rows img = T;
      for (auto& row : img)
        for (auto& v : row) {
          auto it = mapping.find(v);
          if (it != mapping.end()) v = it->second;
        }
      vec[canonical_tabloid(std::move(img))] += sgn;
      return;
    }
    for (const auto& [mp, s] : colperms[c]) {
      for (const auto& [k, v] : mp) mapping[k] = v;
      self(self, c + 1, sgn * s);
    }
  };
  rec(rec, 0, 1);
  return vec;
}

Rows apply_transposition(const Rows& tb, unsigned i) {
  Rows out = tb;
  for (auto& row : out)
    for (auto& v : row) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  return canonical_tabloid(std::move(out));
}

std::vector<Rows> all_tabloids(const std::vector<unsigned>& lambda, unsigned n) {
  std::vector<Rows> out;
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Rows cur;
  auto rec = [&](auto&& self, std::vector<unsigned> rem, std::size_t r) -> void {
    if (r == lambda.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<bool> pick(rem.size(), false);
    std::fill(pick.end() - lambda[r], pick.end(), true);
    do {
      std::vector<unsigned> row, rest;
      for (std::size_t i = 0; i < rem.size(); ++i)
        (pick[i] ? row : rest).push_back(rem[i]);
      cur.push_back(std::move(row));
      self(self, std::move(rest), r + 1);
      cur.pop_back();
    } while (std::next_permutation(pick.begin(), pick.end()));
  };
  rec(rec, std::move(pool), 0);
  return out;
}

// Solve B X = A for tall B of full column rank by Gauss elimination on the
// augmented matrix; returns the C x K solution.
QMatrix solve_tall(QMatrix b, QMatrix a) {
  const std::size_t R = b.rows(), C = b.cols(), K = a.cols();
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(C);
  for (std::size_t col = 0; col < C; ++col) {
    std::size_t p = row;
    while (p < R && b(p, col).is_zero()) ++p;
    if (p == R) throw domain_error("solve_tall: rank deficient");
    if (p != row)
      for (std::size_t j = 0; j < C; ++j) {
        std::swap(b(p, j), b(row, j));
        if (j < K) std::swap(a(p, j), a(row, j));
      }
    if (p != row && K > C)
      for (std::size_t j = C; j < K; ++j) std::swap(a(p, j), a(row, j));
    QuadScalar inv = b(row, col).inverse();
    for (std::size_t j = 0; j < C; ++j) b(row, j) *= inv;
    for (std::size_t j = 0; j < K; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || b(i, col).is_zero()) continue;
      QuadScalar f = b(i, col);
      for (std::size_t j = 0; j < C; ++j) b(i, j) -= f * b(row, j);
      for (std::size_t j = 0; j < K; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_row[col] = row;
    ++row;
  }
  QMatrix x(C, K);
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t k = 0; k < K; ++k) x(c, k) = a(pivot_row[c], k);
  return x;
}

std::string partition_name(const std::vector<unsigned>& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rem, unsigned mx) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = std::min(rem, mx); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

Representation young_natural(const std::vector<unsigned>& lambda) {
  unsigned n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw domain_error("young_natural: not a weakly decreasing partition");
    n += lambda[i];
  }
  if (n == 0) throw domain_error("young_natural: empty partition");
  std::vector<Rows> sts;
  Rows cur(lambda.size());
  gen_standard(lambda, cur, 1, n, sts);
  std::vector<std::map<Rows, BigRat>> basis;
  for (const auto& T : sts) basis.push_back(polytabloid(T));
  auto tabloids = all_tabloids(lambda, n);
  std::map<Rows, std::size_t> idx;
  for (std::size_t i = 0; i < tabloids.size(); ++i) idx[tabloids[i]] = i;
  const std::size_t deg = sts.size();
  QMatrix B(tabloids.size(), deg);
  for (std::size_t j = 0; j < deg; ++j)
    for (const auto& [tb, c] : basis[j]) B(idx.at(tb), j) = QuadScalar(c);
  Representation rep{partition_name(lambda), deg, {}};
  for (unsigned i = 1; i < n; ++i) {
    QMatrix A(tabloids.size(), deg);
    for (std::size_t j = 0; j < deg; ++j)
      for (const auto& [tb, c] : basis[j])
        A(idx.at(apply_transposition(tb, i)), j) += QuadScalar(c);
    rep.matrices.push_back(solve_tall(B, A));
  }
  return rep;
}

Representation regular_rep(const GroupTable& t) {
  if (t.order > 12) throw domain_error("regular_rep: group order over the desk guard of 12");
  Representation r{"regular", t.order, {}};
  for (std::uint32_t g = 1; g < t.order; ++g) {
    QMatrix m(t.order, t.order);
    Word gw = t.lexmin_word(g);
    for (std::uint32_t h = 0; h < t.order; ++h) {
      std::uint32_t gh = h;
      // Left multiplication by g: apply g's word on the left.
      for (auto it = gw.rbegin(); it != gw.rend(); ++it) gh = t.left(gh, *it);
      m(gh, h) = QuadScalar(1);
    }
    r.matrices.push_back(std::move(m));
  }
  return r;
}

Representation rep_on_all_elements(const Representation& rep, const GroupTable& t) {
  Representation r{rep.name + "@G", rep.degree, {}};
  for (std::uint32_t g = 1; g < t.order; ++g)
    r.matrices.push_back(word_to_matrix(rep.matrices, t.lexmin_word(g)));
  return r;
}

bool verify_representation(const CoxeterSystem& sys, const Representation& rep) {
  if (rep.matrices.size() != sys.rank) return false;
  QMatrix id = QMatrix::identity(rep.degree);
  for (std::size_t i = 0; i < sys.rank; ++i) {
    if (rep.matrices[i] * rep.matrices[i] != id) return false;
    for (std::size_t j = i + 1; j < sys.rank; ++j) {
      QMatrix prod = rep.matrices[i] * rep.matrices[j];
      QMatrix acc = id;
      for (int k = 0; k < sys.m(i, j); ++k) acc = acc * prod;
      if (acc != id) return false;
    }
  }
  return true;
}

std::vector<QuadScalar> rep_character(const Representation& rep, const ClassTable& ct) {
  std::vector<QuadScalar> chi;
  for (std::size_t c = 0; c < ct.count(); ++c)
    chi.push_back(trace(word_to_matrix(rep.matrices, ct.min_rep_word[c])));
  return chi;
}

PolyCatalog sn_catalog(unsigned n) {
  PolyCatalog cat;
  for (const auto& lambda : partitions_of(n)) {
    Representation rep = young_natural(lambda);
    MultiPoly d = d_poly(rep);
    cat.entries.emplace_back(std::move(rep), std::move(d));
  }
  return cat;
}

PolyCatalog dihedral_catalog(int m) {
  if (m < 3 || m > 6)
    throw domain_error(
        "dihedral catalog is exact for m in {3, 4, 5, 6} only (other m need "
        "cyclotomic fields)");
  auto one_dim = [](const std::string& name, int a, int b) {
    Representation r{name, 1, {QMatrix(1, 1), QMatrix(1, 1)}};
    r.matrices[0](0, 0) = QuadScalar(a);
    r.matrices[1](0, 0) = QuadScalar(b);
    return r;
  };
  PolyCatalog cat;
  auto add = [&](Representation r) {
    MultiPoly d = d_poly(r);
    cat.entries.emplace_back(std::move(r), std::move(d));
  };
  add(one_dim("trivial", 1, 1));
  add(one_dim("sign", -1, -1));
  if (m % 2 == 0) {
    add(one_dim("sign1", -1, 1));
    add(one_dim("sign2", 1, -1));
  }
  for (int k = 1; 2 * k <= m - 1; ++k) {
    // 2 cos(2 pi k / m) for the supported m.
    QuadScalar c;
    if (m == 3)
      c = QuadScalar(-1);
    else if (m == 4)
      c = QuadScalar(0);
    else if (m == 5)
      c = k == 1 ? QuadScalar::phi() - QuadScalar(1) : -QuadScalar::phi();
    else
      c = k == 1 ? QuadScalar(1) : QuadScalar(-1);
    Representation r{"rho" + std::to_string(k), 2, {QMatrix(2, 2), QMatrix(2, 2)}};
    r.matrices[0](0, 0) = QuadScalar(1);
    r.matrices[0](0, 1) = c;
    r.matrices[0](1, 1) = QuadScalar(-1);
    r.matrices[1](0, 1) = QuadScalar(1);
    r.matrices[1](1, 0) = QuadScalar(1);
    add(std::move(r));
  }
  return cat;
}

std::map<std::string, unsigned> decompose(const MultiPoly& p, const PolyCatalog& catalog) {
  std::vector<const std::pair<Representation, MultiPoly>*> order;
  for (const auto& e : catalog.entries) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->second.total_degree() < b->second.total_degree();
  });
  MultiPoly rem = p;
  std::map<std::string, unsigned> mult;
  for (const auto* e : order) {
    while (true) {
      auto q = rem.divide_exact(e->second);
      if (!q) break;
      rem = std::move(*q);
      ++mult[e->first.name];
    }
  }
  if (rem != MultiPoly::constant(p.nvars(), QuadScalar(1)))
    throw domain_error("decompose: polynomial is not in the semigroup generated by the catalog");
  return mult;
}

MultiPoly restrict_poly(const MultiPoly& p, std::size_t m) {
  if (m >= p.nvars()) throw domain_error("restrict_poly: target arity not smaller");
  MultiPoly out(m);
  for (const auto& [mono, c] : p.terms()) {
    bool dead = false;
    for (std::size_t i = m; i < mono.size(); ++i)
      if (mono[i] != 0) dead = true;
    if (dead) continue;
    Mono trimmed(mono.begin(), mono.begin() + m);
    out.add_term(trimmed, c);
  }
  return out;
}

MainTheoremReport verify_main_theorem(const CoxeterSystem& sys, const GroupTable& t,
                                      const ClassTable& ct, const PolyCatalog& catalog,
                                      unsigned trials, unsigned seed) {
  MainTheoremReport rep;
  rep.trials = trials;
  rep.pairwise_distinct = true;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.entries.size(); ++j)
      if (catalog.entries[i].second == catalog.entries[j].second) {
        rep.pairwise_distinct = false;
        rep.detail += "duplicate d for " + catalog.entries[i].first.name + " and " +
                      catalog.entries[j].first.name + "; ";
      }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> pick(0, 3);
  rep.direct_sums_ok = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::map<std::string, unsigned> want;
    MultiPoly prod = MultiPoly::constant(sys.rank + 1, QuadScalar(1));
    bool any = false;
    // Cap the product's total degree so large catalogs stay tractable.
    const int degree_cap = 24;
    for (const auto& [r, d] : catalog.entries) {
      unsigned k = pick(rng);
      while (k > 0 && prod.total_degree() + int(k) * d.total_degree() > degree_cap) --k;
      if (k == 0) continue;
      any = true;
      want[r.name] = k;
      for (unsigned q = 0; q < k; ++q) prod *= d;
    }
    if (!any) continue;
    std::map<std::string, unsigned> got;
    try {
      got = decompose(prod, catalog);
    } catch (const domain_error& e) {
      rep.direct_sums_ok = false;
      rep.detail += std::string("trial decompose failed: ") + e.what() + "; ";
      break;
    }
    if (got != want) {
      rep.direct_sums_ok = false;
      rep.detail += "trial multiset mismatch; ";
      break;
    }
  }
  IssReport iss = iss_for_system(sys, t, ct);
  IsmVerdict v = verify_ism(t, ct, iss);
  rep.ism_ok = v.pass();
  if (!rep.ism_ok) rep.detail += "ISM: " + v.detail + "; ";
  return rep;
}

Representation load_representation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open representation file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  Representation rep;
  rep.name = doc.value("name", std::string("file"));
  rep.degree = doc.at("degree").get<std::size_t>();
  auto scalar = [](const nlohmann::json& x) -> QuadScalar {
    if (x.is_number_integer()) return QuadScalar(BigRat(x.get<long long>()));
    if (x.is_string()) return QuadScalar(BigRat(x.get<std::string>()));
    BigRat a(x.value("num", 0LL), x.value("den", 1LL));
    BigRat b(x.value("irr_num", 0LL), x.value("irr_den", 1LL));
    return QuadScalar(a, b, x.value("d", 1));
  };
  for (const auto& gj : doc.at("generators")) {
    if (gj.size() != rep.degree * rep.degree)
      throw domain_error("representation file: generator entry count mismatch");
    QMatrix m(rep.degree, rep.degree);
    std::size_t p = 0;
    for (const auto& x : gj) {
      m(p / rep.degree, p % rep.degree) = scalar(x);
      ++p;
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

}  // namespace coxsig
