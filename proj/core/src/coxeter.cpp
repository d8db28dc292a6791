#include "coxsig/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace coxsig {

Word parse_word(const std::string& digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw domain_error("parse_word: expected digits 1-9");
    w.push_back(static_cast<std::size_t>(c - '1'));
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i : w) {
    if (i > 8) throw domain_error("word_str: generator index beyond 9");
    s.push_back(static_cast<char>('1' + i));
  }
  return s;
}

std::string Component::atom() const {
  std::ostringstream os;
  if (family == 'I')
    os << "I2(" << param << ")";
  else
    os << family << param;
  return os.str();
}

static BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt Component::order() const {
  switch (family) {
    case 'A':
      return factorial(param + 1);
    case 'B':
      return (BigInt(1) << param) * factorial(param);
    case 'D':
      return (BigInt(1) << (param - 1)) * factorial(param);
    case 'E':
      return param == 6 ? BigInt(51840)
                        : param == 7 ? BigInt(2903040) : BigInt(696729600);
    case 'F':
      return 1152;
    case 'H':
      return param == 3 ? 120 : 14400;
    case 'I':
      return 2 * param;
  }
  throw domain_error("Component::order: unknown family");
}

BigInt CoxeterSystem::order() const {
  BigInt o = 1;
  for (const auto& c : components) o *= c.order();
  return o;
}

bool CoxeterSystem::matrix_mode() const {
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (cox(i, j) > 5) return false;
  return true;
}

QuadScalar minus_two_cos_pi_over(int m) {
  switch (m) {
    case 1:
      return QuadScalar(2);
    case 2:
      return QuadScalar(0);
    case 3:
      return QuadScalar(-1);
    case 4:
      return -QuadScalar::sqrt2();
    case 5:
      return -QuadScalar::phi();
  }
  throw domain_error("bilinear form entry needs cos(pi/" + std::to_string(m) +
                     "), outside the supported quadratic fields");
}

std::vector<QMatrix> reflection_generators(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank;
  std::vector<QMatrix> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix s = QMatrix::identity(n);
    // sigma_i(e_j) = e_j - B(e_j, e_i) e_i, so only row i changes.
    for (std::size_t j = 0; j < n; ++j) {
      QuadScalar b = minus_two_cos_pi_over(sys.m(i, j));
      s(i, j) = (i == j ? QuadScalar(1) : QuadScalar(0)) - b;
    }
    gens.push_back(std::move(s));
  }
  return gens;
}

QMatrix word_to_matrix(const std::vector<QMatrix>& gens, const Word& w) {
  if (gens.empty()) throw domain_error("word_to_matrix: no generators");
  QMatrix m = QMatrix::identity(gens[0].rows());
  for (std::size_t i : w) {
    if (i >= gens.size()) throw domain_error("word_to_matrix: letter out of range");
    m = m * gens[i];
  }
  return m;
}

namespace {

// Recognize one connected component (given by its global node list and the
// ambient matrix) as a finite-type diagram, producing canonical node order.
Component recognize(const Matrix<int>& cox, std::vector<std::size_t> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const std::size_t n = nodes.size();
  Component comp;
  comp.nodes = nodes;
  auto m = [&](std::size_t a, std::size_t b) {
    return cox(nodes[a], nodes[b]);
  };
  if (n == 1) {
    comp.family = 'A';
    comp.param = 1;
    return comp;
  }
  if (n == 2) {
    int lbl = m(0, 1);
    if (lbl == 3) {
      comp.family = 'A';
      comp.param = 2;
    } else if (lbl == 4) {
      comp.family = 'B';
      comp.param = 2;
    } else {
      comp.family = 'I';
      comp.param = lbl;
    }
    return comp;
  }
  // Rank >= 3: must be a tree with at most one bond label above 3, and
  // that label at most 5.
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::pair<std::size_t, std::size_t>> high;  // edges with label > 3
  std::size_t edges = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int lbl = m(a, b);
      if (lbl < 3) continue;
      ++edges;
      adj[a].push_back(b);
      adj[b].push_back(a);
      if (lbl > 3) high.emplace_back(a, b);
    }
  auto fail = [&]() -> Component {
    throw domain_error("not a finite Coxeter type");
  };
  if (edges != n - 1 || high.size() > 1) return fail();

  std::size_t max_deg = 0;
  for (const auto& a : adj) max_deg = std::max(max_deg, a.size());

  auto path_from = [&](std::size_t start) {
    std::vector<std::size_t> path{start};
    std::size_t prev = start, cur = start;
    while (path.size() < n) {
      std::size_t next = n;
      for (std::size_t x : adj[cur])
        if (x != prev) next = x;
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    return path;
  };
  auto reindex = [&](const std::vector<std::size_t>& order) {
    std::vector<std::size_t> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = nodes[order[i]];
    comp.nodes = g;
  };

  if (!high.empty()) {
    if (max_deg > 2) return fail();
    auto [u, v] = high[0];
    int lbl = m(u, v);
    bool u_end = adj[u].size() == 1, v_end = adj[v].size() == 1;
    if (lbl == 5) {
      // H3/H4: 5-bond at an end, canonical order starts with it.
      if (n > 4 || (!u_end && !v_end)) return fail();
      reindex(path_from(u_end ? u : v));
      comp.family = 'H';
      comp.param = static_cast<int>(n);
      return comp;
    }
    if (lbl != 4) return fail();
    if (u_end || v_end) {
      // B_n: canonical order puts the 4-bond on the last edge.
      std::size_t end4 = u_end ? u : v;
      auto path = path_from(end4);
      std::reverse(path.begin(), path.end());
      reindex(path);
      comp.family = 'B';
      comp.param = static_cast<int>(n);
      return comp;
    }
    // Interior 4-bond: only F4 (chain 3-4-3).  Both orientations fit; take
    // the lexicographically smaller node order so labelings stay stable.
    if (n != 4) return fail();
    std::vector<std::size_t> path;
    for (std::size_t a = 0; a < n; ++a) {
      if (adj[a].size() != 1) continue;
      auto cand = path_from(a);
      std::vector<std::size_t> g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = nodes[cand[i]];
      std::vector<std::size_t> gp(n);
      if (!path.empty())
        for (std::size_t i = 0; i < n; ++i) gp[i] = nodes[path[i]];
      if (path.empty() || g < gp) path = cand;
    }
    if (m(path[1], path[2]) != 4) return fail();
    reindex(path);
    comp.family = 'F';
    comp.param = 4;
    return comp;
  }

  // All bonds simple.
  if (max_deg <= 2) {
    std::size_t e0 = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (adj[a].size() == 1) {
        e0 = a;
        break;
      }
    reindex(path_from(e0));
    comp.family = 'A';
    comp.param = static_cast<int>(n);
    return comp;
  }
  if (max_deg != 3) return fail();
  std::size_t center = 0;
  std::size_t ncenters = 0;
  for (std::size_t a = 0; a < n; ++a)
    if (adj[a].size() == 3) {
      center = a;
      ++ncenters;
    }
  if (ncenters != 1) return fail();
  // Walk the three branches outward from the center.
  std::vector<std::vector<std::size_t>> branches;
  for (std::size_t start : adj[center]) {
    std::vector<std::size_t> br{start};
    std::size_t prev = center, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      br.push_back(cur);
    }
    if (adj[cur].size() != 1) return fail();
    branches.push_back(br);
  }
  std::sort(branches.begin(), branches.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::size_t b1 = branches[0].size(), b2 = branches[1].size(), b3 = branches[2].size();
  if (b1 == 1 && b2 == 1) {
    // D_n: chain 1..n-2 ending at the center, then the two fork tips.
    std::vector<std::size_t> order(branches[2].rbegin(), branches[2].rend());
    order.push_back(center);
    std::size_t t1 = branches[0][0], t2 = branches[1][0];
    order.push_back(std::min(t1, t2));
    order.push_back(std::max(t1, t2));
    reindex(order);
    comp.family = 'D';
    comp.param = static_cast<int>(n);
    return comp;
  }
  if (b1 == 1 && b2 == 2 && b3 >= 2 && b3 <= 4) {
    // E_n: chain 1-3-4-5-..., node 2 on the short branch off node 4.
    std::vector<std::size_t> order;
    order.push_back(branches[1][1]);  // position 1
    order.push_back(branches[0][0]);  // position 2
    order.push_back(branches[1][0]);  // position 3
    order.push_back(center);          // position 4
    for (std::size_t x : branches[2]) order.push_back(x);
    reindex(order);
    comp.family = 'E';
    comp.param = static_cast<int>(n);
    return comp;
  }
  return fail();
}

}  // namespace

CoxeterSystem system_from_matrix(const Matrix<int>& cox) {
  const std::size_t n = cox.rows();
  if (n != cox.cols()) throw domain_error("Coxeter matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (cox(i, i) != 1) throw domain_error("Coxeter matrix diagonal must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cox(i, j) != cox(j, i)) throw domain_error("Coxeter matrix must be symmetric");
      if (cox(i, j) < 2) throw domain_error("off-diagonal Coxeter entries must be >= 2");
    }
  }
  CoxeterSystem sys;
  sys.rank = n;
  sys.cox = cox;
  // Connected components in order of smallest node.
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> comp{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && cox(comp[k], j) >= 3) {
          seen[j] = 1;
          comp.push_back(j);
        }
    sys.components.push_back(recognize(cox, comp));
  }
  std::ostringstream spec;
  for (std::size_t k = 0; k < sys.components.size(); ++k) {
    if (k) spec << "x";
    spec << sys.components[k].atom();
  }
  sys.type_spec = spec.str();
  return sys;
}

namespace {

// Coxeter matrix of a single canonical atom.
Matrix<int> atom_matrix(char fam, int p) {
  auto chain = [](int k) {
    Matrix<int> m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = i == j ? 1 : (std::abs(i - j) == 1 ? 3 : 2);
    return m;
  };
  switch (fam) {
    case 'A':
      return chain(p);
    case 'B': {
      auto m = chain(p);
      m(p - 2, p - 1) = m(p - 1, p - 2) = 4;
      return m;
    }
    case 'D': {
      auto m = chain(p);
      m(p - 2, p - 1) = m(p - 1, p - 2) = 2;
      m(p - 3, p - 1) = m(p - 1, p - 3) = 3;
      return m;
    }
    case 'E': {
      // Chain 1-3-4-...-p with node 2 attached to node 4.
      Matrix<int> m(p, p);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) m(i, j) = i == j ? 1 : 2;
      auto bond = [&](int a, int b) { m(a - 1, b - 1) = m(b - 1, a - 1) = 3; };
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < p; ++i) bond(i, i + 1);
      return m;
    }
    case 'F': {
      auto m = chain(4);
      m(1, 2) = m(2, 1) = 4;
      return m;
    }
    case 'H': {
      auto m = chain(p);
      m(0, 1) = m(1, 0) = 5;
      return m;
    }
    case 'I': {
      Matrix<int> m(2, 2);
      m(0, 0) = m(1, 1) = 1;
      m(0, 1) = m(1, 0) = p;
      return m;
    }
  }
  throw domain_error("unknown family");
}

std::pair<char, int> parse_atom(const std::string& a) {
  auto bad = [&]() -> std::pair<char, int> {
    throw domain_error("unknown Coxeter type atom '" + a + "'");
  };
  if (a.size() < 2) return bad();
  char fam = a[0];
  if (fam == 'I') {
    // I2(m)
    if (a.size() < 5 || a.compare(0, 3, "I2(") != 0 || a.back() != ')') return bad();
    int m = 0;
    for (std::size_t i = 3; i + 1 < a.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(a[i]))) return bad();
      m = m * 10 + (a[i] - '0');
    }
    if (m < 5)
      throw domain_error("I2(m) requires m >= 5 (use A1xA1, A2 or B2 for m = 2, 3, 4)");
    return {'I', m};
  }
  int k = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(a[i]))) return bad();
    k = k * 10 + (a[i] - '0');
  }
  switch (fam) {
    case 'A':
      if (k >= 1) return {'A', k};
      break;
    case 'B':
      if (k >= 2) return {'B', k};
      break;
    case 'D':
      if (k >= 4) return {'D', k};
      break;
    case 'E':
      if (k >= 6 && k <= 8) return {'E', k};
      break;
    case 'F':
      if (k == 4) return {'F', 4};
      break;
    case 'H':
      if (k == 3 || k == 4) return {'H', k};
      break;
  }
  return bad();
}

}  // namespace

CoxeterSystem parse_type(const std::string& spec) {
  std::vector<std::pair<char, int>> atoms;
  std::string cur;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == 'x') {
      if (cur.empty()) throw domain_error("empty atom in type spec '" + spec + "'");
      atoms.push_back(parse_atom(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(spec[i]))) {
      cur.push_back(spec[i]);
    }
  }
  std::size_t rank = 0;
  for (auto [fam, p] : atoms) rank += fam == 'I' ? 2 : static_cast<std::size_t>(p);
  Matrix<int> cox(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) cox(i, j) = i == j ? 1 : 2;
  std::size_t off = 0;
  for (auto [fam, p] : atoms) {
    auto blk = atom_matrix(fam, p);
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) cox(off + i, off + j) = blk(i, j);
    off += blk.rows();
  }
  return system_from_matrix(cox);
}

CoxeterSystem direct_product(const CoxeterSystem& a, const CoxeterSystem& b) {
  std::size_t n = a.rank + b.rank;
  Matrix<int> cox(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cox(i, j) = i == j ? 1 : 2;
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) cox(i, j) = a.cox(i, j);
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j) cox(a.rank + i, a.rank + j) = b.cox(i, j);
  return system_from_matrix(cox);
}

CoxeterSystem parabolic_system(const CoxeterSystem& sys, const std::vector<std::size_t>& J) {
  Matrix<int> cox(J.size(), J.size());
  for (std::size_t i = 0; i < J.size(); ++i)
    for (std::size_t j = 0; j < J.size(); ++j) cox(i, j) = sys.cox(J[i], J[j]);
  return system_from_matrix(cox);
}

std::vector<std::pair<std::vector<std::size_t>, CoxeterSystem>> parabolic_subsets(
    const CoxeterSystem& sys) {
  std::vector<std::pair<std::vector<std::size_t>, CoxeterSystem>> out;
  const std::size_t n = sys.rank;
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) J.push_back(i);
    subsets.push_back(std::move(J));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  for (auto& J : subsets) {
    CoxeterSystem sub = parabolic_system(sys, J);
    out.emplace_back(std::move(J), std::move(sub));
  }
  return out;
}

CoxeterSystem relabel(const CoxeterSystem& sys, const std::vector<std::size_t>& perm) {
  if (perm.size() != sys.rank) throw domain_error("relabel: permutation size mismatch");
  Matrix<int> cox(sys.rank, sys.rank);
  for (std::size_t i = 0; i < sys.rank; ++i)
    for (std::size_t j = 0; j < sys.rank; ++j) cox(i, j) = sys.cox(perm[i], perm[j]);
  return system_from_matrix(cox);
}

}  // namespace coxsig
