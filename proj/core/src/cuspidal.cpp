#include "coxsig/cuspidal.hpp"

#include <algorithm>
#include <numeric>

#include "coxsig/iss.hpp"

namespace coxsig {

namespace {

Word min_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

CyclicClassSet cyclic_reps(const Signature& restricted) {
  CyclicClassSet out;
  out.base = restricted;
  Word w;
  for (std::size_t i = 0; i < restricted.size(); ++i)
    w.insert(w.end(), restricted[i], i);
  if (w.empty()) {
    out.reps.push_back(w);
    return out;
  }
  do {
    if (min_rotation(w) == w) out.reps.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BigInt necklace_count(const Signature& restricted) {
  unsigned g = 0;
  std::size_t len = 0;
  for (unsigned a : restricted) {
    g = std::gcd(g, a);
    len += a;
  }
  if (len == 0) return 1;
  auto euler_phi = [](unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        while (n % p == 0) n /= p;
        r -= r / p;
      }
    if (n > 1) r -= r / n;
    return r;
  };
  BigInt total = 0;
  for (unsigned d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    Signature scaled;
    for (unsigned a : restricted) scaled.push_back(a / d);
    total += BigInt(euler_phi(d)) * multinomial(scaled);
  }
  return total / len;
}

std::vector<Word> insert_before(const Word& u, const std::vector<std::size_t>& targets,
                                const Word& ins, std::size_t k) {
  std::vector<std::size_t> occ;
  for (std::size_t p = 0; p < u.size(); ++p)
    if (std::find(targets.begin(), targets.end(), u[p]) != targets.end()) occ.push_back(p);
  if (k > occ.size()) throw domain_error("insert_before: k exceeds target count");
  std::vector<Word> out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Word v;
    std::size_t next = 0;
    for (std::size_t p = 0; p < u.size(); ++p) {
      if (next < k && occ[pick[next]] == p) {
        v.insert(v.end(), ins.begin(), ins.end());
        ++next;
      }
      v.push_back(u[p]);
    }
    out.push_back(std::move(v));
    // Next k-combination of occ indices.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == occ.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

CandidateStream::CandidateStream(const CoxeterSystem& sys, const Signature& alpha) {
  if (sys.components.size() != 1)
    throw domain_error("candidate sets are defined for irreducible H4, F4 and E8 only");
  const Component& comp = sys.components[0];
  // Canonical-position letter p (1-based) as an ambient generator index.
  auto L = [&](int p) { return comp.nodes[p - 1]; };
  auto A = [&](int p) { return alpha[L(p)]; };
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      throw domain_error(std::string("signature violates the minimal-length "
                                     "inequality ") +
                         what);
  };
  Signature restricted(alpha.size(), 0);
  if ((comp.family == 'H' && comp.param == 4) || comp.family == 'F') {
    need(A(1) <= A(2), "a1 <= a2");
    need(A(4) <= A(3), "a4 <= a3");
    restricted[L(2)] = A(2);
    restricted[L(3)] = A(3);
    ops_.push_back({{L(2)}, {L(1)}, A(1)});
    ops_.push_back({{L(3)}, {L(4)}, A(4)});
  } else if (comp.family == 'E' && comp.param == 8) {
    need(A(1) <= A(3), "a1 <= a3");
    need(A(1) <= A(4), "a1 <= a4");
    need(A(3) - A(1) <= A(4), "a3 - a1 <= a4");
    need(A(2) <= A(4), "a2 <= a4");
    need(A(5) <= A(4) + A(6), "a5 <= a4 + a6");
    need(A(8) <= A(7), "a8 <= a7");
    need(A(8) <= A(6), "a8 <= a6");
    need(A(7) - A(8) <= A(6), "a7 - a8 <= a6");
    restricted[L(4)] = A(4);
    restricted[L(6)] = A(6);
    ops_.push_back({{L(4)}, {L(3)}, A(3) - A(1)});
    ops_.push_back({{L(4)}, {L(1), L(3)}, A(1)});
    ops_.push_back({{L(4)}, {L(2)}, A(2)});
    ops_.push_back({{L(4), L(6)}, {L(5)}, A(5)});
    ops_.push_back({{L(6)}, {L(7)}, A(7) - A(8)});
    ops_.push_back({{L(6)}, {L(8), L(7)}, A(8)});
  } else {
    throw domain_error("candidate sets are defined for H4, F4 and E8 only");
  }
  base_ = cyclic_reps(restricted).reps;
}

BigInt CandidateStream::total_count() const {
  BigInt total = base_.size();
  if (base_.empty()) return 0;
  // The number of target letters per word is an invariant of each stage.
  for (const Op& op : ops_) {
    std::size_t targets = 0;
    for (std::size_t p = 0; p < base_[0].size(); ++p)
      if (std::find(op.targets.begin(), op.targets.end(), base_[0][p]) != op.targets.end())
        ++targets;
    Signature split{static_cast<unsigned>(op.k), static_cast<unsigned>(targets - op.k)};
    total *= multinomial(split);  // C(targets, k)
  }
  return total;
}

bool CandidateStream::for_each(const std::function<bool(const Word&)>& fn) const {
  auto rec = [&](auto&& self, const Word& u, std::size_t stage) -> bool {
    if (stage == ops_.size()) return fn(u);
    for (const Word& v : insert_before(u, ops_[stage].targets, ops_[stage].ins,
                                       ops_[stage].k))
      if (!self(self, v, stage + 1)) return false;
    return true;
  };
  for (const Word& u : base_)
    if (!rec(rec, u, 0)) return false;
  return true;
}

namespace {

// Fast integer path for crystallographic types: generator matrices (and
// hence all products) are small integers, and char polys are integral.
struct IntGens {
  std::size_t n = 0;
  std::vector<std::vector<long long>> mats;
};

bool integer_generators(const CoxeterSystem& sys, IntGens& out) {
  auto gens = reflection_generators(sys);
  out.n = sys.rank;
  out.mats.clear();
  for (const QMatrix& g : gens) {
    std::vector<long long> m(out.n * out.n);
    for (std::size_t i = 0; i < out.n; ++i)
      for (std::size_t j = 0; j < out.n; ++j) {
        const QuadScalar& q = g(i, j);
        if (!q.is_rational() || boost::multiprecision::denominator(q.rat()) != 1)
          return false;
        m[i * out.n + j] = static_cast<long long>(boost::multiprecision::numerator(q.rat()));
      }
    out.mats.push_back(std::move(m));
  }
  return true;
}

std::vector<long long> int_word_matrix(const IntGens& g, const Word& w) {
  const std::size_t n = g.n;
  std::vector<long long> m(n * n, 0), t(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t letter : w) {
    const auto& s = g.mats[letter];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long long acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += m[i * n + k] * s[k * n + j];
        t[i * n + j] = acc;
      }
    std::swap(m, t);
  }
  return m;
}

std::vector<long long> int_char_poly(const std::vector<long long>& a, std::size_t n) {
  // Faddeev-LeVerrier over the integers (all divisions exact).
  std::vector<long long> c(n + 1, 0), m = a, t(n * n);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      t = m;
      for (std::size_t i = 0; i < n; ++i) t[i * n + i] += c[n - k + 1];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          long long acc = 0;
          for (std::size_t l = 0; l < n; ++l) acc += a[i * n + l] * t[l * n + j];
          m[i * n + j] = acc;
        }
    }
    long long tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i];
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return c;
}

bool integral_coeffs(const UniPoly& p, std::size_t n, std::vector<long long>& out) {
  out.assign(n + 1, 0);
  if (p.degree() != static_cast<int>(n)) return false;
  for (std::size_t i = 0; i <= n; ++i) {
    const QuadScalar& q = p.coeff(i);
    if (!q.is_rational() || boost::multiprecision::denominator(q.rat()) != 1) return false;
    out[i] = static_cast<long long>(boost::multiprecision::numerator(q.rat()));
  }
  return true;
}

}  // namespace

AlgAResult algorithm_A_fingerprint(const CoxeterSystem& sys, const Word& w,
                                   const UniPoly& target_poly) {
  CandidateStream stream(sys, signature_of(w, sys.rank));
  AlgAResult res;
  IntGens ig;
  std::vector<long long> target_int;
  if (integer_generators(sys, ig) && integral_coeffs(target_poly, sys.rank, target_int)) {
    stream.for_each([&](const Word& v) {
      res.candidates_checked += 1;
      if (int_char_poly(int_word_matrix(ig, v), ig.n) == target_int) {
        res.flag = 1;
        return false;
      }
      return true;
    });
    return res;
  }
  auto gens = reflection_generators(sys);
  stream.for_each([&](const Word& v) {
    res.candidates_checked += 1;
    if (char_poly(word_to_matrix(gens, v)) == target_poly) {
      res.flag = 1;
      return false;
    }
    return true;
  });
  return res;
}

AlgAResult algorithm_A_enumeration(const CoxeterSystem& sys, const GroupTable& t,
                                   const ClassTable& ct, const Word& w,
                                   std::size_t target_class) {
  CandidateStream stream(sys, signature_of(w, sys.rank));
  AlgAResult res;
  stream.for_each([&](const Word& v) {
    res.candidates_checked += 1;
    if (ct.class_of[t.word_elem(v)] == target_class) {
      res.flag = 1;
      return false;
    }
    return true;
  });
  return res;
}

std::size_t cuspidal_class_by_index(const CoxeterSystem& sys, const GroupTable& t,
                                    const ClassTable& ct, int index) {
  auto cusp = ct.cuspidal_ids();
  std::stable_sort(cusp.begin(), cusp.end(), [&](std::size_t a, std::size_t b) {
    return ct.min_length[a] < ct.min_length[b];
  });
  auto ties = default_tie_words(sys, t, ct);
  for (std::size_t k = 0; k + 1 < cusp.size(); ++k) {
    if (ct.min_length[cusp[k]] != ct.min_length[cusp[k + 1]]) continue;
    bool first_designated = ties.count(cusp[k]) > 0;
    bool second_designated = ties.count(cusp[k + 1]) > 0;
    if (!first_designated && !second_designated) continue;
    // Published order within the pair: H4's designated class comes first,
    // F4's comes second.
    bool want_first = sys.components.size() == 1 && sys.components[0].family == 'H';
    if ((want_first && second_designated) || (!want_first && first_designated))
      std::swap(cusp[k], cusp[k + 1]);
  }
  if (index < 1 || static_cast<std::size_t>(index) > cusp.size())
    throw domain_error("cuspidal index out of range");
  return cusp[index - 1];
}

}  // namespace coxsig
