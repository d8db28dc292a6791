#include "coxsig/signatures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coxsig {

Signature signature_of(const Word& w, std::size_t ngens) {
  Signature a(ngens, 0);
  for (std::size_t i : w) {
    if (i >= ngens) throw domain_error("signature_of: letter out of range");
    ++a[i];
  }
  return a;
}

Signature splice(const Signature& a, const Signature& b) {
  Signature r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::size_t signature_size(const Signature& a) {
  return std::accumulate(a.begin(), a.end(), std::size_t(0));
}

BigInt multinomial(const Signature& a) {
  BigInt r = 1;
  std::size_t total = 0;
  for (unsigned ai : a)
    for (unsigned k = 1; k <= ai; ++k) {
      ++total;
      r = r * total / k;  // exact: running product of binomials
    }
  return r;
}

namespace {

BigInt to_bigint(std::uint64_t v) { return BigInt(v); }
BigInt to_bigint(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) | static_cast<std::uint64_t>(v);
}
const BigInt& to_bigint(const BigInt& v) { return v; }

// Layered DP over the box of sub-signatures beta <= alpha, one layer per
// |beta|; only the previous layer is kept.
template <typename Count>
std::vector<BigInt> dp_counts(const GroupTable& t, const Signature& alpha) {
  const std::size_t n = t.ngens;
  const std::size_t total = signature_size(alpha);
  std::map<Signature, std::vector<Count>> prev;
  {
    std::vector<Count> base(t.order, Count(0));
    base[t.identity] = Count(1);
    prev.emplace(Signature(n, 0), std::move(base));
  }
  for (std::size_t layer = 1; layer <= total; ++layer) {
    std::map<Signature, std::vector<Count>> cur;
    // Every beta in this layer is (predecessor in previous layer) + e_i.
    for (const auto& [b, counts] : prev)
      for (std::size_t i = 0; i < n; ++i) {
        if (b[i] >= alpha[i]) continue;
        Signature nb = b;
        ++nb[i];
        auto [it, inserted] = cur.emplace(std::move(nb), std::vector<Count>());
        if (inserted) it->second.assign(t.order, Count(0));
        std::vector<Count>& out = it->second;
        for (std::uint32_t g = 0; g < t.order; ++g) out[g] += counts[t.right(g, i)];
      }
    prev = std::move(cur);
  }
  const std::vector<Count>& final_counts = prev.at(alpha);
  std::vector<BigInt> out(t.order);
  for (std::uint32_t g = 0; g < t.order; ++g) out[g] = to_bigint(final_counts[g]);
  return out;
}

// Peak number of live count arrays: the two largest adjacent layer sizes.
std::size_t peak_layers(const Signature& alpha) {
  std::size_t total = signature_size(alpha);
  // Layer sizes are the coefficients of prod_i (1 + x + ... + x^{a_i}).
  std::vector<std::size_t> poly{1};
  for (unsigned ai : alpha) {
    std::vector<std::size_t> next(std::min(poly.size() + ai, total + 1), 0);
    for (std::size_t d = 0; d < poly.size(); ++d)
      for (unsigned k = 0; k <= ai && d + k < next.size(); ++k) next[d + k] += poly[d];
    poly = std::move(next);
  }
  std::size_t peak = poly[0];
  for (std::size_t d = 0; d + 1 < poly.size(); ++d)
    peak = std::max(peak, poly[d] + poly[d + 1]);
  return peak;
}

}  // namespace

std::vector<BigInt> count_words_by_element(const GroupTable& t, const Signature& alpha,
                                           std::size_t budget_bytes) {
  if (alpha.size() != t.ngens)
    throw domain_error("count_words_by_element: signature arity mismatch");
  BigInt m = multinomial(alpha);
  std::size_t elem_size = sizeof(std::uint64_t);
  bool big = false;
  if (m >= (BigInt(1) << 127)) {
    big = true;
    elem_size = 64;  // rough cpp_int footprint
  } else if (m >= (BigInt(1) << 63)) {
    elem_size = 16;
  }
  BigInt need = BigInt(peak_layers(alpha)) * t.order * elem_size;
  if (need > budget_bytes)
    throw domain_error(
        "count_words_by_element: DP needs about " + need.str() +
        " bytes, over the budget of " + std::to_string(budget_bytes) +
        "; use brute_force_signature_vector or a smaller signature");
  if (big) return dp_counts<BigInt>(t, alpha);
  if (elem_size == 16) return dp_counts<unsigned __int128>(t, alpha);
  return dp_counts<std::uint64_t>(t, alpha);
}

std::vector<BigInt> signature_vector(const GroupTable& t, const ClassTable& classes,
                                     const Signature& alpha, std::size_t budget_bytes) {
  auto per_elem = count_words_by_element(t, alpha, budget_bytes);
  std::vector<BigInt> v(classes.count());
  for (std::uint32_t g = 0; g < t.order; ++g) v[classes.class_of[g]] += per_elem[g];
  return v;
}

std::vector<BigInt> brute_force_signature_vector(const GroupTable& t,
                                                 const ClassTable& classes,
                                                 const Signature& alpha) {
  if (alpha.size() != t.ngens)
    throw domain_error("brute_force_signature_vector: signature arity mismatch");
  if (multinomial(alpha) > 10000000)
    throw domain_error("brute_force_signature_vector: too many words; use the DP");
  Word w;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    w.insert(w.end(), alpha[i], i);
  std::vector<BigInt> v(classes.count());
  do {
    v[classes.class_of[t.word_elem(w)]] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return v;
}

QuadScalar character_sum(const std::vector<BigInt>& v, const std::vector<QuadScalar>& chi) {
  if (v.size() != chi.size()) throw domain_error("character_sum: arity mismatch");
  QuadScalar total(0);
  for (std::size_t c = 0; c < v.size(); ++c) total += QuadScalar(BigRat(v[c])) * chi[c];
  return total;
}

}  // namespace coxsig
