#include "coxsig/iss.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "coxsig/multipoly.hpp"  // GradedLex order on exponent vectors

namespace coxsig {

IssReport greedy_triangular(const GroupTable& t, const ClassTable& ct,
                            const std::vector<Signature>& stream,
                            std::size_t budget_bytes) {
  const std::size_t r = ct.count();
  IssReport rep;
  std::vector<char> covered(r, 0);
  std::size_t ncovered = 0;
  std::vector<std::vector<BigInt>> rows;  // in raw class-id columns
  for (const Signature& a : stream) {
    if (ncovered == r) break;
    auto v = signature_vector(t, ct, a, budget_bytes);
    std::size_t fresh = SIZE_MAX, nfresh = 0;
    for (std::size_t c = 0; c < r; ++c)
      if (v[c] != 0 && !covered[c]) {
        fresh = c;
        ++nfresh;
      }
    if (nfresh != 1) continue;
    covered[fresh] = 1;
    ++ncovered;
    rep.signatures.push_back(a);
    rep.class_order.push_back(fresh);
    rows.push_back(std::move(v));
  }
  if (ncovered != r) {
    std::ostringstream os;
    os << "signature stream exhausted with " << ncovered << " of " << r
       << " classes covered; uncovered:";
    for (std::size_t c = 0; c < r; ++c)
      if (!covered[c]) os << " " << ct.name(c);
    throw domain_error(os.str());
  }
  rep.matrix.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    rep.matrix[i].resize(r);
    for (std::size_t j = 0; j < r; ++j) rep.matrix[i][j] = rows[i][rep.class_order[j]];
  }
  rep.triangular = true;
  rep.diagonal_nonzero = true;
  for (std::size_t i = 0; i < r && rep.triangular; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (rep.matrix[i][j] != 0) rep.triangular = false;
  for (std::size_t i = 0; i < r; ++i)
    if (rep.matrix[i][i] == 0) rep.diagonal_nonzero = false;
  return rep;
}

std::vector<Signature> graded_lex_signatures(std::size_t n, std::size_t max_total) {
  std::vector<Signature> out;
  Signature cur(n, 0);
  // Enumerate compositions of each total into n parts, then sort graded-lex.
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  for (std::size_t total = 0; total <= max_total; ++total)
    if (n == 0) {
      if (total == 0) out.push_back(cur);
    } else {
      rec(rec, 0, static_cast<unsigned>(total));
    }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

std::vector<Signature> class_derived_stream(const GroupTable& t, const ClassTable& ct) {
  GradedLex lt;
  std::vector<Signature> out;
  for (std::size_t c = 0; c < ct.count(); ++c) {
    Signature best;
    bool have = false;
    for (std::uint32_t x : ct.classes[c]) {
      if (t.lengths[x] != ct.min_length[c]) break;
      Signature s = signature_of(t.lexmin_word(x), t.ngens);
      if (!have || lt(s, best)) {
        best = std::move(s);
        have = true;
      }
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end(), lt);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IssReport iss_direct_product(const IssReport& a, const IssReport& b) {
  const std::size_t ra = a.signatures.size(), rb = b.signatures.size();
  IssReport out;
  out.type_spec = a.type_spec + "x" + b.type_spec;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      out.signatures.push_back(splice(a.signatures[i], b.signatures[j]));
      out.class_order.push_back(a.class_order[i] * rb + b.class_order[j]);
      Signature parts{static_cast<unsigned>(signature_size(a.signatures[i])),
                      static_cast<unsigned>(signature_size(b.signatures[j]))};
      BigInt scale = multinomial(parts);
      std::vector<BigInt> row(ra * rb);
      for (std::size_t k = 0; k < ra; ++k)
        for (std::size_t l = 0; l < rb; ++l)
          row[k * rb + l] = scale * a.matrix[i][k] * b.matrix[j][l];
      out.matrix.push_back(std::move(row));
    }
  out.triangular = a.triangular && b.triangular;
  out.diagonal_nonzero = a.diagonal_nonzero && b.diagonal_nonzero;
  return out;
}

std::vector<Signature> nss_from_parabolics(const CoxeterSystem& sys,
                                           std::size_t budget_bytes) {
  std::vector<Signature> stream{Signature(sys.rank, 0)};
  for (std::size_t skip = 0; skip < sys.rank; ++skip) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < sys.rank; ++i)
      if (i != skip) J.push_back(i);
    CoxeterSystem sub = parabolic_system(sys, J);
    GroupTable t = enumerate_group(sub);
    ClassTable ct = conjugacy_classes(sub, t);
    IssReport rep = iss_for_system(sub, t, ct, budget_bytes);
    for (const Signature& s : rep.signatures) {
      Signature lifted(sys.rank, 0);
      for (std::size_t k = 0; k < J.size(); ++k) lifted[J[k]] = s[k];
      stream.push_back(std::move(lifted));
    }
  }
  return stream;
}

std::map<std::size_t, Word> default_tie_words(const CoxeterSystem& sys, const GroupTable& t,
                                              const ClassTable& ct) {
  std::map<std::size_t, Word> out;
  if (sys.components.size() != 1) return out;
  const Component& comp = sys.components[0];
  const char* digits = nullptr;
  if (comp.family == 'F')
    digits = "1213213234";
  else if (comp.family == 'H' && comp.param == 4)
    digits = "1212132121321234";
  if (!digits) return out;
  Word w;
  for (const char* p = digits; *p; ++p) w.push_back(comp.nodes[*p - '1']);
  out[ct.class_of[t.word_elem(w)]] = w;
  return out;
}

std::vector<Signature> css_from_lengths(const CoxeterSystem& sys, const GroupTable& t,
                                        const ClassTable& ct,
                                        const std::map<std::size_t, Word>& tie_words) {
  auto cusp = ct.cuspidal_ids();
  // Min-length order; within equal lengths, classes with designated tie
  // words first, since their vectors avoid the partner class.
  std::stable_sort(cusp.begin(), cusp.end(), [&](std::size_t a, std::size_t b) {
    if (ct.min_length[a] != ct.min_length[b]) return ct.min_length[a] < ct.min_length[b];
    return tie_words.count(a) > tie_words.count(b);
  });
  // A tie group of three or more equal-length cuspidal classes would need
  // more designated words than we carry; the enumerable types have pairs
  // at most, but fail loudly if data is missing.
  for (std::size_t k = 0; k + 1 < cusp.size(); ++k) {
    std::size_t a = cusp[k], b = cusp[k + 1];
    if (ct.min_length[a] == ct.min_length[b] && !tie_words.count(a) && sys.rank > 0)
      throw domain_error("cuspidal classes " + ct.name(a) + " and " + ct.name(b) +
                         " share minimal length and no tie word is on file");
  }
  std::vector<Signature> out;
  for (std::size_t c : cusp) {
    auto it = tie_words.find(c);
    const Word& w = it != tie_words.end() ? it->second : ct.min_rep_word[c];
    out.push_back(signature_of(w, sys.rank));
  }
  return out;
}

IssReport assemble_iss(const CoxeterSystem& sys, const GroupTable& t, const ClassTable& ct,
                       const NssCssParts& parts, std::size_t budget_bytes) {
  std::vector<Signature> stream = parts.nss;
  stream.insert(stream.end(), parts.css.begin(), parts.css.end());
  IssReport rep = greedy_triangular(t, ct, stream, budget_bytes);
  rep.type_spec = sys.type_spec;
  return rep;
}

IssReport iss_for_system(const CoxeterSystem& sys, const GroupTable& t, const ClassTable& ct,
                         std::size_t budget_bytes) {
  if (sys.components.size() > 1) {
    // Split off the first component and splice.
    std::vector<std::size_t> ja = sys.components[0].nodes;
    std::sort(ja.begin(), ja.end());
    std::vector<std::size_t> jb;
    for (std::size_t i = 0; i < sys.rank; ++i)
      if (!std::binary_search(ja.begin(), ja.end(), i)) jb.push_back(i);
    CoxeterSystem sa = parabolic_system(sys, ja), sb = parabolic_system(sys, jb);
    GroupTable ta = enumerate_group(sa), tb = enumerate_group(sb);
    ClassTable ca = conjugacy_classes(sa, ta), cb = conjugacy_classes(sb, tb);
    IssReport rep_a = iss_for_system(sa, ta, ca, budget_bytes);
    IssReport rep_b = iss_for_system(sb, tb, cb, budget_bytes);
    IssReport prod = iss_direct_product(rep_a, rep_b);
    // Spliced coordinates are (ja letters, jb letters); map them back to
    // the ambient numbering, and pair class ids to ambient class ids.
    IssReport out;
    out.type_spec = sys.type_spec;
    out.matrix = std::move(prod.matrix);
    out.triangular = prod.triangular;
    out.diagonal_nonzero = prod.diagonal_nonzero;
    for (const Signature& s : prod.signatures) {
      Signature g(sys.rank, 0);
      for (std::size_t k = 0; k < ja.size(); ++k) g[ja[k]] = s[k];
      for (std::size_t k = 0; k < jb.size(); ++k) g[jb[k]] = s[ja.size() + k];
      out.signatures.push_back(std::move(g));
    }
    std::size_t rb = rep_b.signatures.size();
    for (std::size_t pair : prod.class_order) {
      std::size_t ia = pair / rb, ib = pair % rb;
      Word w;
      for (std::size_t l : ca.min_rep_word[ia]) w.push_back(ja[l]);
      for (std::size_t l : cb.min_rep_word[ib]) w.push_back(jb[l]);
      out.class_order.push_back(ct.class_of[t.word_elem(w)]);
    }
    return out;
  }
  const char fam = sys.components.empty() ? 'A' : sys.components[0].family;
  if (fam == 'H' || fam == 'F' || fam == 'E') {
    NssCssParts parts;
    parts.nss = nss_from_parabolics(sys, budget_bytes);
    parts.css = css_from_lengths(sys, t, ct, default_tie_words(sys, t, ct));
    return assemble_iss(sys, t, ct, parts, budget_bytes);
  }
  IssReport rep = greedy_triangular(t, ct, class_derived_stream(t, ct), budget_bytes);
  rep.type_spec = sys.type_spec;
  return rep;
}

BigInt int_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact (Bareiss)
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IsmVerdict verify_ism(const GroupTable& t, const ClassTable& ct, const IssReport& report,
                      std::size_t budget_bytes) {
  IsmVerdict v;
  std::ostringstream detail;
  const std::size_t r = ct.count();
  v.vectors_match = report.signatures.size() == r && report.class_order.size() == r;
  if (!v.vectors_match) detail << "row/class count mismatch; ";
  for (std::size_t i = 0; i < report.signatures.size() && v.vectors_match; ++i) {
    auto fresh = signature_vector(t, ct, report.signatures[i], budget_bytes);
    for (std::size_t j = 0; j < r; ++j)
      if (fresh[report.class_order[j]] != report.matrix[i][j]) {
        v.vectors_match = false;
        detail << "row " << i << " differs from recomputation; ";
        break;
      }
  }
  v.triangular = true;
  v.diagonal_nonzero = true;
  for (std::size_t i = 0; i < report.matrix.size(); ++i) {
    for (std::size_t j = i + 1; j < report.matrix[i].size(); ++j)
      if (report.matrix[i][j] != 0) v.triangular = false;
    if (i < report.matrix[i].size() && report.matrix[i][i] == 0) v.diagonal_nonzero = false;
  }
  if (!v.triangular) detail << "not lower triangular; ";
  if (!v.diagonal_nonzero) detail << "zero diagonal entry; ";
  v.det_nonzero = !report.matrix.empty() && int_det(report.matrix) != 0;
  if (!v.det_nonzero) detail << "determinant is zero; ";
  v.detail = detail.str();
  return v;
}

std::vector<std::pair<std::vector<unsigned>, Signature>> partition_signatures(unsigned n) {
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned maxp) -> void {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (unsigned p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::vector<std::pair<std::vector<unsigned>, Signature>> out;
  for (const auto& mu : parts) {
    Signature sig(n - 1, 0);
    unsigned off = 0;
    for (unsigned p : mu) {
      for (unsigned i = 0; i + 1 < p; ++i) sig[off + i] = 1;
      off += p;
    }
    out.emplace_back(mu, std::move(sig));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return GradedLex{}(x.second, y.second);
  });
  return out;
}

}  // namespace coxsig
