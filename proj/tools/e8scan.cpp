// e8scan: breadth-first scan of W(E8) in the reflection representation up
// to a length bound, recording the first occurrence of every elliptic
// characteristic polynomial.  Elliptic elements (char poly nonzero at 1)
// are exactly the members of cuspidal classes, and among cuspidal classes
// the char poly is a complete invariant here, so first occurrences give the
// minimal lengths and representative words of all cuspidal classes within
// the bound.  Emits the cuspidal reference data file consumed by
// `coxsig cuspcheck E8`.
//
// In the simple-root basis every matrix entry of every element is a root
// coordinate, bounded by 6 in absolute value, so int8 storage is exact.

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxsig/conjugacy.hpp"
#include "coxsig/signatures.hpp"

using coxsig::Word;

namespace {

constexpr int N = 8;
using Mat = std::array<std::int8_t, N * N>;

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int8_t v : m) {
      h ^= static_cast<unsigned char>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

Mat to_mat(const coxsig::QMatrix& q) {
  Mat m{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const auto& r = q(i, j).rat();
      m[i * N + j] = static_cast<std::int8_t>(static_cast<long long>(
          boost::multiprecision::numerator(r)));
    }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int acc = 0;
      for (int k = 0; k < N; ++k) acc += int(a[i * N + k]) * b[k * N + j];
      c[i * N + j] = static_cast<std::int8_t>(acc);
    }
  return c;
}

using Poly = std::array<long long, N + 1>;  // coeff of lambda^k at index k

Poly char_poly_int(const Mat& a) {
  // Faddeev-LeVerrier; all divisions exact, values fit comfortably in 64 bits.
  std::array<long long, N * N> m{}, t{};
  for (int i = 0; i < N * N; ++i) m[i] = a[i];
  Poly c{};
  c[N] = 1;
  for (int k = 1; k <= N; ++k) {
    if (k > 1) {
      t = m;
      for (int i = 0; i < N; ++i) t[i * N + i] += c[N - k + 1];
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          long long acc = 0;
          for (int l = 0; l < N; ++l) acc += a[i * N + l] * t[l * N + j];
          m[i * N + j] = acc;
        }
    }
    long long tr = 0;
    for (int i = 0; i < N; ++i) tr += m[i * N + i];
    c[N - k] = -tr / k;
  }
  return c;
}

std::vector<long long> poincare_counts(int max_len) {
  // Poincare polynomial of W(E8): prod (1 + q + ... + q^{d-1}) over the
  // fundamental degrees.
  const int degrees[] = {2, 8, 12, 14, 18, 20, 24, 30};
  std::vector<long long> p{1};
  for (int d : degrees) {
    std::vector<long long> next(std::min<std::size_t>(p.size() + d - 1, max_len + 1), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < d && i + k < next.size(); ++k) next[i + k] += p[i];
    p = std::move(next);
  }
  p.resize(max_len + 1, 0);
  return p;
}

struct PolyHash {
  std::size_t operator()(const Poly& p) const {
    std::size_t h = 14695981039346656037ull;
    for (long long v : p) h = (h ^ std::size_t(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scan W(E8) for minimal-length cuspidal representatives"};
  int max_len = 26;
  std::string out_path = "data/cuspidal_reps.json";
  app.add_option("--max-length", max_len, "BFS depth bound (default 26)");
  app.add_option("-o,--output", out_path, "output JSON path");
  CLI11_PARSE(app, argc, argv);

  auto sys = coxsig::parse_type("E8");
  auto qgens = coxsig::reflection_generators(sys);
  std::array<Mat, N> gens;
  for (int i = 0; i < N; ++i) gens[i] = to_mat(qgens[i]);

  std::vector<Mat> elems;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> parent_gen, level;
  std::unordered_map<Mat, std::uint32_t, MatHash> seen;

  Mat id{};
  for (int i = 0; i < N; ++i) id[i * N + i] = 1;
  elems.push_back(id);
  parent.push_back(0);
  parent_gen.push_back(0);
  level.push_back(0);
  seen.emplace(id, 0);

  struct First {
    int length;
    std::uint32_t elem;
  };
  std::unordered_map<Poly, First, PolyHash> elliptic_first;

  auto expected = poincare_counts(max_len);
  std::size_t lo = 0, hi = 1;
  for (int len = 1; len <= max_len; ++len) {
    for (std::size_t e = lo; e < hi; ++e)
      for (int g = 0; g < N; ++g) {
        Mat m = mul(elems[e], gens[g]);
        auto [it, fresh] = seen.emplace(m, std::uint32_t(elems.size()));
        if (!fresh) continue;
        elems.push_back(m);
        parent.push_back(std::uint32_t(e));
        parent_gen.push_back(std::uint8_t(g));
        level.push_back(std::uint8_t(len));
        Poly p = char_poly_int(m);
        long long at1 = 0;  // p(1) = sum of coefficients
        for (int k = 0; k <= N; ++k) at1 += p[k];
        if (at1 != 0 && !elliptic_first.count(p)) elliptic_first.emplace(p, First{len, it->second});
      }
    lo = hi;
    hi = elems.size();
    long long got = static_cast<long long>(hi - lo);
    std::cerr << "length " << len << ": " << got << " elements";
    if (got != expected[len]) {
      std::cerr << " (EXPECTED " << expected[len] << " -- mismatch, aborting)\n";
      return 1;
    }
    std::cerr << "\n";
  }

  // Group first occurrences by length.
  std::map<int, std::vector<std::pair<Poly, std::uint32_t>>> by_len;
  for (const auto& [p, f] : elliptic_first) by_len[f.length].emplace_back(p, f.elem);
  std::cerr << elliptic_first.size() << " distinct elliptic char polys within length "
            << max_len << "\n";

  auto witness_word = [&](std::uint32_t e) {
    Word w;
    while (e != 0) {
      w.push_back(parent_gen[e]);
      e = parent[e];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  // The published words whose classes take the first index of each
  // equal-length pair.
  const char* designated[] = {
      "1231423454657658",
      "1234234542345654765876",
      "123142314542345654765876",
      "12314231454231456542345678",
  };
  std::map<int, Poly> designated_poly;
  for (const char* d : designated) {
    Word w = coxsig::parse_word(d);
    Mat m = id;
    for (std::size_t l : w) m = mul(m, gens[l]);
    designated_poly[int(w.size())] = char_poly_int(m);
  }

  nlohmann::json classes = nlohmann::json::array();
  int index = 0;
  for (auto& [len, entries] : by_len) {
    if (entries.size() > 2) {
      std::cerr << "unexpected " << entries.size() << " new classes at length " << len << "\n";
      return 1;
    }
    if (entries.size() == 2) {
      auto dp = designated_poly.find(len);
      if (dp == designated_poly.end()) {
        std::cerr << "tie at length " << len << " without a designated word\n";
        return 1;
      }
      if (entries[1].first == dp->second) std::swap(entries[0], entries[1]);
      if (entries[0].first != dp->second) {
        std::cerr << "designated word's char poly not found at length " << len << "\n";
        return 1;
      }
    }
    for (auto& [p, e] : entries) {
      ++index;
      nlohmann::json cj;
      cj["gp_index"] = index;
      cj["name"] = "Cus" + std::to_string(index);
      cj["min_length"] = len;
      nlohmann::json wj = nlohmann::json::array();
      for (std::size_t l : witness_word(e)) wj.push_back(l + 1);
      cj["rep_word"] = wj;
      nlohmann::json pj = nlohmann::json::array();
      for (int k = 0; k <= N; ++k) pj.push_back(p[k]);
      cj["char_poly"] = pj;
      classes.push_back(cj);
    }
  }

  nlohmann::json doc;
  doc["type"] = "E8";
  doc["max_scanned_length"] = max_len;
  doc["classes"] = classes;
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << doc.dump(2) << "\n";
  std::cerr << "wrote " << classes.size() << " classes to " << out_path << "\n";
  return 0;
}
