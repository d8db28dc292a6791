#include "coxsig/conjugacy.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace coxsig {

std::string ClassTable::name(std::size_t c) const {
  const Word& w = min_rep_word[c];
  return "C(" + (w.empty() ? std::string("e") : word_str(w)) + ")";
}

std::vector<std::size_t> ClassTable::cuspidal_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < count(); ++c)
    if (cuspidal[c]) out.push_back(c);
  return out;
}

std::vector<std::size_t> ClassTable::non_cuspidal_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < count(); ++c)
    if (!cuspidal[c]) out.push_back(c);
  return out;
}

ClassTable conjugacy_classes(const CoxeterSystem& sys, const GroupTable& t) {
  ClassTable ct;
  ct.class_of.assign(t.order, SIZE_MAX);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t x0 = 0; x0 < t.order; ++x0) {
    if (ct.class_of[x0] != SIZE_MAX) continue;
    std::size_t cid = orbits.size();
    std::vector<std::uint32_t> orbit{x0};
    ct.class_of[x0] = cid;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t i = 0; i < t.ngens; ++i) {
        std::uint32_t y = t.left(t.right(orbit[k], i), i);
        if (ct.class_of[y] == SIZE_MAX) {
          ct.class_of[y] = cid;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  // Minimal length and lex-least minimal representative word per orbit;
  // element ids are BFS-sorted by length, so the first member is minimal.
  std::vector<std::size_t> min_len(orbits.size());
  std::vector<Word> rep(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    min_len[c] = t.lengths[orbits[c][0]];
    Word best;
    bool have = false;
    for (std::uint32_t x : orbits[c]) {
      if (t.lengths[x] != min_len[c]) break;
      Word w = t.lexmin_word(x);
      if (!have || w < best) {
        best = std::move(w);
        have = true;
      }
    }
    rep[c] = std::move(best);
  }
  // Deterministic class ids: sort by (min_length, representative word).
  std::vector<std::size_t> order(orbits.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (min_len[a] != min_len[b]) return min_len[a] < min_len[b];
    return rep[a] < rep[b];
  });
  std::vector<std::size_t> newid(orbits.size());
  for (std::size_t k = 0; k < order.size(); ++k) newid[order[k]] = k;
  for (auto& c : ct.class_of) c = newid[c];
  ct.classes.resize(orbits.size());
  ct.min_length.resize(orbits.size());
  ct.min_rep_word.resize(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ct.classes[newid[c]] = std::move(orbits[c]);
    ct.min_length[newid[c]] = min_len[c];
    ct.min_rep_word[newid[c]] = std::move(rep[c]);
  }
  // Cuspidal = meets no maximal proper parabolic subgroup.
  ct.cuspidal.assign(ct.count(), true);
  ct.cuspidal[0] = false;  // identity class (rank 0 parabolic)
  for (std::size_t skip = 0; skip < sys.rank; ++skip) {
    std::vector<char> in(t.order, 0);
    std::vector<std::uint32_t> stack{t.identity};
    in[t.identity] = 1;
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      ct.cuspidal[ct.class_of[x]] = false;
      for (std::size_t i = 0; i < t.ngens; ++i) {
        if (i == skip) continue;
        std::uint32_t y = t.right(x, i);
        if (!in[y]) {
          in[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  if (sys.matrix_mode()) {
    ct.char_poly.resize(ct.count());
    for (std::size_t c = 0; c < ct.count(); ++c)
      ct.char_poly[c] = element_char_poly(sys, ct.min_rep_word[c]);
  }
  return ct;
}

UniPoly element_char_poly(const CoxeterSystem& sys, const Word& w) {
  if (!sys.matrix_mode())
    throw domain_error("element_char_poly: type " + sys.type_spec + " is not matrix-mode");
  auto gens = reflection_generators(sys);
  return char_poly(word_to_matrix(gens, w));
}

bool is_cuspidal(const CoxeterSystem& sys, const Word& w) {
  return element_char_poly(sys, w).eval(QuadScalar(1)) != QuadScalar(0);
}

std::vector<CuspidalDatum> load_cuspidal_data(const std::string& path,
                                              const std::string& type_spec) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open cuspidal data file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<CuspidalDatum> out;
  auto parse_entry = [](const nlohmann::json& tj, const nlohmann::json& cj) {
    CuspidalDatum d;
    d.type = tj.get<std::string>();
    d.gp_index = cj.at("gp_index").get<int>();
    if (cj.contains("name")) d.name = cj["name"].get<std::string>();
    d.min_length = cj.at("min_length").get<std::size_t>();
    if (cj.contains("rep_word") && !cj["rep_word"].is_null()) {
      Word w;
      for (const auto& x : cj["rep_word"]) w.push_back(x.get<std::size_t>() - 1);
      d.rep_word = std::move(w);
    }
    if (cj.contains("char_poly") && !cj["char_poly"].is_null()) {
      std::vector<QuadScalar> coeffs;
      for (const auto& x : cj["char_poly"]) {
        if (x.is_string())
          coeffs.emplace_back(BigRat(x.get<std::string>()));
        else
          coeffs.emplace_back(BigRat(x.get<long long>()));
      }
      d.char_poly = UniPoly(std::move(coeffs));
    }
    if (!d.rep_word && !d.char_poly)
      throw domain_error("cuspidal datum needs a rep_word or a char_poly");
    return d;
  };
  // The file is either one {type, classes} object or a list of them.
  auto blocks = doc.is_array() ? doc : nlohmann::json::array({doc});
  for (const auto& blk : blocks) {
    if (blk.at("type").get<std::string>() != type_spec) continue;
    for (const auto& cj : blk.at("classes")) out.push_back(parse_entry(blk["type"], cj));
  }
  return out;
}

UniPoly datum_char_poly(const CoxeterSystem& sys, const CuspidalDatum& d) {
  if (d.char_poly) return *d.char_poly;
  return element_char_poly(sys, *d.rep_word);
}

bool cuspidal_fingerprint_match(const CoxeterSystem& sys, const Word& w,
                                const CuspidalDatum& target) {
  if (sys.type_spec == "F4")
    throw domain_error(
        "fingerprint ambiguous for F4: distinct cuspidal classes share a "
        "characteristic polynomial; use enumeration mode");
  return element_char_poly(sys, w) == datum_char_poly(sys, target);
}

}  // namespace coxsig
