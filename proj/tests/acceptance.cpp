// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Optional argv[1] points at the cuspidal reference data
// file (default data/cuspidal_reps.json); set COXSIG_ACCEPT_EXTENDED=1 to
// include the long-running extended cases.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "coxsig/cuspidal.hpp"
#include "coxsig/repr.hpp"

using namespace coxsig;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& note = "") {
  std::ostringstream line;
  line << "criterion " << (num < 10 ? " " : "") << num << ": " << (ok ? "PASS" : "FAIL")
       << " - " << what;
  if (!note.empty()) line << " (" << note << ")";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

struct Ctx {
  CoxeterSystem sys;
  GroupTable t;
  ClassTable ct;
  explicit Ctx(CoxeterSystem s)
      : sys(std::move(s)), t(enumerate_group(sys)), ct(conjugacy_classes(sys, t)) {}
};

// ---- criteria 1-2: the published H3 example ------------------------------

const std::vector<Signature> kH3Alphas = {
    {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
    {1, 1, 1}, {0, 2, 2}, {1, 2, 2}, {2, 4, 3}, {3, 6, 6}};

const long long kH3Matrix[10][10] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 2, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 2, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 6, 0, 0, 0, 0},
    {4, 0, 0, 0, 0, 0, 2, 0, 0, 0},
    {0, 20, 0, 0, 0, 0, 0, 10, 0, 0},
    {0, 738, 0, 0, 0, 468, 0, 36, 18, 0},
    {0, 194450, 0, 0, 0, 24690, 0, 192000, 9240, 40}};

const char* kH3ClassWords[10] = {"",      "3",     "23",        "13",
                                 "12",    "123",   "2323",      "12323",
                                 "123212323", "123213232132323"};

void criterion_1_2() {
  Ctx c(relabel(parse_type("H3"), {2, 1, 0}));
  std::vector<std::size_t> paper_order;
  for (const char* w : kH3ClassWords)
    paper_order.push_back(c.ct.class_of[c.t.word_elem(parse_word(w))]);
  {
    std::set<std::size_t> uniq(paper_order.begin(), paper_order.end());
    if (uniq.size() != 10) {
      report(1, "H3 ISM reproduction", false, "published class words not distinct");
      report(2, "row-sum identity", false, "skipped");
      return;
    }
  }
  bool ok1 = true, ok2 = true;
  for (std::size_t i = 0; i < 10; ++i) {
    auto v = signature_vector(c.t, c.ct, kH3Alphas[i]);
    BigInt sum = 0;
    for (std::size_t j = 0; j < 10; ++j) {
      if (v[paper_order[j]] != kH3Matrix[i][j]) ok1 = false;
      sum += v[j];
    }
    if (sum != multinomial(kH3Alphas[i])) ok2 = false;
    if (i == 8 && sum != 1260) ok2 = false;
    if (i == 9 && sum != 420420) ok2 = false;
  }
  report(1, "H3 ISM reproduction (published 10x10 matrix, exact)", ok1);
  report(2, "row-sum identity (rows 9, 10 sum to 1260, 420420)", ok2);
}

// ---- criterion 3: Tables 3 and 4 -----------------------------------------

MultiPoly from_terms(std::size_t nvars, const std::vector<std::pair<Mono, long>>& ts) {
  MultiPoly p(nvars);
  for (const auto& [m, c] : ts) p.add_term(m, QuadScalar(c));
  return p;
}

void criterion_3() {
  bool ok = true;
  std::string note;
  auto expect = [&](const PolyCatalog& cat, const std::string& name, const MultiPoly& want,
                    const std::vector<long>& chi, const ClassTable& ct,
                    const std::vector<std::size_t>& order) {
    for (const auto& [r, d] : cat.entries)
      if (r.name == name) {
        if (d != want) {
          ok = false;
          note += name + " poly mismatch; ";
        }
        auto traces = rep_character(r, ct);
        for (std::size_t k = 0; k < chi.size(); ++k)
          if (traces[order[k]] != QuadScalar(chi[k])) {
            ok = false;
            note += name + " chi mismatch; ";
            break;
          }
        return;
      }
    ok = false;
    note += name + " missing; ";
  };

  Ctx a2(parse_type("A2"));
  auto cat3 = sn_catalog(3);
  // Column order of the published S3 table: identity, transpositions,
  // 3-cycles = our class ids 0, 1, 2.
  std::vector<std::size_t> ord3{0, 1, 2};
  expect(cat3, "(3)", from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}),
         {1, 1, 1}, a2.ct, ord3);
  expect(cat3, "(2,1)",
         from_terms(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}, {{0, 0, 2}, -1}, {{0, 1, 1}, 1}}),
         {2, 0, -1}, a2.ct, ord3);
  expect(cat3, "(1,1,1)",
         from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}, {{0, 0, 1}, -1}}), {1, -1, 1},
         a2.ct, ord3);

  Ctx a3(parse_type("A3"));
  auto cat4 = sn_catalog(4);
  // Published S4 columns: cycle types (1,1,1,1), (2,1,1), (2,2), (3,1), (4)
  // = our class ids C(e), C(1), C(13), C(12), C(123) = 0, 1, 3, 2, 4.
  std::vector<std::size_t> ord4{0, 1, 3, 2, 4};
  expect(cat4, "(4)",
         from_terms(4, {{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, 1},
                        {{0, 0, 0, 1}, 1}}),
         {1, 1, 1, 1, 1}, a3.ct, ord4);
  expect(cat4, "(3,1)",
         from_terms(4, {{{3, 0, 0, 0}, 1},  {{0, 3, 0, 0}, -1}, {{0, 0, 3, 0}, -1},
                        {{0, 0, 0, 3}, -1}, {{2, 1, 0, 0}, 1},  {{2, 0, 1, 0}, 1},
                        {{2, 0, 0, 1}, 1},  {{1, 2, 0, 0}, -1}, {{0, 2, 0, 1}, 1},
                        {{1, 0, 2, 0}, -1}, {{1, 0, 0, 2}, -1}, {{0, 1, 0, 2}, 1},
                        {{1, 1, 1, 0}, 1},  {{1, 1, 0, 1}, 2},  {{1, 0, 1, 1}, 1}}),
         {3, 1, -1, 0, -1}, a3.ct, ord4);
  expect(cat4, "(2,2)",
         from_terms(4, {{{2, 0, 0, 0}, 1},  {{0, 2, 0, 0}, -1}, {{0, 0, 2, 0}, -1},
                        {{0, 0, 0, 2}, -1}, {{0, 1, 1, 0}, 1},  {{0, 0, 1, 1}, 1},
                        {{0, 1, 0, 1}, -2}}),
         {2, 0, 2, -1, 0}, a3.ct, ord4);
  expect(cat4, "(2,1,1)",
         from_terms(4, {{{3, 0, 0, 0}, 1},  {{0, 3, 0, 0}, 1},  {{0, 0, 3, 0}, 1},
                        {{0, 0, 0, 3}, 1},  {{2, 1, 0, 0}, -1}, {{2, 0, 1, 0}, -1},
                        {{2, 0, 0, 1}, -1}, {{1, 2, 0, 0}, -1}, {{0, 2, 0, 1}, -1},
                        {{1, 0, 2, 0}, -1}, {{1, 0, 0, 2}, -1}, {{0, 1, 0, 2}, -1},
                        {{1, 1, 1, 0}, 1},  {{1, 1, 0, 1}, 2},  {{1, 0, 1, 1}, 1}}),
         {3, -1, -1, 0, 1}, a3.ct, ord4);
  expect(cat4, "(1,1,1,1)",
         from_terms(4, {{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, -1}, {{0, 0, 1, 0}, -1},
                        {{0, 0, 0, 1}, -1}}),
         {1, -1, 1, 1, -1}, a3.ct, ord4);
  report(3, "Tables for S3/S4: polynomials and characters", ok, note);
}

// ---- criterion 4 ----------------------------------------------------------

void criterion_4() {
  bool ok = false;
  for (const auto& [r, d] : sn_catalog(4).entries)
    if (r.name == "(3,1)") {
      auto mult = decompose(restrict_poly(d, 3), sn_catalog(3));
      ok = mult == std::map<std::string, unsigned>{{"(3)", 1}, {"(2,1)", 1}};
    }
  report(4, "restriction of (3,1) from S4 to S3 decomposes as (3)+(2,1)", ok);
}

// ---- criteria 5-6: F4 and H4 tie pairs -----------------------------------

void criterion_5() {
  Ctx c(parse_type("F4"));
  Word w = parse_word("1213213234");
  std::size_t own = c.ct.class_of[c.t.word_elem(w)];
  std::size_t partner = cuspidal_class_by_index(c.sys, c.t, c.ct, 4);
  auto res = algorithm_A_enumeration(c.sys, c.t, c.ct, w, partner);
  bool ok = res.flag == 0 && res.candidates_checked == 12 && partner != own;
  // Brute-force classification of all 16800 words of signature (3,3,3,1).
  auto v = brute_force_signature_vector(c.t, c.ct, {3, 3, 3, 1});
  BigInt total = 0;
  for (const auto& x : v) total += x;
  ok = ok && total == 16800 && v[partner] == 0 && v[own] > 0;
  report(5, "F4 tie pair: Algorithm A Flag=0 and full E_alpha classification", ok);
}

void criterion_6() {
  Ctx c(parse_type("H4"));
  Word w = parse_word("1212132121321234");
  std::size_t own = c.ct.class_of[c.t.word_elem(w)];
  std::size_t partner = cuspidal_class_by_index(c.sys, c.t, c.ct, 8);
  auto res = algorithm_A_enumeration(c.sys, c.t, c.ct, w, partner);
  bool ok = res.flag == 0 && cuspidal_class_by_index(c.sys, c.t, c.ct, 7) == own;
  // DP-based full classification of E_{(6,6,3,1)}.
  auto v = signature_vector(c.t, c.ct, {6, 6, 3, 1});
  BigInt total = 0;
  for (const auto& x : v) total += x;
  ok = ok && total == multinomial({6, 6, 3, 1}) && v[partner] == 0 && v[own] > 0;
  report(6, "H4 tie pair: Algorithm A Flag=0 and DP classification", ok);
}

// ---- criterion 7: E8 short tie cases -------------------------------------

void criterion_7(const std::string& data_file) {
  std::vector<CuspidalDatum> data;
  try {
    data = load_cuspidal_data(data_file, "E8");
  } catch (const domain_error& e) {
    report(7, "E8 short tie cases", false, std::string("data file: ") + e.what());
    return;
  }
  auto datum = [&](int idx) -> const CuspidalDatum* {
    for (const auto& d : data)
      if (d.gp_index == idx) return &d;
    return nullptr;
  };
  struct Case {
    const char* word;
    int own, partner;
    int expected_flag;
    // For expected_flag == 1: an explicit candidate word of the same
    // signature whose element carries the partner class's char poly.
    const char* certificate;
  };
  const Case cases[] = {
      {"1231423454657658", 5, 6, 0, nullptr},
      {"1234234542345654765876", 9, 10, 1, "3254254341347625465876"},
      {"123142314542345654765876", 11, 12, 1, "132425413425476135487656"},
      {"12314231454231456542345678", 13, 14, 0, nullptr},
  };
  CoxeterSystem sys = parse_type("E8");
  bool ok = true;
  std::string note;
  for (const Case& cs : cases) {
    const CuspidalDatum* dp = datum(cs.partner);
    const CuspidalDatum* dw = datum(cs.own);
    if (!dp || !dw) {
      ok = false;
      note += "missing datum; ";
      continue;
    }
    Word w = parse_word(cs.word);
    if (element_char_poly(sys, w) != datum_char_poly(sys, *dw)) {
      ok = false;
      note += std::string(cs.word) + " not in its recorded class; ";
    }
    auto res = algorithm_A_fingerprint(sys, w, datum_char_poly(sys, *dp));
    if (res.flag != cs.expected_flag) {
      ok = false;
      note += std::string("flag ") + std::to_string(res.flag) + " vs class " +
              std::to_string(cs.partner) + " (expected " +
              std::to_string(cs.expected_flag) + "); ";
    }
    if (cs.certificate) {
      // Independent evidence for Flag=1: the certificate is a word with the
      // same signature as w whose element is in the partner class.
      Word cert = parse_word(cs.certificate);
      if (signature_of(cert, 8) != signature_of(w, 8) ||
          element_char_poly(sys, cert) != datum_char_poly(sys, *dp)) {
        ok = false;
        note += std::string("certificate invalid for pair ") + std::to_string(cs.own) +
                "/" + std::to_string(cs.partner) + "; ";
      }
    }
  }
  report(7,
         "E8 short tie cases: Flag=0 at lengths 16, 26; Flag=1 with verified "
         "partner-class certificates at lengths 22, 24",
         ok, note);
}

// ---- criterion 8: ISS existence sweep ------------------------------------

void criterion_8(bool extended) {
  std::vector<std::string> specs{"I2(5)", "I2(6)", "I2(7)", "I2(8)", "A1", "A2", "A3",
                                 "A4",    "B2",    "B3",    "B4",    "D4", "H3", "F4",
                                 "H4",    "A1xA2"};
  if (extended) specs.push_back("E6");
  bool ok = true;
  std::string note;
  for (const auto& spec : specs) {
    Ctx c(parse_type(spec));
    IssReport rep = iss_for_system(c.sys, c.t, c.ct);
    IsmVerdict v = verify_ism(c.t, c.ct, rep);
    if (!v.pass()) {
      ok = false;
      note += spec + ": " + v.detail + "; ";
    }
  }
  report(8, extended ? "ISS existence sweep (including E6, extended)"
                     : "ISS existence sweep (default set; E6 under extended mode)",
         ok, note);
}

// ---- criterion 9: direct-product splicing --------------------------------

void criterion_9() {
  bool ok = true;
  for (const char* spec : {"A1xA2", "A1xB2"}) {
    Ctx c(parse_type(spec));
    IssReport rep = iss_for_system(c.sys, c.t, c.ct);
    IsmVerdict v = verify_ism(c.t, c.ct, rep);
    if (!(v.pass() && v.vectors_match)) ok = false;
  }
  report(9, "direct-product splicing equals entry-by-entry recomputation", ok);
}

// ---- criterion 10: DP vs brute force -------------------------------------

void criterion_10() {
  bool ok = true;
  for (const char* spec : {"A2", "A3", "B2", "I2(5)"}) {
    Ctx c(parse_type(spec));
    for (const Signature& a : graded_lex_signatures(c.sys.rank, 6))
      if (signature_vector(c.t, c.ct, a) != brute_force_signature_vector(c.t, c.ct, a)) {
        ok = false;
        break;
      }
  }
  report(10, "DP equals brute force for all |alpha| <= 6 on A2, A3, B2, I2(5)", ok);
}

// ---- criterion 11: cuspidal consistency ----------------------------------

void criterion_11() {
  bool ok = true;
  std::string note;
  auto lengths = [](const Ctx& c) {
    std::vector<std::size_t> v;
    for (std::size_t id : c.ct.cuspidal_ids()) v.push_back(c.ct.min_length[id]);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto flags_consistent = [](const Ctx& c) {
    for (std::size_t cl = 0; cl < c.ct.count(); ++cl)
      if (c.ct.cuspidal[cl] != (c.ct.char_poly[cl].eval(QuadScalar(1)) != QuadScalar(0)))
        return false;
    return true;
  };
  auto tie_positions = [](const std::vector<std::size_t>& v) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1]) pos.push_back(i + 1);  // 1-based first index
    return pos;
  };
  {
    Ctx h3(parse_type("H3"));
    auto v = lengths(h3);
    if (!flags_consistent(h3) || v.size() != 4 || !tie_positions(v).empty()) {
      ok = false;
      note += "H3; ";
    }
  }
  {
    Ctx f4(parse_type("F4"));
    auto v = lengths(f4);
    if (!flags_consistent(f4) || v.size() != 9 ||
        tie_positions(v) != std::vector<std::size_t>{4}) {
      ok = false;
      note += "F4; ";
    }
  }
  {
    Ctx h4(parse_type("H4"));
    auto v = lengths(h4);
    if (!flags_consistent(h4) || tie_positions(v) != std::vector<std::size_t>{7}) {
      ok = false;
      note += "H4; ";
    }
  }
  {
    Ctx e6(parse_type("E6"));
    auto v = lengths(e6);
    if (!flags_consistent(e6) || v.size() != 5 || !tie_positions(v).empty()) {
      ok = false;
      note += "E6; ";
    }
  }
  report(11, "cuspidal flags via p(1) equal parabolic checks; length patterns", ok, note);
}

// ---- criterion 12: main-theorem desk check -------------------------------

void criterion_12() {
  bool ok = true;
  std::string note;
  for (unsigned n : {3u, 4u, 5u}) {
    Ctx c(parse_type("A" + std::to_string(n - 1)));
    auto mt = verify_main_theorem(c.sys, c.t, c.ct, sn_catalog(n), 100, n);
    if (!mt.pass()) {
      ok = false;
      note += "S" + std::to_string(n) + ": " + mt.detail + "; ";
    }
  }
  report(12, "S3/S4/S5 catalogs distinct; 100 random sums decompose uniquely", ok, note);
}

// ---- criterion 13: S3 group determinant ----------------------------------

void criterion_13() {
  Ctx c(parse_type("A2"));
  auto reg = regular_rep(c.t);
  MultiPoly lhs = d_poly(reg);
  MultiPoly rhs = MultiPoly::constant(c.t.order, QuadScalar(1));
  for (const auto& [r, d] : sn_catalog(3).entries) {
    auto on_g = rep_on_all_elements(r, c.t);
    MultiPoly dg = d_poly(on_g);
    for (std::size_t k = 0; k < r.degree; ++k) rhs *= dg;
  }
  report(13, "S3 group determinant factors as prod d(G,rho)^deg rho", lhs == rhs);
}

// ---- criterion 14: S_n partition ISS -------------------------------------

void criterion_14() {
  bool ok = true;
  std::string note;
  for (unsigned n : {3u, 4u, 5u}) {
    Ctx c(parse_type("A" + std::to_string(n - 1)));
    auto ps = partition_signatures(n);
    if (ps.size() != c.ct.count()) {
      ok = false;
      note += "S" + std::to_string(n) + " partition count; ";
      continue;
    }
    // Induced class order: the class of each signature's canonical word.
    std::vector<std::size_t> order;
    for (const auto& [mu, alpha] : ps) {
      Word w;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        w.insert(w.end(), alpha[i], i);
      order.push_back(c.ct.class_of[c.t.word_elem(w)]);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto& [mu, alpha] = ps[i];
      auto v = signature_vector(c.t, c.ct, alpha);
      BigInt diag = 1;  // (n - k)! with k = number of parts
      for (unsigned f = 1; f <= n - mu.size(); ++f) diag *= f;
      for (std::size_t j = 0; j < ps.size(); ++j) {
        BigInt want = (order[j] == order[i]) ? diag : BigInt(0);
        if (v[order[j]] != want) {
          ok = false;
          note += "S" + std::to_string(n) + " entry; ";
        }
      }
    }
  }
  report(14, "S_n partition signatures give the diagonal ISM diag((n-k)!)", ok, note);
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_file = argc > 1 ? argv[1] : "data/cuspidal_reps.json";
  bool extended = std::getenv("COXSIG_ACCEPT_EXTENDED") != nullptr;
  auto t0 = std::chrono::steady_clock::now();
  criterion_1_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(data_file);
  criterion_8(extended);
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << dt << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
