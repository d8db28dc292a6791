#include <doctest.h>

#include "coxsig/iss.hpp"

using namespace coxsig;

namespace {

struct Ctx {
  CoxeterSystem sys;
  GroupTable t;
  ClassTable ct;
  explicit Ctx(const char* spec)
      : sys(parse_type(spec)), t(enumerate_group(sys)), ct(conjugacy_classes(sys, t)) {}
};

}  // namespace

TEST_CASE("verified ISS across the enumerable types") {
  for (const char* spec : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "I2(5)", "I2(6)",
                           "I2(7)", "I2(8)", "A1xA2", "A1xB2", "H3", "F4"}) {
    CAPTURE(spec);
    Ctx c(spec);
    IssReport rep = iss_for_system(c.sys, c.t, c.ct);
    CHECK(rep.signatures.size() == c.ct.count());
    CHECK(rep.triangular);
    CHECK(rep.diagonal_nonzero);
    IsmVerdict v = verify_ism(c.t, c.ct, rep);
    CHECK_MESSAGE(v.pass(), v.detail);
  }
}

TEST_CASE("B2 report shape") {
  Ctx c("B2");
  IssReport rep = iss_for_system(c.sys, c.t, c.ct);
  REQUIRE(rep.matrix.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rep.matrix[i][i] != 0);
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(rep.matrix[i][j] == 0);
  }
}

TEST_CASE("graded-lex signature stream") {
  auto sigs = graded_lex_signatures(2, 2);
  REQUIRE(sigs.size() == 6);
  CHECK(sigs[0] == Signature{0, 0});
  CHECK(sigs[1] == Signature{0, 1});
  CHECK(sigs[2] == Signature{1, 0});
  CHECK(sigs[5] == Signature{2, 0});
}

TEST_CASE("greedy failure reports uncovered classes") {
  Ctx c("A2");
  CHECK_THROWS_AS(greedy_triangular(c.t, c.ct, {Signature{0, 0}}), domain_error);
}

TEST_CASE("direct-product splicing formula") {
  Ctx a("A1"), b("A2");
  IssReport ra = iss_for_system(a.sys, a.t, a.ct);
  IssReport rb = iss_for_system(b.sys, b.t, b.ct);
  IssReport prod = iss_direct_product(ra, rb);
  CHECK(prod.signatures.size() == ra.signatures.size() * rb.signatures.size());
  // Entry (i,j),(k,l) = multinomial scaling times the Kronecker product.
  for (std::size_t i = 0; i < ra.matrix.size(); ++i)
    for (std::size_t j = 0; j < rb.matrix.size(); ++j)
      for (std::size_t k = 0; k < ra.matrix.size(); ++k)
        for (std::size_t l = 0; l < rb.matrix.size(); ++l) {
          std::size_t sa = signature_size(ra.signatures[i]);
          std::size_t sb = signature_size(rb.signatures[j]);
          Signature mix{unsigned(sa), unsigned(sb)};
          BigInt want = multinomial(mix) * ra.matrix[i][k] * rb.matrix[j][l];
          CHECK(prod.matrix[i * rb.matrix.size() + j][k * rb.matrix.size() + l] == want);
        }
}

TEST_CASE("NSS/CSS pipeline structure for H3") {
  Ctx c("H3");
  IssReport rep = iss_for_system(c.sys, c.t, c.ct);
  IsmVerdict v = verify_ism(c.t, c.ct, rep);
  CHECK(v.pass());
  // With a complete NSS the non-cuspidal classes come first.
  auto cusp = c.ct.cuspidal_ids();
  std::size_t ncusp = cusp.size();
  for (std::size_t pos = 0; pos < rep.class_order.size(); ++pos) {
    bool is_cusp = c.ct.cuspidal[rep.class_order[pos]];
    CHECK(is_cusp == (pos >= rep.class_order.size() - ncusp));
  }
}

TEST_CASE("tie words exist exactly for F4 and H4") {
  Ctx f("F4");
  auto ties = default_tie_words(f.sys, f.t, f.ct);
  REQUIRE(ties.size() == 1);
  CHECK(word_str(ties.begin()->second) == "1213213234");
  Ctx a("A3");
  CHECK(default_tie_words(a.sys, a.t, a.ct).empty());
}

TEST_CASE("integer determinant") {
  CHECK(int_det({{BigInt(2), BigInt(1)}, {BigInt(7), BigInt(4)}}) == 1);
  CHECK(int_det({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
  CHECK(int_det({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
}

TEST_CASE("partition signatures") {
  auto ps = partition_signatures(4);
  REQUIRE(ps.size() == 5);
  for (const auto& [mu, alpha] : ps) {
    CAPTURE(mu);
    unsigned total = 0;
    for (unsigned p : mu) total += p;
    CHECK(total == 4);
    CHECK(alpha.size() == 3);
  }
  // alpha((3,1)) has a run of two generators then a gap.
  bool found = false;
  for (const auto& [mu, alpha] : ps)
    if (mu == std::vector<unsigned>{3, 1}) {
      found = true;
      CHECK(alpha == Signature{1, 1, 0});
    }
  CHECK(found);
}
