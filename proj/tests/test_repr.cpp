#include <doctest.h>

#include <fstream>

#include "coxsig/repr.hpp"

using namespace coxsig;

namespace {

MultiPoly from_terms(std::size_t nvars,
                     const std::vector<std::pair<Mono, long>>& terms) {
  MultiPoly p(nvars);
  for (const auto& [m, c] : terms) p.add_term(m, QuadScalar(c));
  return p;
}

}  // namespace

TEST_CASE("trivial, sign and reflection representations") {
  auto sys = parse_type("A2");
  CHECK(d_poly(trivial_rep(2)) ==
        from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(d_poly(sign_rep(2)) ==
        from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}, {{0, 0, 1}, -1}}));
  auto refl = reflection_rep(sys);
  CHECK(refl.degree == 2);
  CHECK(verify_representation(sys, refl));
  CHECK(verify_representation(parse_type("H3"), reflection_rep(parse_type("H3"))));
}

TEST_CASE("Young's natural representation") {
  auto r21 = young_natural({2, 1});
  CHECK(r21.degree == 2);
  CHECK(d_poly(r21) == from_terms(3, {{{2, 0, 0}, 1},
                                      {{0, 2, 0}, -1},
                                      {{0, 0, 2}, -1},
                                      {{0, 1, 1}, 1}}));
  CHECK(d_tilde(r21) == from_terms(3, {{{0, 0, 0}, 1},
                                       {{0, 2, 0}, -1},
                                       {{0, 0, 2}, -1},
                                       {{0, 1, 1}, 1}}));
  CHECK(young_natural({4}).degree == 1);
  CHECK(young_natural({1, 1, 1, 1}).degree == 1);
  CHECK(young_natural({3, 2}).degree == 5);
  CHECK_THROWS_AS(young_natural({1, 2}), domain_error);
  CHECK_THROWS_AS(young_natural({}), domain_error);
  // Coxeter relations hold for every partition of n <= 5.
  for (unsigned n : {3u, 4u, 5u}) {
    auto sys = parse_type("A" + std::to_string(n - 1));
    for (const auto& [rep, d] : sn_catalog(n).entries) {
      CAPTURE(rep.name);
      CHECK(verify_representation(sys, rep));
      CHECK(d.total_degree() == int(rep.degree));
      // Monic in x0.
      Mono lead(n, 0);
      lead[0] = unsigned(rep.degree);
      CHECK(d.coeff(lead) == QuadScalar(1));
    }
  }
}

TEST_CASE("characters from traces") {
  auto sys = parse_type("A2");
  auto t = enumerate_group(sys);
  auto ct = conjugacy_classes(sys, t);
  auto chi = rep_character(young_natural({2, 1}), ct);
  CHECK(chi == std::vector<QuadScalar>{QuadScalar(2), QuadScalar(0), QuadScalar(-1)});
}

TEST_CASE("multiplicativity and conjugation invariance") {
  auto a = young_natural({2, 1});
  auto b = young_natural({3});
  CHECK(d_poly(direct_sum(a, b)) == d_poly(a) * d_poly(b));
  // Conjugating by an invertible matrix leaves d unchanged.
  QMatrix p(2, 2);
  p(0, 0) = QuadScalar(1);
  p(0, 1) = QuadScalar(2);
  p(1, 0) = QuadScalar(1);
  p(1, 1) = QuadScalar(3);
  QMatrix pinv = inverse(p);
  Representation conj{"conj", 2, {}};
  for (const auto& m : a.matrices) conj.matrices.push_back(p * m * pinv);
  CHECK(d_poly(conj) == d_poly(a));
}

TEST_CASE("decompose and its failure mode") {
  auto cat = sn_catalog(3);
  MultiPoly prod = MultiPoly::constant(3, QuadScalar(1));
  for (const auto& [r, d] : cat.entries) prod *= d;
  auto mult = decompose(prod, cat);
  CHECK(mult == std::map<std::string, unsigned>{{"(3)", 1}, {"(2,1)", 1}, {"(1,1,1)", 1}});
  MultiPoly junk = from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 2}});
  CHECK_THROWS_AS(decompose(junk, cat), domain_error);
}

TEST_CASE("restriction") {
  MultiPoly d31;
  for (const auto& [r, d] : sn_catalog(4).entries)
    if (r.name == "(3,1)") d31 = d;
  auto res = restrict_poly(d31, 3);
  CHECK(res.nvars() == 3);
  auto mult = decompose(res, sn_catalog(3));
  CHECK(mult == std::map<std::string, unsigned>{{"(3)", 1}, {"(2,1)", 1}});
  CHECK_THROWS_AS(restrict_poly(d31, 4), domain_error);
}

TEST_CASE("dihedral catalogs") {
  CHECK(dihedral_catalog(3).entries.size() == 3);
  CHECK(dihedral_catalog(4).entries.size() == 5);
  CHECK(dihedral_catalog(5).entries.size() == 4);
  CHECK(dihedral_catalog(6).entries.size() == 6);
  CHECK_THROWS_AS(dihedral_catalog(7), domain_error);
  auto i25 = parse_type("I2(5)");
  for (const auto& [r, d] : dihedral_catalog(5).entries) {
    CAPTURE(r.name);
    CHECK(verify_representation(i25, r));
  }
  // Degrees squared sum to the group order.
  for (int m : {3, 4, 5, 6}) {
    std::size_t total = 0;
    for (const auto& [r, d] : dihedral_catalog(m).entries) total += r.degree * r.degree;
    CHECK(total == std::size_t(2 * m));
  }
}

TEST_CASE("regular representation and the group determinant") {
  auto sys = parse_type("A2");
  auto t = enumerate_group(sys);
  auto reg = regular_rep(t);
  CHECK(reg.degree == 6);
  CHECK(reg.matrices.size() == 5);
  MultiPoly d = d_poly(reg);
  CHECK(d.total_degree() == 6);
  CHECK_THROWS_AS(regular_rep(enumerate_group(parse_type("B3"))), domain_error);
  // Z2: d = (x0+x1)(x0-x1).
  auto z2 = enumerate_group(parse_type("A1"));
  CHECK(d_poly(regular_rep(z2)) ==
        from_terms(2, {{{2, 0}, 1}, {{0, 2}, -1}}));
}

TEST_CASE("representation file round trip") {
  const char* path = "test_rep.json";
  {
    std::ofstream out(path);
    out << R"({"degree":2,"generators":[[1,"-1",0,"-1"],[{"num":0},1,1,{"num":0}]]})";
  }
  auto rep = load_representation(path);
  CHECK(rep.degree == 2);
  REQUIRE(rep.matrices.size() == 2);
  CHECK(rep.matrices[0](0, 1) == QuadScalar(-1));
  CHECK(rep.matrices[1](0, 1) == QuadScalar(1));
  CHECK(verify_representation(parse_type("A2"), rep));
  std::remove(path);
}

TEST_CASE("main theorem harness on S3") {
  auto sys = parse_type("A2");
  auto t = enumerate_group(sys);
  auto ct = conjugacy_classes(sys, t);
  auto mt = verify_main_theorem(sys, t, ct, sn_catalog(3), 25, 7);
  CHECK_MESSAGE(mt.pass(), mt.detail);
}
