#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "coxsig/group.hpp"

using namespace coxsig;

TEST_CASE("enumeration basics") {
  auto sys = parse_type("A2");
  auto t = enumerate_group(sys);
  CHECK(t.order == 6);
  CHECK(t.max_length() == 3);
  CHECK(t.lengths[t.identity] == 0);
  // Longest element of A2 has lexicographically least reduced word 121.
  std::uint32_t w0 = 0;
  for (std::uint32_t x = 0; x < t.order; ++x)
    if (t.lengths[x] == 3) w0 = x;
  CHECK(t.lexmin_word(w0) == parse_word("121"));
  CHECK(t.word_elem(parse_word("121")) == t.word_elem(parse_word("212")));
}

TEST_CASE("ids are sorted by length and multiplication tables agree") {
  auto sys = parse_type("B3");
  auto t = enumerate_group(sys);
  CHECK(t.order == 48);
  for (std::uint32_t x = 1; x < t.order; ++x) CHECK(t.lengths[x - 1] <= t.lengths[x]);
  // left and right tables describe the same group: s_i * (x * s_j) ==
  // (s_i * x) * s_j.
  for (std::uint32_t x = 0; x < t.order; ++x)
    for (std::size_t i = 0; i < t.ngens; ++i)
      for (std::size_t j = 0; j < t.ngens; ++j)
        CHECK(t.left(t.right(x, j), i) == t.right(t.left(x, i), j));
  // Reduced words multiply correctly.
  for (std::uint32_t x = 0; x < t.order; ++x) {
    Word w = t.lexmin_word(x);
    CHECK(w.size() == t.lengths[x]);
    CHECK(t.word_elem(w) == x);
  }
}

TEST_CASE("kernels across coordinate rings") {
  // Crystallographic, sqrt2, golden-ratio and dihedral kernels.
  CHECK(enumerate_group(parse_type("D4")).order == 192);
  CHECK(enumerate_group(parse_type("B2")).order == 8);
  CHECK(enumerate_group(parse_type("H3")).order == 120);
  CHECK(enumerate_group(parse_type("I2(9)")).order == 18);
  CHECK(enumerate_group(parse_type("A1xI2(5)")).order == 20);
  CHECK(enumerate_group(parse_type("F4")).order == 1152);
}

TEST_CASE("cap refusal") {
  CHECK_THROWS_WITH_AS(
      enumerate_group(parse_type("E8")),
      "type E8 too large for enumeration (order 696729600 exceeds cap 1000000)",
      domain_error);
  CHECK(enumerate_group(parse_type("A3"), 24).order == 24);
  CHECK_THROWS_AS(enumerate_group(parse_type("A3"), 23), domain_error);
}

TEST_CASE("cache round trip") {
  auto sys = parse_type("B2");
  auto t = enumerate_group(sys);
  auto dir = std::filesystem::temp_directory_path() / "coxsig_test_cache";
  std::filesystem::create_directories(dir);
  REQUIRE(save_group_cache(t, sys.type_spec, dir.string()));
  GroupTable back;
  REQUIRE(load_group_cache(back, sys.type_spec, dir.string()));
  CHECK(back.order == t.order);
  CHECK(back.gen_mult == t.gen_mult);
  CHECK(back.left_mult == t.left_mult);
  CHECK(back.lengths == t.lengths);
  std::filesystem::remove_all(dir);
}
