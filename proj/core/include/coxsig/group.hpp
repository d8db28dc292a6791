#pragma once

#include <cstdint>
#include <vector>

#include "coxsig/coxeter.hpp"

namespace coxsig {

/// Fully enumerated finite Coxeter group.  Element ids are assigned in BFS
/// order from the identity (so ids are sorted by Coxeter length), and the
/// table is immutable after construction.
struct GroupTable {
  std::size_t order = 0;
  std::size_t ngens = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> gen_mult;     // x * s_i, row-major [x][i]
  std::vector<std::uint32_t> left_mult;    // s_i * x, row-major [x][i]
  std::vector<std::uint16_t> lengths;      // Coxeter length of x
  std::vector<std::uint32_t> parent_elem;  // BFS parent (identity: itself)
  std::vector<std::uint8_t> parent_gen;    // x = parent * s_{parent_gen}
  std::vector<std::uint32_t> gen_id;       // element id of each generator

  std::uint32_t right(std::uint32_t x, std::size_t i) const {
    return gen_mult[x * ngens + i];
  }
  std::uint32_t left(std::uint32_t x, std::size_t i) const {
    return left_mult[x * ngens + i];
  }
  std::uint32_t word_elem(const Word& w) const {
    std::uint32_t x = identity;
    for (std::size_t i : w) x = right(x, i);
    return x;
  }
  /// A reduced word for x obtained by BFS parents.
  Word parent_word(std::uint32_t x) const;
  /// The lexicographically smallest reduced word for x.
  Word lexmin_word(std::uint32_t x) const;
  std::size_t max_length() const;
};

/// Enumerate the whole group by BFS over exact element representations
/// (integral matrices over Z, Z[sqrt2] or Z[phi] per component; dihedral
/// rotation/flip pairs for I2(m) components).  Refuses types whose
/// classical order exceeds the cap.
GroupTable enumerate_group(const CoxeterSystem& sys, std::size_t cap = 1000000);

/// As enumerate_group, but consults the cache directory named by the
/// COXSIG_CACHE_DIR environment variable when it is set.
GroupTable enumerate_group_cached(const CoxeterSystem& sys, std::size_t cap = 1000000);

bool save_group_cache(const GroupTable& t, const std::string& type_spec,
                      const std::string& dir);
bool load_group_cache(GroupTable& t, const std::string& type_spec, const std::string& dir);

}  // namespace coxsig
