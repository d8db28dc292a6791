#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxsig/group.hpp"
#include "coxsig/unipoly.hpp"

namespace coxsig {

/// Conjugacy classes of an enumerated group.  Class ids are assigned by
/// (min_length, lexicographic minimal representative word), matching the
/// C(w) naming convention.
struct ClassTable {
  std::vector<std::size_t> class_of;            // element id -> class id
  std::vector<std::vector<std::uint32_t>> classes;  // members, ascending ids
  std::vector<std::size_t> min_length;
  std::vector<Word> min_rep_word;
  std::vector<bool> cuspidal;
  std::vector<UniPoly> char_poly;  // empty when not matrix-mode

  std::size_t count() const { return classes.size(); }
  std::string name(std::size_t c) const;
  std::vector<std::size_t> cuspidal_ids() const;
  std::vector<std::size_t> non_cuspidal_ids() const;
};

/// Orbits of x -> s_i x s_i, with cuspidal flags from direct parabolic
/// membership (a class is cuspidal when it meets no proper parabolic
/// subgroup) and per-class characteristic polynomials when the type is
/// matrix-mode.
ClassTable conjugacy_classes(const CoxeterSystem& sys, const GroupTable& t);

/// Characteristic polynomial of the reflection representation at the word's
/// element; needs no group enumeration, so it works for E7/E8 words too.
UniPoly element_char_poly(const CoxeterSystem& sys, const Word& w);

/// p_g(1) != 0, i.e. g lies in no proper parabolic subgroup.
bool is_cuspidal(const CoxeterSystem& sys, const Word& w);

/// Cuspidal-class reference data (representative words / characteristic
/// polynomials per Geck-Pfeiffer index), shipped for the non-enumerable
/// types as a JSON data file.
struct CuspidalDatum {
  std::string type;
  int gp_index = 0;
  std::string name;
  std::size_t min_length = 0;
  std::optional<Word> rep_word;
  std::optional<UniPoly> char_poly;
};

std::vector<CuspidalDatum> load_cuspidal_data(const std::string& path,
                                              const std::string& type_spec);

/// True iff the word's char poly equals the datum's; only valid for types
/// where the char poly separates cuspidal classes (explicitly not F4).
bool cuspidal_fingerprint_match(const CoxeterSystem& sys, const Word& w,
                                const CuspidalDatum& target);

/// The datum's characteristic polynomial, computed from its rep_word when
/// only that is present.
UniPoly datum_char_poly(const CoxeterSystem& sys, const CuspidalDatum& d);

}  // namespace coxsig
