#pragma once

#include <string>
#include <vector>

#include "coxsig/matrix.hpp"
#include "coxsig/quad.hpp"

namespace coxsig {

/// A word in the free monoid on the generators, letters are 0-based
/// generator indices.
using Word = std::vector<std::size_t>;

/// Parse "1213" style digit strings (generators 1..9 in display numbering)
/// into a 0-based Word.
Word parse_word(const std::string& digits);
std::string word_str(const Word& w);

/// One irreducible (connected) component of a Coxeter diagram.
struct Component {
  char family = 0;                 // 'A','B','D','E','F','H','I'
  int param = 0;                   // rank, or m for I2(m)
  std::vector<std::size_t> nodes;  // global node indices, in canonical
                                   // diagram order for the family
  std::string atom() const;        // canonical text, e.g. "B3", "I2(7)"
  BigInt order() const;
};

/// A finite Coxeter system: symmetric Coxeter matrix plus its recognized
/// decomposition into irreducible components of finite type.
struct CoxeterSystem {
  std::size_t rank = 0;
  Matrix<int> cox;  // m_ii = 1, m_ij >= 2
  std::string type_spec;
  std::vector<Component> components;

  int m(std::size_t i, std::size_t j) const { return cox(i, j); }
  BigInt order() const;
  /// True when every bond label lies in {2,3,4,5}, so the reflection
  /// representation lives in one of the supported quadratic fields.
  bool matrix_mode() const;
};

/// Parse a type specification: ATOM ("x" ATOM)*, ATOM in
/// {A k, B k (k>=2), D k (k>=4), E 6|7|8, F4, H3, H4, I2(m) (m>=5)}.
CoxeterSystem parse_type(const std::string& spec);

/// Build a system from an explicit Coxeter matrix (used for parabolic
/// subsystems); throws domain_error when a component is not of finite type.
CoxeterSystem system_from_matrix(const Matrix<int>& cox);

CoxeterSystem direct_product(const CoxeterSystem& a, const CoxeterSystem& b);

/// The induced subsystem on J (ascending node order); generator i of the
/// result corresponds to node J[i] of sys.
CoxeterSystem parabolic_system(const CoxeterSystem& sys, const std::vector<std::size_t>& J);

/// All proper subsets J of the node set, each with its induced system,
/// ordered by (|J|, lexicographic J).
std::vector<std::pair<std::vector<std::size_t>, CoxeterSystem>> parabolic_subsets(
    const CoxeterSystem& sys);

/// Reflection-representation generators sigma_i(x) = x - B(x, e_i) e_i over
/// the bilinear form B(e_i, e_j) = -2 cos(pi / m_ij); requires matrix_mode.
std::vector<QMatrix> reflection_generators(const CoxeterSystem& sys);

/// -2 cos(pi/m) for m in {1,2,3,4,5}; m=1 encodes the diagonal of the
/// bilinear form and yields 2.
QuadScalar minus_two_cos_pi_over(int m);

/// Product of the generator matrices along w (empty word -> identity).
QMatrix word_to_matrix(const std::vector<QMatrix>& gens, const Word& w);

/// Apply a relabeling permutation: new generator i acts like old generator
/// perm[i].  Used for alternate diagram labelings.
CoxeterSystem relabel(const CoxeterSystem& sys, const std::vector<std::size_t>& perm);

}  // namespace coxsig
