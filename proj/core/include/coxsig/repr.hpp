#pragma once

#include "coxsig/conjugacy.hpp"
#include "coxsig/iss.hpp"
#include "coxsig/multipoly.hpp"

namespace coxsig {

/// A matrix representation: one exact matrix per generator.  For the
/// group-determinant computation the "generators" are all non-identity
/// elements of a tiny group.
struct Representation {
  std::string name;
  std::size_t degree = 0;
  std::vector<QMatrix> matrices;
};

/// d(S, rho) = det[x0 I + x1 rho(s1) + ... + xn rho(sn)], homogeneous of
/// degree deg rho in n+1 variables.
MultiPoly d_poly(const Representation& rep);

/// The inhomogeneous variant with x0 fixed to 1; the variable count stays
/// the same, x0 simply no longer occurs.
MultiPoly d_tilde(const Representation& rep);

Representation trivial_rep(std::size_t ngens);
Representation sign_rep(std::size_t ngens);
Representation reflection_rep(const CoxeterSystem& sys);
Representation direct_sum(const Representation& a, const Representation& b);

/// Young's natural representation of S_n on the standard polytabloid basis;
/// matrices (integer entries) for the n-1 adjacent transpositions.
Representation young_natural(const std::vector<unsigned>& lambda);

/// Left-regular representation over the generating set of all non-identity
/// elements, in element-id order; guarded to |G| <= 12.
Representation regular_rep(const GroupTable& t);

/// Evaluate a generator representation on every non-identity element (the
/// same generating-set convention as regular_rep), for Frobenius-style
/// group-determinant factorizations.
Representation rep_on_all_elements(const Representation& rep, const GroupTable& t);

/// True iff every matrix is an involution and all braid relations
/// (rho(si) rho(sj))^{m_ij} = I hold.
bool verify_representation(const CoxeterSystem& sys, const Representation& rep);

/// Character on conjugacy classes: trace at each class's minimal
/// representative word.
std::vector<QuadScalar> rep_character(const Representation& rep, const ClassTable& ct);

/// Irreducibles with their d polynomials.
struct PolyCatalog {
  std::vector<std::pair<Representation, MultiPoly>> entries;
};

/// All Young representations of S_n, partitions in graded-lex order of the
/// exponent notation (catalog order is not significant; decompose sorts).
PolyCatalog sn_catalog(unsigned n);

/// The irreducible representations of the dihedral group I2(m): trivial,
/// sign, the two mixed degree-1 reps for even m, and the two-dimensional
/// rho_k for 1 <= k <= (m-1)/2.  Exact only for m in {3, 4, 5, 6}.
PolyCatalog dihedral_catalog(int m);

/// Greedy exact trial division of p by catalog polynomials in ascending
/// total degree; returns name -> multiplicity.  Throws "not in the
/// semigroup" when a non-constant remainder survives all trials.
std::map<std::string, unsigned> decompose(const MultiPoly& p, const PolyCatalog& catalog);

/// Restriction from S_n to S_m at the polynomial level: substitute
/// x_m .. x_{n-1} := 0 and drop the dead variables, leaving arity m.
MultiPoly restrict_poly(const MultiPoly& p, std::size_t m);

struct MainTheoremReport {
  bool pairwise_distinct = false;
  bool direct_sums_ok = false;
  bool ism_ok = false;
  unsigned trials = 0;
  std::string detail;
  bool pass() const { return pairwise_distinct && direct_sums_ok && ism_ok; }
};

/// Desk-scale check of the classification theorem: catalog polynomials
/// pairwise distinct, random direct sums (multiplicities <= 3) decompose
/// back to their multisets, and the ISS pipeline yields an invertible ISM.
MainTheoremReport verify_main_theorem(const CoxeterSystem& sys, const GroupTable& t,
                                      const ClassTable& ct, const PolyCatalog& catalog,
                                      unsigned trials = 100, unsigned seed = 1);

/// JSON representation file: {"degree": d, "generators": [[row-major
/// scalars]]}; scalars are numbers, "p/q" strings, or
/// {num, den, irr_num, irr_den, d} objects.
Representation load_representation(const std::string& path);

}  // namespace coxsig
