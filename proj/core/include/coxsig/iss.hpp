#pragma once

#include <map>

#include "coxsig/signatures.hpp"

namespace coxsig {

/// An independent signature sequence with its matrix.  Row i is the
/// signature vector of signatures[i], with columns permuted into
/// class_order (the order classes were first covered), which makes the
/// matrix lower triangular on success.
struct IssReport {
  std::string type_spec;
  std::vector<Signature> signatures;
  std::vector<std::size_t> class_order;
  std::vector<std::vector<BigInt>> matrix;
  bool triangular = false;
  bool diagonal_nonzero = false;
};

/// Greedy selection per the triangularization lemma: scan the stream in
/// order, keep a signature when its vector covers exactly one new class;
/// stop once every class is covered.  Throws when the stream runs out
/// first.
IssReport greedy_triangular(const GroupTable& t, const ClassTable& ct,
                            const std::vector<Signature>& stream,
                            std::size_t budget_bytes = std::size_t(3) << 30);

/// All signatures of arity n with total at most max_total, graded-lex.
std::vector<Signature> graded_lex_signatures(std::size_t n, std::size_t max_total);

/// One candidate signature per conjugacy class: the graded-lex least
/// signature among lexicographically minimal reduced words of the class's
/// minimal-length members; returned sorted graded-lex.
std::vector<Signature> class_derived_stream(const GroupTable& t, const ClassTable& ct);

/// Splicing construction for direct products: signatures a_i || b_j in
/// nested order, matrix entries (|a_i|+|b_j|)! / (|a_i|! |b_j|!) times the
/// Kronecker product entry.  class_order entries are pair indices
/// i * (b's class count) + j; remapping to real product-group class ids is
/// the caller's concern.
IssReport iss_direct_product(const IssReport& a, const IssReport& b);

/// NSS/CSS building blocks for the parabolic-recursion pipeline.
struct NssCssParts {
  std::vector<Signature> nss;  // lifted parabolic signatures, stream order
  std::vector<Signature> css;  // cuspidal-class signatures by min length
};

/// Lift each maximal proper parabolic's recursively built ISS signatures
/// into the ambient rank (zero-padding outside J), in a fixed (J, row)
/// order.  The returned stream over-covers; greedy acceptance picks the
/// rows.
std::vector<Signature> nss_from_parabolics(const CoxeterSystem& sys,
                                           std::size_t budget_bytes = std::size_t(3) << 30);

/// Signatures for the cuspidal classes in min-length order: the designated
/// tie word's signature where one is on file, else the class's minimal
/// representative word's signature.
std::vector<Signature> css_from_lengths(const CoxeterSystem& sys, const GroupTable& t,
                                        const ClassTable& ct,
                                        const std::map<std::size_t, Word>& tie_words);

/// Designated tie words (keyed by class id) for the types with equal-length
/// cuspidal classes among the enumerable types: F4 and H4.
std::map<std::size_t, Word> default_tie_words(const CoxeterSystem& sys, const GroupTable& t,
                                              const ClassTable& ct);

/// Run the greedy over nss then css; with a complete NSS the class order
/// comes out non-cuspidal first, cuspidal last.
IssReport assemble_iss(const CoxeterSystem& sys, const GroupTable& t, const ClassTable& ct,
                       const NssCssParts& parts,
                       std::size_t budget_bytes = std::size_t(3) << 30);

/// Engine dispatch: products by splicing, exceptional single components
/// (H3, H4, F4, E6) by the NSS/CSS pipeline, everything else by the greedy
/// over the class-derived stream.
IssReport iss_for_system(const CoxeterSystem& sys, const GroupTable& t, const ClassTable& ct,
                         std::size_t budget_bytes = std::size_t(3) << 30);

struct IsmVerdict {
  bool vectors_match = false;
  bool triangular = false;
  bool diagonal_nonzero = false;
  bool det_nonzero = false;
  std::string detail;
  bool pass() const {
    return vectors_match && triangular && diagonal_nonzero && det_nonzero;
  }
};

/// Recompute every row from scratch and re-check the report's claims,
/// including a nonzero determinant by exact fraction-free elimination.
IsmVerdict verify_ism(const GroupTable& t, const ClassTable& ct, const IssReport& report,
                      std::size_t budget_bytes = std::size_t(3) << 30);

/// Exact determinant of an integer matrix (Bareiss).
BigInt int_det(std::vector<std::vector<BigInt>> m);

/// The partition-indexed signatures of the symmetric group S_n: for each
/// partition mu, the signature of the canonical minimal word of cycle type
/// mu (one run of consecutive generators per part).  Returned with
/// partitions in graded-lex signature order.
std::vector<std::pair<std::vector<unsigned>, Signature>> partition_signatures(unsigned n);

}  // namespace coxsig
