#pragma once

#include <functional>

#include "coxsig/conjugacy.hpp"
#include "coxsig/signatures.hpp"

namespace coxsig {

/// Rotation-equivalence representatives (lexicographically least rotation)
/// of all words with the given letter counts.
struct CyclicClassSet {
  Signature base;
  std::vector<Word> reps;
};

CyclicClassSet cyclic_reps(const Signature& restricted);

/// Necklace count by Burnside: (1/L) sum over d | gcd of counts of
/// phi(d) * multinomial(counts / d).
BigInt necklace_count(const Signature& restricted);

/// All words obtained from u by choosing k occurrences of letters in
/// `targets` and inserting the block `ins` immediately to the left of each
/// chosen occurrence.
std::vector<Word> insert_before(const Word& u, const std::vector<std::size_t>& targets,
                                const Word& ins, std::size_t k);

/// The candidate set of the tie-breaking algorithm: the documented
/// insertion chains over cyclic-class representatives (two-operator chain
/// for H4/F4, six-operator chain for E8).  Candidates are streamed, never
/// materialized.
class CandidateStream {
 public:
  CandidateStream(const CoxeterSystem& sys, const Signature& alpha);

  BigInt total_count() const;
  /// Visit candidates until fn returns false; returns false on early stop.
  bool for_each(const std::function<bool(const Word&)>& fn) const;

 private:
  struct Op {
    std::vector<std::size_t> targets;  // letters (0-based, ambient numbering)
    Word ins;
    std::size_t k = 0;
  };
  std::vector<Word> base_;  // cyclic reps, ambient numbering
  std::vector<Op> ops_;
};

struct AlgAResult {
  int flag = 0;                  // 1 iff some candidate hits the target class
  BigInt candidates_checked = 0;
};

/// Fingerprint mode: compare each candidate's reflection char poly against
/// the target's (valid where char polys separate cuspidal classes; the
/// F4 guard lives in cuspidal_fingerprint_match's error).
AlgAResult algorithm_A_fingerprint(const CoxeterSystem& sys, const Word& w,
                                   const UniPoly& target_poly);

/// Enumeration mode: map each candidate through the group table and test
/// membership in the target class directly (used for F4).
AlgAResult algorithm_A_enumeration(const CoxeterSystem& sys, const GroupTable& t,
                                   const ClassTable& ct, const Word& w,
                                   std::size_t target_class);

/// Class id of the cuspidal class with the given 1-based index in the
/// min-length order; within the equal-length pairs of F4 and H4 the
/// indices follow the published convention (F4: the designated word's
/// class is the second of the pair; H4: the first).
std::size_t cuspidal_class_by_index(const CoxeterSystem& sys, const GroupTable& t,
                                    const ClassTable& ct, int index);

}  // namespace coxsig
