#pragma once

#include "coxsig/conjugacy.hpp"
#include "coxsig/group.hpp"

namespace coxsig {

/// Letter-count vector of a word: entry i counts occurrences of s_{i+1}.
using Signature = std::vector<unsigned>;

Signature signature_of(const Word& w, std::size_t ngens);

/// Concatenation (the paper's || operation on product-group signatures).
Signature splice(const Signature& a, const Signature& b);

std::size_t signature_size(const Signature& a);  // |alpha|

/// |alpha|! / prod a_i! — the number of words with signature alpha.
BigInt multinomial(const Signature& a);

/// Exact count of words u with sig(u) = alpha and phi(u) = g, for every g,
/// by the layered recursion N_beta(g) = sum_i N_{beta - e_i}(g s_i).
/// Throws when the two largest adjacent beta-layers would exceed the
/// memory budget.
std::vector<BigInt> count_words_by_element(const GroupTable& t, const Signature& alpha,
                                           std::size_t budget_bytes = std::size_t(3) << 30);

/// The signature vector V_alpha: per-class sums of count_words_by_element.
std::vector<BigInt> signature_vector(const GroupTable& t, const ClassTable& classes,
                                     const Signature& alpha,
                                     std::size_t budget_bytes = std::size_t(3) << 30);

/// Independent oracle: enumerate all |alpha|!/prod a_i! words explicitly.
std::vector<BigInt> brute_force_signature_vector(const GroupTable& t,
                                                 const ClassTable& classes,
                                                 const Signature& alpha);

/// Dot product V . chi = sum over words of signature alpha of chi(phi(u)).
QuadScalar character_sum(const std::vector<BigInt>& v, const std::vector<QuadScalar>& chi);

}  // namespace coxsig
