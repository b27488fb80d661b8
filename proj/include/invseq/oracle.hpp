#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "invseq/core.hpp"

// Exhaustive reference enumerators. All generation is in lexicographic order.
namespace invseq::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

using Visitor = std::function<void(std::span<const int>)>;
using Predicate = std::function<bool(std::span<const int>)>;

struct WordSpec {
    int n = 0;
    int k = 0;
    bool surjective = false;  // every letter of [0, k-1] used at least once
};

// Definitional enumerator: walks every s-shifted inversion sequence of size n
// and reports those avoiding P. Throws BudgetExceeded if the number of
// candidates exceeds `budget`.
void enumerate_inv_seqs(int n, int s, const PatternSet& P, const Visitor& visit,
                        std::uint64_t budget = kDefaultBudget);

// Same output, but only extends prefixes that already avoid P. The budget
// counts visited tree nodes.
void enumerate_avoiders(int n, int s, const PatternSet& P, const Visitor& visit,
                        std::uint64_t budget = kDefaultBudget);

std::vector<IntSeq> list_inv_seqs(int n, int s, const PatternSet& P,
                                  std::uint64_t budget = kDefaultBudget);

std::uint64_t count_inv_seqs(int n, int s, const PatternSet& P, bool pruned = true,
                             std::uint64_t budget = kDefaultBudget);

std::uint64_t count_inv_seqs_if(int n, int s, const PatternSet& P, const Predicate& pred,
                                std::uint64_t budget = kDefaultBudget);

// |I_0(P)|, ..., |I_{n_max}(P)| from one pruned traversal.
std::vector<std::uint64_t> inv_seq_terms(const PatternSet& P, int n_max,
                                         std::uint64_t budget = kDefaultBudget);

// Words of length n over [0, k-1] avoiding P.
void enumerate_words(const WordSpec& spec, const PatternSet& P, const Visitor& visit,
                     std::uint64_t budget = kDefaultBudget);

std::uint64_t count_words(const WordSpec& spec, const PatternSet& P,
                          std::uint64_t budget = kDefaultBudget);

std::uint64_t count_words_if(const WordSpec& spec, const PatternSet& P, const Predicate& pred,
                             std::uint64_t budget = kDefaultBudget);

// |W_{n,k}(P)| == sum_d C(k,d) |Wbar_{n,d}(P)|, both sides counted by brute force.
bool check_binom_reduction(int n, int k, const PatternSet& P,
                           std::uint64_t budget = kDefaultBudget);

}  // namespace invseq::oracle
