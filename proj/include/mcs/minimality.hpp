#ifndef MCS_MINIMALITY_HPP
#define MCS_MINIMALITY_HPP

#include <optional>
#include <span>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

/// Indices i of s for which some j has left(j) = i = right(j), i.e. the
/// indices whose deletion destroys containment of x. Ascending.
/// Throws NotASubsequenceError when x is not a subsequence of s.
std::vector<int> essential_indices(const Seq& s, const Seq& x);

/// True iff index i of s is essential for the pair (j, x): deleting s[i]
/// leaves a string that still contains x without its j-th symbol but no
/// longer contains x itself. Checked via the embedding coincidence
/// left(j) = i = right(j).
/// Throws std::out_of_range on bad indices, NotASubsequenceError otherwise.
bool is_essential_for_pair(const Seq& s, int i, const Seq& x, int j);

/// True iff s is a common supersequence of every input and every index of s
/// is essential for at least one input. Inputs that are not subsequences of
/// s make the predicate false rather than an error.
bool verify_minimal(const Seq& s, std::span<const Seq> inputs);

/// Smallest index of s that is not essential for any input, provided s
/// contains every input; nullopt when s is minimal or not a common
/// supersequence at all.
std::optional<int> first_deletable_index(const Seq& s,
                                         std::span<const Seq> inputs);

}  // namespace mcs

#endif
