#ifndef MCS_ORACLE_HPP
#define MCS_ORACLE_HPP

#include <set>
#include <span>
#include <string>

#include "mcs/core.hpp"

namespace mcs {

/// Minimality by definition: s contains every input, and deleting any single
/// index of s breaks containment of some input. O(|s| * total input length).
bool brute_is_minimal(const Seq& s, std::span<const Seq> inputs);

/// Every minimal common supersequence of a and b, found by exhausting all
/// strings over their joint alphabet with lengths up to max_len (every MCS
/// fits in |a|+|b| symbols, since each of its indices sits in the image of
/// an embedding of a or b). Intended for tiny instances only; throws
/// std::runtime_error once the candidate space exceeds candidate_cap.
std::set<std::string> brute_mcs_set(const Seq& a, const Seq& b, int max_len,
                                    long candidate_cap = 2'000'000);

}  // namespace mcs

#endif
