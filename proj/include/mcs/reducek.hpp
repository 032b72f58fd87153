#ifndef MCS_REDUCEK_HPP
#define MCS_REDUCEK_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mcs/core.hpp"
#include "mcs/reduce2.hpp"

namespace mcs {

/// Append-only subsequence of a template sequence T with per-symbol
/// occurrence arrays. Append is O(1); next-occurrence queries are a binary
/// search over the symbol's array.
class OccString {
 public:
  OccString() = default;
  /// Capacities taken from one counting pass over the template. O(|T|).
  explicit OccString(const Seq& templ);

  /// Appends c to the stored string. Throws std::logic_error when c already
  /// occurs as often as in the template; that can only happen through a bug
  /// in the caller, never through bad user input.
  void insert(char c);

  /// Smallest stored index j > i holding c, or size()+1 when none.
  /// Requires 0 <= i <= size().
  int find_next(char c, int i) const;

  /// Reconstructs the stored string by walking the template. O(|T|).
  /// Throws std::logic_error when the stored string is not a subsequence of
  /// the template.
  Seq build_str(const Seq& templ) const;

  int size() const { return size_; }
  int capacity(char c) const { return cap_[byte(c)]; }

 private:
  static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

  std::array<std::vector<int>, 256> occ_{};
  std::array<int, 256> cap_{};
  int size_ = 0;
};

/// One right-embedding index of some input string within the supersequence.
struct MergedRightIndex {
  int s_index;
  std::size_t string_id;
  bool operator==(const MergedRightIndex&) const = default;
};

/// All right-embedding images tagged with their string id, merged ascending
/// by s_index; ties are ordered by ascending string_id. k-way merge of the
/// per-string images, O(N log k). Throws NotASupersequenceError naming the
/// offending input.
std::vector<MergedRightIndex> merge_right_embeddings(
    const Seq& s, std::span<const Seq> inputs);

/// Reduces a common supersequence s of all inputs to a minimal one in
/// O(N log N) where N is the total input length. Throws
/// NotASupersequenceError.
Seq reduce_k(const Seq& s, std::span<const Seq> inputs);

/// Minimal common supersequence of the inputs, reducing their concatenation.
Seq mcs_k(std::span<const Seq> inputs);

namespace detail {

/// Snapshot taken at the top of every sweep iteration, for the loop-invariant
/// tests. Copies the output built so far, so only use on small instances.
struct ReduceKStep {
  int pos;
  std::size_t merged_cursor;
  std::string output_so_far;
  std::vector<int> l_all;
  std::vector<int> matched_counts;  // consumed merged entries per string
};

struct ReduceKStats {
  long find_next_calls = 0;
};

Seq reduce_k_observed(const Seq& s, std::span<const Seq> inputs,
                      const std::function<void(const ReduceKStep&)>* observer,
                      ReduceKStats* stats);

}  // namespace detail

}  // namespace mcs

#endif
