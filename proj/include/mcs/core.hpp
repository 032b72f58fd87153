#ifndef MCS_CORE_HPP
#define MCS_CORE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

/// Immutable sequence of symbols addressed 1-based. Index 0 and n+1 are
/// virtual sentinels; they are never dereferenced for a symbol.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::string symbols) : data_(std::move(symbols)) {}

  int size() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.empty(); }

  /// Symbol at 1-based index i, 1 <= i <= size().
  char at(int i) const { return data_[static_cast<std::size_t>(i) - 1]; }

  /// Substring S[i..j], both inclusive and 1-based. S[j..i] with j < i is
  /// the empty sequence.
  Seq substring(int i, int j) const {
    if (j < i) return Seq{};
    if (i < 1) i = 1;
    if (j > size()) j = size();
    if (j < i) return Seq{};
    return Seq{data_.substr(static_cast<std::size_t>(i) - 1,
                            static_cast<std::size_t>(j - i) + 1)};
  }

  Seq concat(const Seq& other) const { return Seq{data_ + other.data_}; }

  std::string_view view() const { return data_; }
  const std::string& str() const { return data_; }

  bool operator==(const Seq&) const = default;

 private:
  std::string data_;
};

/// Interval over the extended index range [0, n+1] of some sequence, with
/// independent openness at each endpoint. Endpoints are integers; only the
/// contained integer indices ever matter.
struct ExtInterval {
  int lo = 0;
  int hi = 0;
  bool lo_open = false;
  bool hi_open = false;

  static ExtInterval closed(int lo, int hi) { return {lo, hi, false, false}; }
  static ExtInterval right_open(int lo, int hi) { return {lo, hi, false, true}; }
  static ExtInterval left_open(int lo, int hi) { return {lo, hi, true, false}; }
  static ExtInterval open(int lo, int hi) { return {lo, hi, true, true}; }

  /// Smallest integer contained in the interval.
  int first_int() const { return lo_open ? lo + 1 : lo; }
  /// Largest integer contained in the interval.
  int last_int() const { return hi_open ? hi - 1 : hi; }
  bool has_ints() const { return first_int() <= last_int(); }
  bool contains(int k) const { return first_int() <= k && k <= last_int(); }

  bool operator==(const ExtInterval&) const = default;
};

class NotASubsequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Image of a strictly increasing embedding of X into S. Only the image
/// array is materialized; the extended endpoints 0 -> 0 and |X|+1 -> |S|+1
/// are answered implicitly by at().
class EmbeddingMap {
 public:
  EmbeddingMap() = default;
  EmbeddingMap(std::vector<int> image, int target_len)
      : image_(std::move(image)), target_len_(target_len) {}

  int size() const { return static_cast<int>(image_.size()); }
  int target_len() const { return target_len_; }

  /// Position in S of X[i]; extended so that at(0) = 0 and
  /// at(size()+1) = target_len()+1.
  int at(int i) const {
    if (i <= 0) return 0;
    if (i > size()) return target_len_ + 1;
    return image_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
  int target_len_ = 0;
};

/// True iff x embeds into s order-preservingly. Greedy scan, O(|x|+|s|).
bool is_subsequence(const Seq& x, const Seq& s);

/// Pointwise smallest embedding of x into s. Throws NotASubsequenceError.
EmbeddingMap left_embedding(const Seq& x, const Seq& s);

/// Pointwise largest embedding of x into s. Throws NotASubsequenceError.
EmbeddingMap right_embedding(const Seq& x, const Seq& s);

/// Length of the longest common prefix of a and b.
int longest_common_prefix(const Seq& a, const Seq& b);

}  // namespace mcs

#endif
