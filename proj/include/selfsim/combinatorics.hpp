#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfsim {

/// A finite word over {-1,+1} with its prefix counts precomputed.
///
/// ones()[k-1] is the number of +1 entries among the first k symbols and
/// minuses()[k-1] = k - ones()[k-1].
class SignSeq {
 public:
  explicit SignSeq(std::vector<int> entries);

  /// Parses the compact form: one '+' or '-' per entry.
  static SignSeq parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  std::span<const int> entries() const { return entries_; }
  std::span<const int> ones() const { return ones_; }
  std::span<const int> minuses() const { return minuses_; }

  int total_ones() const { return ones_.back(); }
  int total_minuses() const { return minuses_.back(); }

  SignSeq negated() const;
  std::string to_string() const;

  // -1 sorts before +1, which matches the integer ordering of the entries.
  auto operator<=>(const SignSeq& other) const { return entries_ <=> other.entries_; }
  bool operator==(const SignSeq& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
  std::vector<int> ones_;
  std::vector<int> minuses_;
};

struct PrefixCounts {
  std::vector<int> ones;
  std::vector<int> minuses;
};

PrefixCounts prefix_counts(const SignSeq& seq);

/// Two distinct words of equal length n >= 3 with the same number of +1
/// entries. Only validate_pair() constructs these.
class SeqPair {
 public:
  const SignSeq& s() const { return s_; }
  const SignSeq& t() const { return t_; }
  std::size_t n() const { return s_.size(); }

  /// (s,t) -> (t,s). Negates the curve polynomial.
  SeqPair swapped() const { return SeqPair(t_, s_); }
  /// (s,t) -> (-s,-t). Exchanges the roles of the two coordinates.
  SeqPair flipped() const { return SeqPair(s_.negated(), t_.negated()); }

  std::string to_string() const { return s_.to_string() + "/" + t_.to_string(); }

  auto operator<=>(const SeqPair& other) const = default;
  bool operator==(const SeqPair& other) const = default;

 private:
  friend SeqPair validate_pair(const SignSeq& s, const SignSeq& t);
  SeqPair(SignSeq s, SignSeq t) : s_(std::move(s)), t_(std::move(t)) {}

  SignSeq s_;
  SignSeq t_;
};

/// Throws Error with LengthMismatch, TooShort, EqualSequences,
/// UnequalOneCounts or DegenerateCurve.
SeqPair validate_pair(const SignSeq& s, const SignSeq& t);

/// The four members of the orbit under {id, SWAP, FLIP, SWAP∘FLIP}, in that order.
std::vector<SeqPair> symmetry_orbit(const SeqPair& pair);

/// Lexicographically smallest orbit member, comparing s then t.
SeqPair canonical_form(const SeqPair& pair);

inline constexpr int kDefaultMaxLength = 12;

struct Enumeration {
  int n = 0;
  std::vector<SeqPair> pairs;    // canonical representatives, sorted
  std::size_t ordered_pairs = 0; // valid ordered pairs, before quotienting
  std::size_t degenerate_ordered = 0;
  std::size_t degenerate_classes = 0;
};

/// Every canonical pair of length n. Throws TooShort or LimitExceeded.
Enumeration enumerate_pairs(int n, int max_length = kDefaultMaxLength);

}  // namespace selfsim
