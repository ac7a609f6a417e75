#include "selfsim/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "selfsim/error.hpp"
#include "selfsim/polynomial.hpp"

namespace selfsim {

SignSeq::SignSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::InvalidSequence, "empty sequence");
  ones_.reserve(entries_.size());
  minuses_.reserve(entries_.size());
  int ones = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const int e = entries_[k];
    if (e != 1 && e != -1) {
      throw Error(Errc::InvalidSequence,
                  "entry " + std::to_string(k) + " is " + std::to_string(e) + ", expected +1 or -1");
    }
    if (e == 1) ++ones;
    ones_.push_back(ones);
    minuses_.push_back(static_cast<int>(k + 1) - ones);
  }
}

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<int> entries;
  entries.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      entries.push_back(1);
    } else if (c == '-') {
      entries.push_back(-1);
    } else {
      throw Error(Errc::InvalidSequence, "unexpected character '" + std::string(1, c) + "' in \"" +
                                             std::string(text) + "\"");
    }
  }
  return SignSeq(std::move(entries));
}

SignSeq SignSeq::negated() const {
  std::vector<int> flipped(entries_.size());
  std::transform(entries_.begin(), entries_.end(), flipped.begin(), [](int e) { return -e; });
  return SignSeq(std::move(flipped));
}

std::string SignSeq::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (int e : entries_) out.push_back(e > 0 ? '+' : '-');
  return out;
}

PrefixCounts prefix_counts(const SignSeq& seq) {
  return {{seq.ones().begin(), seq.ones().end()}, {seq.minuses().begin(), seq.minuses().end()}};
}

SeqPair validate_pair(const SignSeq& s, const SignSeq& t) {
  if (s.size() != t.size()) {
    throw Error(Errc::LengthMismatch,
                "lengths " + std::to_string(s.size()) + " and " + std::to_string(t.size()));
  }
  if (s.size() < 3) throw Error(Errc::TooShort, "n = " + std::to_string(s.size()) + " < 3");
  if (s == t) throw Error(Errc::EqualSequences, s.to_string());
  if (s.total_ones() != t.total_ones()) {
    throw Error(Errc::UnequalOneCounts, std::to_string(s.total_ones()) + " vs " +
                                            std::to_string(t.total_ones()) + " entries equal to +1");
  }
  if (curve_poly_from(s, t).is_zero()) {
    throw Error(Errc::DegenerateCurve, s.to_string() + "/" + t.to_string());
  }
  return SeqPair(s, t);
}

std::vector<SeqPair> symmetry_orbit(const SeqPair& pair) {
  const SeqPair flip = pair.flipped();
  return {pair, pair.swapped(), flip, flip.swapped()};
}

SeqPair canonical_form(const SeqPair& pair) {
  auto orbit = symmetry_orbit(pair);
  return *std::min_element(orbit.begin(), orbit.end());
}

namespace {

// Word of length n from a bitmask; bit (n-1-k) set means entry k is +1, so
// numeric order of masks equals lexicographic order of words.
std::vector<int> word_from_mask(std::uint32_t mask, int n) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = (mask >> (n - 1 - k)) & 1u ? 1 : -1;
  return w;
}

struct MaskPair {
  std::uint32_t s;
  std::uint32_t t;
  auto operator<=>(const MaskPair&) const = default;
};

}  // namespace

Enumeration enumerate_pairs(int n, int max_length) {
  if (n < 3) throw Error(Errc::TooShort, "n = " + std::to_string(n) + " < 3");
  if (n > max_length || n > 30) {
    throw Error(Errc::LimitExceeded,
                "n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_length));
  }

  const std::uint32_t count = 1u << n;
  const std::uint32_t full = count - 1;

  // Bucket words by number of +1 entries; only equal buckets pair up.
  std::vector<std::vector<std::uint32_t>> by_ones(n + 1);
  for (std::uint32_t m = 0; m < count; ++m) by_ones[std::popcount(m)].push_back(m);

  Enumeration result;
  result.n = n;
  std::vector<MaskPair> reps;
  for (const auto& bucket : by_ones) {
    for (std::uint32_t s : bucket) {
      for (std::uint32_t t : bucket) {
        if (s == t) continue;
        const MaskPair me{s, t};
        const MaskPair orbit[] = {{t, s}, {s ^ full, t ^ full}, {t ^ full, s ^ full}};
        bool is_rep = true;
        for (const auto& other : orbit) is_rep = is_rep && !(other < me);

        const SignSeq ss(word_from_mask(s, n));
        const SignSeq ts(word_from_mask(t, n));
        if (curve_poly_from(ss, ts).is_zero()) {
          ++result.degenerate_ordered;
          if (is_rep) ++result.degenerate_classes;
          continue;
        }
        ++result.ordered_pairs;
        if (is_rep) reps.push_back(me);
      }
    }
  }

  std::sort(reps.begin(), reps.end());
  result.pairs.reserve(reps.size());
  for (const auto& r : reps) {
    result.pairs.push_back(
        validate_pair(SignSeq(word_from_mask(r.s, n)), SignSeq(word_from_mask(r.t, n))));
  }
  return result;
}

}  // namespace selfsim
