#pragma once

// Braid words, free words and the Artin action.
//
// Composition is left to right everywhere: in the braid word b1 b2, b1 acts
// first. Letters are signed 1-based indices, +i for sigma_i and -i for its
// inverse (likewise +k / -k for gamma_k and its inverse in a free word).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidcover/permutation.hpp"

namespace braidcover {

class BraidWord {
 public:
  BraidWord() = default;
  /// Throws InvalidArgument when a letter is 0 or |letter| >= strand_count.
  explicit BraidWord(std::size_t strand_count, std::vector<int> letters = {});

  static BraidWord generator(std::size_t strand_count, int index,
                             int sign = +1);

  [[nodiscard]] std::size_t strand_count() const noexcept { return strands_; }
  [[nodiscard]] std::span<const int> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  [[nodiscard]] BraidWord inverse() const;
  /// Concatenation `*this` followed by `next`.
  [[nodiscard]] BraidWord then(const BraidWord& next) const;
  /// Cancels adjacent sigma_i sigma_i^{-1} pairs.
  [[nodiscard]] BraidWord freely_reduced() const;

  /// Whitespace-separated signed indices, e.g. "3 -4 2".
  [[nodiscard]] std::string to_string() const;

  /// Literal equality of words; use `braid_equal` for group equality.
  bool operator==(const BraidWord&) const = default;

 private:
  std::size_t strands_ = 1;
  std::vector<int> letters_;
};

inline BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  return lhs.then(rhs);
}

/// Parses the CLI/JSON text syntax ("3 -4 2" is sigma_3 sigma_4^-1 sigma_2).
BraidWord parse_braid_word(std::string_view text, std::size_t strand_count);

/// An element of the free group on gamma_1..gamma_m, kept freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::size_t generator_count, std::vector<int> letters = {});

  static FreeWord generator(std::size_t generator_count, int index);

  [[nodiscard]] std::size_t generator_count() const noexcept { return rank_; }
  [[nodiscard]] std::span<const int> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }

  [[nodiscard]] FreeWord inverse() const;
  [[nodiscard]] FreeWord then(const FreeWord& next) const;
  [[nodiscard]] std::string to_string() const;

  bool operator==(const FreeWord&) const = default;

 private:
  void reduce();

  std::size_t rank_ = 0;
  std::vector<int> letters_;
};

inline FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) {
  return lhs.then(rhs);
}

/// A conjugated half-twist w^-1 sigma_core^sign w, kept structured.
struct BandGenerator {
  BraidWord conjugator;
  int core = 1;
  int sign = +1;

  [[nodiscard]] std::size_t strand_count() const noexcept {
    return conjugator.strand_count();
  }
  [[nodiscard]] bool positive() const noexcept { return sign == +1; }
  /// Expanded word w^-1 sigma_core^sign w. Throws on a bad core or sign.
  [[nodiscard]] BraidWord word() const;

  bool operator==(const BandGenerator&) const = default;
};

class MonodromyTuple {
 public:
  MonodromyTuple() = default;
  /// Throws InvalidArgument (with the 1-based band index) when a band does
  /// not live on `strand_count` strands or has an invalid core/sign.
  MonodromyTuple(std::size_t strand_count, std::vector<BandGenerator> bands);

  [[nodiscard]] std::size_t strand_count() const noexcept { return strands_; }
  [[nodiscard]] std::size_t size() const noexcept { return bands_.size(); }
  [[nodiscard]] const std::vector<BandGenerator>& bands() const noexcept {
    return bands_;
  }
  /// 1-based access.
  [[nodiscard]] const BandGenerator& band(std::size_t position) const;

  /// Ordered product of the band words.
  [[nodiscard]] BraidWord product() const;

  bool operator==(const MonodromyTuple&) const = default;

 private:
  std::size_t strands_ = 1;
  std::vector<BandGenerator> bands_;
};

/// Image in the symmetric group: sigma_i maps to (i i+1).
[[nodiscard]] Permutation perm_of(const BraidWord& b);

/// Right Artin action x -> (x) b_*, letters of b applied in order:
///   (gamma_i) sigma_i     = gamma_i gamma_{i+1} gamma_i^-1
///   (gamma_{i+1}) sigma_i = gamma_i
///   (gamma_k) sigma_i     = gamma_k  otherwise.
[[nodiscard]] FreeWord artin_apply(const BraidWord& b, const FreeWord& x);

/// tau_{i,j} = sigma_i conjugated by sigma_{i+1} ... sigma_{j-1}, expanded
/// as sigma_{j-1}^-1 ... sigma_{i+1}^-1 sigma_i sigma_{i+1} ... sigma_{j-1}.
/// The barred form uses inverse conjugating letters.
[[nodiscard]] BraidWord tau(int i, int j, std::size_t strand_count,
                            bool barred = false);

[[nodiscard]] int exponent_sum(const BraidWord& b) noexcept;

enum class HurwitzDirection {
  Forward,   // (b_k, b_{k+1}) -> (b_{k+1}, b_{k+1}^-1 b_k b_{k+1})
  Backward,  // (b_k, b_{k+1}) -> (b_k b_{k+1} b_k^-1, b_k)
};

/// Elementary Hurwitz move at 1-based position k (1 <= k <= n-1).
[[nodiscard]] MonodromyTuple hurwitz_move(const MonodromyTuple& t,
                                          std::size_t k,
                                          HurwitzDirection direction);

/// Group equality: free reduction first, then the faithful Artin action.
[[nodiscard]] bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidcover
