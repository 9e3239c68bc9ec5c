#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidcover {

/// A bijection of {1, ..., degree}. Products compose left to right:
/// `p.then(q)` applies p first, so (x)(pq) = ((x)p)q.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// `images[k]` is the image of point k+1 (1-based values).
  static Permutation from_images(const std::vector<int>& images);
  static Permutation transposition(std::size_t degree, int a, int b);

  [[nodiscard]] std::size_t degree() const noexcept { return image_.size(); }
  /// Image of a 1-based point.
  [[nodiscard]] int operator()(int point) const;

  [[nodiscard]] Permutation then(const Permutation& next) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;

  /// The swapped pair (a < b) when this is a transposition.
  [[nodiscard]] std::optional<std::pair<int, int>> as_transposition() const;

  /// Orbits in cyclic order, each starting at its smallest point, listed
  /// by smallest point. Fixed points appear as singletons.
  [[nodiscard]] std::vector<std::vector<int>> cycles() const;

  /// Cycle notation without fixed points, "()" for the identity.
  [[nodiscard]] std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;  // 0-based
};

inline Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  return lhs.then(rhs);
}

/// Whether the group generated by `generators` acts transitively.
[[nodiscard]] bool is_transitive(std::size_t degree,
                                 const std::vector<Permutation>& generators);

}  // namespace braidcover
