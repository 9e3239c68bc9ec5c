#pragma once

// Simple branched coverings of the disk, described by their monodromy on the
// standard Hurwitz system, and the lifting of half-twist bands to curves on
// the covering surface (the page).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/permutation.hpp"

namespace braidcover {

class CoveringMonodromy {
 public:
  CoveringMonodromy() = default;
  /// `values[i-1]` is rho(gamma_i). Only degrees are checked here;
  /// `validate_covering` checks simplicity and connectedness.
  CoveringMonodromy(std::size_t degree, std::vector<Permutation> values);

  static CoveringMonodromy from_transpositions(
      std::size_t degree, const std::vector<std::pair<int, int>>& pairs);

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t branch_count() const noexcept {
    return values_.size();
  }
  [[nodiscard]] const std::vector<Permutation>& values() const noexcept {
    return values_;
  }
  /// 1-based access to rho(gamma_i).
  [[nodiscard]] const Permutation& value(std::size_t i) const;

  /// rho(gamma_1 ... gamma_m), the monodromy around the boundary.
  [[nodiscard]] Permutation total() const;

  /// rho evaluated on an arbitrary word in the gamma_i.
  [[nodiscard]] Permutation evaluate(const FreeWord& x) const;

  bool operator==(const CoveringMonodromy&) const = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> values_;
};

/// Topology of the covering surface Sigma.
struct PageInvariants {
  int euler_characteristic = 0;
  int genus = 0;
  /// Orbits of the total permutation, each in cyclic order from its
  /// smallest sheet, listed by smallest sheet. Label 1 contains sheet 1 and
  /// is the reference label.
  std::vector<std::vector<int>> boundary_labels;

  [[nodiscard]] std::size_t boundary_count() const noexcept {
    return boundary_labels.size();
  }
  /// 1-based label of the boundary component through `sheet`.
  [[nodiscard]] std::size_t label_of(int sheet) const;
};

/// Homology class of a lifted band, written in the classes of the
/// non-reference boundary components: `winding[b]` is the coefficient of
/// boundary label b+2 (label 1 is gauged out).
struct VanishingCycleClass {
  std::size_t band_position = 1;
  std::vector<std::int64_t> winding;

  bool operator==(const VanishingCycleClass&) const = default;
};

/// Throws NotSimple (1-based index of the offending value) or Disconnected.
PageInvariants validate_covering(const CoveringMonodromy& rho);

/// Boundary orbits of the total permutation; does not require simplicity.
std::vector<std::vector<int>> boundary_orbits(const CoveringMonodromy& rho);

/// rho composed with the Artin automorphism of w: the value at i is
/// rho((gamma_i) w_*).
CoveringMonodromy pullback(const CoveringMonodromy& rho, const BraidWord& w);

/// rho o b_* == rho.
bool is_liftable(const CoveringMonodromy& rho, const BraidWord& b);

/// Closed component of the lift of the band's arc, as a class on the page.
/// Throws NotLiftable, NotBoundaryClass (page of positive genus and a
/// non-separating lift), or NotAllowable (null-homologous lift).
VanishingCycleClass lift_band(const CoveringMonodromy& rho,
                              const BandGenerator& band,
                              std::size_t band_position = 1);

}  // namespace braidcover
