#pragma once

// Braided surfaces in the bidisk, given by braid monodromy, and the
// Lefschetz fibration obtained from a simple branched cover of D^4 branched
// along one.

#include <cstddef>
#include <optional>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/covering.hpp"

namespace braidcover {

struct BraidedSurface {
  MonodromyTuple tuple;

  [[nodiscard]] std::size_t strand_count() const noexcept {
    return tuple.strand_count();
  }
  [[nodiscard]] std::size_t band_count() const noexcept { return tuple.size(); }
};

struct SurfaceSummary {
  std::size_t strands = 0;
  std::size_t bands = 0;
  int euler_characteristic = 0;  // m - n
  std::vector<bool> positive_per_band;
  bool positive = true;
  /// 1-based positions of negative bands.
  std::vector<std::size_t> negative_bands;
};

/// Never throws on negative bands: positivity is reported.
SurfaceSummary validate_surface(const BraidedSurface& s);

/// Monodromy data of the PALF pr_1 o p.
struct PalfDescriptor {
  std::optional<CoveringMonodromy> covering;  // absent when read from a file
  PageInvariants page;
  std::vector<VanishingCycleClass> cycles;
};

/// Checks the descent relations rho((gamma_j) w_*) = rho((gamma_{j+1}) w_*)
/// and liftability for every band, then lifts each band. Errors carry the
/// 1-based band index.
PalfDescriptor build_cover(const BraidedSurface& s,
                           const CoveringMonodromy& rho);

struct TransverseLinkData {
  std::size_t strand_count = 0;
  int exponent_sum = 0;
  std::size_t component_count = 0;
  int self_linking = 0;  // exponent sum minus strand count

  bool operator==(const TransverseLinkData&) const = default;
};

/// Closure of the ordered product of the bands.
TransverseLinkData boundary_link(const BraidedSurface& s);

}  // namespace braidcover
