#include "braidcover/surface.hpp"

#include "braidcover/error.hpp"

namespace braidcover {

SurfaceSummary validate_surface(const BraidedSurface& s) {
  SurfaceSummary out;
  out.strands = s.strand_count();
  out.bands = s.band_count();
  out.euler_characteristic =
      static_cast<int>(out.strands) - static_cast<int>(out.bands);
  for (std::size_t k = 1; k <= s.band_count(); ++k) {
    const bool positive = s.tuple.band(k).positive();
    out.positive_per_band.push_back(positive);
    if (!positive) out.negative_bands.push_back(k);
  }
  out.positive = out.negative_bands.empty();
  return out;
}

PalfDescriptor build_cover(const BraidedSurface& s,
                           const CoveringMonodromy& rho) {
  const std::size_t m = s.strand_count();
  if (rho.branch_count() != m) {
    throw Error(ErrorKind::InvalidArgument,
                "covering has " + std::to_string(rho.branch_count()) +
                    " branch points, surface has degree " + std::to_string(m));
  }
  PalfDescriptor out;
  out.page = validate_covering(rho);
  out.covering = rho;

  for (std::size_t k = 1; k <= s.band_count(); ++k) {
    const auto& band = s.tuple.band(k);
    const bool liftable = is_liftable(rho, band.word());
    // Relation of pi_1(D^4 - S): rho((gamma_j) w_*) = rho((gamma_{j+1}) w_*).
    const auto moved = pullback(rho, band.conjugator);
    const auto& left = moved.value(static_cast<std::size_t>(band.core));
    const auto& right = moved.value(static_cast<std::size_t>(band.core) + 1);
    if (!liftable) {
      throw Error(ErrorKind::NotLiftable,
                  "band is not liftable with respect to the covering", k);
    }
    if (left != right) {
      throw Error(ErrorKind::RelationViolated,
                  "descent relation fails for a liftable band", k);
    }
  }
  out.cycles.reserve(s.band_count());
  for (std::size_t k = 1; k <= s.band_count(); ++k) {
    out.cycles.push_back(lift_band(rho, s.tuple.band(k), k));
  }
  return out;
}

TransverseLinkData boundary_link(const BraidedSurface& s) {
  const BraidWord product = s.tuple.product();
  TransverseLinkData out;
  out.strand_count = s.strand_count();
  out.exponent_sum = exponent_sum(product);
  out.component_count = perm_of(product).cycles().size();
  out.self_linking = out.exponent_sum - static_cast<int>(out.strand_count);
  return out;
}

}  // namespace braidcover
