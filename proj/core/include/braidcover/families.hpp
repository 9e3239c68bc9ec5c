#pragma once

// The parametric family: for N >= 2 a positive braided surface S_N of degree
// 6N-4 with 3N-1 bands, and N simple coverings q_{N,1..N} of degree 3N-1 of
// the fiber disk, together with the invariants each (S_N, q_{N,j}) is
// expected to produce.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/covering.hpp"
#include "braidcover/surface.hpp"

namespace braidcover::family {

[[nodiscard]] constexpr std::size_t strand_count(int n) {
  return static_cast<std::size_t>(6 * n - 4);
}
[[nodiscard]] constexpr std::size_t cover_degree(int n) {
  return static_cast<std::size_t>(3 * n - 1);
}
[[nodiscard]] constexpr std::size_t band_count(int n) {
  return static_cast<std::size_t>(3 * n - 1);
}

/// Conjugator T_{1,N} of the first band (barred: of the second band).
BraidWord twist_conjugator(int n, bool barred);

/// Bands in the order beta_{1,N}, beta_{2,N}, beta_{3,1..N-1},
/// beta_{4,1..N-1}, beta_{5,1..N-1}. Throws InvalidArgument for N < 2.
BraidedSurface build_surface(int n);

/// Covering monodromy of q_{N,j} on the 6N-4 standard loops.
CoveringMonodromy build_covering(int n, int j);

/// Family and index of the band at a 1-based tuple position: {1, N},
/// {2, N}, {3, i}, {4, i} or {5, i}.
struct BandLabel {
  int family = 0;
  int index = 0;
  [[nodiscard]] std::string to_string() const;  // "beta_3_2"
};
BandLabel band_label(int n, std::size_t position);

struct LegendrianInvariants {
  int tb = 0;
  int rot = 0;
  bool operator==(const LegendrianInvariants&) const = default;
};

/// Invariants of the tb = -1 unknot after `positive` positive and
/// `negative` negative stabilizations.
LegendrianInvariants legendrian_bookkeeping(int positive, int negative);

/// Stabilization counts yielding the surgery knot for (N, j): j-1
/// alternating pairs followed by 2(N-j) further negative ones.
struct StabilizationCounts {
  int positive = 0;
  int negative = 0;
};
StabilizationCounts stabilization_counts(int n, int j);

struct ExpectedRecord {
  int n = 0;
  int j = 0;
  std::size_t cover_degree = 0;
  std::size_t strands = 0;
  std::size_t bands = 0;
  std::size_t boundary_labels = 0;
  int page_genus = 0;
  int chi_x = 2;
  std::size_t h2_rank = 1;
  std::vector<std::int64_t> boundary_torsion;
  std::int64_t c1_abs = 0;
  int tb = 0;
  int rot_legendrian = 0;
  int sl = 0;
  int chi_s = 0;
};

ExpectedRecord expected_record(int n, int j);

/// 0/1 mask over band positions: support of the generator of H_2, namely
/// bands 1 and 2, beta_{3,i} for i >= j, beta_{4,i} for i <= j-1, and all
/// beta_{5,i}.
std::vector<int> expected_kernel_support(int n, int j);

/// Throws InvalidArgument unless N >= 2 and, when given, 1 <= j <= N.
void check_parameters(int n, std::optional<int> j = std::nullopt);

}  // namespace braidcover::family
