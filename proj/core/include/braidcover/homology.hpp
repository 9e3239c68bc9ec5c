#pragma once

// Handle-level homology of the total space of a planar PALF: 1-handles are
// the non-reference boundary labels of the page, 2-handles the vanishing
// cycles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidcover/integer_matrix.hpp"
#include "braidcover/surface.hpp"

namespace braidcover {

struct ChainData {
  /// Rows: non-reference boundary labels (1-handles). Columns: cycles.
  IntMatrix boundary;
  /// [[0, W], [W^T, F]] with F_kl = w_k . w_l off the diagonal and
  /// F_kk = w_k . w_k - 1 (page framing -1).
  IntMatrix linking;
};

/// Trivialization gauge of the page's tangent bundle: one integer per
/// non-reference boundary label.
struct TrivializationWeights {
  std::vector<std::int64_t> weights;

  static TrivializationWeights flat(std::size_t labels) {
    return {std::vector<std::int64_t>(labels, 0)};
  }
};

struct HomologySummary {
  int euler_characteristic = 0;
  AbelianGroupDescriptor h1;
  std::size_t h2_rank = 0;
};

ChainData chain_complex(const PalfDescriptor& p);
HomologySummary homology(const PalfDescriptor& p);

/// H_1 of the boundary 3-manifold, from the surgery presentation obtained by
/// trading dotted circles for 0-framed unknots.
AbelianGroupDescriptor boundary_h1(const PalfDescriptor& p);

/// Primitive generator of ker(boundary) with its first nonzero entry
/// positive. Throws RankNotOne.
std::vector<std::int64_t> kernel_generator(const PalfDescriptor& p);

std::int64_t rot(const VanishingCycleClass& c, const TrivializationWeights& t);

/// <c_1, generator> = sum_k z_k rot(cycle_k). Throws RankNotOne.
std::int64_t c1_pairing(const PalfDescriptor& p,
                        const TrivializationWeights& t);

}  // namespace braidcover
