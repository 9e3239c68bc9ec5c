#include "braidcover/homology.hpp"

#include <algorithm>

#include "braidcover/error.hpp"

namespace braidcover {

namespace {

std::size_t hole_count(const PalfDescriptor& p) {
  const std::size_t r = p.page.boundary_count();
  if (r == 0) {
    throw Error(ErrorKind::InvalidArgument, "page has no boundary labels");
  }
  return r - 1;
}

}  // namespace

ChainData chain_complex(const PalfDescriptor& p) {
  const std::size_t holes = hole_count(p);
  const std::size_t n = p.cycles.size();
  ChainData out{IntMatrix(holes, n), IntMatrix(holes + n, holes + n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto& w = p.cycles[k].winding;
    if (w.size() != holes) {
      throw Error(ErrorKind::InvalidArgument,
                  "winding vector has " + std::to_string(w.size()) +
                      " entries, page has " + std::to_string(holes) +
                      " non-reference labels",
                  k + 1);
    }
    for (std::size_t b = 0; b < holes; ++b) out.boundary(b, k) = w[b];
  }
  auto& lam = out.linking;
  for (std::size_t b = 0; b < holes; ++b) {
    for (std::size_t k = 0; k < n; ++k) {
      lam(b, holes + k) = out.boundary(b, k);
      lam(holes + k, b) = out.boundary(b, k);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      std::int64_t dot = 0;
      for (std::size_t b = 0; b < holes; ++b) {
        dot += out.boundary(b, k) * out.boundary(b, l);
      }
      lam(holes + k, holes + l) = k == l ? dot - 1 : dot;
    }
  }
  return out;
}

HomologySummary homology(const PalfDescriptor& p) {
  const ChainData chain = chain_complex(p);
  HomologySummary out;
  out.euler_characteristic = 1 - static_cast<int>(chain.boundary.rows()) +
                             static_cast<int>(chain.boundary.cols());
  out.h1 = cokernel(chain.boundary);
  out.h2_rank = chain.boundary.cols() - matrix_rank(chain.boundary);
  return out;
}

AbelianGroupDescriptor boundary_h1(const PalfDescriptor& p) {
  return cokernel(chain_complex(p).linking);
}

std::vector<std::int64_t> kernel_generator(const PalfDescriptor& p) {
  const ChainData chain = chain_complex(p);
  auto basis = integer_kernel(chain.boundary);
  if (basis.size() != 1) {
    throw Error(ErrorKind::RankNotOne,
                "second homology has rank " + std::to_string(basis.size()));
  }
  auto z = std::move(basis.front());
  const auto first =
      std::find_if(z.begin(), z.end(), [](auto x) { return x != 0; });
  if (first != z.end() && *first < 0) {
    for (auto& x : z) x = -x;
  }
  return z;
}

std::int64_t rot(const VanishingCycleClass& c,
                 const TrivializationWeights& t) {
  if (t.weights.size() != c.winding.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "trivialization has " + std::to_string(t.weights.size()) +
                    " weights, cycle has " + std::to_string(c.winding.size()) +
                    " winding entries");
  }
  std::int64_t out = 1;
  for (std::size_t b = 0; b < c.winding.size(); ++b) {
    out += t.weights[b] * c.winding[b];
  }
  return out;
}

std::int64_t c1_pairing(const PalfDescriptor& p,
                        const TrivializationWeights& t) {
  const auto z = kernel_generator(p);
  std::int64_t out = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    out += z[k] * rot(p.cycles[k], t);
  }
  return out;
}

}  // namespace braidcover
