#pragma once

// Dense integer matrices with exact Smith normal form and kernel
// computations. Entries are 64-bit; elimination runs in arbitrary precision
// and results are converted back with range checks.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace braidcover {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] IntMatrix transposed() const;
  [[nodiscard]] std::vector<std::int64_t> multiply(
      const std::vector<std::int64_t>& v) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianGroupDescriptor {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;

  [[nodiscard]] bool trivial() const noexcept {
    return rank == 0 && torsion.empty();
  }
  /// "0", "Z", "Z/4", "Z^2 + Z/2 + Z/6".
  [[nodiscard]] std::string to_string() const;

  bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_r (all positive).
std::vector<std::int64_t> smith_invariants(const IntMatrix& a);

/// Z^rows / image(a), where a maps Z^cols -> Z^rows.
AbelianGroupDescriptor cokernel(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// A Z-basis of {v in Z^cols : a v = 0}.
std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a);

}  // namespace braidcover
