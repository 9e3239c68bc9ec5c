#include "braidcover/integer_matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <sstream>
#include <utility>

#include "braidcover/error.hpp"

namespace braidcover {

using boost::multiprecision::cpp_int;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::int64_t> IntMatrix::multiply(
    const std::vector<std::int64_t>& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  }
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

std::string AbelianGroupDescriptor::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << 'Z';
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (const auto t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

namespace {

using BigMatrix = std::vector<std::vector<cpp_int>>;

BigMatrix widen(const IntMatrix& a) {
  BigMatrix m(a.rows(), std::vector<cpp_int>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  }
  return m;
}

std::int64_t narrow(const cpp_int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::InvalidArgument,
                "integer result does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

// Extended Euclid: returns g = gcd(a, b) >= 0 with x a + y b = g.
cpp_int extended_gcd(const cpp_int& a, const cpp_int& b, cpp_int& x,
                     cpp_int& y) {
  cpp_int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const cpp_int q = r0 / r1;
    r0 = r0 - q * r1;
    std::swap(r0, r1);
    s0 = s0 - q * s1;
    std::swap(s0, s1);
    t0 = t0 - q * t1;
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  x = s0;
  y = t0;
  return r0;
}

// Diagonalises m in place; returns the diagonal entries (may include zeros
// beyond the rank), with the divisibility chain enforced.
std::vector<cpp_int> smith_diagonal(BigMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      cpp_int best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (best == 0 || abs(m[r][c]) < best)) {
            best = abs(m[r][c]);
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return diag;  // trailing block is zero
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const cpp_int q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const cpp_int q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<std::int64_t> smith_invariants(const IntMatrix& a) {
  std::vector<std::int64_t> out;
  for (const auto& d : smith_diagonal(widen(a))) {
    if (d != 0) out.push_back(narrow(d));
  }
  return out;
}

AbelianGroupDescriptor cokernel(const IntMatrix& a) {
  const auto invariants = smith_invariants(a);
  AbelianGroupDescriptor g;
  g.rank = a.rows() - invariants.size();
  for (const auto d : invariants) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

std::size_t matrix_rank(const IntMatrix& a) {
  return smith_invariants(a).size();
}

std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigMatrix m = widen(a);
  BigMatrix v(cols, std::vector<cpp_int>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) v[c][c] = 1;

  // Unimodular column operations applied to both m and v.
  const auto combine = [&](std::size_t p, std::size_t q, const cpp_int& a11,
                           const cpp_int& a12, const cpp_int& a21,
                           const cpp_int& a22) {
    // new col p = a11 col p + a12 col q;  new col q = a21 col p + a22 col q
    for (auto* mat : {&m, &v}) {
      for (auto& row : *mat) {
        const cpp_int x = row[p];
        const cpp_int y = row[q];
        row[p] = a11 * x + a12 * y;
        row[q] = a21 * x + a22 * y;
      }
    }
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    for (std::size_t c = pivot + 1; c < cols; ++c) {
      if (m[r][c] == 0) continue;
      if (m[r][pivot] == 0) {
        combine(pivot, c, 0, 1, 1, 0);
        continue;
      }
      cpp_int x, y;
      const cpp_int g = extended_gcd(m[r][pivot], m[r][c], x, y);
      const cpp_int ap = m[r][pivot] / g;
      const cpp_int aq = m[r][c] / g;
      combine(pivot, c, x, y, -aq, ap);
    }
    if (m[r][pivot] != 0) ++pivot;
  }

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t c = pivot; c < cols; ++c) {
    std::vector<std::int64_t> vec(cols);
    for (std::size_t k = 0; k < cols; ++k) vec[k] = narrow(v[k][c]);
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace braidcover
