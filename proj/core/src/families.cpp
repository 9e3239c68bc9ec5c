#include "braidcover/families.hpp"

#include "braidcover/error.hpp"

namespace braidcover::family {

void check_parameters(int n, std::optional<int> j) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "the family is defined for N >= 2, got N = " +
                    std::to_string(n));
  }
  if (j && (*j < 1 || *j > n)) {
    throw Error(ErrorKind::InvalidArgument,
                "j must lie in 1.." + std::to_string(n) + ", got " +
                    std::to_string(*j));
  }
}

BraidWord twist_conjugator(int n, bool barred) {
  check_parameters(n);
  const std::size_t m = strand_count(n);
  BraidWord out(m);
  for (int k = 1; k <= n - 1; ++k) {
    const int o = 6 * (k - 1);
    if (!barred) {
      out = out.then(tau(2 + o, 5 + o, m).inverse())
                .then(tau(5 + o, 8 + o, m, true).inverse());
    } else {
      out = out.then(tau(2 + o, 5 + o, m, true)).then(tau(5 + o, 8 + o, m));
    }
  }
  const int sign = barred ? -1 : 1;
  for (int k = 1; k <= n - 1; ++k) {
    const int o = 6 * (k - 1);
    out = out.then(BraidWord(m, {sign * (4 + o), sign * (3 + o)}));
  }
  return out;
}

namespace {

// Conjugator of tau_{a,b} itself: tau_{a,b} = c^-1 sigma_a c.
BraidWord tau_conjugator(int a, int b, std::size_t m) {
  std::vector<int> letters;
  for (int k = a + 1; k < b; ++k) letters.push_back(k);
  return BraidWord(m, std::move(letters));
}

}  // namespace

BraidedSurface build_surface(int n) {
  check_parameters(n);
  const std::size_t m = strand_count(n);
  std::vector<BandGenerator> bands;
  bands.reserve(band_count(n));
  bands.push_back({twist_conjugator(n, false), 1, +1});
  bands.push_back({twist_conjugator(n, true), 1, +1});
  // (tau_{a,b})^X = X^-1 c^-1 sigma_a c X, so the band conjugator is c X.
  for (int i = 1; i <= n - 1; ++i) {
    const int o = 6 * (i - 1);
    const BraidWord x = tau(2 + o, 7 + o, m, true).inverse();
    bands.push_back({tau_conjugator(2 + o, 6 + o, m).then(x), 2 + o, +1});
  }
  for (int i = 1; i <= n - 1; ++i) {
    const int o = 6 * (i - 1);
    const BraidWord x = tau(2 + o, 7 + o, m, true);
    bands.push_back({tau_conjugator(3 + o, 7 + o, m).then(x), 3 + o, +1});
  }
  for (int i = 1; i <= n - 1; ++i) {
    bands.push_back({BraidWord(m), 6 * i - 2, +1});
  }
  return BraidedSurface{MonodromyTuple(m, std::move(bands))};
}

CoveringMonodromy build_covering(int n, int j) {
  check_parameters(n, j);
  const std::size_t m = strand_count(n);
  std::vector<std::pair<int, int>> values(m);
  values[0] = {1, 2};
  values[m - 1] = {1, 2};
  const auto set = [&values](int position, int a, int b) {
    values[position - 1] = {a, b};
    values[position] = {a, b};
  };
  for (int k = 1; k <= n - 1; ++k) {
    const int o = 6 * (k - 1);
    if (k < j) {
      set(2 + o, 2, 3 * k);
      set(4 + o, 3 * k, 3 * k + 1);
      set(6 + o, 3 * k + 1, 3 * k + 2);
    } else {
      set(2 + o, 3 * k + 1, 3 * k + 2);
      set(4 + o, 3 * k, 3 * k + 1);
      set(6 + o, 2, 3 * k);
    }
  }
  return CoveringMonodromy::from_transpositions(cover_degree(n), values);
}

std::string BandLabel::to_string() const {
  return "beta_" + std::to_string(family) + "_" + std::to_string(index);
}

BandLabel band_label(int n, std::size_t position) {
  check_parameters(n);
  if (position < 1 || position > band_count(n)) {
    throw Error(ErrorKind::InvalidArgument, "band position out of range",
                position);
  }
  if (position <= 2) return {static_cast<int>(position), n};
  const int offset = static_cast<int>(position) - 3;
  return {3 + offset / (n - 1), offset % (n - 1) + 1};
}

LegendrianInvariants legendrian_bookkeeping(int positive, int negative) {
  if (positive < 0 || negative < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "stabilization counts must be nonnegative");
  }
  return {-1 - positive - negative, negative - positive};
}

StabilizationCounts stabilization_counts(int n, int j) {
  check_parameters(n, j);
  return {j - 1, (j - 1) + 2 * (n - j)};
}

ExpectedRecord expected_record(int n, int j) {
  check_parameters(n, j);
  ExpectedRecord e;
  e.n = n;
  e.j = j;
  e.cover_degree = cover_degree(n);
  e.strands = strand_count(n);
  e.bands = band_count(n);
  e.boundary_labels = cover_degree(n);
  e.page_genus = 0;
  e.chi_x = 2;
  e.h2_rank = 1;
  e.boundary_torsion = {2 * static_cast<std::int64_t>(n)};
  e.c1_abs = 2 * static_cast<std::int64_t>(n - j);
  e.tb = -2 * n + 1;
  e.rot_legendrian = 2 * (n - j);
  e.sl = 3 - 3 * n;
  e.chi_s = 3 * n - 3;
  return e;
}

std::vector<int> expected_kernel_support(int n, int j) {
  check_parameters(n, j);
  std::vector<int> mask(band_count(n), 0);
  for (std::size_t pos = 1; pos <= mask.size(); ++pos) {
    const auto label = band_label(n, pos);
    bool in = false;
    switch (label.family) {
      case 1:
      case 2:
      case 5:
        in = true;
        break;
      case 3:
        in = label.index >= j;
        break;
      case 4:
        in = label.index <= j - 1;
        break;
    }
    mask[pos - 1] = in ? 1 : 0;
  }
  return mask;
}

}  // namespace braidcover::family
