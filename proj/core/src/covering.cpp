#include "braidcover/covering.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>

#include "braidcover/error.hpp"

namespace braidcover {

CoveringMonodromy::CoveringMonodromy(std::size_t degree,
                                     std::vector<Permutation> values)
    : degree_(degree), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].degree() != degree_) {
      throw Error(ErrorKind::InvalidArgument,
                  "covering value has degree " +
                      std::to_string(values_[i].degree()) + ", expected " +
                      std::to_string(degree_),
                  i + 1);
    }
  }
}

CoveringMonodromy CoveringMonodromy::from_transpositions(
    std::size_t degree, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Permutation> values;
  values.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    const auto in_range = [degree](int x) {
      return x >= 1 && static_cast<std::size_t>(x) <= degree;
    };
    if (!in_range(a) || !in_range(b)) {
      throw Error(ErrorKind::InvalidArgument, "sheet out of range", i + 1);
    }
    if (a == b) {
      throw Error(ErrorKind::NotSimple, "value is not a transposition", i + 1);
    }
    values.push_back(Permutation::transposition(degree, a, b));
  }
  return CoveringMonodromy(degree, std::move(values));
}

const Permutation& CoveringMonodromy::value(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    throw Error(ErrorKind::InvalidArgument, "covering index out of range", i);
  }
  return values_[i - 1];
}

Permutation CoveringMonodromy::total() const {
  Permutation p(degree_);
  for (const auto& v : values_) p = p.then(v);
  return p;
}

Permutation CoveringMonodromy::evaluate(const FreeWord& x) const {
  if (x.generator_count() != values_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "free word rank does not match branch count");
  }
  Permutation p(degree_);
  for (const int letter : x.letters()) {
    const auto& v = values_[std::abs(letter) - 1];
    p = p.then(letter > 0 ? v : v.inverse());
  }
  return p;
}

std::size_t PageInvariants::label_of(int sheet) const {
  for (std::size_t b = 0; b < boundary_labels.size(); ++b) {
    const auto& orbit = boundary_labels[b];
    if (std::find(orbit.begin(), orbit.end(), sheet) != orbit.end()) {
      return b + 1;
    }
  }
  throw Error(ErrorKind::InvalidArgument,
              "sheet " + std::to_string(sheet) + " is on no boundary label");
}

std::vector<std::vector<int>> boundary_orbits(const CoveringMonodromy& rho) {
  return rho.total().cycles();
}

PageInvariants validate_covering(const CoveringMonodromy& rho) {
  for (std::size_t i = 1; i <= rho.branch_count(); ++i) {
    if (!rho.value(i).as_transposition()) {
      throw Error(ErrorKind::NotSimple,
                  "rho(gamma_" + std::to_string(i) + ") = " +
                      rho.value(i).to_string() + " is not a transposition",
                  i);
    }
  }
  if (!is_transitive(rho.degree(), rho.values())) {
    throw Error(ErrorKind::Disconnected,
                "covering values generate an intransitive group");
  }
  PageInvariants page;
  page.boundary_labels = boundary_orbits(rho);
  page.euler_characteristic = static_cast<int>(rho.degree()) -
                              static_cast<int>(rho.branch_count());
  const int r = static_cast<int>(page.boundary_labels.size());
  const int twice_genus = 2 - page.euler_characteristic - r;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorKind::Inconsistent,
                "Euler characteristic and boundary count are incompatible");
  }
  page.genus = twice_genus / 2;
  return page;
}

namespace {

// Action of a single braid letter on the tuple of covering values:
// new value at k is rho((gamma_k) letter_*).
void pull_back_letter(std::vector<Permutation>& v, int letter) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
  Permutation& a = v[i];
  Permutation& b = v[i + 1];
  if (letter > 0) {
    Permutation conj = a.then(b).then(a.inverse());
    b = a;
    a = std::move(conj);
  } else {
    Permutation conj = b.inverse().then(a).then(b);
    a = b;
    b = std::move(conj);
  }
}

void require_matching(const CoveringMonodromy& rho, const BraidWord& w) {
  if (w.strand_count() != rho.branch_count()) {
    throw Error(ErrorKind::InvalidArgument,
                "braid has " + std::to_string(w.strand_count()) +
                    " strands but the covering has " +
                    std::to_string(rho.branch_count()) + " branch points");
  }
}

}  // namespace

CoveringMonodromy pullback(const CoveringMonodromy& rho, const BraidWord& w) {
  require_matching(rho, w);
  // pullback(rho, uv) = pullback(pullback(rho, v), u): last letter first.
  std::vector<Permutation> values = rho.values();
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    pull_back_letter(values, *it);
  }
  return CoveringMonodromy(rho.degree(), std::move(values));
}

bool is_liftable(const CoveringMonodromy& rho, const BraidWord& b) {
  return pullback(rho, b) == rho;
}

VanishingCycleClass lift_band(const CoveringMonodromy& rho,
                              const BandGenerator& band,
                              std::size_t band_position) {
  require_matching(rho, band.conjugator);
  const std::size_t m = rho.branch_count();
  if (band.core < 1 || static_cast<std::size_t>(band.core) >= m) {
    throw Error(ErrorKind::InvalidArgument, "band core out of range",
                band_position);
  }
  if (!is_liftable(rho, band.word())) {
    throw Error(ErrorKind::NotLiftable,
                "band is not liftable with respect to the covering",
                band_position);
  }

  // The lift of w^-1 sigma_j w in cover(rho) is carried to the lift of the
  // standard arc A_j in cover(rho o w_*); both covers share the boundary
  // monodromy, so boundary labels transfer unchanged.
  const CoveringMonodromy moved = pullback(rho, band.conjugator);
  const std::size_t j = static_cast<std::size_t>(band.core);
  if (moved.value(j) != moved.value(j + 1)) {
    throw Error(ErrorKind::Inconsistent,
                "liftable band whose pulled-back values at the core differ",
                band_position);
  }
  const auto pair = moved.value(j).as_transposition();
  if (!pair) {
    throw Error(ErrorKind::NotSimple, "core value is not a transposition",
                band_position);
  }
  const auto [s, t] = *pair;

  const auto orbits = boundary_orbits(rho);
  if (boundary_orbits(moved) != orbits) {
    throw Error(ErrorKind::Inconsistent,
                "pullback changed the boundary monodromy", band_position);
  }
  std::vector<std::size_t> label(rho.degree() + 1, 0);
  for (std::size_t b = 0; b < orbits.size(); ++b) {
    for (const int sheet : orbits[b]) label[sheet] = b;
  }

  // Slit model: slit S_i descends from x_i to the boundary; its two preimage
  // edges over the swapped sheets form a properly embedded arc delta_i. The
  // lower region left of S_i on sheet k reaches the boundary component of
  // sheet k (rho_1 ... rho_{i-1})^-1. The lifted curve meets only delta_j
  // and delta_{j+1}, once each, at the ramification points; for z running
  // out along sheet s and back along sheet t, and delta oriented from its
  // sheet-s end, the local z -> z^2 model gives <z, delta_j> = -1 and
  // <z, delta_{j+1}> = +1. Since <boundary_b, delta> is +1 at the start
  // label and -1 at the end label, each arc yields the equation
  //   n[start] - n[end] = <z, delta>.
  struct Equation {
    std::size_t start;
    std::size_t end;
    int value;
  };
  std::vector<Equation> equations;
  equations.reserve(m);
  Permutation prefix_inverse(rho.degree());  // (rho'_1 ... rho'_{i-1})^-1
  for (std::size_t i = 1; i <= m; ++i) {
    const auto arc = moved.value(i).as_transposition();
    if (!arc) {
      throw Error(ErrorKind::NotSimple, "covering value is not a transposition",
                  i);
    }
    int a = arc->first;
    int b = arc->second;
    int value = 0;
    if (i == j || i == j + 1) {
      a = s;
      b = t;
      value = i == j ? -1 : +1;
    }
    equations.push_back(
        {label[prefix_inverse(a)], label[prefix_inverse(b)], value});
    prefix_inverse = moved.value(i).inverse().then(prefix_inverse);
  }

  const std::size_t r = orbits.size();
  std::vector<std::optional<std::int64_t>> n(r);
  n[0] = 0;  // reference label: the one containing sheet 1
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& e : equations) {
      if (e.start == at && !n[e.end]) {
        n[e.end] = *n[at] - e.value;
        queue.push_back(e.end);
      } else if (e.end == at && !n[e.start]) {
        n[e.start] = *n[at] + e.value;
        queue.push_back(e.start);
      }
    }
  }
  for (const auto& e : equations) {
    if (!n[e.start] || !n[e.end]) {
      throw Error(ErrorKind::Inconsistent,
                  "slit arcs do not connect all boundary labels",
                  band_position);
    }
    if (*n[e.start] - *n[e.end] != e.value) {
      throw Error(ErrorKind::NotBoundaryClass,
                  "lifted curve is not a combination of boundary classes",
                  band_position);
    }
  }

  VanishingCycleClass out;
  out.band_position = band_position;
  out.winding.reserve(r - 1);
  for (std::size_t b = 1; b < r; ++b) out.winding.push_back(*n[b]);

  const bool any_positive = std::any_of(out.winding.begin(), out.winding.end(),
                                        [](auto x) { return x > 0; });
  const bool any_negative = std::any_of(out.winding.begin(), out.winding.end(),
                                        [](auto x) { return x < 0; });
  if (!any_positive && !any_negative) {
    throw Error(ErrorKind::NotAllowable, "lifted curve is null-homologous",
                band_position);
  }
  if (any_positive && any_negative) {
    throw Error(ErrorKind::Inconsistent,
                "embedded lifted curve with mixed winding signs",
                band_position);
  }
  if (any_negative) {
    for (auto& x : out.winding) x = -x;
  }
  if (std::any_of(out.winding.begin(), out.winding.end(),
                  [](auto x) { return x > 1; })) {
    throw Error(ErrorKind::Inconsistent, "winding entry exceeds 1",
                band_position);
  }
  return out;
}

}  // namespace braidcover
