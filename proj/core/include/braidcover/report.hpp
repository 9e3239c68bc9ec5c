#pragma once

// End-to-end verification of the family: for each (N, j) build the cover,
// compute its invariants and compare them with the expected record.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcover/families.hpp"
#include "braidcover/homology.hpp"
#include "braidcover/serialization.hpp"
#include "braidcover/surface.hpp"

namespace braidcover {

/// Sparse gauge override: 1-based boundary label (2..r) -> weight.
using WeightOverrides = std::map<std::size_t, std::int64_t>;

/// Parses "b:int,b:int,...". Throws InvalidArgument.
WeightOverrides parse_weights(const std::string& text);

/// Dense weights for a page; throws InvalidArgument when an override names
/// the reference label or a label that does not exist.
TrivializationWeights resolve_weights(const PageInvariants& page,
                                      const WeightOverrides& overrides);

/// Invariants computed from a PALF alone (the `homology` subcommand).
struct InvariantsFragment {
  HomologySummary homology;
  AbelianGroupDescriptor boundary_h1;
  std::optional<std::vector<std::int64_t>> kernel_generator;
  std::optional<std::int64_t> c1;
};

InvariantsFragment compute_invariants(const PalfDescriptor& p,
                                      const TrivializationWeights& t);
Json to_json(const InvariantsFragment& f);

struct Report {
  int n = 0;
  int j = 0;
  std::vector<bool> liftable_per_band;
  std::optional<PalfDescriptor> palf;
  std::optional<InvariantsFragment> invariants;
  TransverseLinkData link;
  family::LegendrianInvariants legendrian;
  std::int64_t chi_s = 0;
  family::ExpectedRecord expected;
  std::vector<std::pair<std::string, bool>> verdict;
  std::optional<std::string> failure;  // error raised while building

  [[nodiscard]] bool pass() const;
};

/// Throws InvalidArgument for parameters out of range; verification
/// failures are recorded in the report instead.
Report verify_record(int n, int j, const WeightOverrides& overrides = {});

struct SweepReport {
  int n = 0;
  std::vector<Report> records;
  bool c1_distinct = false;
  bool shared_invariants = false;

  [[nodiscard]] bool pass() const;
};

/// All j = 1..N, evaluated concurrently and merged in order of j.
SweepReport verify_family(int n, const WeightOverrides& overrides = {});

Json to_json(const Report& r);
Json to_json(const SweepReport& s);
std::string render_text(const Report& r);
std::string render_text(const SweepReport& s);

}  // namespace braidcover
