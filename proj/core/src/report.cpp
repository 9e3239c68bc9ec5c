#include "braidcover/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>

#include "braidcover/error.hpp"

namespace braidcover {

WeightOverrides parse_weights(const std::string& text) {
  WeightOverrides out;
  std::string compact = text;
  compact.erase(std::remove_if(compact.begin(), compact.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                compact.end());
  if (compact.empty()) return out;
  if (compact.back() == ',') {
    throw Error(ErrorKind::InvalidArgument, "trailing ',' in weights");
  }
  std::stringstream ss(compact);
  std::string item;
  std::size_t position = 0;
  while (std::getline(ss, item, ',')) {
    ++position;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument,
                  "weight entry '" + item + "' is not of the form b:int",
                  position);
    }
    std::size_t label = 0;
    std::int64_t weight = 0;
    const char* begin = item.data();
    const auto r1 = std::from_chars(begin, begin + colon, label);
    const auto r2 =
        std::from_chars(begin + colon + 1, begin + item.size(), weight);
    if (r1.ec != std::errc{} || r1.ptr != begin + colon ||
        r2.ec != std::errc{} || r2.ptr != begin + item.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot parse weight entry '" + item + "'", position);
    }
    if (!out.emplace(label, weight).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "label " + std::to_string(label) + " given twice", position);
    }
  }
  return out;
}

TrivializationWeights resolve_weights(const PageInvariants& page,
                                      const WeightOverrides& overrides) {
  const std::size_t r = page.boundary_count();
  auto t = TrivializationWeights::flat(r ? r - 1 : 0);
  for (const auto& [label, weight] : overrides) {
    if (label < 2 || label > r) {
      throw Error(ErrorKind::InvalidArgument,
                  "weight label " + std::to_string(label) +
                      " must lie in 2.." + std::to_string(r) +
                      " (label 1 is the reference)");
    }
    t.weights[label - 2] = weight;
  }
  return t;
}

InvariantsFragment compute_invariants(const PalfDescriptor& p,
                                      const TrivializationWeights& t) {
  InvariantsFragment f;
  f.homology = homology(p);
  f.boundary_h1 = boundary_h1(p);
  if (f.homology.h2_rank == 1) {
    f.kernel_generator = kernel_generator(p);
    f.c1 = c1_pairing(p, t);
  }
  return f;
}

Json to_json(const InvariantsFragment& f) {
  Json out{{"chi", f.homology.euler_characteristic},
           {"h1", to_json(f.homology.h1)},
           {"h2_rank", f.homology.h2_rank},
           {"boundary_h1", to_json(f.boundary_h1)}};
  if (f.c1) {
    out["c1"] = *f.c1;
    out["c1_abs"] = std::abs(*f.c1);
  } else {
    out["c1"] = nullptr;
    out["c1_abs"] = nullptr;
  }
  return out;
}

bool Report::pass() const {
  return !failure && !verdict.empty() &&
         std::all_of(verdict.begin(), verdict.end(),
                     [](const auto& v) { return v.second; });
}

Report verify_record(int n, int j, const WeightOverrides& overrides) {
  family::check_parameters(n, j);
  Report r;
  r.n = n;
  r.j = j;
  r.expected = family::expected_record(n, j);

  const BraidedSurface surface = family::build_surface(n);
  const CoveringMonodromy rho = family::build_covering(n, j);
  const auto summary = validate_surface(surface);
  r.chi_s = summary.euler_characteristic;
  for (const auto& band : surface.tuple.bands()) {
    r.liftable_per_band.push_back(is_liftable(rho, band.word()));
  }
  r.link = boundary_link(surface);
  const auto counts = family::stabilization_counts(n, j);
  r.legendrian = family::legendrian_bookkeeping(counts.positive, counts.negative);

  auto& v = r.verdict;
  const bool all_liftable =
      std::all_of(r.liftable_per_band.begin(), r.liftable_per_band.end(),
                  [](bool b) { return b; });
  v.emplace_back("positive", summary.positive);
  v.emplace_back("liftable", all_liftable);
  v.emplace_back("strands", summary.strands == r.expected.strands);
  v.emplace_back("bands", summary.bands == r.expected.bands);
  v.emplace_back("chi_S", r.chi_s == r.expected.chi_s);
  v.emplace_back("cover_degree", rho.degree() == r.expected.cover_degree);
  v.emplace_back("sl", r.link.self_linking == r.expected.sl);
  v.emplace_back("tb", r.legendrian.tb == r.expected.tb);
  v.emplace_back("rot_legendrian",
                 r.legendrian.rot == r.expected.rot_legendrian);

  try {
    r.palf = build_cover(surface, rho);
    const auto weights = resolve_weights(r.palf->page, overrides);
    r.invariants = compute_invariants(*r.palf, weights);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw;
    r.failure = e.what();
    return r;
  }

  const auto& page = r.palf->page;
  const auto& inv = *r.invariants;
  v.emplace_back("page_genus", page.genus == r.expected.page_genus);
  v.emplace_back("boundary_labels",
                 page.boundary_count() == r.expected.boundary_labels);
  v.emplace_back("cycles", r.palf->cycles.size() == r.expected.bands);
  v.emplace_back("chi", inv.homology.euler_characteristic == r.expected.chi_x);
  v.emplace_back("h1_trivial", inv.homology.h1.trivial());
  v.emplace_back("h2_rank", inv.homology.h2_rank == r.expected.h2_rank);
  v.emplace_back("boundary_h1",
                 inv.boundary_h1.rank == 0 &&
                     inv.boundary_h1.torsion == r.expected.boundary_torsion);
  const bool has_c1 = inv.c1.has_value();
  v.emplace_back("c1_abs", has_c1 && std::abs(*inv.c1) == r.expected.c1_abs);
  v.emplace_back("c1_matches_rot",
                 has_c1 && std::abs(*inv.c1) == std::abs(r.legendrian.rot));
  bool pattern = false;
  if (inv.kernel_generator) {
    const auto mask = family::expected_kernel_support(n, j);
    pattern = true;
    for (std::size_t k = 0; k < mask.size(); ++k) {
      const auto z = (*inv.kernel_generator)[k];
      pattern = pattern && std::abs(z) == mask[k];
    }
  }
  v.emplace_back("kernel_support", pattern);
  return r;
}

bool SweepReport::pass() const {
  return c1_distinct && shared_invariants &&
         std::all_of(records.begin(), records.end(),
                     [](const Report& r) { return r.pass(); });
}

SweepReport verify_family(int n, const WeightOverrides& overrides) {
  family::check_parameters(n);
  SweepReport s;
  s.n = n;
  std::vector<std::future<Report>> jobs;
  for (int j = 1; j <= n; ++j) {
    jobs.push_back(std::async(std::launch::async, [n, j, &overrides] {
      return verify_record(n, j, overrides);
    }));
  }
  for (auto& job : jobs) s.records.push_back(job.get());

  std::set<std::int64_t> c1_values;
  bool all_c1 = true;
  for (const auto& r : s.records) {
    if (r.invariants && r.invariants->c1) {
      c1_values.insert(std::abs(*r.invariants->c1));
    } else {
      all_c1 = false;
    }
  }
  s.c1_distinct = all_c1 && c1_values.size() == s.records.size();

  s.shared_invariants = all_c1;
  if (all_c1) {
    const auto& first = s.records.front();
    for (const auto& r : s.records) {
      const auto& a = *r.invariants;
      const auto& b = *first.invariants;
      s.shared_invariants =
          s.shared_invariants &&
          r.palf->covering->degree() == first.palf->covering->degree() &&
          r.palf->page.boundary_count() == first.palf->page.boundary_count() &&
          r.palf->page.genus == first.palf->page.genus &&
          a.homology.euler_characteristic ==
              b.homology.euler_characteristic &&
          a.homology.h1 == b.homology.h1 &&
          a.homology.h2_rank == b.homology.h2_rank &&
          a.boundary_h1 == b.boundary_h1 && r.link == first.link;
    }
  }
  return s;
}

Json to_json(const Report& r) {
  Json out{{"N", r.n}, {"j", r.j}, {"liftable_per_band", r.liftable_per_band}};
  if (r.palf) {
    out["page"] = to_json(r.palf->page);
    Json cycles = Json::array();
    for (const auto& c : r.palf->cycles) {
      cycles.push_back(Json{{"band", c.band_position},
                            {"name", family::band_label(r.n, c.band_position)
                                         .to_string()},
                            {"winding", c.winding}});
    }
    out["cycles"] = cycles;
  }
  if (r.invariants) {
    const Json fragment = to_json(*r.invariants);
    for (const auto& [key, value] : fragment.items()) {
      out[key] = value;
    }
    out["kernel_generator"] =
        r.invariants->kernel_generator ? Json(*r.invariants->kernel_generator)
                                       : Json(nullptr);
  }
  out["link"] = to_json(r.link);
  out["chi_S"] = r.chi_s;
  out["legendrian"] = Json{{"tb", r.legendrian.tb}, {"rot", r.legendrian.rot}};
  out["expected"] = to_json(r.expected);
  Json verdict = Json::object();
  for (const auto& [name, ok] : r.verdict) verdict[name] = ok;
  out["verdict"] = verdict;
  if (r.failure) out["failure"] = *r.failure;
  out["pass"] = r.pass();
  return out;
}

Json to_json(const SweepReport& s) {
  Json records = Json::array();
  for (const auto& r : s.records) records.push_back(to_json(r));
  Json c1 = Json::array();
  for (const auto& r : s.records) {
    c1.push_back(r.invariants && r.invariants->c1
                     ? Json(std::abs(*r.invariants->c1))
                     : Json(nullptr));
  }
  return Json{{"N", s.n},
              {"records", records},
              {"c1_abs", c1},
              {"c1_distinct", s.c1_distinct},
              {"shared_invariants", s.shared_invariants},
              {"pass", s.pass()}};
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "N=" << r.n << " j=" << r.j << ": " << (r.pass() ? "PASS" : "FAIL")
     << '\n';
  if (r.failure) os << "  failure: " << *r.failure << '\n';
  if (r.palf) {
    os << "  page: genus " << r.palf->page.genus << ", "
       << r.palf->page.boundary_count() << " boundary components, "
       << r.palf->cycles.size() << " vanishing cycles\n";
  }
  if (r.invariants) {
    const auto& inv = *r.invariants;
    os << "  chi(X) = " << inv.homology.euler_characteristic
       << "  H1(X) = " << inv.homology.h1.to_string()
       << "  rank H2(X) = " << inv.homology.h2_rank
       << "  H1(dX) = " << inv.boundary_h1.to_string() << '\n';
    if (inv.c1) {
      os << "  <c1, Z> = " << *inv.c1 << "  (expected |.| = "
         << r.expected.c1_abs << ")\n";
    }
  }
  os << "  link: " << r.link.strand_count << " strands, e = "
     << r.link.exponent_sum << ", " << r.link.component_count
     << " components, sl = " << r.link.self_linking << '\n';
  os << "  legendrian: tb = " << r.legendrian.tb
     << ", rot = " << r.legendrian.rot << '\n';
  for (const auto& [name, ok] : r.verdict) {
    if (!ok) os << "  mismatch: " << name << '\n';
  }
  return os.str();
}

std::string render_text(const SweepReport& s) {
  std::ostringstream os;
  for (const auto& r : s.records) os << render_text(r);
  os << "N=" << s.n << " sweep: c1 values "
     << (s.c1_distinct ? "pairwise distinct" : "NOT distinct")
     << ", shared invariants " << (s.shared_invariants ? "agree" : "DIFFER")
     << ": " << (s.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace braidcover
