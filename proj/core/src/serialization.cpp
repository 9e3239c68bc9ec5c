#include "braidcover/serialization.hpp"

#include <string>

#include "braidcover/error.hpp"

namespace braidcover {

namespace {

[[noreturn]] void fail(const std::string& message,
                       std::optional<std::size_t> index = std::nullopt) {
  throw Error(ErrorKind::InvalidArgument, message, index);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t as_integer(const Json& j, const std::string& what,
                        std::optional<std::size_t> index = std::nullopt) {
  if (!j.is_number_integer()) fail(what + " must be an integer", index);
  return j.get<std::int64_t>();
}

}  // namespace

Json to_json(const BraidWord& b) {
  Json out = Json::array();
  for (const int x : b.letters()) out.push_back(x);
  return out;
}

Json to_json(const BandGenerator& band) {
  return Json{{"conjugator", to_json(band.conjugator)},
              {"core", band.core},
              {"sign", band.sign}};
}

Json to_json(const MonodromyTuple& t) {
  Json out = Json::array();
  for (const auto& b : t.bands()) out.push_back(to_json(b));
  return out;
}

Json to_json(const BraidedSurface& s) {
  return Json{{"strands", s.strand_count()}, {"bands", to_json(s.tuple)}};
}

Json to_json(const CoveringMonodromy& rho) {
  Json values = Json::array();
  for (const auto& v : rho.values()) {
    if (const auto pair = v.as_transposition()) {
      values.push_back(Json::array({pair->first, pair->second}));
    } else {
      values.push_back(v.to_string());
    }
  }
  return Json{{"degree", rho.degree()}, {"transpositions", values}};
}

Json to_json(const PageInvariants& page) {
  return Json{{"chi", page.euler_characteristic},
              {"genus", page.genus},
              {"boundary_labels", page.boundary_labels}};
}

Json to_json(const PalfDescriptor& p) {
  Json cycles = Json::array();
  for (const auto& c : p.cycles) {
    cycles.push_back(Json{{"band", c.band_position}, {"winding", c.winding}});
  }
  Json out{{"page", to_json(p.page)}, {"cycles", cycles}};
  if (p.covering) out["covering"] = to_json(*p.covering);
  return out;
}

Json to_json(const AbelianGroupDescriptor& g) {
  return Json{{"rank", g.rank}, {"torsion", g.torsion}};
}

Json to_json(const TransverseLinkData& link) {
  return Json{{"strands", link.strand_count},
              {"exponent_sum", link.exponent_sum},
              {"components", link.component_count},
              {"self_linking", link.self_linking}};
}

Json to_json(const family::ExpectedRecord& e) {
  return Json{{"N", e.n},
              {"j", e.j},
              {"cover_degree", e.cover_degree},
              {"strands", e.strands},
              {"bands", e.bands},
              {"boundary_labels", e.boundary_labels},
              {"page_genus", e.page_genus},
              {"chi_X", e.chi_x},
              {"h2_rank", e.h2_rank},
              {"boundary_torsion", e.boundary_torsion},
              {"c1_abs", e.c1_abs},
              {"tb", e.tb},
              {"rot_legendrian", e.rot_legendrian},
              {"sl", e.sl},
              {"chi_S", e.chi_s}};
}

BraidWord braid_from_json(const Json& j, std::size_t strand_count) {
  if (j.is_string()) return parse_braid_word(j.get<std::string>(), strand_count);
  if (!j.is_array()) fail("braid word must be an array of integers");
  std::vector<int> letters;
  for (std::size_t k = 0; k < j.size(); ++k) {
    letters.push_back(static_cast<int>(as_integer(j[k], "braid letter", k + 1)));
  }
  return BraidWord(strand_count, std::move(letters));
}

BandGenerator band_from_json(const Json& j, std::size_t strand_count) {
  BandGenerator band;
  band.conjugator = braid_from_json(field(j, "conjugator"), strand_count);
  band.core = static_cast<int>(as_integer(field(j, "core"), "core"));
  band.sign = j.contains("sign")
                  ? static_cast<int>(as_integer(j.at("sign"), "sign"))
                  : 1;
  if (band.sign != 1 && band.sign != -1) fail("sign must be +1 or -1");
  if (band.core < 1 || static_cast<std::size_t>(band.core) >= strand_count) {
    fail("core index out of range");
  }
  return band;
}

MonodromyTuple tuple_from_json(const Json& j, std::size_t strand_count) {
  if (!j.is_array()) fail("bands must be an array");
  std::vector<BandGenerator> bands;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      bands.push_back(band_from_json(j[k], strand_count));
    } catch (const Error& e) {
      fail(std::string("band: ") + e.what(), k + 1);
    }
  }
  return MonodromyTuple(strand_count, std::move(bands));
}

BraidedSurface surface_from_json(const Json& j) {
  const auto strands = as_integer(field(j, "strands"), "strands");
  if (strands < 1) fail("strands must be positive");
  return BraidedSurface{
      tuple_from_json(field(j, "bands"), static_cast<std::size_t>(strands))};
}

CoveringMonodromy covering_from_json(const Json& j) {
  const auto degree = as_integer(field(j, "degree"), "degree");
  if (degree < 1) fail("degree must be positive");
  const Json& values = field(j, "transpositions");
  if (!values.is_array()) fail("transpositions must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Json& v = values[k];
    if (!v.is_array() || v.size() != 2) {
      throw Error(ErrorKind::NotSimple, "value is not a transposition [a, b]",
                  k + 1);
    }
    pairs.emplace_back(static_cast<int>(as_integer(v[0], "sheet", k + 1)),
                       static_cast<int>(as_integer(v[1], "sheet", k + 1)));
  }
  return CoveringMonodromy::from_transpositions(
      static_cast<std::size_t>(degree), pairs);
}

PalfDescriptor palf_from_json(const Json& j) {
  PalfDescriptor p;
  const Json& page = field(j, "page");
  p.page.euler_characteristic =
      static_cast<int>(as_integer(field(page, "chi"), "chi"));
  p.page.genus = static_cast<int>(as_integer(field(page, "genus"), "genus"));
  const Json& labels = field(page, "boundary_labels");
  if (!labels.is_array() || labels.empty()) {
    fail("boundary_labels must be a nonempty array");
  }
  for (std::size_t b = 0; b < labels.size(); ++b) {
    std::vector<int> orbit;
    if (!labels[b].is_array()) fail("boundary label must be an array", b + 1);
    for (const auto& s : labels[b]) {
      orbit.push_back(static_cast<int>(as_integer(s, "sheet", b + 1)));
    }
    p.page.boundary_labels.push_back(std::move(orbit));
  }
  const Json& cycles = field(j, "cycles");
  if (!cycles.is_array()) fail("cycles must be an array");
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    VanishingCycleClass c;
    c.band_position = cycles[k].contains("band")
                          ? static_cast<std::size_t>(as_integer(
                                cycles[k].at("band"), "band", k + 1))
                          : k + 1;
    const Json& w = field(cycles[k], "winding");
    if (!w.is_array() || w.size() + 1 != p.page.boundary_labels.size()) {
      fail("winding must list one entry per non-reference label", k + 1);
    }
    for (const auto& x : w) c.winding.push_back(as_integer(x, "winding", k + 1));
    p.cycles.push_back(std::move(c));
  }
  if (j.contains("covering")) p.covering = covering_from_json(j.at("covering"));
  return p;
}

}  // namespace braidcover
