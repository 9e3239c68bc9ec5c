// Command-line driver. Exit codes: 0 pass, 1 verification failure,
// 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "braidcover/covering.hpp"
#include "braidcover/error.hpp"
#include "braidcover/families.hpp"
#include "braidcover/report.hpp"
#include "braidcover/serialization.hpp"

namespace {

using braidcover::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct VerifyOptions {
  int n = 2;
  std::optional<int> j;
  std::optional<int> max_n;
  bool json = false;
  bool text = false;
  std::string weights;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  const auto overrides = braidcover::parse_weights(o.weights);
  if (o.j) {
    if (o.max_n) throw InputError("--j and --max-N are mutually exclusive");
    const auto report = braidcover::verify_record(o.n, *o.j, overrides);
    emit(o.json ? dump(braidcover::to_json(report))
                : braidcover::render_text(report),
         o.out);
    return report.pass() ? kPass : kFail;
  }
  const int last = o.max_n.value_or(o.n);
  if (last < o.n) throw InputError("--max-N must be at least --N");
  bool pass = true;
  Json sweeps = Json::array();
  std::string text;
  for (int n = o.n; n <= last; ++n) {
    const auto sweep = braidcover::verify_family(n, overrides);
    pass = pass && sweep.pass();
    if (o.json) {
      sweeps.push_back(braidcover::to_json(sweep));
    } else {
      text += braidcover::render_text(sweep);
    }
  }
  if (o.json) {
    emit(dump(o.max_n ? sweeps : sweeps.front()), o.out);
  } else {
    emit(text, o.out);
  }
  return pass ? kPass : kFail;
}

void add_verify_options(CLI::App* cmd, VerifyOptions& o) {
  cmd->add_option("--N", o.n, "family parameter N >= 2")->required();
  cmd->add_option("--j", o.j, "single covering index 1..N");
  cmd->add_option("--max-N", o.max_n, "sweep N..max-N");
  cmd->add_option("--weights", o.weights,
                  "gauge override \"b:int,...\" over boundary labels 2..r");
  cmd->add_option("--out", o.out, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided surfaces, branched covers and Stein invariants"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "verify the family invariants for N (all j, or one j)");
  add_verify_options(verify_cmd, verify);
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  VerifyOptions report;
  auto* report_cmd =
      app.add_subcommand("report", "render verification reports");
  add_verify_options(report_cmd, report);
  auto* report_json = report_cmd->add_flag("--json", report.json, "JSON");
  auto* report_text = report_cmd->add_flag("--text", report.text, "text");
  report_json->excludes(report_text);

  auto* family_cmd = app.add_subcommand("family", "family constructors");
  family_cmd->require_subcommand(1);
  int show_n = 2;
  std::optional<int> show_j;
  auto* show_cmd = family_cmd->add_subcommand(
      "show", "dump surface, covering(s) and expected record(s) as JSON");
  show_cmd->add_option("--N", show_n, "family parameter N >= 2")->required();
  show_cmd->add_option("--j", show_j, "covering index 1..N");

  std::string covering_path, braid_text;
  bool lift_json = false;
  auto* lift_cmd = app.add_subcommand(
      "lift-check", "is a braid liftable with respect to a covering?");
  lift_cmd->add_option("--covering", covering_path, "covering JSON file")
      ->required();
  lift_cmd->add_option("--braid", braid_text, "braid word, e.g. \"3 -4 2\"")
      ->required();
  lift_cmd->add_flag("--json", lift_json, "JSON output");

  std::string palf_path, homology_weights;
  auto* homology_cmd =
      app.add_subcommand("homology", "invariants of a PALF JSON file");
  homology_cmd->add_option("--palf", palf_path, "PALF JSON file")->required();
  homology_cmd->add_option("--weights", homology_weights,
                           "gauge override \"b:int,...\"");

  std::string surface_path, cover_covering_path, cover_out;
  auto* cover_cmd = app.add_subcommand(
      "build-cover", "lift a surface through a covering into PALF JSON");
  cover_cmd->add_option("--surface", surface_path, "surface JSON file")
      ->required();
  cover_cmd->add_option("--covering", cover_covering_path,
                        "covering JSON file")
      ->required();
  cover_cmd->add_option("--out", cover_out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*report_cmd) return run_verify(report);

    if (*show_cmd) {
      braidcover::family::check_parameters(show_n, show_j);
      Json out{{"N", show_n},
               {"surface", braidcover::to_json(
                               braidcover::family::build_surface(show_n))}};
      Json coverings = Json::array();
      for (int j = show_j.value_or(1); j <= show_j.value_or(show_n); ++j) {
        coverings.push_back(Json{
            {"j", j},
            {"covering",
             braidcover::to_json(braidcover::family::build_covering(show_n, j))},
            {"expected", braidcover::to_json(
                             braidcover::family::expected_record(show_n, j))}});
      }
      out["coverings"] = coverings;
      emit(dump(out), "");
      return kPass;
    }

    if (*lift_cmd) {
      const auto rho =
          braidcover::covering_from_json(read_json_file(covering_path));
      const auto b =
          braidcover::parse_braid_word(braid_text, rho.branch_count());
      const bool liftable = braidcover::is_liftable(rho, b);
      if (lift_json) {
        emit(dump(Json{{"liftable", liftable}}), "");
      } else {
        emit(liftable ? "true\n" : "false\n", "");
      }
      return liftable ? kPass : kFail;
    }

    if (*homology_cmd) {
      const auto palf = braidcover::palf_from_json(read_json_file(palf_path));
      const auto weights = braidcover::resolve_weights(
          palf.page, braidcover::parse_weights(homology_weights));
      emit(dump(braidcover::to_json(
               braidcover::compute_invariants(palf, weights))),
           "");
      return kPass;
    }

    if (*cover_cmd) {
      const auto surface =
          braidcover::surface_from_json(read_json_file(surface_path));
      const auto rho =
          braidcover::covering_from_json(read_json_file(cover_covering_path));
      try {
        emit(dump(braidcover::to_json(braidcover::build_cover(surface, rho))),
             cover_out);
      } catch (const braidcover::Error& e) {
        if (e.kind() == braidcover::ErrorKind::InvalidArgument) throw;
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
      }
      return kPass;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const braidcover::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
