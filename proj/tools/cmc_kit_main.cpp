#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmc/acceptance.hpp"
#include "cmc/identities.hpp"
#include "cmc/surfaces.hpp"

namespace {

struct CatalogRow {
  const char* kind;
  const char* params;
  const char* notes;
};

constexpr CatalogRow kCatalog[] = {
    {"sphere-cap", "--H <mean curvature> (default 1)",
     "spherical cap over the unit disc"},
    {"plane-disc", "", "flat unit disc"},
    {"enneper", "", "Enneper minimal disc, unit parameter domain"},
    {"cylinder-annulus", "--R <radius> (default 1)",
     "round cylinder band; annulus domain, two boundary circles"},
    {"weierstrass-minimal", "descriptor file only (fpoly/gpoly lines)",
     "minimal disc from polynomial Weierstrass data"},
};

// Named catalog kinds resolve directly; anything else is read as a
// descriptor file path.
std::unique_ptr<cmc::Surface> make_surface(const std::string& spec, double H, double R) {
  if (spec == "sphere-cap") return cmc::sphere_cap(H);
  if (spec == "plane-disc" || spec == "plane") return cmc::plane_disc();
  if (spec == "enneper") return cmc::enneper();
  if (spec == "cylinder-annulus" || spec == "cylinder") return cmc::cylinder_annulus(R);
  std::ifstream in(spec);
  if (!in)
    throw std::invalid_argument("surface '" + spec +
                               "' is not a catalog kind and no descriptor file exists at that path");
  std::ostringstream text;
  text << in.rdbuf();
  return cmc::parse_descriptor(text.str());
}

void write_payload(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << payload;
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const CatalogRow& row : kCatalog) {
      nlohmann::ordered_json entry;
      entry["kind"] = row.kind;
      entry["params"] = row.params;
      entry["notes"] = row.notes;
      doc.push_back(entry);
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  for (const CatalogRow& row : kCatalog) {
    std::cout << row.kind;
    for (size_t pad = std::strlen(row.kind); pad < 22; ++pad) std::cout << ' ';
    std::cout << row.notes;
    if (*row.params) std::cout << "  [" << row.params << "]";
    std::cout << '\n';
  }
  std::cout << "\nAny kind can also be loaded from a descriptor file: pass its path to --surface.\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary-identity toolkit for constant-mean-curvature discs"};
  app.require_subcommand(1);

  bool catalog_json = false;
  CLI::App* catalog = app.add_subcommand("catalog", "list built-in surface kinds");
  catalog->add_flag("--json", catalog_json, "machine-readable listing");

  std::string surface_spec;
  double H = 1.0, R = 1.0;
  cmc::ReportConfig cfg;
  std::string out_path;
  std::string format;

  const auto add_surface_opts = [&](CLI::App* sub) {
    sub->add_option("--surface", surface_spec, "catalog kind or descriptor file path")
        ->required();
    sub->add_option("--H", H, "mean curvature for sphere-cap");
    sub->add_option("--R", R, "radius for cylinder-annulus");
    sub->add_option("--rho", cfg.rho, "boundary circle radius in the parameter domain");
    sub->add_option("--n", cfg.n, "boundary sample count");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* report = app.add_subcommand("report", "full identity report as JSON");
  add_surface_opts(report);
  report->add_option("--grid-n", cfg.grid_n, "interior grid resolution");
  report->add_option("--tol", cfg.tol, "classification tolerance")
      ->check(CLI::PositiveNumber);
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}))
      ->default_val("json");

  CLI::App* profile = app.add_subcommand("profile", "boundary profile as CSV");
  add_surface_opts(profile);
  profile->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv"}))
      ->default_val("csv");

  std::string filter;
  bool inject = false;
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--filter", filter, "run only criteria whose name contains this");
  verify->add_flag("--inject-tau-sign-flip", inject,
                   "corrupt the torsion samples to prove the checks can fail")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*catalog) return cmd_catalog(catalog_json);
    if (*report) {
      const auto surface = make_surface(surface_spec, H, R);
      const cmc::IdentityReport rep = cmc::build_report(*surface, cfg);
      write_payload(out_path, cmc::report_to_json(rep).dump(2) + "\n");
      return 0;
    }
    if (*profile) {
      const auto surface = make_surface(surface_spec, H, R);
      const cmc::BoundaryProfile p = cmc::boundary_profile(*surface, cfg.rho, cfg.n);
      std::ostringstream csv;
      cmc::write_profile_csv(csv, p);
      write_payload(out_path, csv.str());
      return 0;
    }
    cmc::acceptance::Options opts;
    opts.filter = filter;
    opts.inject_tau_sign_flip = inject;
    return cmc::acceptance::run_and_print(opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
