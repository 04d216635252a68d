// Command-line front end; talks to the library only through its C interface.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "doublelift/doublelift.h"

namespace {

constexpr unsigned long long kDefaultSearchLimit = 10'000'000ULL;

struct Handle {
  void operator()(dl_structure* s) const { dl_free(s); }
};
using Structure = std::unique_ptr<dl_structure, Handle>;

int report_error(dl_status status) {
  if (status == DL_CHECK_FAILED)
    std::fprintf(stderr, "doublelift: check failed: %s\n", dl_last_error());
  else
    std::fprintf(stderr, "doublelift: %s: %s\n", dl_status_name(status), dl_last_error());
  return static_cast<int>(status);
}

Structure load(const std::string& path, dl_status& status) {
  dl_structure* s = nullptr;
  status = dl_load_file(path.c_str(), &s);
  return Structure(s);
}

/// Prints the report, if any, and turns the status into the exit code.
int finish(dl_status status, char* report) {
  if (report) {
    std::fputs(report, stdout);
    dl_string_free(report);
  }
  return status == DL_OK ? 0 : report_error(status);
}

bool search_limit(unsigned long long& limit) {
  const char* env = std::getenv("DOUBLELIFT_SEARCH_LIMIT");
  limit = kDefaultSearchLimit;
  if (!env || !*env) return true;
  char* end = nullptr;
  limit = std::strtoull(env, &end, 10);
  if (*end != '\0' || limit == 0) {
    std::fprintf(stderr, "doublelift: DOUBLELIFT_SEARCH_LIMIT must be a positive integer, got '%s'\n", env);
    return false;
  }
  return true;
}

std::string file_stem(const std::string& name) {
  std::string out = name;
  for (char& c : out)
    if (c == ':') c = '_';
  return out;
}

int write_fixture(const std::string& name, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::fprintf(stderr, "doublelift: cannot create '%s': %s\n", dir.c_str(), ec.message().c_str());
    return static_cast<int>(DL_ERR_IO);
  }
  static const char* const parts[][2] = {
      {"decorated-bicategory", "dec"}, {"precosheaf", "phi"}, {"double-category", "lift"}};
  for (const auto& [part, suffix] : parts) {
    dl_structure* s = nullptr;
    dl_status status = dl_example_structure(name.c_str(), part, &s);
    if (status != DL_OK) return report_error(status);
    Structure owned(s);
    const std::string path = (std::filesystem::path(dir) / (file_stem(name) + "." + suffix + ".json")).string();
    status = dl_save_file(owned.get(), path.c_str());
    if (status != DL_OK) return report_error(status);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite double categories lifted from decorated bicategories"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report");

  std::string file, dec_file, phi_file, out_file, group_file, coefficient_file, name, write_dir;
  std::vector<std::string> phi_files;

  auto* check = app.add_subcommand("check", "Run the axiom suite of the structure in a file");
  check->add_option("file", file)->required();

  auto* lift = app.add_subcommand("lift", "Lift a decorated bicategory along a pre-cosheaf");
  lift->add_option("dec", dec_file, "Decorated bicategory")->required();
  lift->add_option("phi", phi_file, "Pre-cosheaf")->required();
  lift->add_option("-o,--output", out_file, "Write the lift here");

  auto* analyze = app.add_subcommand("analyze", "Globular generation and vertical length");
  analyze->add_option("file", file)->required();

  auto* folding = app.add_subcommand("folding", "Search for a folding and a cofolding");
  folding->add_option("file", file)->required();

  auto* adjunction = app.add_subcommand("adjunction", "Triangle identities over (ΩG, 2ΩA)");
  adjunction->add_option("group", group_file, "Monoid G")->required();
  adjunction->add_option("coefficients", coefficient_file, "Monoid A")->required();
  adjunction->add_option("phis", phi_files, "Pre-cosheaves")->required();

  auto* example = app.add_subcommand("example", "Run a named fixture end to end");
  example->add_option("name", name, "e.g. semidirect:z3:z2:inv, graded:z2:z3:inv, mat:4")->required();
  example->add_option("--write-dir", write_dir, "Also write the fixture's structures here");

  CLI11_PARSE(app, argc, argv);
  const dl_format format = json ? DL_FORMAT_JSON : DL_FORMAT_TEXT;
  char* report = nullptr;
  dl_status status = DL_OK;

  if (*check || *analyze || *folding) {
    Structure s = load(file, status);
    if (status != DL_OK) return report_error(status);
    if (*check) {
      status = dl_check(s.get(), format, &report);
    } else if (*analyze) {
      status = dl_analyze(s.get(), format, &report);
    } else {
      unsigned long long limit = 0;
      if (!search_limit(limit)) return static_cast<int>(DL_ERR_ARGUMENT);
      status = dl_folding(s.get(), limit, format, &report);
    }
    return finish(status, report);
  }

  if (*lift) {
    Structure dec = load(dec_file, status);
    if (status != DL_OK) return report_error(status);
    Structure phi = load(phi_file, status);
    if (status != DL_OK) return report_error(status);
    dl_structure* lifted = nullptr;
    status = dl_lift(dec.get(), phi.get(), format, &report, out_file.empty() ? nullptr : &lifted);
    Structure owned(lifted);
    if (status == DL_OK && owned) {
      const dl_status saved = dl_save_file(owned.get(), out_file.c_str());
      if (saved != DL_OK) {
        dl_string_free(report);
        return report_error(saved);
      }
    }
    return finish(status, report);
  }

  if (*adjunction) {
    Structure g = load(group_file, status);
    if (status != DL_OK) return report_error(status);
    Structure a = load(coefficient_file, status);
    if (status != DL_OK) return report_error(status);
    std::vector<Structure> phis;
    std::vector<const dl_structure*> raw;
    for (const auto& path : phi_files) {
      phis.push_back(load(path, status));
      if (status != DL_OK) return report_error(status);
      raw.push_back(phis.back().get());
    }
    status = dl_adjunction(g.get(), a.get(), raw.data(), raw.size(), format, &report);
    return finish(status, report);
  }

  unsigned long long limit = 0;
  if (!search_limit(limit)) return static_cast<int>(DL_ERR_ARGUMENT);
  status = dl_run_example(name.c_str(), limit, format, &report);
  const int code = finish(status, report);
  if (code == 0 && !write_dir.empty() && name.rfind("mat:", 0) != 0) return write_fixture(name, write_dir);
  return code;
}
