#include "doublelift/doublelift.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "doublelift/report.hpp"

struct dl_structure {
  dlift::StructureTable table;
};

namespace {

thread_local std::string last_error;

dl_status fail(dl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Maps library exceptions onto status codes.
template <typename Body>
dl_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const dlift::ParseError& e) {
    return fail(DL_ERR_PARSE, e.what());
  } catch (const dlift::LawViolation& e) {
    return fail(DL_ERR_VALIDATION, e.what());
  } catch (const dlift::ShapeError& e) {
    return fail(DL_ERR_SHAPE, e.what());
  } catch (const dlift::IoError& e) {
    return fail(DL_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DL_ERR_INTERNAL, e.what());
  }
}

dl_status emit(const dlift::Report& r, dl_format format, char** report) {
  *report = copy(format == DL_FORMAT_JSON ? dlift::render_json(r) : dlift::render_text(r));
  if (auto failure = dlift::first_failure(r)) return fail(DL_CHECK_FAILED, *failure);
  return DL_OK;
}

bool valid_format(dl_format f) { return f == DL_FORMAT_TEXT || f == DL_FORMAT_JSON; }

}  // namespace

extern "C" {

dl_status dl_load_file(const char* path, dl_structure** out) {
  if (!path || !out) return fail(DL_ERR_ARGUMENT, "dl_load_file: NULL argument");
  return guarded([&] {
    *out = new dl_structure{dlift::read_structure_file(path)};
    return DL_OK;
  });
}

dl_status dl_load_string(const char* text, dl_structure** out) {
  if (!text || !out) return fail(DL_ERR_ARGUMENT, "dl_load_string: NULL argument");
  return guarded([&] {
    *out = new dl_structure{dlift::parse_structure(text)};
    return DL_OK;
  });
}

void dl_free(dl_structure* s) { delete s; }

const char* dl_kind(const dl_structure* s) { return s ? dlift::kind_name(s->table) : nullptr; }

dl_status dl_write_canonical(const dl_structure* s, char** out) {
  if (!s || !out) return fail(DL_ERR_ARGUMENT, "dl_write_canonical: NULL argument");
  return guarded([&] {
    *out = copy(dlift::write_structure(s->table));
    return DL_OK;
  });
}

dl_status dl_save_file(const dl_structure* s, const char* path) {
  if (!s || !path) return fail(DL_ERR_ARGUMENT, "dl_save_file: NULL argument");
  return guarded([&] {
    dlift::write_structure_file(s->table, path);
    return DL_OK;
  });
}

dl_status dl_check(const dl_structure* s, dl_format format, char** report) {
  if (!s || !report || !valid_format(format)) return fail(DL_ERR_ARGUMENT, "dl_check: invalid argument");
  return guarded([&] { return emit(dlift::check_report(s->table), format, report); });
}

dl_status dl_lift(const dl_structure* dec, const dl_structure* phi, dl_format format, char** report,
                  dl_structure** lifted) {
  if (!dec || !phi || !report || !valid_format(format)) return fail(DL_ERR_ARGUMENT, "dl_lift: invalid argument");
  return guarded([&] {
    auto outcome = dlift::lift_report(dec->table, phi->table);
    if (lifted) *lifted = outcome.lifted ? new dl_structure{std::move(*outcome.lifted)} : nullptr;
    return emit(outcome.report, format, report);
  });
}

dl_status dl_analyze(const dl_structure* c, dl_format format, char** report) {
  if (!c || !report || !valid_format(format)) return fail(DL_ERR_ARGUMENT, "dl_analyze: invalid argument");
  return guarded([&] { return emit(dlift::analyze_report(c->table), format, report); });
}

dl_status dl_folding(const dl_structure* c, unsigned long long node_limit, dl_format format, char** report) {
  if (!c || !report || !valid_format(format) || node_limit == 0)
    return fail(DL_ERR_ARGUMENT, "dl_folding: invalid argument");
  return guarded([&] { return emit(dlift::folding_report(c->table, node_limit), format, report); });
}

dl_status dl_adjunction(const dl_structure* group, const dl_structure* coefficients,
                        const dl_structure* const* phis, size_t count, dl_format format, char** report) {
  if (!group || !coefficients || (count && !phis) || !report || !valid_format(format))
    return fail(DL_ERR_ARGUMENT, "dl_adjunction: invalid argument");
  for (size_t k = 0; k < count; ++k)
    if (!phis[k]) return fail(DL_ERR_ARGUMENT, "dl_adjunction: NULL pre-cosheaf");
  return guarded([&] {
    std::vector<dlift::StructureTable> tables;
    for (size_t k = 0; k < count; ++k) tables.push_back(phis[k]->table);
    return emit(dlift::adjunction_report(group->table, coefficients->table, tables), format, report);
  });
}

dl_status dl_run_example(const char* name, unsigned long long node_limit, dl_format format, char** report) {
  if (!name || !report || !valid_format(format)) return fail(DL_ERR_ARGUMENT, "dl_run_example: invalid argument");
  return guarded([&] { return emit(dlift::example_report(name, node_limit), format, report); });
}

dl_status dl_example_structure(const char* name, const char* part, dl_structure** out) {
  if (!name || !part || !out) return fail(DL_ERR_ARGUMENT, "dl_example_structure: NULL argument");
  return guarded([&] {
    for (auto& [kind, table] : dlift::example_structures(name))
      if (kind == part) {
        *out = new dl_structure{std::move(table)};
        return DL_OK;
      }
    return fail(DL_ERR_ARGUMENT, std::string("fixture has no ") + part);
  });
}

const char* dl_last_error(void) { return last_error.c_str(); }

const char* dl_status_name(dl_status status) {
  switch (status) {
    case DL_OK: return "ok";
    case DL_CHECK_FAILED: return "check failed";
    case DL_ERR_PARSE: return "parse error";
    case DL_ERR_VALIDATION: return "validation error";
    case DL_ERR_ARGUMENT: return "invalid argument";
    case DL_ERR_SHAPE: return "unsupported shape";
    case DL_ERR_IO: return "i/o error";
    case DL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dl_string_free(char* s) { std::free(s); }

}  // extern "C"
