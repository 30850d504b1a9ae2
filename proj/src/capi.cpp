#include "csl4.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>

#include "json.hpp"

#include "csl4/acceptance.hpp"

struct csl4_param {
  csl4::RotParam value;
};

struct csl4_module {
  csl4::FreeModule value;
};

struct csl4_report {
  csl4::EnumReport value;
};

struct csl4_table {
  std::vector<csl4::VerifyRow> rows;
  std::vector<std::string> family_names;
};

namespace {

thread_local std::string g_last_error;

csl4_status fail(csl4_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps exceptions from the core onto status codes.
template <class F>
csl4_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return CSL4_OK;
  } catch (const csl4::BudgetError& e) {
    return fail(CSL4_E_BUDGET, e.what());
  } catch (const csl4::ParseError& e) {
    return fail(CSL4_E_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CSL4_E_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CSL4_E_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(CSL4_E_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(CSL4_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_family(csl4_family f) { return f >= CSL4_D4STAR && f <= CSL4_ICOSIAN; }

csl4::Family to_family(csl4_family f) { return static_cast<csl4::Family>(f); }
csl4::Kind to_kind(csl4_kind k) { return k == CSL4_ROT ? csl4::Kind::Rot : csl4::Kind::Csl; }

csl4::Budget to_budget(const csl4_budget* b) {
  csl4::Budget out;
  if (b) {
    out.max_n = b->max_n;
    out.max_icosian_n = b->max_icosian_n;
    out.max_elements = b->max_elements;
  }
  return out;
}

#define CSL4_REQUIRE(cond, msg) \
  if (!(cond)) return fail(CSL4_E_ARGUMENT, msg)

csl4_table* make_table(std::vector<csl4::VerifyRow> rows) {
  auto t = std::make_unique<csl4_table>();
  t->rows = std::move(rows);
  for (const auto& r : t->rows) t->family_names.emplace_back(csl4::family_name(r.family));
  return t.release();
}

}  // namespace

extern "C" {

const char* csl4_version(void) { return "1.0.0"; }

const char* csl4_last_error(void) { return g_last_error.c_str(); }

const char* csl4_status_name(csl4_status status) {
  switch (status) {
    case CSL4_OK: return "ok";
    case CSL4_E_ARGUMENT: return "invalid argument";
    case CSL4_E_PARSE: return "parse error";
    case CSL4_E_DOMAIN: return "domain error";
    case CSL4_E_BUDGET: return "budget exceeded";
    case CSL4_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void csl4_string_free(char* s) { std::free(s); }

csl4_status csl4_family_from_name(const char* name, csl4_family* out) {
  CSL4_REQUIRE(name && out, "null argument");
  auto f = csl4::parse_family(name);
  if (!f) return fail(CSL4_E_ARGUMENT, std::string("unknown family: ") + name);
  *out = static_cast<csl4_family>(*f);
  return CSL4_OK;
}

const char* csl4_family_name(csl4_family family) {
  if (!valid_family(family)) return "";
  return csl4::family_name(to_family(family)).data();
}

csl4_status csl4_point_group_order(csl4_family family, size_t* out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  *out = csl4::point_group_order(to_family(family));
  return CSL4_OK;
}

csl4_status csl4_param_parse(csl4_family family, const char* q, const char* p, csl4_param** out) {
  CSL4_REQUIRE(valid_family(family) && q && out, "invalid argument");
  CSL4_REQUIRE(p || family == CSL4_A4, "missing p quaternion");
  return guarded([&] {
    *out = new csl4_param{csl4::RotParam::parse(to_family(family), q, p ? p : "")};
  });
}

void csl4_param_free(csl4_param* param) { delete param; }

csl4_status csl4_param_describe(const csl4_param* param, char** out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] { *out = dup(param->value.str()); });
}

csl4_status csl4_param_primitivized(const csl4_param* param, int* out) {
  CSL4_REQUIRE(param && out, "null argument");
  *out = param->value.primitivized() ? 1 : 0;
  return CSL4_OK;
}

csl4_status csl4_param_admissible(const csl4_param* param, int* out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] { *out = csl4::is_admissible(param->value) ? 1 : 0; });
}

csl4_status csl4_sigma(const csl4_param* param, char** out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] { *out = dup(csl4::sigma(param->value).get_str()); });
}

csl4_status csl4_rotation_matrix_json(const csl4_param* param, char** out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] {
    csl4::GoldenMatrix m = csl4::rotation_matrix(param->value);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
      rows.push_back(row);
    }
    *out = dup(rows.dump());
  });
}

csl4_status csl4_csl_closed(const csl4_param* param, csl4_module** out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] { *out = new csl4_module{csl4::csl_closed(param->value)}; });
}

csl4_status csl4_csl_brute(const csl4_param* param, csl4_module** out) {
  CSL4_REQUIRE(param && out, "null argument");
  return guarded([&] { *out = new csl4_module{csl4::csl_brute(param->value)}; });
}

csl4_status csl4_family_module(csl4_family family, csl4_module** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  return guarded([&] { *out = new csl4_module{csl4::family_module(to_family(family))}; });
}

void csl4_module_free(csl4_module* module) { delete module; }

csl4_status csl4_module_to_json(const csl4_module* module, char** out) {
  CSL4_REQUIRE(module && out, "null argument");
  return guarded([&] { *out = dup(module->value.to_json()); });
}

csl4_status csl4_module_from_json(const char* text, csl4_module** out) {
  CSL4_REQUIRE(text && out, "null argument");
  return guarded([&] {
    try {
      *out = new csl4_module{csl4::FreeModule::from_json(text)};
    } catch (const csl4::ModuleError& e) {
      throw csl4::ParseError(e.what());
    }
  });
}

csl4_status csl4_module_rank(const csl4_module* module, size_t* rank, size_t* ambient_dim) {
  CSL4_REQUIRE(module, "null argument");
  if (rank) *rank = module->value.rank();
  if (ambient_dim) *ambient_dim = module->value.ambient_dim();
  return CSL4_OK;
}

csl4_status csl4_module_equal(const csl4_module* a, const csl4_module* b, int* out) {
  CSL4_REQUIRE(a && b && out, "null argument");
  *out = a->value == b->value ? 1 : 0;
  return CSL4_OK;
}

csl4_status csl4_module_index_in(const csl4_module* sub, const csl4_module* sup, char** out) {
  CSL4_REQUIRE(sub && sup && out, "null argument");
  return guarded([&] { *out = dup(csl4::index_in(sub->value, sup->value).get_str()); });
}

csl4_status csl4_count(csl4_family family, csl4_kind kind, long n, char** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] { *out = dup(csl4::f_value(to_family(family), to_kind(kind), n).get_str()); });
}

csl4_status csl4_series_coefficient(csl4_family family, csl4_kind kind, long N, long n, char** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1 && n <= N, "need 1 <= n <= N");
  return guarded([&] {
    // Expansions are cached per (family, kind) at the largest N requested.
    static thread_local std::map<std::pair<int, int>, csl4::DirichletCoeffs> cache;
    auto& c = cache[{static_cast<int>(family), static_cast<int>(kind)}];
    if (c.N < N) c = csl4::dirichlet_series(to_family(family), to_kind(kind), N);
    *out = dup(c[n].get_str());
  });
}

csl4_status csl4_rotation_count(csl4_family family, long n, char** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] { *out = dup(csl4::rotation_count(to_family(family), n).get_str()); });
}

csl4_status csl4_isometry_count(csl4_family family, long n, char** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] { *out = dup(csl4::isometry_count(to_family(family), n).get_str()); });
}

csl4_status csl4_spectrum_member(csl4_family family, long n, int* out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] { *out = csl4::spectrum_member(to_family(family), n) ? 1 : 0; });
}

void csl4_budget_default(csl4_budget* out) {
  if (!out) return;
  csl4::Budget b;
  out->max_n = b.max_n;
  out->max_icosian_n = b.max_icosian_n;
  out->max_elements = b.max_elements;
}

csl4_status csl4_count_classes(csl4_family family, long n, const csl4_budget* budget, csl4_report** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(n >= 1, "n must be at least 1");
  return guarded([&] { *out = new csl4_report{csl4::count_classes(to_family(family), n, to_budget(budget))}; });
}

void csl4_report_free(csl4_report* report) { delete report; }

csl4_status csl4_report_counts(const csl4_report* report, size_t* rotation_classes, size_t* distinct_csls,
                               double* seconds) {
  CSL4_REQUIRE(report, "null argument");
  if (rotation_classes) *rotation_classes = report->value.rotation_class_count;
  if (distinct_csls) *distinct_csls = report->value.distinct_csl_count;
  if (seconds) *seconds = report->value.elapsed_seconds;
  return CSL4_OK;
}

csl4_status csl4_report_class(const csl4_report* report, size_t i, csl4_param** param, size_t* csl_index) {
  CSL4_REQUIRE(report, "null argument");
  CSL4_REQUIRE(i < report->value.class_reps.size(), "class index out of range");
  return guarded([&] {
    if (param) *param = new csl4_param{report->value.class_reps[i]};
    if (csl_index) *csl_index = report->value.class_csl[i];
  });
}

csl4_status csl4_verify_family(csl4_family family, long max_n, const csl4_budget* budget, csl4_table** out) {
  CSL4_REQUIRE(valid_family(family) && out, "invalid argument");
  CSL4_REQUIRE(max_n >= 1, "max_n must be at least 1");
  return guarded([&] { *out = make_table(csl4::verify_family(to_family(family), max_n, to_budget(budget))); });
}

csl4_status csl4_verify_acceptance(const csl4_budget* budget, csl4_table** out) {
  CSL4_REQUIRE(out, "null argument");
  return guarded([&] {
    std::vector<csl4::VerifyRow> rows;
    for (const auto& r : csl4::run_acceptance(to_budget(budget))) {
      csl4::VerifyRow row;
      row.check = "criterion " + std::to_string(r.id) + ": " + r.title;
      row.n = r.id;
      row.expected = "pass";
      row.actual = r.passed ? "pass" : "FAIL" + (r.detail.empty() ? std::string() : " " + r.detail);
      row.passed = r.passed;
      rows.push_back(std::move(row));
    }
    *out = make_table(std::move(rows));
    for (auto& name : (*out)->family_names) name = "all";
  });
}

csl4_status csl4_table_size(const csl4_table* table, size_t* out) {
  CSL4_REQUIRE(table && out, "null argument");
  *out = table->rows.size();
  return CSL4_OK;
}

csl4_status csl4_table_row(const csl4_table* table, size_t i, csl4_verify_row* out) {
  CSL4_REQUIRE(table && out, "null argument");
  CSL4_REQUIRE(i < table->rows.size(), "row index out of range");
  const auto& r = table->rows[i];
  out->check = r.check.c_str();
  out->family = table->family_names[i].c_str();
  out->n = r.n;
  out->expected = r.expected.c_str();
  out->actual = r.actual.c_str();
  out->passed = r.passed ? 1 : 0;
  return CSL4_OK;
}

void csl4_table_free(csl4_table* table) { delete table; }

}  // extern "C"
