// Command-line front end over the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csl4.h"
#include "json.hpp"

namespace {

enum Exit { kOk = 0, kDomain = 1, kMismatch = 2, kUsage = 3 };

struct Failure {
  int code;
  std::string message;
};

void check(csl4_status s) {
  if (s == CSL4_OK) return;
  int code = s == CSL4_E_ARGUMENT ? kUsage : kDomain;
  throw Failure{code, std::string(csl4_status_name(s)) + ": " + csl4_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  csl4_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};
using Param = Handle<csl4_param, csl4_param_free>;
using Module = Handle<csl4_module, csl4_module_free>;
using Report = Handle<csl4_report, csl4_report_free>;
using Table = Handle<csl4_table, csl4_table_free>;

// Rows of string cells rendered as plain text, CSV or a JSON array of objects.
struct Sheet {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << "\n";
    } else if (format == "csv") {
      out << join(header, ",") << "\n";
      for (const auto& r : rows) out << join(r, ",") << "\n";
    } else {
      std::vector<std::size_t> w(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << r[i];
          if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
    }
    return out.str();
  }

  static std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + csv_cell(v[i]);
    return s;
  }
  static std::string csv_cell(const std::string& c) {
    if (c.find_first_of(",\"\n") == std::string::npos) return c;
    std::string q = "\"";
    for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
};

csl4_family family_of(const std::string& name) {
  csl4_family f;
  if (csl4_family_from_name(name.c_str(), &f) != CSL4_OK) throw Failure{kUsage, csl4_last_error()};
  return f;
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stol(v);
  } catch (const std::exception&) {
    throw Failure{kUsage, std::string("bad value for ") + name + ": " + v};
  }
}

csl4_budget budget_from_env() {
  csl4_budget b;
  csl4_budget_default(&b);
  b.max_n = env_long("CSL4_MAX_N", b.max_n);
  b.max_icosian_n = env_long("CSL4_MAX_ICOSIAN_N", b.max_icosian_n);
  b.max_elements = static_cast<size_t>(env_long("CSL4_MAX_ELEMENTS", static_cast<long>(b.max_elements)));
  return b;
}

struct Options {
  std::string format = "plain";
  std::string out;
  std::string family;
  std::string q;
  std::string p;
  std::string kind = "both";
  long max_n = 20;
  long n = 1;
  bool all = false;
  bool brute = false;
};

void parse_param(const Options& o, Param& param) {
  csl4_family f = family_of(o.family);
  if (o.p.empty() && f != CSL4_A4) throw Failure{kUsage, "--p is required for this family"};
  check(csl4_param_parse(f, o.q.c_str(), o.p.empty() ? nullptr : o.p.c_str(), &param.ptr));
  int prim = 0;
  check(csl4_param_primitivized(param.ptr, &prim));
  if (prim) std::cerr << "warning: parameters replaced by their primitive parts\n";
  int adm = 0;
  check(csl4_param_admissible(param.ptr, &adm));
  if (!adm) throw Failure{kDomain, "parameters are not admissible for family " + o.family};
}

std::string cmd_sigma(const Options& o) {
  Param param;
  parse_param(o, param);
  std::string sigma = take([&] {
    char* s = nullptr;
    check(csl4_sigma(param.ptr, &s));
    return s;
  }());
  if (o.format == "plain") return sigma + "\n";
  Sheet sheet{{"family", "q", "p", "sigma"}, {{o.family, o.q, o.p, sigma}}};
  if (o.format == "json") {
    nlohmann::ordered_json j{{"family", o.family}, {"q", o.q}, {"p", o.p}, {"sigma", sigma}};
    return j.dump(2) + "\n";
  }
  return sheet.render(o.format);
}

std::string cmd_csl(const Options& o) {
  Param param;
  parse_param(o, param);
  char* s = nullptr;
  check(csl4_sigma(param.ptr, &s));
  std::string sigma = take(s);
  Module csl;
  check(o.brute ? csl4_csl_brute(param.ptr, &csl.ptr) : csl4_csl_closed(param.ptr, &csl.ptr));
  check(csl4_module_to_json(csl.ptr, &s));
  auto module = nlohmann::ordered_json::parse(take(s));
  if (o.format == "json") {
    nlohmann::ordered_json j{{"family", o.family}, {"q", o.q}, {"p", o.p}, {"sigma", sigma}, {"csl", module}};
    return j.dump(2) + "\n";
  }
  Sheet sheet;
  std::size_t dim = module["ambient_dim"].get<std::size_t>();
  sheet.header.push_back("vector");
  for (std::size_t i = 0; i < dim; ++i) sheet.header.push_back("x" + std::to_string(i));
  std::size_t k = 0;
  for (const auto& v : module["basis"]) {
    std::vector<std::string> row{std::to_string(k++)};
    for (const auto& c : v) row.push_back(c.get<std::string>());
    sheet.rows.push_back(row);
  }
  if (o.format == "csv") return sheet.render("csv");
  return "sigma " + sigma + "\nrank " + std::to_string(k) + "\n" + sheet.render("plain");
}

std::string count_cell(csl4_status (*fn)(csl4_family, long, char**), csl4_family f, long n) {
  char* s = nullptr;
  check(fn(f, n, &s));
  return take(s);
}

std::string cmd_count(const Options& o) {
  csl4_family f = family_of(o.family);
  Sheet sheet{{"n", "f_rot", "f_csl", "rotations", "isometries"}, {}};
  for (long n = 1; n <= o.max_n; ++n) {
    char* rot = nullptr;
    char* csl = nullptr;
    check(csl4_count(f, CSL4_ROT, n, &rot));
    std::string r = take(rot);
    check(csl4_count(f, CSL4_CSL, n, &csl));
    sheet.rows.push_back({std::to_string(n), r, take(csl), count_cell(csl4_rotation_count, f, n),
                          count_cell(csl4_isometry_count, f, n)});
  }
  return sheet.render(o.format);
}

std::string cmd_series(const Options& o) {
  csl4_family f = family_of(o.family);
  if (o.kind != "rot" && o.kind != "csl" && o.kind != "both") throw Failure{kUsage, "--kind must be rot, csl or both"};
  Sheet sheet;
  sheet.header.push_back("n");
  if (o.kind != "csl") sheet.header.push_back("rot");
  if (o.kind != "rot") sheet.header.push_back("csl");
  for (long n = 1; n <= o.max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (csl4_kind k : {CSL4_ROT, CSL4_CSL}) {
      if ((k == CSL4_ROT && o.kind == "csl") || (k == CSL4_CSL && o.kind == "rot")) continue;
      char* s = nullptr;
      check(csl4_series_coefficient(f, k, o.max_n, n, &s));
      row.push_back(take(s));
    }
    sheet.rows.push_back(row);
  }
  return sheet.render(o.format);
}

std::string cmd_enumerate(const Options& o, bool& mismatch) {
  csl4_family f = family_of(o.family);
  csl4_budget budget = budget_from_env();
  Report report;
  check(csl4_count_classes(f, o.n, &budget, &report.ptr));
  size_t classes = 0;
  size_t csls = 0;
  check(csl4_report_counts(report.ptr, &classes, &csls, nullptr));
  Sheet sheet{{"class", "parameters", "csl"}, {}};
  for (size_t i = 0; i < classes; ++i) {
    Param param;
    size_t csl_index = 0;
    check(csl4_report_class(report.ptr, i, &param.ptr, &csl_index));
    char* s = nullptr;
    check(csl4_param_describe(param.ptr, &s));
    sheet.rows.push_back({std::to_string(i), take(s), std::to_string(csl_index)});
  }
  char* rot = nullptr;
  char* csl = nullptr;
  check(csl4_count(f, CSL4_ROT, o.n, &rot));
  check(csl4_count(f, CSL4_CSL, o.n, &csl));
  std::string expect_rot = take(rot);
  std::string expect_csl = take(csl);
  mismatch = expect_rot != std::to_string(classes) || expect_csl != std::to_string(csls);
  std::cerr << o.family << " n=" << o.n << ": " << classes << " classes (f_rot " << expect_rot << "), " << csls
            << " CSLs (f_csl " << expect_csl << ")\n";
  return sheet.render(o.format);
}

std::string cmd_verify(const Options& o, bool& mismatch) {
  csl4_budget budget = budget_from_env();
  Table table;
  if (o.all) {
    check(csl4_verify_acceptance(&budget, &table.ptr));
  } else {
    if (o.family.empty()) throw Failure{kUsage, "verify needs --family or --all"};
    check(csl4_verify_family(family_of(o.family), o.max_n, &budget, &table.ptr));
  }
  size_t rows = 0;
  check(csl4_table_size(table.ptr, &rows));
  Sheet sheet{{"check", "family", "n", "expected", "actual", "result"}, {}};
  mismatch = false;
  for (size_t i = 0; i < rows; ++i) {
    csl4_verify_row r;
    check(csl4_table_row(table.ptr, i, &r));
    sheet.rows.push_back({r.check, r.family, std::to_string(r.n), r.expected, r.actual, r.passed ? "pass" : "FAIL"});
    if (!r.passed) mismatch = true;
  }
  return sheet.render(o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence site lattices and modules of D4*, Z4, A4 and the icosian ring"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", o.out, "Write output to this file");

  auto add_family = [&](CLI::App* sub) {
    return sub->add_option("--family", o.family, "d4, z4, a4 or icosian");
  };
  auto add_params = [&](CLI::App* sub) {
    add_family(sub)->required();
    sub->add_option("--q", o.q, "Quaternion q as \"a,b,c,d\"; components like 1/2 or 1+1t/2")->required();
    sub->add_option("--p", o.p, "Quaternion p (not used for a4)");
  };
  // Subcommands accept the global options too, so flags may follow the command.
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
    sub->add_option("--out", o.out, "Write output to this file");
  };

  auto* sigma = app.add_subcommand("sigma", "Coincidence index of R(q, p)");
  add_params(sigma);
  add_common(sigma);
  auto* csl = app.add_subcommand("csl", "Basis of the CSL (or CSM) of R(q, p)");
  add_params(csl);
  add_common(csl);
  csl->add_flag("--brute", o.brute, "Intersect the modules directly instead of the closed form");
  auto* count = app.add_subcommand("count", "f_rot, f_csl and rotation counts for n = 1..max-n");
  add_family(count)->required();
  count->add_option("--max-n", o.max_n, "Largest index")->check(CLI::PositiveNumber);
  add_common(count);
  auto* series = app.add_subcommand("series", "Dirichlet series coefficients from the Euler product");
  add_family(series)->required();
  series->add_option("--max-n", o.max_n, "Largest index")->check(CLI::PositiveNumber);
  series->add_option("--kind", o.kind, "rot, csl or both");
  add_common(series);
  auto* verify = app.add_subcommand("verify", "Enumeration against the counting functions");
  add_family(verify);
  verify->add_option("--max-n", o.max_n, "Largest index")->check(CLI::PositiveNumber);
  verify->add_flag("--all", o.all, "Run every acceptance criterion");
  add_common(verify);
  auto* enumerate = app.add_subcommand("enumerate", "List the rotation classes of index n");
  add_family(enumerate)->required();
  enumerate->add_option("--n", o.n, "Index")->required()->check(CLI::PositiveNumber);
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  int code = kOk;
  std::string text;
  try {
    bool mismatch = false;
    if (*sigma) text = cmd_sigma(o);
    else if (*csl) text = cmd_csl(o);
    else if (*count) text = cmd_count(o);
    else if (*series) text = cmd_series(o);
    else if (*verify) text = cmd_verify(o, mismatch);
    else if (*enumerate) text = cmd_enumerate(o, mismatch);
    if (mismatch) code = kMismatch;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }

  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text)) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kDomain;
    }
  }
  return code;
}
