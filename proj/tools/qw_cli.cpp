// Command-line front end. Talks to the core exclusively through the C API
// in qw.h; everything else here is argument handling and file I/O.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "qw.h"

namespace {

int map_status(qw_status st) {
  if (st == QW_OK) return 0;
  if (st == QW_ERR_FALSIFIED) return 3;
  return 2;
}

int fail(qw_status st) {
  std::fprintf(stderr, "qw: error: %s\n", qw_last_error());
  return map_status(st);
}

struct AlgebraHandle {
  qw_algebra* ptr = nullptr;
  ~AlgebraHandle() { qw_algebra_free(ptr); }
};

struct ReportHandle {
  qw_report* ptr = nullptr;
  ~ReportHandle() { qw_report_free(ptr); }
};

int print_report(const qw_report* report, bool as_json) {
  char* text = nullptr;
  const qw_status st = as_json ? qw_report_render_json(report, &text)
                               : qw_report_render_text(report, &text);
  if (st != QW_OK) return fail(st);
  std::fputs(text, stdout);
  qw_string_free(text);
  return qw_report_exit_code(report);
}

int run_check(const std::string& file, bool as_json) {
  AlgebraHandle a;
  if (qw_status st = qw_algebra_read_file(file.c_str(), &a.ptr); st != QW_OK)
    return fail(st);
  ReportHandle r;
  if (qw_status st = qw_cmd_check(a.ptr, &r.ptr); st != QW_OK) return fail(st);
  return print_report(r.ptr, as_json);
}

int run_analyze(const std::string& file, bool as_json) {
  AlgebraHandle a;
  if (qw_status st = qw_algebra_read_file(file.c_str(), &a.ptr); st != QW_OK)
    return fail(st);
  ReportHandle r;
  if (qw_status st = qw_cmd_analyze(a.ptr, &r.ptr); st != QW_OK)
    return fail(st);
  return print_report(r.ptr, as_json);
}

int run_quotient(const std::string& file, const std::string& ds,
                 bool as_json) {
  AlgebraHandle a;
  if (qw_status st = qw_algebra_read_file(file.c_str(), &a.ptr); st != QW_OK)
    return fail(st);
  ReportHandle r;
  if (qw_status st = qw_cmd_quotient(a.ptr, ds.c_str(), &r.ptr, nullptr);
      st != QW_OK)
    return fail(st);
  return print_report(r.ptr, as_json);
}

int run_search(int order, long limit, const std::string& out_dir,
               bool as_json) {
  ReportHandle r;
  qw_algebra** models = nullptr;
  size_t count = 0;
  if (qw_status st = qw_cmd_search(order, limit, &r.ptr, &models, &count);
      st != QW_OK)
    return fail(st);

  int rc = print_report(r.ptr, as_json);
  if (rc == 0 && !out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    for (size_t i = 0; i < count; ++i) {
      char* text = nullptr;
      if (qw_algebra_serialize(models[i], &text) != QW_OK) {
        rc = 2;
        break;
      }
      const std::string path =
          out_dir + "/" + qw_algebra_name(models[i]) + ".alg";
      std::ofstream out(path, std::ios::binary);
      out << text;
      qw_string_free(text);
      if (!out) {
        std::fprintf(stderr, "qw: error: cannot write '%s'\n", path.c_str());
        rc = 2;
        break;
      }
    }
  }
  qw_algebra_list_free(models, count);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum-Wajsberg algebra toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qw_version()));

  std::string file;
  std::string ds;
  std::string out_dir;
  int order = 0;
  long limit = -1;
  bool as_json = false;

  auto* check = app.add_subcommand(
      "check", "decide whether a table is a quantum-Wajsberg algebra");
  check->add_option("file", file, "algebra file")->required();
  check->add_flag("--json", as_json, "machine-readable report");

  auto* analyze = app.add_subcommand(
      "analyze", "filters, deductive systems, linearity, quotient checks");
  analyze->add_option("file", file, "algebra file")->required();
  analyze->add_flag("--json", as_json, "machine-readable report");

  auto* quotient =
      app.add_subcommand("quotient", "quotient by a deductive system");
  quotient->add_option("file", file, "algebra file")->required();
  quotient
      ->add_option("--ds", ds,
                   "members of the deductive system, comma separated "
                   "(example: a,1)")
      ->required();
  quotient->add_flag("--json", as_json, "machine-readable report");

  auto* search = app.add_subcommand(
      "search", "enumerate QW algebras of one order up to isomorphism");
  search->add_option("--order", order, "carrier size")->required();
  search->add_option("--limit", limit, "emit at most this many models");
  search->add_option("--out", out_dir, "write each model to this directory");
  search->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (check->parsed()) return run_check(file, as_json);
  if (analyze->parsed()) return run_analyze(file, as_json);
  if (quotient->parsed()) return run_quotient(file, ds, as_json);
  if (search->parsed()) return run_search(order, limit, out_dir, as_json);
  return 2;
}
