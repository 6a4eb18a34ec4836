#include "qw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "format.hpp"
#include "search.hpp"

using qw::Algebra;
using qw::CommandOutput;

struct qw_algebra {
  Algebra impl;
};

struct qw_report {
  qw::Json json;
  int exit_code;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

qw_status catch_to_status() {
  try {
    throw;
  } catch (const qw::InputError& e) {
    set_error(e.what());
    return QW_ERR_INPUT;
  } catch (const qw::FalsificationError& e) {
    set_error(e.what());
    return QW_ERR_FALSIFIED;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return QW_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QW_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return QW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qw_status make_report(CommandOutput&& cmd, qw_report** out) {
  *out = new qw_report{std::move(cmd.report), cmd.exit_code};
  return QW_OK;
}

}  // namespace

extern "C" {

const char* qw_version(void) { return "0.1.0"; }

const char* qw_last_error(void) { return g_last_error.c_str(); }

qw_status qw_algebra_parse(const char* text, qw_algebra** out) {
  if (!text || !out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    *out = new qw_algebra{qw::parse_algebra(text)};
    return QW_OK;
  } catch (...) {
    return catch_to_status();
  }
}

qw_status qw_algebra_read_file(const char* path, qw_algebra** out) {
  if (!path || !out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    *out = new qw_algebra{qw::read_algebra_file(path)};
    return QW_OK;
  } catch (...) {
    return catch_to_status();
  }
}

void qw_algebra_free(qw_algebra* a) { delete a; }

int qw_algebra_order(const qw_algebra* a) { return a ? a->impl.order() : 0; }

const char* qw_algebra_name(const qw_algebra* a) {
  return a ? a->impl.name().c_str() : "";
}

const char* qw_algebra_element_name(const qw_algebra* a, int x) {
  if (!a || x < 0 || x >= a->impl.order()) return "";
  return a->impl.element_name(x).c_str();
}

int qw_algebra_zero(const qw_algebra* a) { return a ? a->impl.zero() : -1; }

int qw_algebra_one(const qw_algebra* a) { return a ? a->impl.one() : -1; }

int qw_algebra_arrow(const qw_algebra* a, int x, int y) {
  if (!a || x < 0 || y < 0 || x >= a->impl.order() || y >= a->impl.order())
    return -1;
  return a->impl.arrow(x, y);
}

qw_status qw_algebra_serialize(const qw_algebra* a, char** out_text) {
  if (!a || !out_text) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    *out_text = dup_string(qw::serialize(a->impl));
    return *out_text ? QW_OK : QW_ERR_NOMEM;
  } catch (...) {
    return catch_to_status();
  }
}

void qw_string_free(char* s) { ::free(s); }

int qw_algebra_is_qw(const qw_algebra* a) {
  return (a && qw::is_qw(a->impl)) ? 1 : 0;
}

int qw_algebra_isomorphic(const qw_algebra* a, const qw_algebra* b) {
  if (!a || !b) return -1;
  try {
    return qw::is_isomorphic(a->impl, b->impl) ? 1 : 0;
  } catch (...) {
    catch_to_status();
    return -1;
  }
}

qw_status qw_cmd_check(const qw_algebra* a, qw_report** out) {
  if (!a || !out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    return make_report(qw::cmd_check(a->impl), out);
  } catch (...) {
    return catch_to_status();
  }
}

qw_status qw_cmd_analyze(const qw_algebra* a, qw_report** out) {
  if (!a || !out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    return make_report(qw::cmd_analyze(a->impl), out);
  } catch (...) {
    return catch_to_status();
  }
}

qw_status qw_cmd_quotient(const qw_algebra* a, const char* ds_csv,
                          qw_report** out, qw_algebra** quotient_out) {
  if (!a || !ds_csv || !out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    std::vector<std::string> names;
    std::string tok;
    for (const char* p = ds_csv;; ++p) {
      if (*p == ',' || *p == '\0') {
        if (!tok.empty()) names.push_back(tok);
        tok.clear();
        if (*p == '\0') break;
      } else {
        tok += *p;
      }
    }
    CommandOutput cmd = qw::cmd_quotient(a->impl, names);
    if (quotient_out)
      *quotient_out = new qw_algebra{std::move(cmd.models.front())};
    return make_report(std::move(cmd), out);
  } catch (...) {
    return catch_to_status();
  }
}

qw_status qw_cmd_search(int order, long limit, qw_report** out,
                        qw_algebra*** models_out, size_t* model_count_out) {
  if (!out) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    CommandOutput cmd = qw::cmd_search(
        order, limit < 0 ? std::nullopt
                         : std::optional<std::uint64_t>(
                               static_cast<std::uint64_t>(limit)));
    if (models_out && model_count_out) {
      const size_t count = cmd.models.size();
      qw_algebra** list = new qw_algebra*[count];
      for (size_t i = 0; i < count; ++i)
        list[i] = new qw_algebra{std::move(cmd.models[i])};
      *models_out = list;
      *model_count_out = count;
    }
    return make_report(std::move(cmd), out);
  } catch (...) {
    return catch_to_status();
  }
}

void qw_algebra_list_free(qw_algebra** models, size_t count) {
  if (!models) return;
  for (size_t i = 0; i < count; ++i) delete models[i];
  delete[] models;
}

int qw_report_exit_code(const qw_report* r) { return r ? r->exit_code : 2; }

qw_status qw_report_render_text(const qw_report* r, char** out_text) {
  if (!r || !out_text) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    *out_text = dup_string(qw::render_text(r->json));
    return *out_text ? QW_OK : QW_ERR_NOMEM;
  } catch (...) {
    return catch_to_status();
  }
}

qw_status qw_report_render_json(const qw_report* r, char** out_text) {
  if (!r || !out_text) {
    set_error("null argument");
    return QW_ERR_ARG;
  }
  try {
    *out_text = dup_string(qw::render_json(r->json));
    return *out_text ? QW_OK : QW_ERR_NOMEM;
  } catch (...) {
    return catch_to_status();
  }
}

void qw_report_free(qw_report* r) { delete r; }

}  // extern "C"
