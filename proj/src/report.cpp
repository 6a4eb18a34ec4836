#include "report.hpp"

#include <sstream>

namespace qw {

namespace {

std::string yesno(const Json& v) {
  if (v.is_null()) return "n/a";
  return v.get<bool>() ? "yes" : "no";
}

std::string set_str(const Json& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

std::string tuple_str(const Json& names) {
  std::string out = "(";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i].get<std::string>();
  }
  return out + ")";
}

void render_axioms(std::ostringstream& os, const Json& ax) {
  os << "axioms:\n";
  for (const auto& [key, verdict] : ax["verdicts"].items()) {
    os << "  " << key;
    for (size_t i = key.size(); i < 12; ++i) os << ' ';
    os << verdict.get<std::string>();
    for (const auto& w : ax["witnesses"]) {
      if (w["axiom"] == key) os << "  witness " << tuple_str(w["elements"]);
    }
    os << "\n";
  }
  const auto& split = ax["qw_split_consistent"];
  if (!split.is_null())
    os << "  QW split formulation "
       << (split.get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
}

void render_check(std::ostringstream& os, const Json& r) {
  os << "algebra " << r["algebra"].get<std::string>() << " (order "
     << r["order"].get<int>() << ")\n";
  render_axioms(os, r["axioms"]);
  os << "verdict: "
     << (r["is_qw"].get<bool>() ? "quantum-Wajsberg algebra"
                                : "not a quantum-Wajsberg algebra")
     << "\n";
}

void render_witnessed(std::ostringstream& os, const char* label,
                      const Json& flag, const Json& witness) {
  os << label << ": " << yesno(flag);
  if (!witness.is_null()) os << "  witness " << tuple_str(witness);
  os << "\n";
}

void render_analyze(std::ostringstream& os, const Json& r) {
  os << "algebra " << r["algebra"].get<std::string>() << " (order "
     << r["order"].get<int>() << ")\n";
  render_axioms(os, r["axioms"]);
  os << "quantum-Wajsberg: " << yesno(r["is_qw"]) << "\n";
  render_witnessed(os, "commutative", r["commutative"],
                   r["commutative_witness"]);
  os << "Wajsberg: " << yesno(r["wajsberg"]) << "\n";
  render_witnessed(os, "weakly linear", r["weakly_linear"],
                   r["weakly_linear_witness"]);
  render_witnessed(os, "quasi-linear", r["quasi_linear"],
                   r["quasi_linear_witness"]);
  render_witnessed(os, "leq_q total", r["leq_q_total"],
                   r["leq_q_incomparable"]);
  os << "locally finite: " << yesno(r["locally_finite"]) << "\n";
  os << "element orders:";
  for (const auto& [name, o] : r["element_orders"].items()) {
    os << " " << name << "=";
    if (o.is_null())
      os << "inf";
    else
      os << o.get<int>();
  }
  os << "\n";

  if (!r["weakly_linear_identities"].is_null()) {
    os << "weakly linear identities:";
    for (const auto& [key, ok] : r["weakly_linear_identities"].items())
      os << " " << key << "=" << (ok.get<bool>() ? "pass" : "FAIL");
    os << "\n";
  }

  if (r["filters"].is_null()) {
    if (r.contains("note")) os << "note: " << r["note"].get<std::string>() << "\n";
  } else {
    os << "filters (" << r["filters"].size() << "):";
    for (const auto& f : r["filters"]) os << " " << set_str(f);
    os << "\n";
    os << "deductive systems (" << r["deductive_systems"].size() << "):";
    for (const auto& s : r["deductive_systems"]) os << " " << set_str(s);
    os << "\n";
    os << "subsets:\n";
    for (const auto& c : r["subsets"]) {
      os << "  " << set_str(c["subset"]) << ":";
      auto flag = [&](const char* key, const char* label) {
        const auto& v = c[key];
        if (!v.is_null() && v.get<bool>()) os << " " << label;
      };
      flag("filter", "filter");
      flag("deductive_system", "deductive-system");
      flag("ideal", "ideal");
      flag("proper", "proper");
      flag("maximal_filter", "maximal-filter");
      flag("maximal_ds", "maximal-ds");
      flag("strongly_maximal", "strongly-maximal");
      flag("prime", "prime");
      flag("commutative_filter", "commutative-filter");
      os << "\n";
    }
    if (!r["correspondences"].is_null()) {
      os << "correspondences:\n";
      for (const auto& c : r["correspondences"]) {
        os << "  " << set_str(c["deductive_system"])
           << ": strongly-maximal " << yesno(c["strongly_maximal"])
           << " | quotient locally finite "
           << yesno(c["quotient_locally_finite"]) << " | "
           << (c["strong_maximality_agrees"].get<bool>() ? "agree"
                                                         : "DISAGREE")
           << "\n";
        os << "  " << set_str(c["deductive_system"]) << ": prime "
           << yesno(c["prime"]) << " | quotient weakly linear "
           << yesno(c["quotient_weakly_linear"]) << " | "
           << (c["primality_agrees"].get<bool>() ? "agree" : "DISAGREE")
           << "\n";
      }
    }
  }

  if (r["falsifications"].empty()) {
    os << "falsifications: none\n";
  } else {
    os << "falsifications:\n";
    for (const auto& f : r["falsifications"])
      os << "  !! " << f.get<std::string>() << "\n";
  }
}

void render_quotient(std::ostringstream& os, const Json& r) {
  os << "algebra " << r["algebra"].get<std::string>() << " (order "
     << r["order"].get<int>() << ")\n";
  os << "deductive system: " << set_str(r["deductive_system"]) << "\n";
  os << "classes (" << r["num_classes"].get<int>() << "):\n";
  for (const auto& c : r["classes"]) {
    os << "  " << c["name"].get<std::string>() << " = "
       << set_str(c["members"]) << "\n";
  }
  os << "quotient algebra:\n";
  std::istringstream text(r["quotient"]["text"].get<std::string>());
  std::string line;
  while (std::getline(text, line)) os << "  " << line << "\n";
}

void render_search(std::ostringstream& os, const Json& r) {
  os << "search order " << r["order"].get<int>() << ": "
     << r["count"].get<std::uint64_t>() << " model(s)"
     << (r["truncated"].get<bool>() ? " (truncated by limit)" : "") << "\n";
  const auto& st = r["stats"];
  os << "stats: nodes " << st["nodes"].get<std::uint64_t>() << ", prunes "
     << st["prunes"].get<std::uint64_t>() << ", candidates "
     << st["candidates"].get<std::uint64_t>() << ", isomorph rejections "
     << st["isomorph_rejections"].get<std::uint64_t>() << "\n";
  for (const auto& m : r["models"]) {
    os << "model " << m["name"].get<std::string>() << ":\n";
    std::istringstream text(m["text"].get<std::string>());
    std::string line;
    while (std::getline(text, line)) os << "  " << line << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  const std::string cmd = report["command"].get<std::string>();
  if (cmd == "check") {
    render_check(os, report);
  } else if (cmd == "analyze") {
    render_analyze(os, report);
  } else if (cmd == "quotient") {
    render_quotient(os, report);
  } else if (cmd == "search") {
    render_search(os, report);
  } else {
    os << report.dump(2) << "\n";
  }
  return os.str();
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace qw
