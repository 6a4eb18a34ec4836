#include "commands.hpp"

#include <algorithm>

#include "congruence.hpp"
#include "format.hpp"
#include "gates.hpp"
#include "search.hpp"
#include "subsets.hpp"

namespace qw {

namespace {

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

Json names_json(const Algebra& a, const std::vector<Elem>& elems) {
  Json arr = Json::array();
  for (Elem e : elems) arr.push_back(a.element_name(e));
  return arr;
}

Json subset_json(const Algebra& a, const Subset& s) {
  return names_json(a, s.elements());
}

Json axioms_json(const Algebra& a, const AxiomReport& r) {
  Json ax = Json::object();
  ax["BE1"] = verdict_str(r.be1);
  ax["BE2"] = verdict_str(r.be2);
  ax["BE3"] = verdict_str(r.be3);
  ax["BE4"] = verdict_str(r.be4);
  ax["bounded"] = verdict_str(r.bounded);
  ax["involutive"] = verdict_str(r.involutive);
  ax["QW"] = verdict_str(r.qw);

  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json entry = Json::object();
    entry["axiom"] = axiom_tag(w.axiom);
    entry["elements"] = names_json(a, w.elems);
    witnesses.push_back(std::move(entry));
  }

  Json out = Json::object();
  out["verdicts"] = std::move(ax);
  out["witnesses"] = std::move(witnesses);
  out["qw_split_consistent"] =
      r.qw_split_consistent ? Json(*r.qw_split_consistent) : Json(nullptr);
  return out;
}

Json header_json(const char* command, const Algebra& a) {
  Json j = Json::object();
  j["report_version"] = kReportVersion;
  j["command"] = command;
  j["algebra"] = a.name();
  j["order"] = a.order();
  return j;
}

}  // namespace

CommandOutput cmd_check(const Algebra& a) {
  CommandOutput out;
  const AxiomReport r = verify_qw(a);
  out.report = header_json("check", a);
  out.report["axioms"] = axioms_json(a, r);
  out.report["is_qw"] = r.is_qw();
  out.exit_code = r.is_qw() ? kExitOk : kExitPropertyFails;
  return out;
}

namespace {

// Dominance scan against a precomputed family (analyze classifies many
// subsets against the same enumeration).
bool maximal_in_family(const Subset& f, const std::vector<Subset>& family) {
  if (f.is_full()) return false;
  for (const auto& g : family) {
    if (f.proper_subset_of(g) && !g.is_full()) return false;
  }
  return true;
}

struct FalsificationLog {
  Json entries = Json::array();
  void add(const std::string& what) { entries.push_back(what); }
  bool any() const { return !entries.empty(); }
};

Json classification_json(const Algebra& a, const Subset& s, bool is_ds,
                         const std::vector<Subset>& filters,
                         const std::vector<Subset>& systems, bool qw_algebra,
                         FalsificationLog& log) {
  Json j = Json::object();
  j["subset"] = subset_json(a, s);

  const FilterCheck fc = check_filter(a, s);
  const DeductiveSystemCheck dc = check_deductive_system(a, s);
  const CheckResult ic = check_ideal(a, s);

  j["filter"] = fc.ok();
  j["deductive_system"] = dc.ok();
  j["ideal"] = ic.ok;
  j["proper"] = !s.is_full();

  if (qw_algebra) {
    if (!fc.routes_agree())
      log.add("filter characterizations disagree on " + s.to_string(a));
    if (!dc.routes_agree())
      log.add("deductive-system characterizations disagree on " +
              s.to_string(a));
    if (dc.ok() && !fc.ok())
      log.add("deductive system " + s.to_string(a) + " is not a filter");
  }

  const bool strongly_max = is_strongly_maximal(a, s);
  j["maximal_filter"] =
      fc.ok() ? Json(maximal_in_family(s, filters)) : Json(nullptr);
  j["maximal_ds"] =
      dc.ok() ? Json(maximal_in_family(s, systems)) : Json(nullptr);
  j["strongly_maximal"] = strongly_max;

  const PrimalityCheck pc = check_prime(a, s);
  j["prime"] = pc.ok();
  j["commutative_filter"] = is_commutative_filter(a, s);

  if (qw_algebra && fc.ok()) {
    const MaximalityCheck mc = check_maximal(a, s, Family::kFilters);
    if (!mc.routes_agree())
      log.add("maximality routes disagree on the filter " + s.to_string(a));
    // Strong maximality forces maximality for proper filters; the full
    // carrier is strongly maximal only vacuously.
    if (strongly_max && !s.is_full() && !mc.by_dominance)
      log.add("strongly maximal filter " + s.to_string(a) + " is not maximal");
    if (!pc.routes_agree())
      log.add("primality routes disagree on " + s.to_string(a));
  }

  Json failures = Json::array();
  auto push_failure = [&](const char* pred, const CheckResult& r) {
    if (r.ok) return;
    Json f = Json::object();
    f["predicate"] = pred;
    f["condition"] = r.condition;
    f["witness"] = names_json(a, r.witness);
    failures.push_back(std::move(f));
  };
  push_failure("filter", fc.by_closure);
  push_failure("deductive_system", dc.by_modus_ponens);
  push_failure("ideal", ic);
  j["failures"] = std::move(failures);

  (void)is_ds;
  return j;
}

}  // namespace

CommandOutput cmd_analyze(const Algebra& a) {
  CommandOutput out;
  FalsificationLog log;

  const AxiomReport ax = verify_qw(a);
  const bool qw_algebra = ax.is_qw();
  if (ax.qw_split_consistent && !*ax.qw_split_consistent)
    log.add("the QW axiom and its split formulation disagree");

  out.report = header_json("analyze", a);
  out.report["axioms"] = axioms_json(a, ax);
  out.report["is_qw"] = qw_algebra;

  const auto comm_witness = commutativity_witness(a);
  out.report["commutative"] = !comm_witness.has_value();
  out.report["commutative_witness"] =
      comm_witness
          ? names_json(a, {comm_witness->first, comm_witness->second})
          : Json(nullptr);
  out.report["wajsberg"] =
      qw_algebra ? Json(leq_coincides_with_leq_q(a)) : Json(nullptr);

  const WeakLinearityCheck wl = check_weakly_linear(a);
  out.report["weakly_linear"] = wl.ok();
  out.report["weakly_linear_witness"] =
      wl.witness ? names_json(a, {wl.witness->first, wl.witness->second})
                 : Json(nullptr);
  const QuasiLinearityCheck ql = check_quasi_linear(a);
  out.report["quasi_linear"] = ql.ok();
  out.report["quasi_linear_witness"] =
      ql.witness ? names_json(a, {ql.witness->first, ql.witness->second})
                 : Json(nullptr);
  const auto incomparable = leq_q_incomparable_pair(a);
  out.report["leq_q_total"] = !incomparable.has_value();
  out.report["leq_q_incomparable"] =
      incomparable
          ? names_json(a, {incomparable->first, incomparable->second})
          : Json(nullptr);
  if (qw_algebra) {
    if (!wl.routes_agree())
      log.add("weak-linearity routes disagree");
    if (!ql.routes_agree())
      log.add("quasi-linearity routes disagree");
  }

  out.report["locally_finite"] = is_locally_finite(a);
  {
    Json orders = Json::object();
    for (Elem x = 0; x < a.order(); ++x) {
      const auto o = ord(a, x);
      orders[a.element_name(x)] = o ? Json(*o) : Json(nullptr);
    }
    out.report["element_orders"] = std::move(orders);
  }

  if (qw_algebra && wl.ok()) {
    const auto suite = weakly_linear_identity_suite(a);
    Json ids = Json::object();
    auto put = [&](const char* key, const CheckResult& r) {
      ids[key] = r.ok;
      if (!r.ok)
        log.add(std::string("weakly linear identity '") + key +
                "' fails at (" + r.condition + ")");
    };
    put("meet_of_cases", suite.meet_of_cases);
    put("disjoint_meet_shift", suite.disjoint_meet_shift);
    put("disjoint_swap", suite.disjoint_swap);
    put("perspective_join_top", suite.perspective_join_top);
    out.report["weakly_linear_identities"] = std::move(ids);
  } else {
    out.report["weakly_linear_identities"] = nullptr;
  }

  const bool within_gate = a.order() <= active_gates().subset_enumeration;
  if (within_gate) {
    const auto filters = enumerate_filters(a);
    const auto systems = enumerate_deductive_systems(a);

    Json jf = Json::array();
    for (const auto& f : filters) jf.push_back(subset_json(a, f));
    out.report["filters"] = std::move(jf);
    Json js = Json::array();
    for (const auto& s : systems) js.push_back(subset_json(a, s));
    out.report["deductive_systems"] = std::move(js);

    Json classes = Json::array();
    for (const auto& f : filters) {
      const bool is_ds =
          std::find(systems.begin(), systems.end(), f) != systems.end();
      classes.push_back(
          classification_json(a, f, is_ds, filters, systems, qw_algebra, log));
    }
    out.report["subsets"] = std::move(classes);

    if (qw_algebra) {
      Json corr = Json::array();
      for (const auto& ds : systems) {
        const auto c1 = strongly_maximal_vs_quotient_locally_finite(a, ds);
        const auto c2 = prime_vs_quotient_weakly_linear(a, ds);
        Json c = Json::object();
        c["deductive_system"] = subset_json(a, ds);
        c["strongly_maximal"] = c1.lhs;
        c["quotient_locally_finite"] = c1.rhs;
        c["strong_maximality_agrees"] = c1.agree();
        c["prime"] = c2.lhs;
        c["quotient_weakly_linear"] = c2.rhs;
        c["primality_agrees"] = c2.agree();
        corr.push_back(std::move(c));
        if (!c1.agree())
          log.add("strong maximality vs quotient local finiteness disagree "
                  "for " +
                  ds.to_string(a));
        if (!c2.agree())
          log.add("primality vs quotient weak linearity disagree for " +
                  ds.to_string(a));
      }
      out.report["correspondences"] = std::move(corr);
    } else {
      out.report["correspondences"] = nullptr;
    }
  } else {
    out.report["filters"] = nullptr;
    out.report["deductive_systems"] = nullptr;
    out.report["subsets"] = nullptr;
    out.report["correspondences"] = nullptr;
    out.report["note"] = "carrier size exceeds the enumeration gate; "
                         "subset enumeration skipped (QW_GATE_OVERRIDE lifts)";
  }

  out.report["falsifications"] = log.entries;
  out.exit_code = log.any() ? kExitFalsified : kExitOk;
  return out;
}

CommandOutput cmd_quotient(const Algebra& a,
                           const std::vector<std::string>& ds_names) {
  const Subset s = Subset::from_names(a, ds_names);
  const DeductiveSystemCheck dc = check_deductive_system(a, s);
  if (!dc.ok()) {
    const auto& r = dc.by_modus_ponens;
    std::string msg = s.to_string(a) + " is not a deductive system of '" +
                      a.name() + "': condition " + r.condition + " fails";
    if (!r.witness.empty()) {
      msg += " at (";
      for (size_t i = 0; i < r.witness.size(); ++i) {
        if (i) msg += ", ";
        msg += a.element_name(r.witness[i]);
      }
      msg += ")";
    }
    throw InputError(msg);
  }

  Quotient q = quotient(a, s);

  CommandOutput out;
  out.report = header_json("quotient", a);
  out.report["deductive_system"] = subset_json(a, s);
  out.report["num_classes"] = q.partition.num_classes;

  Json classes = Json::array();
  for (const auto& members : q.partition.classes()) {
    Json c = Json::object();
    c["name"] = q.algebra.element_name(q.partition.class_of[members[0]]);
    c["members"] = names_json(a, members);
    classes.push_back(std::move(c));
  }
  out.report["classes"] = std::move(classes);

  Json map = Json::object();
  for (Elem x = 0; x < a.order(); ++x)
    map[a.element_name(x)] = q.algebra.element_name(q.partition.class_of[x]);
  out.report["class_map"] = std::move(map);

  out.report["quotient"] = Json::object();
  out.report["quotient"]["name"] = q.algebra.name();
  out.report["quotient"]["order"] = q.algebra.order();
  out.report["quotient"]["text"] = serialize(q.algebra);

  out.models.push_back(std::move(q.algebra));
  return out;
}

CommandOutput cmd_search(int order, std::optional<std::uint64_t> limit) {
  SearchResult r = enumerate_qw(order, limit);

  CommandOutput out;
  out.report = Json::object();
  out.report["report_version"] = kReportVersion;
  out.report["command"] = "search";
  out.report["order"] = r.order;
  out.report["count"] = r.models.size();
  out.report["truncated"] = r.truncated;
  Json stats = Json::object();
  stats["nodes"] = r.stats.nodes;
  stats["prunes"] = r.stats.prunes;
  stats["candidates"] = r.stats.candidates;
  stats["isomorph_rejections"] = r.stats.isomorph_rejections;
  out.report["stats"] = std::move(stats);

  Json models = Json::array();
  for (const auto& m : r.models) {
    Json jm = Json::object();
    jm["name"] = m.name();
    jm["text"] = serialize(m);
    models.push_back(std::move(jm));
  }
  out.report["models"] = std::move(models);

  out.models = std::move(r.models);
  return out;
}

}  // namespace qw
