#include "congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gates.hpp"

namespace qw {

Partition Partition::identity(int n) {
  Partition p;
  p.class_of.resize(n);
  std::iota(p.class_of.begin(), p.class_of.end(), 0);
  p.num_classes = n;
  return p;
}

Partition Partition::single_class(int n) {
  Partition p;
  p.class_of.assign(n, 0);
  p.num_classes = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.class_of.resize(labels.size());
  std::map<int, int> remap;
  int next = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) throw InputError("negative partition label");
    auto [it, fresh] = remap.emplace(labels[i], next);
    if (fresh) ++next;
    p.class_of[i] = it->second;
  }
  p.num_classes = next;
  return p;
}

std::vector<std::vector<Elem>> Partition::classes() const {
  std::vector<std::vector<Elem>> out(num_classes);
  for (int i = 0; i < size(); ++i) out[class_of[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (same(x, y) && !coarser.same(x, y)) return false;
    }
  }
  return true;
}

RelationDiagnostics induced_relation(const Algebra& a, const Subset& f) {
  const int n = a.order();
  RelationDiagnostics d;
  d.related.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem lam = 0; lam < n; ++lam) {
        if (a.leq_q(x, lam) && a.leq_q(y, lam) &&
            f.contains(a.arrow(lam, x)) && f.contains(a.arrow(lam, y))) {
          d.related[x] |= 1ull << y;
          break;
        }
      }
    }
  }
  d.reflexive = true;
  d.symmetric = true;
  d.transitive = true;
  for (Elem x = 0; x < n; ++x) {
    if (!d.same(x, x)) d.reflexive = false;
    for (Elem y = 0; y < n; ++y) {
      if (d.same(x, y) != d.same(y, x)) d.symmetric = false;
      if (!d.same(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (d.same(y, z) && !d.same(x, z)) {
          d.transitive = false;
          if (!d.transitivity_witness) d.transitivity_witness = {{x, y, z}};
        }
      }
    }
  }
  return d;
}

Partition congruence_from_ds(const Algebra& a, const Subset& ds) {
  if (!is_deductive_system(a, ds))
    throw InputError("congruence construction requires a deductive system, " +
                     ds.to_string(a) + " is not one");
  const RelationDiagnostics d = induced_relation(a, ds);
  if (!d.is_equivalence()) {
    std::string msg = "relation induced by " + ds.to_string(a) + " on '" +
                      a.name() + "' is not an equivalence";
    if (d.transitivity_witness) {
      const auto& w = *d.transitivity_witness;
      msg += " (transitivity fails at " + a.element_name(w[0]) + ", " +
             a.element_name(w[1]) + ", " + a.element_name(w[2]) + ")";
    }
    throw FalsificationError(msg);
  }
  std::vector<int> labels(a.order(), -1);
  int next = 0;
  for (Elem x = 0; x < a.order(); ++x) {
    if (labels[x] >= 0) continue;
    for (Elem y = 0; y < a.order(); ++y) {
      if (d.same(x, y)) labels[y] = next;
    }
    ++next;
  }
  Partition p;
  p.class_of = std::move(labels);
  p.num_classes = next;
  return p;
}

EquivalenceRoutes equivalence_routes(const Algebra& a, const Subset& ds,
                                     Elem x, Elem y) {
  if (!is_deductive_system(a, ds))
    throw InputError("equivalence routes require a deductive system");
  EquivalenceRoutes r;
  const int n = a.order();
  for (Elem lam = 0; lam < n; ++lam) {
    if (a.leq_q(x, lam) && a.leq_q(y, lam) && ds.contains(a.arrow(lam, x)) &&
        ds.contains(a.arrow(lam, y))) {
      r.by_common_dominator = true;
      break;
    }
  }
  for (Elem alpha : ds.elements()) {
    for (Elem beta : ds.elements()) {
      if (a.leq_q(x, alpha) && a.leq_q(y, beta) &&
          a.arrow(alpha, x) == a.arrow(beta, y))
        r.by_matched_residua = true;
      if (a.leq_q(x, a.arrow(beta, y)) && a.leq_q(y, a.arrow(alpha, x)))
        r.by_cross_bounds = true;
    }
  }
  return r;
}

bool equiv_characterizations_agree(const Algebra& a, const Subset& ds, Elem x,
                                   Elem y) {
  return equivalence_routes(a, ds, x, y).agree();
}

bool is_congruence(const Algebra& a, const Partition& p) {
  if (p.size() != a.order())
    throw InputError("partition size does not match carrier size");
  const int n = a.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      for (Elem u = 0; u < n; ++u) {
        for (Elem v = 0; v < n; ++v) {
          if (!p.same(u, v)) continue;
          if (!p.same(a.arrow(x, u), a.arrow(y, v))) return false;
        }
      }
    }
  }
  // Arrow-compatibility makes the derived operations compatible too, since
  // each is a composite of arrows and constants. Re-verify.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      if (!p.same(a.star(x), a.star(y)))
        throw FalsificationError("arrow-compatible partition on '" + a.name() +
                                 "' is not star-compatible");
      for (Elem u = 0; u < n; ++u) {
        for (Elem v = 0; v < n; ++v) {
          if (!p.same(u, v)) continue;
          if (!p.same(a.odot(x, u), a.odot(y, v)) ||
              !p.same(a.meet(x, u), a.meet(y, v)) ||
              !p.same(a.join(x, u), a.join(y, v)))
            throw FalsificationError(
                "arrow-compatible partition on '" + a.name() +
                "' breaks a derived operation");
        }
      }
    }
  }
  return true;
}

Subset ds_from_congruence(const Algebra& a, const Partition& p) {
  if (!is_congruence(a, p))
    throw InputError("ds_from_congruence requires a congruence");
  Subset s = Subset::empty(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    if (p.same(x, a.one())) s = s.with(x);
  }
  if (!is_deductive_system(a, s))
    throw FalsificationError("class of 1 under a congruence of '" + a.name() +
                             "' is not a deductive system: " + s.to_string(a));
  return s;
}

Quotient quotient(const Algebra& a, const Subset& ds) {
  const Partition p = congruence_from_ds(a, ds);
  const auto classes = p.classes();
  const int k = p.num_classes;
  const int n = a.order();

  // Representative table plus exhaustive well-definedness check.
  std::vector<Elem> table(static_cast<size_t>(k) * k);
  for (int ci = 0; ci < k; ++ci) {
    for (int cj = 0; cj < k; ++cj) {
      const int expected = p.class_of[a.arrow(classes[ci][0], classes[cj][0])];
      for (Elem x : classes[ci]) {
        for (Elem y : classes[cj]) {
          if (p.class_of[a.arrow(x, y)] != expected)
            throw FalsificationError(
                "quotient table of '" + a.name() + "' by " + ds.to_string(a) +
                " is not well defined at classes of " + a.element_name(x) +
                ", " + a.element_name(y));
        }
      }
      table[static_cast<size_t>(ci) * k + cj] = expected;
    }
  }

  std::vector<std::string> names(k);
  for (int c = 0; c < k; ++c) {
    std::string least = a.element_name(classes[c][0]);
    for (Elem x : classes[c]) least = std::min(least, a.element_name(x));
    names[c] = "[" + least + "]";
  }

  Algebra q(a.name() + ".quotient", std::move(names), p.class_of[a.zero()],
            p.class_of[a.one()], std::move(table));

  Subset one_class = Subset::empty(n);
  for (Elem x = 0; x < n; ++x) {
    if (p.same(x, a.one())) one_class = one_class.with(x);
  }
  if (!(one_class == ds))
    throw FalsificationError("class of 1 in the quotient of '" + a.name() +
                             "' differs from the inducing deductive system");

  if (is_qw(a) && !is_qw(q))
    throw FalsificationError("quotient of the QW algebra '" + a.name() +
                             "' by " + ds.to_string(a) + " fails the QW check");

  return Quotient{std::move(q), p};
}

std::optional<int> ord(const Algebra& a, Elem x) {
  const auto powers = odot_power_cycle(a, x);
  for (size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] == a.zero()) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

bool is_locally_finite(const Algebra& a) {
  for (Elem x = 0; x < a.order(); ++x) {
    if (x == a.one()) continue;
    if (!ord(a, x)) return false;
  }
  return true;
}

CorrespondenceCheck strongly_maximal_vs_quotient_locally_finite(
    const Algebra& a, const Subset& ds) {
  if (!is_deductive_system(a, ds))
    throw InputError("correspondence check requires a deductive system");
  CorrespondenceCheck c;
  c.lhs = is_strongly_maximal(a, ds);
  c.rhs = is_locally_finite(quotient(a, ds).algebra);
  return c;
}

CorrespondenceCheck prime_vs_quotient_weakly_linear(const Algebra& a,
                                                    const Subset& ds) {
  if (!is_deductive_system(a, ds))
    throw InputError("correspondence check requires a deductive system");
  CorrespondenceCheck c;
  c.lhs = is_prime(a, ds);
  c.rhs = is_weakly_linear(quotient(a, ds).algebra);
  return c;
}

std::vector<Partition> enumerate_congruences(const Algebra& a) {
  const int n = a.order();
  if (n > active_gates().partition_enumeration)
    throw InputError("carrier size " + std::to_string(n) +
                     " exceeds the congruence enumeration gate of " +
                     std::to_string(active_gates().partition_enumeration) +
                     " (set QW_GATE_OVERRIDE to lift)");
  std::vector<Partition> out;
  std::vector<int> labels(n, 0);
  // Restricted growth strings: labels[0] = 0 and each label is at most
  // 1 + max of the labels before it, so every partition appears exactly once
  // already in first-occurrence canonical form.
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      Partition p;
      p.class_of = labels;
      p.num_classes = mx + 1;
      if (is_congruence(a, p)) out.push_back(std::move(p));
      return;
    }
    for (int c = 0; c <= mx + 1 && c < n; ++c) {
      labels[i] = c;
      self(self, i + 1, std::max(mx, c));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace qw
