#include "subsets.hpp"

#include <bit>

#include "gates.hpp"

namespace qw {

Subset::Subset(std::uint64_t bits, int width) : bits_(bits), width_(width) {
  if (width < 0 || width > Algebra::kMaxOrder)
    throw InputError("subset width out of range");
  if (width < 64 && (bits >> width) != 0)
    throw InputError("subset has bits beyond its width");
}

Subset Subset::full(int width) {
  return Subset(width == 64 ? ~0ull : (1ull << width) - 1, width);
}

Subset Subset::of(std::initializer_list<Elem> elems, int width) {
  std::uint64_t b = 0;
  for (Elem e : elems) {
    if (e < 0 || e >= width) throw InputError("element outside subset width");
    b |= 1ull << e;
  }
  return Subset(b, width);
}

Subset Subset::from_names(const Algebra& a,
                          const std::vector<std::string>& names) {
  Subset s = Subset::empty(a.order());
  for (const auto& nm : names) {
    auto e = a.element_by_name(nm);
    if (!e)
      throw InputError("unknown element '" + nm + "' in algebra '" + a.name() +
                       "'");
    s = s.with(*e);
  }
  return s;
}

int Subset::count() const { return std::popcount(bits_); }

bool Subset::is_full() const { return *this == Subset::full(width_); }

namespace {

void require_same_width(const Subset& a, const Subset& b) {
  if (a.width() != b.width())
    throw InputError("subset width mismatch: " + std::to_string(a.width()) +
                     " vs " + std::to_string(b.width()));
}

void require_width(const Algebra& a, const Subset& s) {
  if (s.width() != a.order())
    throw InputError("subset width " + std::to_string(s.width()) +
                     " does not match carrier size " +
                     std::to_string(a.order()));
}

}  // namespace

bool Subset::subset_of(const Subset& other) const {
  require_same_width(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool Subset::proper_subset_of(const Subset& other) const {
  return subset_of(other) && bits_ != other.bits_;
}

Subset Subset::intersect(const Subset& other) const {
  require_same_width(*this, other);
  return Subset(bits_ & other.bits_, width_);
}

Subset Subset::unite(const Subset& other) const {
  require_same_width(*this, other);
  return Subset(bits_ | other.bits_, width_);
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  for (int i = 0; i < width_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Subset::names(const Algebra& a) const {
  require_width(a, *this);
  std::vector<std::string> out;
  for (Elem e : elements()) out.push_back(a.element_name(e));
  return out;
}

std::string Subset::to_string(const Algebra& a) const {
  std::string out = "{";
  bool first = true;
  for (const auto& nm : names(a)) {
    if (!first) out += ",";
    out += nm;
    first = false;
  }
  return out + "}";
}

// --- filters ----------------------------------------------------------------

namespace {

// F1: x, y in F implies x odot y in F.
CheckResult check_f1(const Algebra& a, const Subset& f) {
  for (Elem x : f.elements()) {
    for (Elem y : f.elements()) {
      if (!f.contains(a.odot(x, y))) return CheckResult::fail("F1", {x, y});
    }
  }
  return CheckResult::pass();
}

}  // namespace

FilterCheck check_filter(const Algebra& a, const Subset& f) {
  require_width(a, f);
  FilterCheck out;
  if (f.is_empty()) {
    out.by_closure = CheckResult::fail("empty", {});
    out.by_upward = CheckResult::fail("empty", {});
    return out;
  }

  out.by_closure = check_f1(a, f);
  if (out.by_closure.ok) {
    // F2: x in F, y in X imply y -> x in F.
    for (Elem x : f.elements()) {
      for (Elem y = 0; y < a.order() && out.by_closure.ok; ++y) {
        if (!f.contains(a.arrow(y, x)))
          out.by_closure = CheckResult::fail("F2", {x, y});
      }
    }
  }

  out.by_upward = check_f1(a, f);
  if (out.by_upward.ok) {
    // F3: x in F, y in X, x leq_q y imply y in F.
    for (Elem x : f.elements()) {
      for (Elem y = 0; y < a.order() && out.by_upward.ok; ++y) {
        if (a.leq_q(x, y) && !f.contains(y))
          out.by_upward = CheckResult::fail("F3", {x, y});
      }
    }
  }
  return out;
}

bool is_filter(const Algebra& a, const Subset& f) {
  return check_filter(a, f).ok();
}

// --- deductive systems --------------------------------------------------------

DeductiveSystemCheck check_deductive_system(const Algebra& a, const Subset& f) {
  require_width(a, f);
  DeductiveSystemCheck out;

  if (!f.contains(a.one())) {
    out.by_modus_ponens = CheckResult::fail("DS1", {});
  } else {
    out.by_modus_ponens = CheckResult::pass();
    // DS2: x in F and x -> y in F imply y in F.
    for (Elem x : f.elements()) {
      for (Elem y = 0; y < a.order() && out.by_modus_ponens.ok; ++y) {
        if (f.contains(a.arrow(x, y)) && !f.contains(y))
          out.by_modus_ponens = CheckResult::fail("DS2", {x, y});
      }
    }
  }

  if (f.is_empty()) {
    out.by_leq_upward = CheckResult::fail("empty", {});
    out.by_join_closure = CheckResult::fail("empty", {});
    return out;
  }

  out.by_leq_upward = check_f1(a, f);
  if (out.by_leq_upward.ok) {
    // F4: x in F, y in X, x leq y imply y in F.
    for (Elem x : f.elements()) {
      for (Elem y = 0; y < a.order() && out.by_leq_upward.ok; ++y) {
        if (a.leq(x, y) && !f.contains(y))
          out.by_leq_upward = CheckResult::fail("F4", {x, y});
      }
    }
  }

  out.by_join_closure = check_f1(a, f);
  if (out.by_join_closure.ok) {
    // F5: x in F, y in X imply x join y in F.
    for (Elem x : f.elements()) {
      for (Elem y = 0; y < a.order() && out.by_join_closure.ok; ++y) {
        if (!f.contains(a.join(x, y)))
          out.by_join_closure = CheckResult::fail("F5", {x, y});
      }
    }
  }
  return out;
}

bool is_deductive_system(const Algebra& a, const Subset& f) {
  return check_deductive_system(a, f).ok();
}

// --- ideals -------------------------------------------------------------------

CheckResult check_ideal(const Algebra& a, const Subset& s) {
  require_width(a, s);
  if (s.is_empty()) return CheckResult::fail("empty", {});
  for (Elem x : s.elements()) {
    for (Elem y : s.elements()) {
      if (!s.contains(a.arrow(a.star(x), y)))
        return CheckResult::fail("I1", {x, y});
    }
  }
  for (Elem y : s.elements()) {
    for (Elem x = 0; x < a.order(); ++x) {
      if (a.leq_q(x, y) && !s.contains(x)) return CheckResult::fail("I2", {x, y});
    }
  }
  return CheckResult::pass();
}

bool is_ideal(const Algebra& a, const Subset& s) {
  return check_ideal(a, s).ok;
}

// --- enumeration ----------------------------------------------------------

namespace {

template <typename Pred>
std::vector<Subset> enumerate_subsets(const Algebra& a, Pred pred,
                                      const char* what) {
  const int n = a.order();
  if (n > active_gates().subset_enumeration)
    throw InputError(std::string("carrier size ") + std::to_string(n) +
                     " exceeds the " + what + " enumeration gate of " +
                     std::to_string(active_gates().subset_enumeration) +
                     " (set QW_GATE_OVERRIDE to lift)");
  std::vector<Subset> out;
  const std::uint64_t top = (n == 64) ? ~0ull : (1ull << n) - 1;
  // Every filter and every deductive system contains 1, so only masks with
  // that bit set can qualify; the predicate itself stays fully general.
  const std::uint64_t one_bit = 1ull << a.one();
  for (std::uint64_t m = 1; m <= top; ++m) {
    if (!(m & one_bit)) continue;
    Subset s(m, n);
    if (pred(s)) out.push_back(s);
    if (m == top) break;
  }
  return out;
}

}  // namespace

std::vector<Subset> enumerate_filters(const Algebra& a) {
  return enumerate_subsets(
      a, [&](const Subset& s) { return is_filter(a, s); }, "filter");
}

std::vector<Subset> enumerate_deductive_systems(const Algebra& a) {
  auto systems = enumerate_subsets(
      a, [&](const Subset& s) { return is_deductive_system(a, s); },
      "deductive-system");
  for (const auto& s : systems) {
    if (!is_filter(a, s))
      throw FalsificationError("deductive system " + s.to_string(a) + " of '" +
                               a.name() + "' is not a filter");
  }
  return systems;
}

// --- generated filters ------------------------------------------------------

namespace {

// Close a nonempty set under odot (the set of all finite products of its
// elements), then take the leq_q-upward closure.
Subset products_then_upward(const Algebra& a, Subset seed) {
  Subset prods = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x : prods.elements()) {
      for (Elem y : prods.elements()) {
        const Elem p = a.odot(x, y);
        if (!prods.contains(p)) {
          prods = prods.with(p);
          grew = true;
        }
      }
    }
  }
  Subset up = Subset::empty(a.order());
  for (Elem y = 0; y < a.order(); ++y) {
    for (Elem p : prods.elements()) {
      if (a.leq_q(p, y)) {
        up = up.with(y);
        break;
      }
    }
  }
  return up;
}

}  // namespace

Subset generated_filter(const Algebra& a, const Subset& seed) {
  require_width(a, seed);
  if (seed.is_empty())
    throw InputError("generated_filter requires a nonempty seed");
  return products_then_upward(a, seed);
}

Subset extend_filter(const Algebra& a, const Subset& f, Elem x) {
  require_width(a, f);
  if (!is_filter(a, f))
    throw InputError("extend_filter requires a filter, got " + f.to_string(a));
  if (f.contains(x)) return f;

  const Subset result = generated_filter(a, f.with(x));

  // Independent route straight from the one-product characterization:
  // y is in the extension iff y geq_q f' odot x^k for some member f' and
  // some power x^k.
  const std::vector<Elem> powers = odot_power_cycle(a, x);
  Subset direct = Subset::empty(a.order());
  for (Elem y = 0; y < a.order(); ++y) {
    bool in = false;
    for (Elem fe : f.elements()) {
      for (Elem p : powers) {
        if (a.leq_q(a.odot(fe, p), y)) {
          in = true;
          break;
        }
      }
      if (in) break;
    }
    if (in) direct = direct.with(y);
  }
  if (!(direct == result))
    throw FalsificationError(
        "extend_filter: fixpoint and one-product routes disagree on " +
        f.to_string(a) + " extended by " + a.element_name(x) + " in '" +
        a.name() + "'");
  return result;
}

// --- maximality ---------------------------------------------------------------

MaximalityCheck check_maximal(const Algebra& a, const Subset& f, Family fam) {
  require_width(a, f);
  const bool in_family = (fam == Family::kFilters)
                             ? is_filter(a, f)
                             : is_deductive_system(a, f);
  if (!in_family)
    throw InputError("maximality asked for " + f.to_string(a) +
                     ", which is not in the stated family");

  MaximalityCheck out;
  out.proper = !f.is_full();

  const auto family = (fam == Family::kFilters)
                          ? enumerate_filters(a)
                          : enumerate_deductive_systems(a);
  bool dominated = false;
  for (const auto& g : family) {
    if (f.proper_subset_of(g) && !g.is_full()) {
      dominated = true;
      break;
    }
  }
  out.by_dominance = out.proper && !dominated;

  if (fam == Family::kFilters) {
    // Annihilation route: every x outside f admits a member f' and a power
    // x^k with f' odot x^k = 0.
    bool all = true;
    for (Elem x = 0; x < a.order() && all; ++x) {
      if (f.contains(x)) continue;
      bool found = false;
      for (Elem fe : f.elements()) {
        for (Elem p : odot_power_cycle(a, x)) {
          if (a.odot(fe, p) == a.zero()) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) all = false;
    }
    out.by_annihilation = out.proper && all;
  }
  return out;
}

bool is_maximal(const Algebra& a, const Subset& f, Family fam) {
  return check_maximal(a, f, fam).ok();
}

bool is_strongly_maximal(const Algebra& a, const Subset& f) {
  require_width(a, f);
  for (Elem x = 0; x < a.order(); ++x) {
    if (f.contains(x)) continue;
    bool found = false;
    for (Elem p : odot_power_cycle(a, x)) {
      if (f.contains(a.star(p))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// --- primality ------------------------------------------------------------

PrimalityCheck check_prime(const Algebra& a, const Subset& f) {
  require_width(a, f);
  PrimalityCheck out;
  out.by_arrows = true;
  for (Elem x = 0; x < a.order() && out.by_arrows; ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (!f.contains(a.arrow(x, y)) && !f.contains(a.arrow(y, x))) {
        out.by_arrows = false;
        break;
      }
    }
  }
  if (is_deductive_system(a, f)) {
    bool ok = true;
    for (Elem x = 0; x < a.order() && ok; ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) {
          ok = false;
          break;
        }
      }
    }
    out.by_join_membership = ok;
  }
  return out;
}

bool is_prime(const Algebra& a, const Subset& f) {
  return check_prime(a, f).ok();
}

// --- perspectivity ----------------------------------------------------------

bool are_perspective(const Algebra& a, Elem x, Elem y) {
  for (Elem alpha = 0; alpha < a.order(); ++alpha) {
    if (a.leq(x, alpha) && a.leq(alpha, x) && a.leq(y, alpha) &&
        a.leq(alpha, y))
      return true;
  }
  return false;
}

bool is_commutative_filter(const Algebra& a, const Subset& f) {
  require_width(a, f);
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (f.contains(a.arrow(y, x)) &&
          !f.contains(a.arrow(a.join(x, y), x)))
        return false;
    }
  }
  return true;
}

// --- linearity ------------------------------------------------------------

WeakLinearityCheck check_weakly_linear(const Algebra& a) {
  WeakLinearityCheck out;
  out.by_arrows = true;
  for (Elem x = 0; x < a.order() && out.by_arrows; ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (!a.leq(x, y) && !a.leq(y, x)) {
        out.by_arrows = false;
        out.witness = {x, y};
        break;
      }
    }
  }
  out.by_joins = true;
  out.by_meets = true;
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (a.join(x, y) != y && a.join(y, x) != x) out.by_joins = false;
      if (a.meet(x, y) != y && a.meet(y, x) != x) out.by_meets = false;
    }
  }
  return out;
}

bool is_weakly_linear(const Algebra& a) {
  return check_weakly_linear(a).ok();
}

QuasiLinearityCheck check_quasi_linear(const Algebra& a) {
  QuasiLinearityCheck out;
  out.by_definition = true;
  for (Elem x = 0; x < a.order() && out.by_definition; ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (!a.leq_q(x, y) && !(a.leq(y, x) && y != x)) {
        out.by_definition = false;
        out.witness = {x, y};
        break;
      }
    }
  }
  out.by_leq_form = true;
  for (Elem x = 0; x < a.order() && out.by_leq_form; ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (!a.leq(x, y) && !(a.leq_q(y, x) && y != x)) {
        out.by_leq_form = false;
        break;
      }
    }
  }
  out.by_cancellation = true;
  for (Elem z = 0; z < a.order() && out.by_cancellation; ++z) {
    for (Elem x = 0; x < a.order() && out.by_cancellation; ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (a.arrow(z, x) == a.arrow(z, y) && a.arrow(z, x) != a.one() &&
            x != y) {
          out.by_cancellation = false;
          break;
        }
      }
    }
  }
  return out;
}

bool is_quasi_linear(const Algebra& a) {
  return check_quasi_linear(a).ok();
}

std::optional<std::pair<Elem, Elem>> leq_q_incomparable_pair(const Algebra& a) {
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = x + 1; y < a.order(); ++y) {
      if (!a.leq_q(x, y) && !a.leq_q(y, x)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

WeaklyLinearIdentityReport weakly_linear_identity_suite(const Algebra& a) {
  if (!is_weakly_linear(a))
    throw InputError("identity suite requires a weakly linear algebra; '" +
                     a.name() + "' is not one");
  WeaklyLinearIdentityReport r;
  const int n = a.order();

  r.meet_of_cases = CheckResult::pass();
  for (Elem x = 0; x < n && r.meet_of_cases.ok; ++x) {
    for (Elem y = 0; y < n && r.meet_of_cases.ok; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const Elem lhs = a.meet(a.arrow(a.arrow(x, y), z),
                                a.arrow(a.arrow(y, x), z));
        if (lhs != z) {
          r.meet_of_cases = CheckResult::fail("meet_of_cases", {x, y, z});
          break;
        }
      }
    }
  }

  r.disjoint_meet_shift = CheckResult::pass();
  for (Elem x = 0; x < n && r.disjoint_meet_shift.ok; ++x) {
    for (Elem y = 0; y < n && r.disjoint_meet_shift.ok; ++y) {
      if (a.meet(x, y) != a.zero()) continue;
      for (Elem z = 0; z < n; ++z) {
        if (a.meet(a.arrow(z, x), a.arrow(z, y)) != a.star(z)) {
          r.disjoint_meet_shift =
              CheckResult::fail("disjoint_meet_shift", {x, y, z});
          break;
        }
      }
    }
  }

  r.disjoint_swap = CheckResult::pass();
  for (Elem x = 0; x < n && r.disjoint_swap.ok; ++x) {
    for (Elem y = 0; y < n && r.disjoint_swap.ok; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (a.meet(x, a.meet(y, z)) == a.zero() &&
            a.meet(x, a.meet(z, y)) != a.zero()) {
          r.disjoint_swap = CheckResult::fail("disjoint_swap", {x, y, z});
          break;
        }
      }
    }
  }

  r.perspective_join_top = CheckResult::pass();
  for (Elem x = 0; x < n && r.perspective_join_top.ok; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (are_perspective(a, x, y) && a.join(x, y) == a.one() &&
          !(x == a.one() && y == a.one())) {
        r.perspective_join_top =
            CheckResult::fail("perspective_join_top", {x, y});
        break;
      }
    }
  }
  return r;
}

// --- power sequences --------------------------------------------------------

std::vector<Elem> odot_power_cycle(const Algebra& a, Elem x) {
  std::vector<Elem> out;
  std::uint64_t seen = 0;
  Elem p = x;
  while (!((seen >> p) & 1u)) {
    seen |= 1ull << p;
    out.push_back(p);
    p = a.odot(p, x);
  }
  return out;
}

}  // namespace qw
