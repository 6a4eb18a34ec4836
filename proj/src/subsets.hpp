#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace qw {

/// A subset of the carrier of an algebra of size n, as a width-n bit vector.
/// The width travels with the value; mixing widths is an error.
class Subset {
 public:
  Subset() = default;
  Subset(std::uint64_t bits, int width);

  static Subset empty(int width) { return Subset(0, width); }
  static Subset full(int width);
  static Subset of(std::initializer_list<Elem> elems, int width);
  /// Builds a subset from element names; InputError on an unknown name.
  static Subset from_names(const Algebra& a,
                           const std::vector<std::string>& names);

  std::uint64_t bits() const { return bits_; }
  int width() const { return width_; }

  bool contains(Elem x) const { return (bits_ >> x) & 1u; }
  Subset with(Elem x) const { return Subset(bits_ | (1ull << x), width_); }
  Subset without(Elem x) const { return Subset(bits_ & ~(1ull << x), width_); }
  bool is_empty() const { return bits_ == 0; }
  int count() const;
  bool is_full() const;

  bool subset_of(const Subset& other) const;
  bool proper_subset_of(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;

  std::vector<Elem> elements() const;
  std::vector<std::string> names(const Algebra& a) const;
  /// Render as "{a,1}" using the algebra's element names.
  std::string to_string(const Algebra& a) const;

  bool operator==(const Subset&) const = default;
  bool operator<(const Subset& other) const { return bits_ < other.bits_; }

 private:
  std::uint64_t bits_ = 0;
  int width_ = 0;
};

/// Outcome of one definitional check: either ok, or the tag of the violated
/// condition together with the first violating elements (lexicographic by
/// element index).
struct CheckResult {
  bool ok = true;
  std::string condition;
  std::vector<Elem> witness;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string cond, std::vector<Elem> w) {
    return {false, std::move(cond), std::move(w)};
  }
};

// --- filters --------------------------------------------------------------

/// Both characterizations of "F is a filter": closure under the product and
/// under y -> x for members x (F1 + F2), and the product/upward variant
/// (F1 + F3, upward closure under leq_q). On a QW algebra the two verdicts
/// provably agree; callers that know the algebra is QW cross-check them.
struct FilterCheck {
  CheckResult by_closure;  // nonempty + F1 + F2
  CheckResult by_upward;   // nonempty + F1 + F3
  bool ok() const { return by_closure.ok; }
  bool routes_agree() const { return by_closure.ok == by_upward.ok; }
};

FilterCheck check_filter(const Algebra& a, const Subset& f);
bool is_filter(const Algebra& a, const Subset& f);

// --- deductive systems ----------------------------------------------------

/// The modus-ponens definition (DS1 + DS2) plus the two equivalent
/// characterizations used as self-checks on QW algebras: nonempty + F1 + F4
/// (upward closure under leq) and nonempty + F1 + F5 (closure under joins
/// with arbitrary elements).
struct DeductiveSystemCheck {
  CheckResult by_modus_ponens;
  CheckResult by_leq_upward;
  CheckResult by_join_closure;
  bool ok() const { return by_modus_ponens.ok; }
  bool routes_agree() const {
    return by_modus_ponens.ok == by_leq_upward.ok &&
           by_modus_ponens.ok == by_join_closure.ok;
  }
};

DeductiveSystemCheck check_deductive_system(const Algebra& a, const Subset& f);
bool is_deductive_system(const Algebra& a, const Subset& f);

// --- ideals ---------------------------------------------------------------

/// I1: x, y in I implies x* -> y in I;  I2: y in I and x leq_q y imply x in I.
CheckResult check_ideal(const Algebra& a, const Subset& s);
bool is_ideal(const Algebra& a, const Subset& s);

// --- enumeration ----------------------------------------------------------

/// All filters (resp. deductive systems), ascending as bit-vector integers.
/// Refuses above the subset-enumeration gate. enumerate_deductive_systems
/// additionally verifies DS(X) is contained in F(X) and throws
/// FalsificationError otherwise.
std::vector<Subset> enumerate_filters(const Algebra& a);
std::vector<Subset> enumerate_deductive_systems(const Algebra& a);

// --- generated filters ----------------------------------------------------

/// Least filter containing the nonempty seed: close the seed under the
/// product, then take the leq_q-upward closure. InputError on an empty seed.
Subset generated_filter(const Algebra& a, const Subset& seed);

/// generated_filter(f with x), with the direct one-product characterization
/// { y : y geq_q f' odot x^k } as a built-in cross-check (FalsificationError
/// on disagreement). Requires f to be a filter.
Subset extend_filter(const Algebra& a, const Subset& f, Elem x);

// --- maximality -----------------------------------------------------------

enum class Family { kFilters, kDeductiveSystems };

/// Dominance route: proper and not strictly contained in a proper member of
/// the family. For filters, the annihilation route (for every x outside F
/// some member f and power x^k satisfy f odot x^k = 0) is evaluated as well;
/// the two provably agree on QW algebras.
struct MaximalityCheck {
  bool proper = false;
  bool by_dominance = false;
  std::optional<bool> by_annihilation;  // filters only
  bool ok() const { return by_dominance; }
  bool routes_agree() const {
    return !by_annihilation || *by_annihilation == by_dominance;
  }
};

/// InputError if f does not belong to the stated family.
MaximalityCheck check_maximal(const Algebra& a, const Subset& f, Family fam);
bool is_maximal(const Algebra& a, const Subset& f, Family fam);

/// For every x outside f, some power x^k (walked with cycle detection) has
/// (x^k)* inside f. The full carrier satisfies this vacuously.
bool is_strongly_maximal(const Algebra& a, const Subset& f);

// --- primality ------------------------------------------------------------

/// Arrow route: for all pairs, x -> y in F or y -> x in F. When F is a
/// deductive system the join-membership route (x join y in F implies x in F
/// or y in F) is evaluated as well.
struct PrimalityCheck {
  bool by_arrows = false;
  std::optional<bool> by_join_membership;  // deductive systems only
  bool ok() const { return by_arrows; }
  bool routes_agree() const {
    return !by_join_membership || *by_join_membership == by_arrows;
  }
};

PrimalityCheck check_prime(const Algebra& a, const Subset& f);
bool is_prime(const Algebra& a, const Subset& f);

// --- perspectivity and commutative filters ---------------------------------

/// Some alpha satisfies x <= alpha <= x and y <= alpha <= y.
bool are_perspective(const Algebra& a, Elem x, Elem y);

/// y -> x in F implies ((x -> y) -> y) -> x in F, for all pairs.
bool is_commutative_filter(const Algebra& a, const Subset& f);

// --- linearity ------------------------------------------------------------

/// Weak linearity: leq is total. Evaluated three ways (arrows, joins, meets);
/// the routes provably agree on QW algebras.
struct WeakLinearityCheck {
  bool by_arrows = false;
  bool by_joins = false;
  bool by_meets = false;
  std::optional<std::pair<Elem, Elem>> witness;  // first pair with neither leq
  bool ok() const { return by_arrows; }
  bool routes_agree() const {
    return by_arrows == by_joins && by_arrows == by_meets;
  }
};

WeakLinearityCheck check_weakly_linear(const Algebra& a);
bool is_weakly_linear(const Algebra& a);

/// Quasi-linearity: x not leq_q y implies y < x (strictly below under leq).
/// Also evaluated via the contrapositive leq form (x not leq y implies
/// y <_Q x) and the cancellation form (z -> x = z -> y != 1 implies x = y);
/// all three provably agree on QW algebras.
struct QuasiLinearityCheck {
  bool by_definition = false;
  bool by_leq_form = false;
  bool by_cancellation = false;
  std::optional<std::pair<Elem, Elem>> witness;
  bool ok() const { return by_definition; }
  bool routes_agree() const {
    return by_definition == by_leq_form && by_definition == by_cancellation;
  }
};

QuasiLinearityCheck check_quasi_linear(const Algebra& a);
bool is_quasi_linear(const Algebra& a);

/// First pair (x, y) with x < y in index order that is leq_q-incomparable,
/// if any; nullopt means leq_q is total.
std::optional<std::pair<Elem, Elem>> leq_q_incomparable_pair(const Algebra& a);

/// Identities that hold in every weakly linear QW algebra:
///   meet_of_cases:        ((x->y)->z) meet ((y->x)->z) = z
///   disjoint_meet_shift:  x meet y = 0 implies (z->x) meet (z->y) = z*
///   disjoint_swap:        x meet (y meet z) = 0 implies x meet (z meet y) = 0
///   perspective_join_top: x ~ y and x join y = 1 imply x = y = 1
/// InputError when the algebra is not weakly linear.
struct WeaklyLinearIdentityReport {
  CheckResult meet_of_cases;
  CheckResult disjoint_meet_shift;
  CheckResult disjoint_swap;
  CheckResult perspective_join_top;
  bool all_pass() const {
    return meet_of_cases.ok && disjoint_meet_shift.ok && disjoint_swap.ok &&
           perspective_join_top.ok;
  }
};

WeaklyLinearIdentityReport weakly_linear_identity_suite(const Algebra& a);

// --- power sequences --------------------------------------------------------

/// The distinct values of x, x odot x, x odot x odot x, ... in order, up to
/// the first repeat. Finite because the carrier is.
std::vector<Elem> odot_power_cycle(const Algebra& a, Elem x);

}  // namespace qw
