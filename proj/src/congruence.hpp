#pragma once

#include <array>
#include <optional>
#include <vector>

#include "subsets.hpp"

namespace qw {

/// An equivalence relation on the carrier, as first-occurrence canonical
/// class labels: element 0's class is 0, the next unseen class is 1, ...
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;

  static Partition identity(int n);
  static Partition single_class(int n);
  /// Canonicalizes arbitrary labels to first-occurrence form.
  static Partition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(class_of.size()); }
  bool same(Elem x, Elem y) const { return class_of[x] == class_of[y]; }
  std::vector<std::vector<Elem>> classes() const;
  /// Every class of this partition is a union of classes of the other.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;
};

/// The relation "some lambda dominates x and y under leq_q with
/// lambda -> x and lambda -> y in F", evaluated for every pair without any
/// precondition on F. Lets callers observe where the relation stops being
/// transitive when F is a mere filter.
struct RelationDiagnostics {
  std::vector<std::uint64_t> related;  // row bitsets
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  std::optional<std::array<Elem, 3>> transitivity_witness;

  bool is_equivalence() const { return reflexive && symmetric && transitive; }
  bool same(Elem x, Elem y) const { return (related[x] >> y) & 1u; }
};

RelationDiagnostics induced_relation(const Algebra& a, const Subset& f);

/// Partition of the relation above. InputError when f is not a deductive
/// system; FalsificationError when the relation fails to be an equivalence
/// (for a deductive system that would contradict a proved statement).
Partition congruence_from_ds(const Algebra& a, const Subset& ds);

/// The three provably equivalent descriptions of "x ~ y modulo F":
///   common dominator: some lambda with x, y leq_q lambda and
///                     lambda->x, lambda->y in F
///   matched residua:  some alpha, beta in F with x leq_q alpha,
///                     y leq_q beta and alpha->x = beta->y
///   cross bounds:     some alpha, beta in F with x leq_q beta->y and
///                     y leq_q alpha->x
struct EquivalenceRoutes {
  bool by_common_dominator = false;
  bool by_matched_residua = false;
  bool by_cross_bounds = false;
  bool agree() const {
    return by_common_dominator == by_matched_residua &&
           by_common_dominator == by_cross_bounds;
  }
};

EquivalenceRoutes equivalence_routes(const Algebra& a, const Subset& ds,
                                     Elem x, Elem y);
bool equiv_characterizations_agree(const Algebra& a, const Subset& ds, Elem x,
                                   Elem y);

/// Arrow-compatibility of a partition: x ~ y and u ~ v imply x->u ~ y->v,
/// checked exhaustively. When that holds, compatibility with star, odot,
/// meet and join is a consequence; it is re-checked anyway and a violation
/// raises FalsificationError.
bool is_congruence(const Algebra& a, const Partition& p);

/// The class of 1 as a subset. InputError when p is not a congruence;
/// FalsificationError if the class fails the deductive-system check.
Subset ds_from_congruence(const Algebra& a, const Partition& p);

/// Quotient algebra over the classes of congruence_from_ds, with the class
/// map back to the parent. Class i is named "[m]" where m is the
/// lexicographically least parent name in the class.
struct Quotient {
  Algebra algebra;
  Partition partition;
};

/// Verifies well-definedness of the class table over all representative
/// pairs, that the class of 1 equals ds, and (when the parent is QW) that
/// the quotient is QW; each failure raises FalsificationError.
Quotient quotient(const Algebra& a, const Subset& ds);

/// Least k >= 1 with x^k = 0 under odot, walked with cycle detection;
/// nullopt when the power cycle never reaches 0.
std::optional<int> ord(const Algebra& a, Elem x);

/// Every x != 1 has finite order.
bool is_locally_finite(const Algebra& a);

/// Both sides of a proved equivalence, evaluated independently. A mismatch
/// (agree() false) is a falsification diagnostic for the instance, never
/// silently absorbed by callers.
struct CorrespondenceCheck {
  bool lhs = false;
  bool rhs = false;
  bool agree() const { return lhs == rhs; }
};

/// lhs: ds is strongly maximal;  rhs: the quotient by ds is locally finite.
CorrespondenceCheck strongly_maximal_vs_quotient_locally_finite(
    const Algebra& a, const Subset& ds);

/// lhs: ds is prime;  rhs: the quotient by ds is weakly linear.
CorrespondenceCheck prime_vs_quotient_weakly_linear(const Algebra& a,
                                                    const Subset& ds);

/// All congruences of the algebra by brute force over every partition of the
/// carrier (restricted-growth enumeration). Gated at the partition gate.
std::vector<Partition> enumerate_congruences(const Algebra& a);

}  // namespace qw
