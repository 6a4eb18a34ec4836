#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qw {

/// Index into the carrier of a specific Algebra; only meaningful relative to
/// the algebra it came from.
using Elem = int;

/// Malformed caller-supplied data: unparsable text, unknown element names,
/// violated operation preconditions, or an enumeration gate exceeded.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that the theory proves equivalent disagreed on a concrete
/// instance, or a construction invariant guaranteed by a proved statement
/// failed. Never swallowed: it means either an implementation bug or a
/// counterexample to a published statement.
class FalsificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite implication algebra (X, ->, 0, 1): n named elements, a total
/// n x n implication table, and designated constants. Which axioms it
/// actually satisfies is decided by verify_be / verify_qw, not assumed.
///
/// Immutable after construction; every operation below is a pure lookup,
/// so instances can be shared freely between threads.
class Algebra {
 public:
  static constexpr int kMaxOrder = 64;

  Algebra(std::string name, std::vector<std::string> element_names, Elem zero,
          Elem one, std::vector<Elem> arrow_row_major);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Elem x) const { return names_[x]; }
  std::optional<Elem> element_by_name(std::string_view name) const;

  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem arrow(Elem x, Elem y) const { return table_[x * n_ + y]; }
  const std::vector<Elem>& table() const { return table_; }

  // Derived operations.
  Elem star(Elem x) const { return arrow(x, zero_); }                  // x -> 0
  Elem join(Elem x, Elem y) const { return arrow(arrow(x, y), y); }    // (x->y)->y
  Elem meet(Elem x, Elem y) const {                                    // ((x*->y*)->y*)*
    return star(join(star(x), star(y)));
  }
  Elem odot(Elem x, Elem y) const { return star(arrow(x, star(y))); }  // (x->y*)*

  // Order relations.
  bool leq(Elem x, Elem y) const { return arrow(x, y) == one_; }   // x -> y = 1
  bool leq_q(Elem x, Elem y) const { return meet(x, y) == x; }     // x = x meet y

 private:
  std::string name_;
  std::vector<std::string> names_;
  int n_;
  Elem zero_;
  Elem one_;
  std::vector<Elem> table_;
};

enum class Verdict : std::uint8_t { kPass, kFail, kSkipped };

enum class Axiom : std::uint8_t {
  kBe1,         // x -> x = 1
  kBe2,         // x -> 1 = 1
  kBe3,         // 1 -> x = x
  kBe4,         // x -> (y -> z) = y -> (x -> z)
  kBounded,     // 0 -> x = 1
  kInvolutive,  // x** = x
  kQw,          // x -> ((x meet y) meet (z meet x)) = (x->y) meet (x->z)
};

const char* axiom_tag(Axiom a);

/// First violating tuple of a failed axiom, in lexicographic element order.
struct AxiomWitness {
  Axiom axiom;
  std::vector<Elem> elems;
};

/// Verdict per axiom group. Stages run in the order BE, bounded, involutive,
/// QW; a stage after a failed one is kSkipped, which is distinct from kFail.
struct AxiomReport {
  Verdict be1 = Verdict::kSkipped;
  Verdict be2 = Verdict::kSkipped;
  Verdict be3 = Verdict::kSkipped;
  Verdict be4 = Verdict::kSkipped;
  Verdict bounded = Verdict::kSkipped;
  Verdict involutive = Verdict::kSkipped;
  Verdict qw = Verdict::kSkipped;

  // Whether the aggregate verdict of (QW) matches the aggregate verdict of
  // (QW1) "x -> (x meet y) = x -> y" together with (QW2)
  // "x -> (y meet (z meet x)) = (x->y) meet (x->z)". The two formulations
  // are provably equivalent, so a recorded false here is a falsification.
  std::optional<bool> qw_split_consistent;

  std::vector<AxiomWitness> witnesses;

  bool is_be() const;
  bool is_bounded() const;     // BE and bounded
  bool is_involutive() const;  // ... and involutive
  bool is_qw() const;          // ... and QW

  const AxiomWitness* witness_for(Axiom a) const;
};

/// Exhaustive check of BE1-BE4 plus the bounded and involutive conditions.
/// The QW stage is left kSkipped.
AxiomReport verify_be(const Algebra& a);

/// Full check: BE, bounded, involutive, then the QW axiom over all triples,
/// recording agreement of (QW) with (QW1) and (QW2).
AxiomReport verify_qw(const Algebra& a);

bool is_qw(const Algebra& a);

/// join(x, y) = join(y, x) for all pairs.
bool is_commutative(const Algebra& a);
std::optional<std::pair<Elem, Elem>> commutativity_witness(const Algebra& a);

/// On a QW algebra: do the relations leq and leq_q coincide? Throws
/// InputError when the algebra is not QW.
bool is_wajsberg(const Algebra& a);

/// Unconditional pair scan used by is_wajsberg and by the analyzers.
bool leq_coincides_with_leq_q(const Algebra& a);

}  // namespace qw
