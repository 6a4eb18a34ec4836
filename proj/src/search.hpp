#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "algebra.hpp"

namespace qw {

/// Partially assigned implication table used as search state. The layout is
/// fixed: element 0 is the constant 0 and element n-1 is the constant 1;
/// unassigned cells hold -1. Assigned cells never contradict a ground axiom
/// instance whose operands are all assigned (propagate enforces this).
struct PartialTable {
  static constexpr int kMaxSearchOrder = 10;

  int n = 0;
  std::array<std::int8_t, kMaxSearchOrder * kMaxSearchOrder> cells{};

  static PartialTable empty(int n);

  Elem zero() const { return 0; }
  Elem one() const { return n - 1; }

  int at(Elem x, Elem y) const { return cells[x * n + y]; }
  void set(Elem x, Elem y, Elem v) { cells[x * n + y] = static_cast<std::int8_t>(v); }
  bool complete() const;

  /// Builds the algebra once complete, with the standard element names
  /// "0", "a", "b", ..., "1".
  Algebra to_algebra(std::string name) const;
};

enum class PropagationResult { kFixpoint, kContradiction };

/// Least fixpoint of unit propagation over the ground axiom instances:
/// the forced rows and columns (x->x = 1, x->1 = 1, 1->x = x, 0->x = 1),
/// the star column as an involution pairing 0 with 1, the involutive
/// symmetry x->y = y*->x*, the exchange axiom as a unit rule, and the QW
/// instances as consistency checks once their operands are assigned.
PropagationResult propagate(PartialTable& t);

struct SearchStats {
  std::uint64_t nodes = 0;       // value assignments tried
  std::uint64_t prunes = 0;      // contradictions found by propagation
  std::uint64_t candidates = 0;  // complete tables reaching verification
  std::uint64_t isomorph_rejections = 0;
};

struct SearchResult {
  int order = 0;
  std::vector<Algebra> models;  // canonical, sorted by table, named qwN_i
  SearchStats stats;
  bool truncated = false;  // a limit cut the emitted list short
};

/// All QW algebras of the given order up to constant-fixing isomorphism.
/// Backtracking over the star column first and then the remaining cells in
/// row-major order, with candidate values restricted to orbit
/// representatives under the stabilizer of the partial assignment. Every
/// complete table is filtered through verify_qw and deduplicated by
/// canonical form, so the emitted stream is sound and isomorph-free by
/// construction. Branches at the star-column split run on worker threads;
/// the merge is keyed by canonical form and deterministic.
/// InputError above the search-order gate.
SearchResult enumerate_qw(int order,
                          std::optional<std::uint64_t> limit = std::nullopt);

/// Arrow table under the constant-fixing relabeling (0 first, 1 last) that
/// minimizes the row-major reading. Two algebras have equal canonical forms
/// exactly when they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<Elem> table;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Algebra& a);
Algebra canonical_algebra(const Algebra& a, std::string name);

/// Bijection phi with phi(0)=0, phi(1)=1 and phi(x->y) = phi(x)->phi(y),
/// if one exists. Algebras of different orders are never isomorphic.
std::optional<std::vector<Elem>> isomorphism(const Algebra& a,
                                             const Algebra& b);
bool is_isomorphic(const Algebra& a, const Algebra& b);

/// Componentwise implication on the product carrier; pairs are named
/// "<na>.<nb>". Used to build larger regression fixtures.
Algebra direct_product(const Algebra& a, const Algebra& b, std::string name);

}  // namespace qw
