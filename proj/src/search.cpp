#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "gates.hpp"

namespace qw {

PartialTable PartialTable::empty(int n) {
  if (n < 1 || n > kMaxSearchOrder)
    throw InputError("partial tables support orders 1.." +
                     std::to_string(kMaxSearchOrder));
  PartialTable t;
  t.n = n;
  t.cells.fill(-1);
  return t;
}

bool PartialTable::complete() const {
  for (int i = 0; i < n * n; ++i) {
    if (cells[i] < 0) return false;
  }
  return true;
}

namespace {

std::vector<std::string> standard_names(int n) {
  if (n == 1) return {"1"};
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 0; i < n - 2; ++i) names.push_back(std::string(1, 'a' + i));
  names.push_back("1");
  return names;
}

}  // namespace

Algebra PartialTable::to_algebra(std::string name) const {
  std::vector<Elem> table(n * n);
  for (int i = 0; i < n * n; ++i) {
    if (cells[i] < 0) throw InputError("incomplete table");
    table[i] = cells[i];
  }
  return Algebra(std::move(name), standard_names(n), zero(), one(),
                 std::move(table));
}

namespace {

// Assign-or-conflict helper shared by all propagation rules.
struct Setter {
  PartialTable& t;
  bool changed = false;
  bool conflict = false;

  void put(Elem x, Elem y, Elem v) {
    const int cur = t.at(x, y);
    if (cur < 0) {
      t.set(x, y, v);
      changed = true;
    } else if (cur != v) {
      conflict = true;
    }
  }
};

// Evaluators over a partial table; -1 means not yet determined.
int p_star(const PartialTable& t, int x) { return x < 0 ? -1 : t.at(x, 0); }

int p_arrow(const PartialTable& t, int x, int y) {
  return (x < 0 || y < 0) ? -1 : t.at(x, y);
}

int p_join(const PartialTable& t, int x, int y) {
  return p_arrow(t, p_arrow(t, x, y), y);
}

int p_meet(const PartialTable& t, int x, int y) {
  return p_star(t, p_join(t, p_star(t, x), p_star(t, y)));
}

}  // namespace

PropagationResult propagate(PartialTable& t) {
  const int n = t.n;
  const Elem one = t.one();
  Setter s{t};

  do {
    s.changed = false;

    // Unit axiom instances.
    for (Elem x = 0; x < n; ++x) {
      s.put(x, x, one);       // x -> x = 1
      s.put(x, one, one);     // x -> 1 = 1
      s.put(one, x, x);       // 1 -> x = x
      s.put(t.zero(), x, one);  // 0 -> x = 1
    }
    if (s.conflict) return PropagationResult::kContradiction;

    // Star column: an involution pairing 0 with 1.
    {
      std::array<bool, PartialTable::kMaxSearchOrder> used{};
      int unassigned = -1;
      int unassigned_count = 0;
      for (Elem x = 0; x < n; ++x) {
        const int sx = t.at(x, 0);
        if (sx < 0) {
          ++unassigned_count;
          unassigned = x;
          continue;
        }
        if (used[sx]) return PropagationResult::kContradiction;
        used[sx] = true;
        s.put(sx, 0, x);  // x** = x
      }
      // A lone unpaired element can only be its own star.
      if (unassigned_count == 1) s.put(unassigned, 0, unassigned);
      if (s.conflict) return PropagationResult::kContradiction;
    }

    // Involutive symmetry: x -> y = y* -> x*.
    for (Elem x = 0; x < n; ++x) {
      const int sx = t.at(x, 0);
      if (sx < 0) continue;
      for (Elem y = 0; y < n; ++y) {
        const int v = t.at(x, y);
        if (v < 0) continue;
        const int sy = t.at(y, 0);
        if (sy < 0) continue;
        s.put(sy, sx, v);
      }
    }
    if (s.conflict) return PropagationResult::kContradiction;

    // Exchange: x -> (y -> z) = y -> (x -> z), as a unit rule.
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          const int yz = t.at(y, z);
          const int xz = t.at(x, z);
          if (yz < 0 || xz < 0) continue;
          const int lhs = t.at(x, yz);
          const int rhs = t.at(y, xz);
          if (lhs >= 0 && rhs >= 0) {
            if (lhs != rhs) return PropagationResult::kContradiction;
          } else if (lhs >= 0) {
            s.put(y, xz, lhs);
          } else if (rhs >= 0) {
            s.put(x, yz, rhs);
          }
        }
      }
    }
    if (s.conflict) return PropagationResult::kContradiction;

    // QW1: x -> (x meet y) = x -> y, as a unit rule.
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const int m = p_meet(t, x, y);
        if (m < 0) continue;
        const int lhs = t.at(x, m);
        const int rhs = t.at(x, y);
        if (lhs >= 0 && rhs >= 0) {
          if (lhs != rhs) return PropagationResult::kContradiction;
        } else if (lhs >= 0) {
          s.put(x, y, lhs);
        } else if (rhs >= 0) {
          s.put(x, m, rhs);
        }
      }
    }
    if (s.conflict) return PropagationResult::kContradiction;

    // Full QW and QW2 instances, checked once evaluable.
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const int mxy = p_meet(t, x, y);
        for (Elem z = 0; z < n; ++z) {
          const int rhs = p_meet(t, t.at(x, y), t.at(x, z));
          if (rhs < 0) continue;
          const int mzx = p_meet(t, z, x);
          const int lhs_qw = p_arrow(t, x, p_meet(t, mxy, mzx));
          if (lhs_qw >= 0 && lhs_qw != rhs)
            return PropagationResult::kContradiction;
          const int lhs_qw2 = p_arrow(t, x, p_meet(t, y, mzx));
          if (lhs_qw2 >= 0 && lhs_qw2 != rhs)
            return PropagationResult::kContradiction;
        }
      }
    }
    if (s.conflict) return PropagationResult::kContradiction;
  } while (s.changed);

  return PropagationResult::kFixpoint;
}

// --- canonical forms and isomorphism -----------------------------------------

namespace {

// All bijections onto {0..n-1} that send `zero` to 0 and `one` to n-1.
// For n == 1 this is the single trivial map.
std::vector<std::vector<Elem>> constant_fixing_maps(int n, Elem zero,
                                                    Elem one) {
  std::vector<Elem> mids;
  for (Elem x = 0; x < n; ++x) {
    if (x != zero && x != one) mids.push_back(x);
  }
  std::vector<Elem> targets(mids.size());
  std::iota(targets.begin(), targets.end(), 1);
  std::vector<std::vector<Elem>> out;
  do {
    std::vector<Elem> map(n);
    map[zero] = 0;
    map[one] = n - 1;
    for (size_t i = 0; i < mids.size(); ++i) map[mids[i]] = targets[i];
    out.push_back(std::move(map));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return out;
}

std::vector<Elem> relabel(const Algebra& a, const std::vector<Elem>& map) {
  const int n = a.order();
  std::vector<Elem> out(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      out[map[x] * n + map[y]] = map[a.arrow(x, y)];
    }
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Algebra& a) {
  CanonicalForm best;
  best.n = a.order();
  for (const auto& map : constant_fixing_maps(a.order(), a.zero(), a.one())) {
    auto tab = relabel(a, map);
    if (best.table.empty() || tab < best.table) best.table = std::move(tab);
  }
  return best;
}

Algebra canonical_algebra(const Algebra& a, std::string name) {
  auto cf = canonical_form(a);
  return Algebra(std::move(name), standard_names(cf.n), 0, cf.n - 1,
                 std::move(cf.table));
}

std::optional<std::vector<Elem>> isomorphism(const Algebra& a,
                                             const Algebra& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::vector<Elem> b_layout(n);  // index in the 0-first/1-last layout -> b
  {
    std::vector<Elem> mids;
    for (Elem x = 0; x < n; ++x) {
      if (x != b.zero() && x != b.one()) mids.push_back(x);
    }
    b_layout[0] = b.zero();
    b_layout[n - 1] = b.one();
    for (size_t i = 0; i < mids.size(); ++i) b_layout[i + 1] = mids[i];
  }
  for (const auto& map : constant_fixing_maps(n, a.zero(), a.one())) {
    // phi sends a-element x to the b-element at layout slot map[x].
    std::vector<Elem> phi(n);
    for (Elem x = 0; x < n; ++x) phi[x] = b_layout[map[x]];
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (phi[a.arrow(x, y)] != b.arrow(phi[x], phi[y])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

bool is_isomorphic(const Algebra& a, const Algebra& b) {
  return isomorphism(a, b).has_value();
}

Algebra direct_product(const Algebra& a, const Algebra& b, std::string name) {
  const int na = a.order();
  const int nb = b.order();
  if (na * nb > Algebra::kMaxOrder)
    throw InputError("product order exceeds the supported maximum");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(na) * nb);
  for (Elem i = 0; i < na; ++i) {
    for (Elem j = 0; j < nb; ++j) {
      names.push_back(a.element_name(i) + "." + b.element_name(j));
    }
  }
  std::vector<Elem> table(static_cast<size_t>(na) * nb * na * nb);
  const int n = na * nb;
  for (Elem i = 0; i < na; ++i) {
    for (Elem j = 0; j < nb; ++j) {
      for (Elem k = 0; k < na; ++k) {
        for (Elem l = 0; l < nb; ++l) {
          table[(i * nb + j) * n + (k * nb + l)] =
              a.arrow(i, k) * nb + b.arrow(j, l);
        }
      }
    }
  }
  return Algebra(std::move(name), std::move(names),
                 a.zero() * nb + b.zero(), a.one() * nb + b.one(),
                 std::move(table));
}

// --- the enumerator ---------------------------------------------------------

namespace {

// Star-column assignments: involutions on the middle elements (0 and 1 are
// already paired with each other).
void middle_involutions(int n, std::vector<Elem>& star,
                        std::vector<std::vector<Elem>>& out) {
  int m = -1;
  for (Elem x = 1; x < n - 1; ++x) {
    if (star[x] < 0) {
      m = x;
      break;
    }
  }
  if (m < 0) {
    out.push_back(star);
    return;
  }
  star[m] = m;  // fixed point
  middle_involutions(n, star, out);
  for (Elem y = m + 1; y < n - 1; ++y) {
    if (star[y] >= 0) continue;
    star[m] = y;
    star[y] = m;
    middle_involutions(n, star, out);
    star[y] = -1;
  }
  star[m] = -1;
}

struct BranchResult {
  std::map<std::vector<Elem>, std::vector<Elem>> canon;  // canonical -> table
  SearchStats stats;
};

class Searcher {
 public:
  explicit Searcher(int n) : n_(n) {
    for (Elem x = 1; x < n - 1; ++x) {
      for (Elem y = 1; y < n - 1; ++y) {
        if (x != y) free_cells_.emplace_back(x, y);
      }
    }
    // All middle permutations, as full maps fixing 0 and n-1.
    perms_ = constant_fixing_maps(n, 0, n - 1);
  }

  BranchResult run(const std::vector<Elem>& star) {
    PartialTable t = PartialTable::empty(n_);
    for (Elem x = 1; x < n_ - 1; ++x) t.set(x, 0, star[x]);
    if (propagate(t) == PropagationResult::kContradiction) {
      result_.stats.prunes++;
      return std::move(result_);
    }
    dfs(t);
    return std::move(result_);
  }

 private:
  void dfs(const PartialTable& t) {
    int cell = -1;
    for (size_t i = 0; i < free_cells_.size(); ++i) {
      const auto [x, y] = free_cells_[i];
      if (t.at(x, y) < 0) {
        cell = static_cast<int>(i);
        break;
      }
    }
    if (cell < 0) {
      emit(t);
      return;
    }
    const auto [x, y] = free_cells_[cell];
    const auto candidates = orbit_representatives(t, x, y);
    for (Elem v : candidates) {
      PartialTable next = t;
      next.set(x, y, v);
      result_.stats.nodes++;
      if (propagate(next) == PropagationResult::kContradiction) {
        result_.stats.prunes++;
        continue;
      }
      dfs(next);
    }
  }

  // Candidate values for cell (x, y), one representative per orbit of the
  // subgroup of the partial-assignment stabilizer that fixes x and y.
  std::vector<Elem> orbit_representatives(const PartialTable& t, Elem x,
                                          Elem y) {
    std::vector<const std::vector<Elem>*> stab;
    for (const auto& p : perms_) {
      if (p[x] != x || p[y] != y) continue;
      bool preserves = true;
      for (Elem u = 0; u < n_ && preserves; ++u) {
        for (Elem w = 0; w < n_; ++w) {
          const int v = t.at(u, w);
          if (v < 0) continue;
          if (t.at(p[u], p[w]) != p[v]) {
            preserves = false;
            break;
          }
        }
      }
      if (preserves) stab.push_back(&p);
    }
    std::vector<Elem> reps;
    for (Elem v = 0; v < n_; ++v) {
      bool minimal = true;
      for (const auto* p : stab) {
        if ((*p)[v] < v) {
          minimal = false;
          break;
        }
      }
      if (minimal) reps.push_back(v);
    }
    return reps;
  }

  void emit(const PartialTable& t) {
    result_.stats.candidates++;
    const Algebra a = t.to_algebra("candidate");
    if (!verify_qw(a).is_qw()) return;
    auto key = canonical_form(a).table;
    std::vector<Elem> table(a.table());
    if (!result_.canon.emplace(std::move(key), std::move(table)).second)
      result_.stats.isomorph_rejections++;
  }

  int n_;
  std::vector<std::pair<Elem, Elem>> free_cells_;
  std::vector<std::vector<Elem>> perms_;
  BranchResult result_;
};

}  // namespace

SearchResult enumerate_qw(int order, std::optional<std::uint64_t> limit) {
  const Gates gates = active_gates();
  const int gate = std::min(gates.search_order, PartialTable::kMaxSearchOrder);
  if (order < 1) throw InputError("search order must be at least 1");
  if (order > gate)
    throw InputError("search order " + std::to_string(order) +
                     " exceeds the gate of " + std::to_string(gate) +
                     " (QW_GATE_OVERRIDE lifts it, up to " +
                     std::to_string(PartialTable::kMaxSearchOrder) + ")");

  SearchResult result;
  result.order = order;

  std::vector<std::vector<Elem>> stars;
  {
    std::vector<Elem> star(order, -1);
    middle_involutions(order, star, stars);
  }

  // One task per star-column branch; the merge below is keyed by branch
  // index and canonical form, so worker scheduling cannot affect output.
  std::vector<BranchResult> branch_results(stars.size());
  std::atomic<size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const size_t workers = std::min<size_t>(hw, stars.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < stars.size();
           i = next.fetch_add(1)) {
        Searcher searcher(order);
        branch_results[i] = searcher.run(stars[i]);
      }
    });
  }
  for (auto& th : pool) th.join();

  std::map<std::vector<Elem>, std::vector<Elem>> merged;
  for (const auto& br : branch_results) {
    result.stats.nodes += br.stats.nodes;
    result.stats.prunes += br.stats.prunes;
    result.stats.candidates += br.stats.candidates;
    result.stats.isomorph_rejections += br.stats.isomorph_rejections;
    for (const auto& [key, table] : br.canon) {
      if (!merged.emplace(key, table).second)
        result.stats.isomorph_rejections++;
    }
  }

  int index = 0;
  for (const auto& [key, table] : merged) {
    if (limit && static_cast<std::uint64_t>(index) >= *limit) {
      result.truncated = true;
      break;
    }
    ++index;
    const std::string name =
        "qw" + std::to_string(order) + "_" + std::to_string(index);
    result.models.emplace_back(name, standard_names(order), 0, order - 1,
                               std::vector<Elem>(key));
  }
  return result;
}

}  // namespace qw
