#include "oracle.hpp"

#include <algorithm>
#include <set>

#include "search.hpp"

namespace qw::testing {

std::vector<Subset> oracle_filters(const Algebra& a) {
  const int n = a.order();
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!((mask >> x) & 1)) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (((mask >> y) & 1) && !((mask >> a.odot(x, y)) & 1)) ok = false;
        if (!((mask >> a.arrow(y, x)) & 1)) ok = false;
      }
    }
    if (ok) out.emplace_back(mask, n);
  }
  return out;
}

std::vector<Subset> oracle_deductive_systems(const Algebra& a) {
  const int n = a.order();
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if (!((mask >> a.one()) & 1)) continue;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!((mask >> x) & 1)) continue;
      for (Elem y = 0; y < n; ++y) {
        if (((mask >> a.arrow(x, y)) & 1) && !((mask >> y) & 1)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(mask, n);
  }
  return out;
}

std::vector<std::vector<Elem>> oracle_qw_census(int n) {
  if (n < 1 || n > 4) throw InputError("census oracle supports orders 1..4");

  const Elem one = n - 1;
  std::vector<Elem> table(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x) {
    table[0 * n + x] = one;  // 0 -> x = 1
    table[one * n + x] = x;  // 1 -> x = x
    table[x * n + one] = one;  // x -> 1 = 1
    table[x * n + x] = one;  // x -> x = 1
  }
  std::vector<size_t> free_cells;
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0) free_cells.push_back(i);
  }

  std::vector<std::string> names;
  if (n == 1) {
    names = {"1"};
  } else {
    names.push_back("0");
    for (int i = 0; i < n - 2; ++i) names.push_back(std::string(1, 'a' + i));
    names.push_back("1");
  }

  std::set<std::vector<Elem>> canon;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == free_cells.size()) {
      Algebra a("census", names, 0, one, table);
      if (verify_qw(a).is_qw()) canon.insert(canonical_form(a).table);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      table[free_cells[k]] = v;
      self(self, k + 1);
    }
    table[free_cells[k]] = -1;
  };
  rec(rec, 0);
  return {canon.begin(), canon.end()};
}

}  // namespace qw::testing
