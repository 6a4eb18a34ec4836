#include "algebra.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace qw {

namespace {

bool valid_token(const std::string& tok) {
  if (tok.empty()) return false;
  for (unsigned char c : tok) {
    if (std::isspace(c) || !std::isprint(c) || c == '#') return false;
  }
  return true;
}

}  // namespace

Algebra::Algebra(std::string name, std::vector<std::string> element_names,
                 Elem zero, Elem one, std::vector<Elem> arrow_row_major)
    : name_(std::move(name)),
      names_(std::move(element_names)),
      n_(static_cast<int>(names_.size())),
      zero_(zero),
      one_(one),
      table_(std::move(arrow_row_major)) {
  if (n_ < 1) throw InputError("algebra needs at least one element");
  if (n_ > kMaxOrder)
    throw InputError("algebra order " + std::to_string(n_) +
                     " exceeds the supported maximum of " +
                     std::to_string(kMaxOrder));
  if (!valid_token(name_)) throw InputError("invalid algebra name");
  std::unordered_set<std::string> seen;
  for (const auto& nm : names_) {
    if (!valid_token(nm)) throw InputError("invalid element name '" + nm + "'");
    if (!seen.insert(nm).second)
      throw InputError("duplicate element name '" + nm + "'");
  }
  if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
    throw InputError("zero/one out of range");
  if (zero_ == one_ && n_ != 1)
    throw InputError("zero and one must differ unless the algebra is trivial");
  if (table_.size() != static_cast<size_t>(n_) * n_)
    throw InputError("implication table is not a full n x n grid");
  for (Elem v : table_) {
    if (v < 0 || v >= n_) throw InputError("table entry out of range");
  }
}

std::optional<Elem> Algebra::element_by_name(std::string_view name) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

const char* axiom_tag(Axiom a) {
  switch (a) {
    case Axiom::kBe1: return "BE1";
    case Axiom::kBe2: return "BE2";
    case Axiom::kBe3: return "BE3";
    case Axiom::kBe4: return "BE4";
    case Axiom::kBounded: return "bounded";
    case Axiom::kInvolutive: return "involutive";
    case Axiom::kQw: return "QW";
  }
  return "?";
}

bool AxiomReport::is_be() const {
  return be1 == Verdict::kPass && be2 == Verdict::kPass &&
         be3 == Verdict::kPass && be4 == Verdict::kPass;
}

bool AxiomReport::is_bounded() const {
  return is_be() && bounded == Verdict::kPass;
}

bool AxiomReport::is_involutive() const {
  return is_bounded() && involutive == Verdict::kPass;
}

bool AxiomReport::is_qw() const {
  return is_involutive() && qw == Verdict::kPass;
}

const AxiomWitness* AxiomReport::witness_for(Axiom a) const {
  for (const auto& w : witnesses) {
    if (w.axiom == a) return &w;
  }
  return nullptr;
}

namespace {

AxiomReport verify_impl(const Algebra& a, bool with_qw) {
  AxiomReport r;
  const int n = a.order();
  const Elem one = a.one();

  auto fail = [&r](Verdict& v, Axiom ax, std::initializer_list<Elem> tuple) {
    if (v != Verdict::kFail) {
      v = Verdict::kFail;
      r.witnesses.push_back({ax, std::vector<Elem>(tuple)});
    }
  };

  r.be1 = r.be2 = r.be3 = Verdict::kPass;
  for (Elem x = 0; x < n; ++x) {
    if (a.arrow(x, x) != one) {
      fail(r.be1, Axiom::kBe1, {x});
      break;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (a.arrow(x, one) != one) {
      fail(r.be2, Axiom::kBe2, {x});
      break;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (a.arrow(one, x) != x) {
      fail(r.be3, Axiom::kBe3, {x});
      break;
    }
  }
  r.be4 = Verdict::kPass;
  for (Elem x = 0; x < n && r.be4 == Verdict::kPass; ++x) {
    for (Elem y = 0; y < n && r.be4 == Verdict::kPass; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (a.arrow(x, a.arrow(y, z)) != a.arrow(y, a.arrow(x, z))) {
          fail(r.be4, Axiom::kBe4, {x, y, z});
          break;
        }
      }
    }
  }
  if (!r.is_be()) return r;

  r.bounded = Verdict::kPass;
  for (Elem x = 0; x < n; ++x) {
    if (a.arrow(a.zero(), x) != one) {
      fail(r.bounded, Axiom::kBounded, {x});
      break;
    }
  }
  if (r.bounded != Verdict::kPass) return r;

  r.involutive = Verdict::kPass;
  for (Elem x = 0; x < n; ++x) {
    if (a.star(a.star(x)) != x) {
      fail(r.involutive, Axiom::kInvolutive, {x});
      break;
    }
  }
  if (r.involutive != Verdict::kPass || !with_qw) return r;

  r.qw = Verdict::kPass;
  bool qw1 = true;
  bool qw2 = true;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = a.arrow(x, y);
      if (a.arrow(x, a.meet(x, y)) != xy) qw1 = false;
      const Elem mxy = a.meet(x, y);
      for (Elem z = 0; z < n; ++z) {
        const Elem rhs = a.meet(xy, a.arrow(x, z));
        if (a.arrow(x, a.meet(mxy, a.meet(z, x))) != rhs) {
          fail(r.qw, Axiom::kQw, {x, y, z});
        }
        if (a.arrow(x, a.meet(y, a.meet(z, x))) != rhs) qw2 = false;
      }
    }
  }
  r.qw_split_consistent = ((r.qw == Verdict::kPass) == (qw1 && qw2));
  return r;
}

}  // namespace

AxiomReport verify_be(const Algebra& a) { return verify_impl(a, false); }

AxiomReport verify_qw(const Algebra& a) { return verify_impl(a, true); }

bool is_qw(const Algebra& a) { return verify_qw(a).is_qw(); }

std::optional<std::pair<Elem, Elem>> commutativity_witness(const Algebra& a) {
  const int n = a.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (a.join(x, y) != a.join(y, x)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool is_commutative(const Algebra& a) {
  return !commutativity_witness(a).has_value();
}

bool leq_coincides_with_leq_q(const Algebra& a) {
  const int n = a.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (a.leq(x, y) != a.leq_q(x, y)) return false;
    }
  }
  return true;
}

bool is_wajsberg(const Algebra& a) {
  if (!is_qw(a))
    throw InputError("is_wajsberg requires a quantum-Wajsberg algebra; '" +
                     a.name() + "' is not one");
  return leq_coincides_with_leq_q(a);
}

}  // namespace qw
