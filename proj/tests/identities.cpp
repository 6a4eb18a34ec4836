#include "identities.hpp"

#include <functional>

namespace qw::testing {

namespace {

using Fn1 = std::function<bool(const Algebra&, Elem)>;
using Fn2 = std::function<bool(const Algebra&, Elem, Elem)>;
using Fn3 = std::function<bool(const Algebra&, Elem, Elem, Elem)>;

void run1(const Algebra& a, std::vector<IdentityOutcome>& out,
          const char* name, const Fn1& fn) {
  IdentityOutcome o{name};
  for (Elem x = 0; x < a.order(); ++x) {
    ++o.instances;
    if (!fn(a, x) && o.ok) {
      o.ok = false;
      o.witness = {x};
    }
  }
  out.push_back(std::move(o));
}

void run2(const Algebra& a, std::vector<IdentityOutcome>& out,
          const char* name, const Fn2& fn) {
  IdentityOutcome o{name};
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      ++o.instances;
      if (!fn(a, x, y) && o.ok) {
        o.ok = false;
        o.witness = {x, y};
      }
    }
  }
  out.push_back(std::move(o));
}

void run3(const Algebra& a, std::vector<IdentityOutcome>& out,
          const char* name, const Fn3& fn) {
  IdentityOutcome o{name};
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      for (Elem z = 0; z < a.order(); ++z) {
        ++o.instances;
        if (!fn(a, x, y, z) && o.ok) {
          o.ok = false;
          o.witness = {x, y, z};
        }
      }
    }
  }
  out.push_back(std::move(o));
}

}  // namespace

std::vector<IdentityOutcome> run_identity_battery(const Algebra& a) {
  if (!is_qw(a))
    throw InputError("the identity battery expects a QW algebra");

  std::vector<IdentityOutcome> out;
  const Elem one = a.one();
  const Elem zero = a.zero();

  // Laws of every BE algebra.
  run2(a, out, "weakening: x->(y->x) = 1", [](const Algebra& a, Elem x, Elem y) {
    return a.arrow(x, a.arrow(y, x)) == a.one();
  });
  run2(a, out, "x below (x->y)->y", [](const Algebra& a, Elem x, Elem y) {
    return a.leq(x, a.join(x, y));
  });

  // Laws of every bounded BE algebra.
  run2(a, out, "contraposition into star: x->y* = y->x*",
       [](const Algebra& a, Elem x, Elem y) {
         return a.arrow(x, a.star(y)) == a.arrow(y, a.star(x));
       });
  run1(a, out, "x below x**", [](const Algebra& a, Elem x) {
    return a.leq(x, a.star(a.star(x)));
  });

  // Laws of every involutive BE algebra.
  run2(a, out, "star swap: x*->y = y*->x",
       [](const Algebra& a, Elem x, Elem y) {
         return a.arrow(a.star(x), y) == a.arrow(a.star(y), x);
       });
  run2(a, out, "contraposition: x*->y* = y->x",
       [](const Algebra& a, Elem x, Elem y) {
         return a.arrow(a.star(x), a.star(y)) == a.arrow(y, x);
       });
  run3(a, out, "(x*->y)*->z = x*->(y*->z)",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(a.star(a.arrow(a.star(x), y)), z) ==
                a.arrow(a.star(x), a.arrow(a.star(y), z));
       });
  run3(a, out, "currying through the product: x->(y->z) = (x->y*)*->z",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(x, a.arrow(y, z)) ==
                a.arrow(a.star(a.arrow(x, a.star(y))), z);
       });

  run2(a, out, "leq_q gives x = y meet x and y = x join y",
       [](const Algebra& a, Elem x, Elem y) {
         if (!a.leq_q(x, y)) return true;
         return a.meet(y, x) == x && a.join(x, y) == y;
       });
  run1(a, out, "leq_q reflexive",
       [](const Algebra& a, Elem x) { return a.leq_q(x, x); });
  run2(a, out, "leq_q antisymmetric", [](const Algebra& a, Elem x, Elem y) {
    return !(a.leq_q(x, y) && a.leq_q(y, x)) || x == y;
  });
  run2(a, out, "de Morgan: meet from join and join from meet",
       [](const Algebra& a, Elem x, Elem y) {
         return a.meet(x, y) == a.star(a.join(a.star(x), a.star(y))) &&
                a.join(x, y) == a.star(a.meet(a.star(x), a.star(y)));
       });
  run2(a, out, "leq_q implies leq", [](const Algebra& a, Elem x, Elem y) {
    return !a.leq_q(x, y) || a.leq(x, y);
  });
  run1(a, out, "0 leq_q x leq_q 1", [zero, one](const Algebra& a, Elem x) {
    return a.leq_q(zero, x) && a.leq_q(x, one);
  });
  run1(a, out, "meet with constants", [zero, one](const Algebra& a, Elem x) {
    return a.meet(zero, x) == zero && a.meet(x, zero) == zero &&
           a.meet(one, x) == x && a.meet(x, one) == x;
  });
  run2(a, out, "meet absorption: x meet (y meet x) and x meet (x meet y)",
       [](const Algebra& a, Elem x, Elem y) {
         return a.meet(x, a.meet(y, x)) == a.meet(y, x) &&
                a.meet(x, a.meet(x, y)) == a.meet(x, y);
       });
  run3(a, out, "(x meet y)->z = (y->x)->(y->z)",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(a.meet(x, y), z) ==
                a.arrow(a.arrow(y, x), a.arrow(y, z));
       });
  run3(a, out, "z->(x join y) = (x->y)->(z->y)",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(z, a.join(x, y)) ==
                a.arrow(a.arrow(x, y), a.arrow(z, y));
       });
  run2(a, out, "meet below both, both below join",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem m = a.meet(x, y);
         const Elem j = a.join(x, y);
         return a.leq(m, x) && a.leq(m, y) && a.leq(x, j) && a.leq(y, j);
       });

  run3(a, out, "cancellation under a common leq_q bound",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         if (!a.leq_q(x, z) || !a.leq_q(y, z)) return true;
         if (a.arrow(z, x) != a.arrow(z, y)) return true;
         return x == y;
       });
  run2(a, out, "leq_q gives (y->x) odot y = x",
       [](const Algebra& a, Elem x, Elem y) {
         if (!a.leq_q(x, y)) return true;
         return a.odot(a.arrow(y, x), y) == x;
       });
  run3(a, out, "x->(z odot y*) = ((z->y) odot x)*",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(x, a.odot(z, a.star(y))) ==
                a.star(a.odot(a.arrow(z, y), x));
       });

  // Laws of every quantum-Wajsberg algebra.
  run2(a, out, "x->(y meet x) = x->y and (x->y)->(y meet x) = x",
       [](const Algebra& a, Elem x, Elem y) {
         return a.arrow(x, a.meet(y, x)) == a.arrow(x, y) &&
                a.arrow(a.arrow(x, y), a.meet(y, x)) == x;
       });
  run2(a, out, "x leq_q x*->y and x leq_q y->x",
       [](const Algebra& a, Elem x, Elem y) {
         return a.leq_q(x, a.arrow(a.star(x), y)) &&
                a.leq_q(x, a.arrow(y, x));
       });
  run2(a, out, "x->y = 0 only at (1, 0)",
       [zero, one](const Algebra& a, Elem x, Elem y) {
         return (a.arrow(x, y) == zero) == (x == one && y == zero);
       });
  run2(a, out, "(x->y)* meet x = (x->y)*",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem s = a.star(a.arrow(x, y));
         return a.meet(s, x) == s;
       });
  run2(a, out, "meet and join are right idempotent",
       [](const Algebra& a, Elem x, Elem y) {
         return a.meet(a.meet(x, y), y) == a.meet(x, y) &&
                a.join(a.join(x, y), y) == a.join(x, y);
       });
  run2(a, out, "absorption: x join (y meet x) = x = x meet (y join x)",
       [](const Algebra& a, Elem x, Elem y) {
         return a.join(x, a.meet(y, x)) == x && a.meet(x, a.join(y, x)) == x;
       });
  run2(a, out, "x meet y leq_q y leq_q x join y",
       [](const Algebra& a, Elem x, Elem y) {
         return a.leq_q(a.meet(x, y), y) && a.leq_q(y, a.join(x, y));
       });
  run2(a, out, "(x join y)->x = (y join x)->x = y->x",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem r = a.arrow(y, x);
         return a.arrow(a.join(x, y), x) == r && a.arrow(a.join(y, x), x) == r;
       });
  run2(a, out, "(x join y)->y = (y join x)->y = x->y",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem r = a.arrow(x, y);
         return a.arrow(a.join(x, y), y) == r && a.arrow(a.join(y, x), y) == r;
       });
  run2(a, out, "leq iff meet flips: x leq y iff y meet x = x",
       [](const Algebra& a, Elem x, Elem y) {
         return a.leq(x, y) == (a.meet(y, x) == x);
       });

  // Monotonicity battery under the hypothesis x leq_q y.
  run2(a, out, "leq_q gives y = y join x",
       [](const Algebra& a, Elem x, Elem y) {
         return !a.leq_q(x, y) || a.join(y, x) == y;
       });
  run2(a, out, "star is leq_q-antitone", [](const Algebra& a, Elem x, Elem y) {
    return !a.leq_q(x, y) || a.leq_q(a.star(y), a.star(x));
  });
  run3(a, out, "arrow is leq_q-antitone left, monotone right",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         if (!a.leq_q(x, y)) return true;
         return a.leq_q(a.arrow(y, z), a.arrow(x, z)) &&
                a.leq_q(a.arrow(z, x), a.arrow(z, y));
       });
  run3(a, out, "meet and join are leq_q-monotone",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         if (!a.leq_q(x, y)) return true;
         return a.leq_q(a.meet(x, z), a.meet(y, z)) &&
                a.leq_q(a.join(x, z), a.join(y, z));
       });

  run3(a, out, "(x meet y) meet (y meet z) = (x meet y) meet z",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         const Elem m = a.meet(x, y);
         return a.meet(m, a.meet(y, z)) == a.meet(m, z);
       });
  run3(a, out, "leq_q transitive", [](const Algebra& a, Elem x, Elem y, Elem z) {
    return !(a.leq_q(x, y) && a.leq_q(y, z)) || a.leq_q(x, z);
  });
  run2(a, out, "x join y leq_q x*->y", [](const Algebra& a, Elem x, Elem y) {
    return a.leq_q(a.join(x, y), a.arrow(a.star(x), y));
  });
  run2(a, out, "(x*->y)*->(x->y*)* = x*->y",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem l = a.arrow(a.star(x), y);
         return a.arrow(a.star(l), a.star(a.arrow(x, a.star(y)))) == l;
       });
  run2(a, out, "(x->y)*->(y->x)* = x->y",
       [](const Algebra& a, Elem x, Elem y) {
         const Elem l = a.arrow(x, y);
         return a.arrow(a.star(l), a.star(a.arrow(y, x))) == l;
       });
  run2(a, out, "(y->x)->(x->y) = x->y", [](const Algebra& a, Elem x, Elem y) {
    return a.arrow(a.arrow(y, x), a.arrow(x, y)) == a.arrow(x, y);
  });
  run2(a, out, "(x->y) join (y->x) = 1", [one](const Algebra& a, Elem x, Elem y) {
    return a.join(a.arrow(x, y), a.arrow(y, x)) == one;
  });
  run3(a, out, "(z meet x)->(y meet x) = (z meet x)->y",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         const Elem m = a.meet(z, x);
         return a.arrow(m, a.meet(y, x)) == a.arrow(m, y);
       });

  run2(a, out, "swapped meets compare to 1 both ways",
       [one](const Algebra& a, Elem x, Elem y) {
         return a.arrow(a.star(a.meet(x, y)), a.star(a.meet(y, x))) == one &&
                a.arrow(a.meet(x, y), a.meet(y, x)) == one;
       });
  run2(a, out, "swapped joins compare to 1 both ways",
       [one](const Algebra& a, Elem x, Elem y) {
         return a.arrow(a.star(a.join(x, y)), a.star(a.join(y, x))) == one &&
                a.arrow(a.join(x, y), a.join(y, x)) == one;
       });
  run2(a, out, "meet vanishes symmetrically",
       [zero](const Algebra& a, Elem x, Elem y) {
         return (a.meet(x, y) == zero) == (a.meet(y, x) == zero);
       });
  run2(a, out, "join tops out symmetrically",
       [one](const Algebra& a, Elem x, Elem y) {
         return (a.join(x, y) == one) == (a.join(y, x) == one);
       });

  run3(a, out, "x->(y->z) = (x odot y)->z",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.arrow(x, a.arrow(y, z)) == a.arrow(a.odot(x, y), z);
       });
  run3(a, out, "x leq_q y->z forces x odot y leq z",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return !a.leq_q(x, a.arrow(y, z)) || a.leq(a.odot(x, y), z);
       });
  run3(a, out, "x odot y leq z forces x leq y->z",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return !a.leq(a.odot(x, y), z) || a.leq(x, a.arrow(y, z));
       });
  run2(a, out, "(x->y) odot x leq y", [](const Algebra& a, Elem x, Elem y) {
    return a.leq(a.odot(a.arrow(x, y), x), y);
  });
  run3(a, out, "the product is leq_q-monotone",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return !a.leq_q(x, y) || a.leq_q(a.odot(x, z), a.odot(y, z));
       });

  run2(a, out, "the product is commutative",
       [](const Algebra& a, Elem x, Elem y) {
         return a.odot(x, y) == a.odot(y, x);
       });
  run3(a, out, "the product is associative",
       [](const Algebra& a, Elem x, Elem y, Elem z) {
         return a.odot(a.odot(x, y), z) == a.odot(x, a.odot(y, z));
       });

  return out;
}

}  // namespace qw::testing
