#ifndef AIM8_KERNEL_PAIR_HPP
#define AIM8_KERNEL_PAIR_HPP

#include "kernel_list.hpp"
#include "value.hpp"

namespace aim8::pair_kernel {

/// Unconstrained: any two values make a pair.
inline PairValue cons(const PairValue& a, const PairValue& b) { return PairValue::pair(a, b); }

inline const PairValue& car(const PairValue& x, const std::string& op = "car") {
  if (x.is_atom()) throw KernelError(KernelErrorKind::UndefinedOnAtom, op, x);
  return x.head();
}

inline const PairValue& cdr(const PairValue& x, const std::string& op = "cdr") {
  if (x.is_atom()) throw KernelError(KernelErrorKind::UndefinedOnAtom, op, x);
  return x.tail();
}

/// NIL is an atom here.
inline bool atom(const PairValue& x) noexcept { return x.is_atom(); }

inline bool eq(const PairValue& x, const PairValue& y, const std::string& op = "eq") {
  if (!x.is_atom()) throw KernelError(KernelErrorKind::NotASymbol, op, x);
  if (!y.is_atom()) throw KernelError(KernelErrorKind::NotASymbol, op, y);
  return x.symbol() == y.symbol();
}

/// True iff following tails from `x` reaches NIL. Improper chains, non-NIL
/// atoms and cycles give false. Two-finger walk: the slow finger advances
/// every other step, so a cycle is caught within two laps and no allocation
/// is needed.
inline bool proper(const PairValue& x) noexcept {
  const PairValue* fast = &x;
  const PairValue* slow = &x;
  for (;;) {
    if (fast->is_atom()) return fast->is_nil();
    fast = &fast->tail();
    if (fast->is_atom()) return fast->is_nil();
    fast = &fast->tail();
    slow = &slow->tail();
    if (fast->identity() == slow->identity()) return false;
  }
}

}  // namespace aim8::pair_kernel

#endif
