#ifndef AIM8_KERNEL_LIST_HPP
#define AIM8_KERNEL_LIST_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "value.hpp"

namespace aim8 {

enum class KernelErrorKind { UndefinedOnNull, UndefinedOnAtom, AtomicSecondArg, NotASymbol };

/// Raised when a kernel primitive is applied outside its domain. The offending
/// argument is kept in whichever kernel's value type it came from.
class KernelError : public std::runtime_error {
 public:
  using Offending = std::variant<ListValue, PairValue>;

  KernelError(KernelErrorKind kind, std::string operation, Offending offending)
      : std::runtime_error(describe(kind, operation)),
        kind_(kind),
        operation_(std::move(operation)),
        offending_(std::move(offending)) {}

  KernelErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }
  const Offending& offending() const noexcept { return offending_; }

  static std::string describe(KernelErrorKind kind, const std::string& op) {
    switch (kind) {
      case KernelErrorKind::UndefinedOnNull: return op + ": undefined on the null list";
      case KernelErrorKind::UndefinedOnAtom: return op + ": undefined on an atom";
      case KernelErrorKind::AtomicSecondArg: return op + ": second argument is atomic";
      case KernelErrorKind::NotASymbol: return op + ": argument is not a symbol";
    }
    return op;
  }

 private:
  KernelErrorKind kind_;
  std::string operation_;
  Offending offending_;
};

/// The proper-lists-only primitives. `combine` refuses an atomic second
/// argument, so no pair and no improper list can ever be constructed.
namespace list_kernel {

inline const ListValue& first(const ListValue& x, const std::string& op = "first") {
  if (x.is_atom()) throw KernelError(KernelErrorKind::UndefinedOnAtom, op, x);
  if (x.is_null()) throw KernelError(KernelErrorKind::UndefinedOnNull, op, x);
  return x.head();
}

inline const ListValue& rest(const ListValue& x, const std::string& op = "rest") {
  if (x.is_atom()) throw KernelError(KernelErrorKind::UndefinedOnAtom, op, x);
  if (x.is_null()) throw KernelError(KernelErrorKind::UndefinedOnNull, op, x);
  return x.tail();
}

inline ListValue combine(const ListValue& e, const ListValue& l, const std::string& op = "combine") {
  if (l.is_atom()) throw KernelError(KernelErrorKind::AtomicSecondArg, op, l);
  return ListValue::prepend(e, l);
}

/// () is not an atom here.
inline bool atom(const ListValue& x) noexcept { return x.is_atom(); }

inline bool eq(const ListValue& x, const ListValue& y, const std::string& op = "eq") {
  if (!x.is_atom()) throw KernelError(KernelErrorKind::NotASymbol, op, x);
  if (!y.is_atom()) throw KernelError(KernelErrorKind::NotASymbol, op, y);
  return x.symbol() == y.symbol();
}

inline bool null(const ListValue& x) noexcept { return x.is_null(); }

}  // namespace list_kernel
}  // namespace aim8

#endif
