#ifndef AIM8_VALUE_HPP
#define AIM8_VALUE_HPP

#include <cassert>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "symbol.hpp"

namespace aim8 {

/// A value of the list kernel: an atom, the null list `()`, or a nonempty
/// proper list. There is no way to build a pair; every list shares its tail
/// with the list it was combined from.
class ListValue {
 public:
  /// The null list.
  ListValue() = default;

  static ListValue atom(Symbol sym);
  static ListValue atom(std::string name) { return atom(Symbol(std::move(name))); }

  static ListValue list(std::span<const ListValue> items) {
    ListValue out;
    for (auto it = items.rbegin(); it != items.rend(); ++it) out = prepend(*it, std::move(out));
    return out;
  }
  static ListValue list(std::initializer_list<ListValue> items) {
    return list(std::span<const ListValue>(items.begin(), items.size()));
  }

  /// Unchecked constructor behind `combine`; `tail` must not be an atom.
  static ListValue prepend(ListValue head, ListValue tail);

  bool is_atom() const noexcept;
  bool is_null() const noexcept { return !node_; }
  bool is_list() const noexcept { return !is_atom(); }

  const Symbol& symbol() const;
  bool is_symbol(std::string_view name) const noexcept { return is_atom() && symbol().name() == name; }

  // Unchecked selectors; the list kernel owns the precondition checks.
  const ListValue& head() const;
  const ListValue& tail() const;

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const ListValue* p = this; p->node_; p = &p->tail()) ++n;
    return n;
  }

  std::vector<ListValue> items() const {
    std::vector<ListValue> out;
    for (const ListValue* p = this; p->node_; p = &p->tail()) out.push_back(p->head());
    return out;
  }

  class iterator {
   public:
    using value_type = ListValue;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(const ListValue* at) : at_(at) {}
    const ListValue& operator*() const { return at_->head(); }
    const ListValue* operator->() const { return &at_->head(); }
    iterator& operator++() {
      at_ = &at_->tail();
      if (at_->is_null()) at_ = nullptr;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    const ListValue* at_ = nullptr;
  };

  /// Iterates the elements of a list; an atom or () yields nothing.
  iterator begin() const { return (node_ && !is_atom()) ? iterator(this) : iterator(); }
  iterator end() const { return iterator(); }

  friend bool operator==(const ListValue& a, const ListValue& b);

 private:
  struct Cell;
  struct Node;

  explicit ListValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ListValue::Cell {
  ListValue head;
  ListValue tail;
};

struct ListValue::Node {
  explicit Node(Symbol s) : data(std::move(s)) {}
  explicit Node(Cell c) : data(std::move(c)) {}
  std::variant<Symbol, Cell> data;
};

inline ListValue ListValue::atom(Symbol sym) { return ListValue(std::make_shared<const Node>(std::move(sym))); }

inline ListValue ListValue::prepend(ListValue head, ListValue tail) {
  assert(!tail.is_atom());
  return ListValue(std::make_shared<const Node>(Cell{std::move(head), std::move(tail)}));
}

inline bool ListValue::is_atom() const noexcept { return node_ && std::holds_alternative<Symbol>(node_->data); }

inline const Symbol& ListValue::symbol() const {
  assert(is_atom());
  return std::get<Symbol>(node_->data);
}

inline const ListValue& ListValue::head() const {
  assert(is_list() && !is_null());
  return std::get<Cell>(node_->data).head;
}

inline const ListValue& ListValue::tail() const {
  assert(is_list() && !is_null());
  return std::get<Cell>(node_->data).tail;
}

inline bool operator==(const ListValue& a, const ListValue& b) {
  const ListValue* x = &a;
  const ListValue* y = &b;
  for (;;) {
    if (x->node_ == y->node_) return true;
    if (!x->node_ || !y->node_) return false;
    if (x->is_atom() || y->is_atom()) return x->is_atom() && y->is_atom() && x->symbol() == y->symbol();
    if (!(x->head() == y->head())) return false;
    x = &x->tail();
    y = &y->tail();
  }
}

/// Structural equality on list-kernel values.
inline bool equal_values(const ListValue& a, const ListValue& b) { return a == b; }

/// A value of the pair kernel: an atom (NIL included) or an ordered pair with
/// unconstrained head and tail.
class PairValue {
 public:
  PairValue() : PairValue(nil()) {}

  static PairValue atom(Symbol sym);
  static PairValue atom(std::string name) { return atom(Symbol(std::move(name))); }
  static PairValue nil() {
    static const PairValue value = atom("NIL");
    return value;
  }
  static PairValue pair(PairValue head, PairValue tail);
  /// `(e1 ... en . tail)`
  static PairValue list(std::span<const PairValue> items, PairValue tail = nil()) {
    for (auto it = items.rbegin(); it != items.rend(); ++it) tail = pair(*it, std::move(tail));
    return tail;
  }
  static PairValue list(std::initializer_list<PairValue> items) {
    return list(std::span<const PairValue>(items.begin(), items.size()));
  }

  bool is_atom() const noexcept;
  bool is_pair() const noexcept { return !is_atom(); }
  bool is_nil() const noexcept { return is_atom() && symbol().name() == "NIL"; }
  bool is_symbol(std::string_view name) const noexcept { return is_atom() && symbol().name() == name; }

  const Symbol& symbol() const;
  const PairValue& head() const;
  const PairValue& tail() const;

  /// Node identity, for cycle detection.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const PairValue& a, const PairValue& b);

 private:
  struct Cell;
  struct Node;

  explicit PairValue(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;

  friend struct PairHarness;
};

struct PairValue::Cell {
  PairValue head;
  PairValue tail;
};

struct PairValue::Node {
  explicit Node(Symbol s) : data(std::move(s)) {}
  explicit Node(Cell c) : data(std::move(c)) {}
  std::variant<Symbol, Cell> data;
};

inline PairValue PairValue::atom(Symbol sym) { return PairValue(std::make_shared<Node>(std::move(sym))); }

inline PairValue PairValue::pair(PairValue head, PairValue tail) {
  return PairValue(std::make_shared<Node>(Cell{std::move(head), std::move(tail)}));
}

inline bool PairValue::is_atom() const noexcept { return std::holds_alternative<Symbol>(node_->data); }

inline const Symbol& PairValue::symbol() const {
  assert(is_atom());
  return std::get<Symbol>(node_->data);
}

inline const PairValue& PairValue::head() const {
  assert(is_pair());
  return std::get<Cell>(node_->data).head;
}

inline const PairValue& PairValue::tail() const {
  assert(is_pair());
  return std::get<Cell>(node_->data).tail;
}

/// Structural equality. Both sides must be acyclic.
inline bool operator==(const PairValue& a, const PairValue& b) {
  const PairValue* x = &a;
  const PairValue* y = &b;
  for (;;) {
    if (x->node_ == y->node_) return true;
    if (x->is_atom() || y->is_atom()) return x->is_atom() && y->is_atom() && x->symbol() == y->symbol();
    if (!(x->head() == y->head())) return false;
    x = &x->tail();
    y = &y->tail();
  }
}

/// Test-harness backdoor: the only way to build circular structure. Nothing in
/// the language reaches it. A cycle built this way leaks unless broken again
/// with `set_tail`/`set_head` before the last handle goes away.
struct PairHarness {
  static void set_tail(const PairValue& cell, PairValue tail) {
    std::get<PairValue::Cell>(cell.node_->data).tail = std::move(tail);
  }
  static void set_head(const PairValue& cell, PairValue head) {
    std::get<PairValue::Cell>(cell.node_->data).head = std::move(head);
  }
};

enum class StructureErrorKind { ImproperStructure, CyclicStructure };

class StructureError : public std::runtime_error {
 public:
  StructureError(StructureErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  StructureErrorKind kind() const noexcept { return kind_; }

 private:
  StructureErrorKind kind_;
};

/// `(e1, ..., en)` becomes `(e1 . (... (en . NIL)))`; `()` becomes NIL.
inline PairValue list_to_pair(const ListValue& v) {
  if (v.is_atom()) return PairValue::atom(v.symbol());
  std::vector<PairValue> items;
  for (const auto& item : v) items.push_back(list_to_pair(item));
  return PairValue::list(items);
}

namespace detail {

inline ListValue pair_to_list(const PairValue& v, std::unordered_set<const void*>& open) {
  if (v.is_nil()) return ListValue();
  if (v.is_atom()) return ListValue::atom(v.symbol());
  std::vector<ListValue> items;
  std::vector<const void*> spine;
  const PairValue* at = &v;
  while (at->is_pair()) {
    if (!open.insert(at->identity()).second) {
      for (auto* p : spine) open.erase(p);
      throw StructureError(StructureErrorKind::CyclicStructure, "cyclic structure");
    }
    spine.push_back(at->identity());
    items.push_back(pair_to_list(at->head(), open));
    at = &at->tail();
  }
  for (auto* p : spine) open.erase(p);
  if (!at->is_nil())
    throw StructureError(StructureErrorKind::ImproperStructure, "improper list ends in " + at->symbol().name());
  return ListValue::list(items);
}

}  // namespace detail

/// Inverse of `list_to_pair`. Throws StructureError if any tail chain ends in
/// an atom other than NIL or loops back on itself.
inline ListValue pair_to_list(const PairValue& v) {
  std::unordered_set<const void*> open;
  return detail::pair_to_list(v, open);
}

}  // namespace aim8

#endif
