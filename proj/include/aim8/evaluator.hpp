#ifndef AIM8_EVALUATOR_HPP
#define AIM8_EVALUATOR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fexpr.hpp"
#include "kernel_list.hpp"
#include "kernel_pair.hpp"
#include "sexpr.hpp"
#include "stack.hpp"
#include "translate.hpp"
#include "value.hpp"

namespace aim8 {

enum class Kernel { list, pair };

inline const char* to_string(Kernel k) noexcept { return k == Kernel::list ? "list" : "pair"; }

enum class RuntimeErrorKind {
  Unbound,
  Arity,
  NotCallable,
  KernelFault,
  CondExhausted,
  DepthExceeded,
  /// A COND test produced something other than T or F.
  NonBoolean,
  /// A special form or application with the wrong shape, e.g. `(QUOTE)`.
  Malformed,
};

inline const char* to_string(RuntimeErrorKind k) noexcept {
  switch (k) {
    case RuntimeErrorKind::Unbound: return "Unbound";
    case RuntimeErrorKind::Arity: return "Arity";
    case RuntimeErrorKind::NotCallable: return "NotCallable";
    case RuntimeErrorKind::KernelFault: return "KernelFault";
    case RuntimeErrorKind::CondExhausted: return "CondExhausted";
    case RuntimeErrorKind::DepthExceeded: return "DepthExceeded";
    case RuntimeErrorKind::NonBoolean: return "NonBoolean";
    case RuntimeErrorKind::Malformed: return "Malformed";
  }
  return "?";
}

/// Evaluation failure. `trace` lists the expressions being evaluated when the
/// error surfaced, innermost first, capped at `max_trace`.
template <class Value>
class BasicRuntimeError : public std::runtime_error {
 public:
  static constexpr std::size_t max_trace = 16;

  BasicRuntimeError(RuntimeErrorKind kind, const std::string& detail) : std::runtime_error(detail), kind_(kind) {}
  explicit BasicRuntimeError(const KernelError& fault)
      : std::runtime_error(fault.what()), kind_(RuntimeErrorKind::KernelFault), fault_(fault) {}

  RuntimeErrorKind kind() const noexcept { return kind_; }
  std::string detail() const { return what(); }
  /// Set for KernelFault raised by a kernel primitive.
  const std::optional<KernelError>& kernel_error() const noexcept { return fault_; }
  const std::vector<Value>& trace() const noexcept { return trace_; }

  void push_trace(const Value& expr) {
    if (trace_.size() < max_trace) trace_.push_back(expr);
  }

 private:
  RuntimeErrorKind kind_;
  std::optional<KernelError> fault_;
  std::vector<Value> trace_;
};

/// Kernel descriptions consumed by Evaluator. Each supplies its value type,
/// how to take a form apart, the truth atoms and the primitive table.
struct ListKernel {
  using Value = ListValue;
  static constexpr Kernel tag = Kernel::list;

  static Value atom(const char* name) { return ListValue::atom(name); }
  static bool self_evaluating(const Symbol& s) { return s.name() == "T" || s.name() == "F"; }

  static std::optional<std::vector<Value>> elements(const Value& v) {
    if (v.is_atom()) return std::nullopt;
    return v.items();
  }

  struct Primitive {
    const char* name;
    std::size_t arity;
    Value (*fn)(std::span<const Value>, const std::string& op);
  };

  static Value truth(bool b) {
    static const Value t = atom("T"), f = atom("F");
    return b ? t : f;
  }

  static std::span<const Primitive> primitives() {
    using namespace list_kernel;
    static const Primitive table[] = {
        {"FIRST", 1, [](std::span<const Value> a, const std::string& op) { return first(a[0], op); }},
        {"CAR", 1, [](std::span<const Value> a, const std::string& op) { return first(a[0], op); }},
        {"REST", 1, [](std::span<const Value> a, const std::string& op) { return rest(a[0], op); }},
        {"CDR", 1, [](std::span<const Value> a, const std::string& op) { return rest(a[0], op); }},
        {"COMBINE", 2, [](std::span<const Value> a, const std::string& op) { return combine(a[0], a[1], op); }},
        {"CONS", 2, [](std::span<const Value> a, const std::string& op) { return combine(a[0], a[1], op); }},
        {"ATOM", 1, [](std::span<const Value> a, const std::string&) { return truth(list_kernel::atom(a[0])); }},
        {"EQ", 2, [](std::span<const Value> a, const std::string& op) { return truth(eq(a[0], a[1], op)); }},
        {"NULL", 1, [](std::span<const Value> a, const std::string&) { return truth(null(a[0])); }},
    };
    return table;
  }
};

struct PairKernel {
  using Value = PairValue;
  static constexpr Kernel tag = Kernel::pair;

  static Value atom(const char* name) { return PairValue::atom(name); }
  static bool self_evaluating(const Symbol& s) { return s.name() == "T" || s.name() == "F" || s.name() == "NIL"; }

  /// nullopt for anything that is not a proper list.
  static std::optional<std::vector<Value>> elements(const Value& v) {
    if (v.is_atom() && !v.is_nil()) return std::nullopt;
    if (!pair_kernel::proper(v)) return std::nullopt;
    std::vector<Value> out;
    for (const Value* at = &v; at->is_pair(); at = &at->tail()) out.push_back(at->head());
    return out;
  }

  struct Primitive {
    const char* name;
    std::size_t arity;
    Value (*fn)(std::span<const Value>, const std::string& op);
  };

  static Value truth(bool b) {
    static const Value t = atom("T"), f = atom("F");
    return b ? t : f;
  }

  static std::span<const Primitive> primitives() {
    using namespace pair_kernel;
    static const Primitive table[] = {
        {"CAR", 1, [](std::span<const Value> a, const std::string& op) { return car(a[0], op); }},
        {"FIRST", 1, [](std::span<const Value> a, const std::string& op) { return car(a[0], op); }},
        {"CDR", 1, [](std::span<const Value> a, const std::string& op) { return cdr(a[0], op); }},
        {"REST", 1, [](std::span<const Value> a, const std::string& op) { return cdr(a[0], op); }},
        {"CONS", 2, [](std::span<const Value> a, const std::string&) { return cons(a[0], a[1]); }},
        {"COMBINE", 2, [](std::span<const Value> a, const std::string&) { return cons(a[0], a[1]); }},
        {"ATOM", 1, [](std::span<const Value> a, const std::string&) { return truth(pair_kernel::atom(a[0])); }},
        {"EQ", 2, [](std::span<const Value> a, const std::string& op) { return truth(eq(a[0], a[1], op)); }},
        // Not part of the binary variant's minimal set; kept so list programs run unchanged.
        {"NULL", 1, [](std::span<const Value> a, const std::string&) { return truth(a[0].is_nil()); }},
    };
    return table;
  }
};

/// eval/apply over S-language expressions of kernel `K`.
///
/// Name resolution: innermost lexical binding, then top-level definitions,
/// then kernel primitives. An atom in value position other than T/F (and NIL
/// in the pair kernel) is looked up; an atom in function position is always
/// looked up, so a function named F is still callable.
template <class K>
class Evaluator {
 public:
  using Value = typename K::Value;
  using RuntimeError = BasicRuntimeError<Value>;
  using Primitive = typename K::Primitive;

  struct Closure;
  using ClosurePtr = std::shared_ptr<const Closure>;
  /// What an expression evaluates to: data, or a function.
  using Object = std::variant<Value, ClosurePtr, const Primitive*>;

  using Globals = std::map<std::string, Object, std::less<>>;

  /// Association-list environment. Extending never touches the parent.
  /// The global table is borrowed from the owning Evaluator.
  class Env {
   public:
    struct Frame {
      Symbol name;
      Object value;
      std::shared_ptr<const Frame> next;
    };

    Env() = default;
    Env(std::shared_ptr<const Frame> frames, const Globals* globals) : frames_(std::move(frames)), globals_(globals) {}

    Env extend(Symbol name, Object value) const {
      return Env(std::make_shared<const Frame>(Frame{std::move(name), std::move(value), frames_}), globals_);
    }

    /// Innermost binding first; then the global table.
    const Object* lookup(std::string_view name) const {
      for (const Frame* f = frames_.get(); f; f = f->next.get())
        if (f->name.name() == name) return &f->value;
      if (globals_) {
        auto it = globals_->find(name);
        if (it != globals_->end()) return &it->second;
      }
      return nullptr;
    }

    const std::shared_ptr<const Frame>& frames() const noexcept { return frames_; }
    const Globals* globals() const noexcept { return globals_; }

   private:
    std::shared_ptr<const Frame> frames_;
    const Globals* globals_ = nullptr;
  };

  struct Closure {
    std::vector<Symbol> params;
    Value body;
    std::shared_ptr<const typename Env::Frame> env;
    std::optional<Symbol> self;
  };

  static constexpr std::size_t default_max_depth = 10000;

  explicit Evaluator(std::size_t max_depth = default_max_depth) : max_depth_(max_depth) {}

  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  std::size_t max_depth() const noexcept { return max_depth_; }
  void set_max_depth(std::size_t n) noexcept { max_depth_ = n; }

  /// Empty lexical environment over this evaluator's definitions.
  Env global_env() const { return Env(nullptr, &globals_); }

  void define(const Symbol& name, Object value) { globals_[name.name()] = std::move(value); }
  const Globals& globals() const noexcept { return globals_; }

  Object eval(const Value& expr) { return eval(expr, global_env()); }

  /// The outermost call runs on a private stack sized for `max_depth` levels.
  Object eval(const Value& expr, const Env& env) {
    if (depth_ == 0) return call_with_stack(stack_bytes(), [&] { return eval_nested(expr, env); });
    return eval_nested(expr, env);
  }

  /// Evaluates and requires data, not a function.
  Value eval_value(const Value& expr, const Env& env) {
    Object o = eval(expr, env);
    if (auto* v = std::get_if<Value>(&o)) return *v;
    throw RuntimeError(RuntimeErrorKind::Malformed, "expected a value, got a function");
  }
  Value eval_value(const Value& expr) { return eval_value(expr, global_env()); }

  Object apply(const Object& fn, std::span<const Object> args) {
    if (depth_ == 0) return call_with_stack(stack_bytes(), [&] { return apply_nested(fn, args); });
    return apply_nested(fn, args);
  }

  /// Evaluates a `(DEFINE, NAME, e)` form by binding NAME globally; anything
  /// else is evaluated. Returns the defined name's atom for definitions.
  Object eval_top_level(const Value& form) {
    if (auto def = as_definition(form)) {
      define(def->first, eval(def->second));
      return Value(K::atom(def->first.name().c_str()));
    }
    return eval(form);
  }

  static std::optional<std::pair<Symbol, Value>> as_definition(const Value& form) {
    auto items = K::elements(form);
    if (!items || items->size() != 3 || !(*items)[0].is_symbol("DEFINE") || !(*items)[1].is_atom()) return std::nullopt;
    return std::pair{(*items)[1].symbol(), (*items)[2]};
  }

  static std::string show(const Value& v) {
    if constexpr (K::tag == Kernel::list) {
      return print_aim8(v);
    } else {
      return print_classic(v);
    }
  }

  static std::string show(const Object& o) {
    if (auto* v = std::get_if<Value>(&o)) return show(*v);
    if (auto* c = std::get_if<ClosurePtr>(&o)) {
      return (*c)->self ? "#<function " + (*c)->self->name() + ">" : std::string("#<function>");
    }
    return std::string("#<primitive ") + std::get<const Primitive*>(o)->name + ">";
  }

  static const Primitive* primitive(std::string_view name) {
    for (const auto& p : K::primitives())
      if (name == p.name) return &p;
    return nullptr;
  }

 private:
  // Measured at roughly 1 KiB per level; the rest is headroom.
  std::size_t stack_bytes() const noexcept { return (max_depth_ * 4 + 8192) * 1024; }

  Object apply_nested(const Object& fn, std::span<const Object> args) {
    if (auto* prim = std::get_if<const Primitive*>(&fn)) return apply_primitive(**prim, args);
    if (auto* clo = std::get_if<ClosurePtr>(&fn)) return apply_closure(*clo, args);
    throw RuntimeError(RuntimeErrorKind::NotCallable, "not a function: " + show(std::get<Value>(fn)));
  }

  Object eval_nested(const Value& expr, const Env& env) {
    DepthGuard guard(*this);
    try {
      return eval_form(expr, env);
    } catch (RuntimeError& e) {
      e.push_trace(expr);
      throw;
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Evaluator& ev) : ev_(ev) {
      if (ev_.depth_ >= ev_.max_depth_)
        throw RuntimeError(RuntimeErrorKind::DepthExceeded,
                           "recursion depth limit " + std::to_string(ev_.max_depth_) + " exceeded");
      ++ev_.depth_;
    }
    ~DepthGuard() { --ev_.depth_; }
    Evaluator& ev_;
  };

  Object lookup(const Symbol& name, const Env& env) const {
    if (const Object* o = env.lookup(name.name())) return *o;
    if (const Primitive* p = primitive(name.name())) return p;
    throw RuntimeError(RuntimeErrorKind::Unbound, "unbound name " + name.name());
  }

  Object eval_form(const Value& expr, const Env& env) {
    if (expr.is_atom()) {
      if (K::self_evaluating(expr.symbol())) return expr;
      return lookup(expr.symbol(), env);
    }
    auto items = K::elements(expr);
    if (!items) throw RuntimeError(RuntimeErrorKind::Malformed, "improper form " + show(expr));
    if (items->empty()) throw RuntimeError(RuntimeErrorKind::Malformed, "cannot evaluate the empty list");
    const Value& head = (*items)[0];

    if (head.is_atom()) {
      const std::string& op = head.symbol().name();
      if (op == "QUOTE") {
        require_shape(items->size() == 2, expr);
        return (*items)[1];
      }
      if (op == "COND") return eval_cond(*items, expr, env);
      if (op == "LAMBDA") return make_closure(*items, expr, env);
      if (op == "LABEL") {
        require_shape(items->size() == 3 && (*items)[1].is_atom(), expr);
        Object body = eval_nested((*items)[2], env);
        auto* clo = std::get_if<ClosurePtr>(&body);
        if (!clo) throw RuntimeError(RuntimeErrorKind::Malformed, "LABEL body is not a LAMBDA: " + show(expr));
        auto named = std::make_shared<Closure>(**clo);
        named->self = (*items)[1].symbol();
        return ClosurePtr(std::move(named));
      }
    }

    Object fn = head.is_atom() ? lookup(head.symbol(), env) : eval_nested(head, env);
    std::vector<Object> args;
    args.reserve(items->size() - 1);
    for (std::size_t i = 1; i < items->size(); ++i) args.push_back(eval_nested((*items)[i], env));
    return apply_nested(fn, args);
  }

  Object eval_cond(const std::vector<Value>& items, const Value& expr, const Env& env) {
    static const Value t = K::truth(true);
    static const Value f = K::truth(false);
    for (std::size_t i = 1; i < items.size(); ++i) {
      auto clause = K::elements(items[i]);
      require_shape(clause && clause->size() == 2, expr);
      Object test = eval_nested((*clause)[0], env);
      auto* tv = std::get_if<Value>(&test);
      if (tv && *tv == t) return eval_nested((*clause)[1], env);
      if (tv && *tv == f) continue;
      throw RuntimeError(RuntimeErrorKind::NonBoolean,
                         "COND test " + show((*clause)[0]) + " gave " + show(test) + ", not T or F");
    }
    throw RuntimeError(RuntimeErrorKind::CondExhausted, "no COND test was true in " + show(expr));
  }

  Object make_closure(const std::vector<Value>& items, const Value& expr, const Env& env) {
    require_shape(items.size() == 3, expr);
    auto params = K::elements(items[1]);
    require_shape(params.has_value(), expr);
    std::vector<Symbol> names;
    for (const auto& p : *params) {
      require_shape(p.is_atom(), expr);
      for (const auto& seen : names)
        if (seen == p.symbol()) throw RuntimeError(RuntimeErrorKind::Malformed, "repeated parameter in " + show(expr));
      names.push_back(p.symbol());
    }
    return ClosurePtr(std::make_shared<const Closure>(Closure{std::move(names), items[2], env.frames(), std::nullopt}));
  }

  Object apply_primitive(const Primitive& prim, std::span<const Object> args) {
    if (args.size() != prim.arity)
      throw RuntimeError(RuntimeErrorKind::Arity, std::string(prim.name) + " takes " + std::to_string(prim.arity) +
                                                      " argument(s), got " + std::to_string(args.size()));
    std::vector<Value> values;
    values.reserve(args.size());
    for (const auto& a : args) {
      auto* v = std::get_if<Value>(&a);
      if (!v) throw RuntimeError(RuntimeErrorKind::Malformed, std::string(prim.name) + " applied to a function");
      values.push_back(*v);
    }
    std::string op(prim.name);
    for (auto& c : op) c = static_cast<char>(c - 'A' + 'a');
    try {
      return prim.fn(values, op);
    } catch (const KernelError& e) {
      throw RuntimeError(e);
    }
  }

  Object apply_closure(const ClosurePtr& clo, std::span<const Object> args) {
    if (args.size() != clo->params.size())
      throw RuntimeError(RuntimeErrorKind::Arity, "function" + (clo->self ? " " + clo->self->name() : std::string()) +
                                                      " takes " + std::to_string(clo->params.size()) +
                                                      " argument(s), got " + std::to_string(args.size()));
    Env env(clo->env, &globals_);
    if (clo->self) env = env.extend(*clo->self, clo);
    for (std::size_t i = 0; i < args.size(); ++i) env = env.extend(clo->params[i], args[i]);
    return eval_nested(clo->body, env);
  }

  static void require_shape(bool ok, const Value& expr) {
    if (!ok) throw RuntimeError(RuntimeErrorKind::Malformed, "malformed form " + show(expr));
  }

  Globals globals_;
  std::size_t max_depth_;
  std::size_t depth_ = 0;
};

using ListEvaluator = Evaluator<ListKernel>;
using PairEvaluator = Evaluator<PairKernel>;

/// The F-language entry point: translate, then evaluate.
inline ListEvaluator::Object eval_fexpr(const FExpr& e, ListEvaluator& ev, const ListEvaluator::Env& env) {
  return ev.eval(translate(e), env);
}
inline PairEvaluator::Object eval_fexpr(const FExpr& e, PairEvaluator& ev, const PairEvaluator::Env& env) {
  return ev.eval(list_to_pair(translate(e)), env);
}

}  // namespace aim8

#endif
