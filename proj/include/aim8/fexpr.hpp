#ifndef AIM8_FEXPR_HPP
#define AIM8_FEXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sexpr.hpp"
#include "source.hpp"
#include "value.hpp"

namespace aim8 {

class FExpr;

namespace fexpr {

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};
struct Const {
  ListValue value;
  friend bool operator==(const Const&, const Const&) = default;
};
struct App;
struct Cond;
struct Lambda;
struct Label;

}  // namespace fexpr

/// Abstract syntax of the bracket/semicolon program notation. Immutable and
/// cheap to copy.
class FExpr {
 public:
  struct Node;

  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, FExpr>)
  FExpr(T node);  // NOLINT: implicit from any alternative

  const Node& node() const noexcept { return *node_; }

  template <class T>
  const T* get_if() const noexcept;

  friend bool operator==(const FExpr& a, const FExpr& b);

 private:
  std::shared_ptr<const Node> node_;
};

namespace fexpr {

struct App {
  FExpr fn;
  std::vector<FExpr> args;
  friend bool operator==(const App&, const App&) = default;
};
struct Clause {
  FExpr test;
  FExpr result;
  friend bool operator==(const Clause&, const Clause&) = default;
};
struct Cond {
  std::vector<Clause> clauses;
  friend bool operator==(const Cond&, const Cond&) = default;
};
struct Lambda {
  std::vector<std::string> params;
  FExpr body;
  friend bool operator==(const Lambda&, const Lambda&) = default;
};
struct Label {
  std::string name;
  FExpr body;
  friend bool operator==(const Label&, const Label&) = default;
};

}  // namespace fexpr

struct FExpr::Node : std::variant<fexpr::Var, fexpr::Const, fexpr::App, fexpr::Cond, fexpr::Lambda, fexpr::Label> {
  using variant::variant;
};

template <class T>
  requires(!std::is_same_v<std::decay_t<T>, FExpr>)
FExpr::FExpr(T node) : node_(std::make_shared<const Node>(std::move(node))) {}

template <class T>
const T* FExpr::get_if() const noexcept {
  return std::get_if<T>(static_cast<const Node::variant*>(node_.get()));
}

inline bool operator==(const FExpr& a, const FExpr& b) {
  using V = FExpr::Node::variant;
  return a.node_ == b.node_ || static_cast<const V&>(*a.node_) == static_cast<const V&>(*b.node_);
}

// Builders, mostly for tests.
inline FExpr var(std::string name) { return fexpr::Var{std::move(name)}; }
inline FExpr constant(ListValue v) { return fexpr::Const{std::move(v)}; }
inline FExpr app(FExpr fn, std::vector<FExpr> args) { return fexpr::App{std::move(fn), std::move(args)}; }
inline FExpr cond(std::vector<fexpr::Clause> clauses) { return fexpr::Cond{std::move(clauses)}; }
inline FExpr lambda(std::vector<std::string> params, FExpr body) {
  return fexpr::Lambda{std::move(params), std::move(body)};
}
inline FExpr label(std::string name, FExpr body) { return fexpr::Label{std::move(name), std::move(body)}; }

/// One top-level item of a `.mexp` file: `name[x; y] = body`, `name = expr`, or
/// a bare expression.
struct TopLevel {
  std::optional<std::string> name;
  FExpr expr;
  SourcePosition position;
};

namespace detail {

class FParser {
 public:
  explicit FParser(std::string_view text) : in_(text) {}

  Cursor& cursor() noexcept { return in_; }

  FExpr expression() {
    FExpr e = primary();
    for (;;) {
      in_.skip_blank();
      if (in_.peek() != '[') return e;
      in_.get();
      e = fexpr::App{std::move(e), sequence(']')};
    }
  }

  TopLevel top_level() {
    in_.skip_blank();
    SourcePosition at = in_.position();
    FExpr e = expression();
    in_.skip_blank();
    if (in_.peek() != '=') return {std::nullopt, std::move(e), at};
    in_.get();
    if (auto* v = e.get_if<fexpr::Var>()) return {v->name, expression(), at};
    if (auto* a = e.get_if<fexpr::App>()) {
      auto* fn = a->fn.get_if<fexpr::Var>();
      std::vector<std::string> params;
      for (const auto& arg : a->args) {
        auto* p = arg.get_if<fexpr::Var>();
        if (!p) break;
        params.push_back(p->name);
      }
      if (fn && params.size() == a->args.size()) {
        check_distinct(params, at);
        return {fn->name, lambda(std::move(params), expression()), at};
      }
    }
    throw ParseError(ParseErrorKind::UnexpectedChar, at, "left side of '=' must be name or name[params]");
  }

 private:
  FExpr primary() {
    in_.skip_blank();
    char c = in_.peek();
    if (c == '[') {
      in_.get();
      return conditional();
    }
    if (c == '(' || (c >= 'A' && c <= 'Z')) return fexpr::Const{read_aim8(in_)};
    if (c >= 'a' && c <= 'z') {
      SourcePosition at = in_.position();
      std::string name = identifier();
      if (name == "lambda") return lambda_form(at);
      if (name == "label") return label_form(at);
      return fexpr::Var{std::move(name)};
    }
    if (c == ')') in_.fail(ParseErrorKind::UnbalancedParen, "unexpected ')'");
    if (c == ']') in_.fail(ParseErrorKind::UnbalancedParen, "unexpected ']'");
    in_.unexpected();
  }

  std::string identifier() {
    SourcePosition at = in_.position();
    std::string word(in_.word());
    if (!is_identifier_name(word))
      throw ParseError(ParseErrorKind::UnexpectedChar, at, "mixed-case identifier '" + word + "'");
    return word;
  }

  std::string plain_identifier() {
    in_.skip_blank();
    SourcePosition at = in_.position();
    char c = in_.peek();
    if (!(c >= 'a' && c <= 'z')) in_.unexpected();
    std::string name = identifier();
    if (name == "lambda" || name == "label")
      throw ParseError(ParseErrorKind::UnexpectedChar, at, "reserved word '" + name + "' used as a name");
    return name;
  }

  void expect(char c) {
    in_.skip_blank();
    if (in_.peek() == c) {
      in_.get();
      return;
    }
    if (in_.eof()) in_.fail(ParseErrorKind::UnbalancedParen, std::string("expected '") + c + "'");
    in_.fail(ParseErrorKind::UnexpectedChar, std::string("expected '") + c + "', found " + Cursor::describe(in_.peek()));
  }

  // Arguments after an opening '[' up to `close`.
  std::vector<FExpr> sequence(char close) {
    std::vector<FExpr> out;
    in_.skip_blank();
    if (in_.peek() == close) {
      in_.get();
      return out;
    }
    for (;;) {
      out.push_back(expression());
      in_.skip_blank();
      if (in_.peek() == ';') {
        in_.get();
        continue;
      }
      expect(close);
      return out;
    }
  }

  FExpr conditional() {
    std::vector<fexpr::Clause> clauses;
    for (;;) {
      FExpr test = expression();
      in_.skip_blank();
      if (in_.peek() == '-' && in_.peek(1) == '>') {
        in_.get();
        in_.get();
      } else {
        if (in_.eof()) in_.fail(ParseErrorKind::UnbalancedParen, "expected '->'");
        in_.fail(ParseErrorKind::UnexpectedChar, "expected '->', found " + Cursor::describe(in_.peek()));
      }
      FExpr result = expression();
      clauses.push_back({std::move(test), std::move(result)});
      in_.skip_blank();
      if (in_.peek() == ';') {
        in_.get();
        continue;
      }
      expect(']');
      return cond(std::move(clauses));
    }
  }

  FExpr lambda_form(SourcePosition at) {
    in_.skip_blank();
    if (in_.peek() != '[')
      throw ParseError(ParseErrorKind::UnexpectedChar, at, "reserved word 'lambda' must be followed by '[['");
    in_.get();
    expect('[');
    std::vector<std::string> params;
    in_.skip_blank();
    if (in_.peek() == ']') {
      in_.get();
    } else {
      for (;;) {
        params.push_back(plain_identifier());
        in_.skip_blank();
        if (in_.peek() == ';') {
          in_.get();
          continue;
        }
        expect(']');
        break;
      }
    }
    check_distinct(params, at);
    expect(';');
    FExpr body = expression();
    expect(']');
    return lambda(std::move(params), std::move(body));
  }

  FExpr label_form(SourcePosition at) {
    in_.skip_blank();
    if (in_.peek() != '[')
      throw ParseError(ParseErrorKind::UnexpectedChar, at, "reserved word 'label' must be followed by '['");
    in_.get();
    std::string name = plain_identifier();
    expect(';');
    FExpr body = expression();
    expect(']');
    return label(std::move(name), std::move(body));
  }

  static void check_distinct(const std::vector<std::string>& params, SourcePosition at) {
    for (std::size_t i = 0; i < params.size(); ++i)
      for (std::size_t j = i + 1; j < params.size(); ++j)
        if (params[i] == params[j])
          throw ParseError(ParseErrorKind::UnexpectedChar, at, "parameter '" + params[i] + "' repeated");
  }

  Cursor in_;
};

inline void print_f(const FExpr& e, std::string& out);

inline void print_f(const std::vector<FExpr>& args, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += "; ";
    print_f(args[i], out);
  }
  out += ']';
}

inline void print_f(const FExpr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, fexpr::Var>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, fexpr::Const>) {
          out += print_aim8(n.value);
        } else if constexpr (std::is_same_v<T, fexpr::App>) {
          print_f(n.fn, out);
          print_f(n.args, out);
        } else if constexpr (std::is_same_v<T, fexpr::Cond>) {
          out += '[';
          for (std::size_t i = 0; i < n.clauses.size(); ++i) {
            if (i) out += "; ";
            print_f(n.clauses[i].test, out);
            out += " -> ";
            print_f(n.clauses[i].result, out);
          }
          out += ']';
        } else if constexpr (std::is_same_v<T, fexpr::Lambda>) {
          out += "lambda[[";
          for (std::size_t i = 0; i < n.params.size(); ++i) {
            if (i) out += "; ";
            out += n.params[i];
          }
          out += "]; ";
          print_f(n.body, out);
          out += ']';
        } else {
          out += "label[";
          out += n.name;
          out += "; ";
          print_f(n.body, out);
          out += ']';
        }
      },
      static_cast<const FExpr::Node::variant&>(e.node()));
}

}  // namespace detail

/// Parses one F-expression, e.g. `label[f; lambda[[x]; [null[x] -> T; T -> f[rest[x]]]]]`.
inline FExpr read_fexpr(std::string_view text) {
  detail::FParser p(text);
  Cursor& in = p.cursor();
  in.skip_blank();
  if (in.eof()) in.fail(ParseErrorKind::EmptyInput, "");
  FExpr e = p.expression();
  in.skip_blank();
  if (!in.eof()) in.fail(ParseErrorKind::TrailingInput, "after expression: " + Cursor::describe(in.peek()));
  return e;
}

/// Parses a `.mexp` program: definitions and expressions in order, optionally
/// separated by `;`. A form starting with `[` right after a bare variable needs
/// the `;`, otherwise it reads as an application.
inline std::vector<TopLevel> read_program(std::string_view text) {
  detail::FParser p(text);
  Cursor& in = p.cursor();
  std::vector<TopLevel> out;
  for (;;) {
    in.skip_blank();
    if (in.eof()) return out;
    out.push_back(p.top_level());
    in.skip_blank();
    if (in.peek() == ';') in.get();
  }
}

inline std::string print_fexpr(const FExpr& e) {
  std::string out;
  detail::print_f(e, out);
  return out;
}

inline std::string print_top_level(const TopLevel& t) {
  if (!t.name) return print_fexpr(t.expr);
  if (auto* l = t.expr.get_if<fexpr::Lambda>()) {
    std::string out = *t.name;
    out += '[';
    for (std::size_t i = 0; i < l->params.size(); ++i) {
      if (i) out += "; ";
      out += l->params[i];
    }
    out += "] = ";
    detail::print_f(l->body, out);
    return out;
  }
  return *t.name + " = " + print_fexpr(t.expr);
}

}  // namespace aim8

#endif
