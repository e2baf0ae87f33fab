#ifndef AIM8_SEXPR_HPP
#define AIM8_SEXPR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "source.hpp"
#include "value.hpp"

namespace aim8 {

/// Concrete S-expression syntax.
///   aim8:    `(A, B, ())`  commas, bare `()`, no dot; reads as ListValue
///   classic: `(A B . C)`   spaces, dot pairs, `()` reads as NIL; reads as PairValue
enum class Dialect { aim8, classic };

inline const char* to_string(Dialect d) noexcept { return d == Dialect::aim8 ? "aim8" : "classic"; }

using AnyValue = std::variant<ListValue, PairValue>;

namespace detail {

inline Symbol read_atom(Cursor& in) {
  SourcePosition at = in.position();
  std::string_view word = in.word();
  if (!is_atom_name(word)) throw ParseError(ParseErrorKind::UnexpectedChar, at, "'" + std::string(word) + "' is not an atom");
  return Symbol(std::string(word));
}

inline bool starts_datum(char c) noexcept { return c == '(' || Cursor::is_word_char(c); }

inline ListValue read_aim8(Cursor& in) {
  in.skip_blank();
  char c = in.peek();
  if (c == '.') in.fail(ParseErrorKind::DotMisuse, "dot notation is not part of the aim8 dialect");
  if (c == ')') in.fail(ParseErrorKind::UnbalancedParen, "unexpected ')'");
  if (c != '(') {
    if (in.eof() || !Cursor::is_word_char(c)) in.unexpected();
    return ListValue::atom(read_atom(in));
  }
  in.get();
  std::vector<ListValue> items;
  in.skip_blank();
  if (in.peek() == ')') {
    in.get();
    return ListValue();
  }
  for (;;) {
    items.push_back(read_aim8(in));
    in.skip_blank();
    char next = in.peek();
    if (next == ')') {
      in.get();
      break;
    }
    if (next == ',') {
      in.get();
      in.skip_blank();
      if (!starts_datum(in.peek())) {
        if (in.peek() == '.') in.fail(ParseErrorKind::DotMisuse, "dot notation is not part of the aim8 dialect");
        in.unexpected();
      }
      continue;
    }
    if (next == '.') in.fail(ParseErrorKind::DotMisuse, "dot notation is not part of the aim8 dialect");
    if (!starts_datum(next)) in.unexpected();
  }
  return ListValue::list(items);
}

inline PairValue read_classic(Cursor& in) {
  in.skip_blank();
  char c = in.peek();
  if (c == '.') in.fail(ParseErrorKind::DotMisuse, "dot without a head element");
  if (c == ')') in.fail(ParseErrorKind::UnbalancedParen, "unexpected ')'");
  if (c != '(') {
    if (in.eof() || !Cursor::is_word_char(c)) in.unexpected();
    return PairValue::atom(read_atom(in));
  }
  in.get();
  std::vector<PairValue> items;
  in.skip_blank();
  if (in.peek() == ')') {
    in.get();
    return PairValue::nil();
  }
  for (;;) {
    items.push_back(read_classic(in));
    in.skip_blank();
    char next = in.peek();
    if (next == ')') {
      in.get();
      return PairValue::list(items);
    }
    if (next == '.') {
      in.get();
      in.skip_blank();
      if (!starts_datum(in.peek())) {
        if (in.eof()) in.unexpected();
        in.fail(ParseErrorKind::DotMisuse, "dot must be followed by a single tail expression");
      }
      PairValue tail = read_classic(in);
      in.skip_blank();
      if (in.peek() != ')') {
        if (in.eof()) in.unexpected();
        in.fail(ParseErrorKind::DotMisuse, "more than one expression after dot");
      }
      in.get();
      return PairValue::list(items, tail);
    }
    if (next == ',') {
      in.get();
      in.skip_blank();
      if (in.peek() == '.') in.fail(ParseErrorKind::DotMisuse, "dot after comma");
      if (!starts_datum(in.peek())) in.unexpected();
      continue;
    }
    if (!starts_datum(next)) in.unexpected();
  }
}

template <class Read>
auto read_whole(std::string_view text, Read read) {
  Cursor in(text);
  in.skip_blank();
  if (in.eof()) in.fail(ParseErrorKind::EmptyInput, "");
  auto value = read(in);
  in.skip_blank();
  if (!in.eof()) in.fail(ParseErrorKind::TrailingInput, "after expression: " + Cursor::describe(in.peek()));
  return value;
}

}  // namespace detail

/// Reads exactly one aim8 expression; surrounding whitespace and comments are allowed.
inline ListValue read_aim8(std::string_view text) { return detail::read_whole(text, detail::read_aim8); }

/// Reads exactly one classic expression.
inline PairValue read_classic(std::string_view text) { return detail::read_whole(text, detail::read_classic); }

inline AnyValue read_sexpr(std::string_view text, Dialect d) {
  if (d == Dialect::aim8) return read_aim8(text);
  return read_classic(text);
}

/// Reads a sequence of expressions, e.g. a `.sexp` file.
class SexprStream {
 public:
  SexprStream(std::string_view text, Dialect dialect) : in_(text), dialect_(dialect) {}

  bool done() {
    in_.skip_blank();
    return in_.eof();
  }
  SourcePosition position() const noexcept { return in_.position(); }

  AnyValue next() {
    if (dialect_ == Dialect::aim8) return detail::read_aim8(in_);
    return detail::read_classic(in_);
  }

 private:
  Cursor in_;
  Dialect dialect_;
};

class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void print_aim8(const ListValue& v, std::string& out) {
  if (v.is_atom()) {
    out += v.symbol().name();
    return;
  }
  out += '(';
  bool first = true;
  for (const auto& item : v) {
    if (!first) out += ", ";
    first = false;
    print_aim8(item, out);
  }
  out += ')';
}

inline constexpr std::string_view cycle_marker = "#cycle";

// `open` holds the pair nodes on the path from the root, so shared but acyclic
// substructure prints normally and only a true back-edge becomes a marker.
inline void print_classic(const PairValue& v, std::string& out, std::unordered_set<const void*>& open) {
  if (v.is_atom()) {
    out += v.symbol().name();
    return;
  }
  if (open.count(v.identity())) {
    out += cycle_marker;
    return;
  }
  std::vector<const void*> spine;
  out += '(';
  const PairValue* at = &v;
  for (;;) {
    open.insert(at->identity());
    spine.push_back(at->identity());
    print_classic(at->head(), out, open);
    at = &at->tail();
    if (at->is_nil()) break;
    if (at->is_atom()) {
      out += " . ";
      out += at->symbol().name();
      break;
    }
    if (open.count(at->identity())) {
      out += " . ";
      out += cycle_marker;
      break;
    }
    out += ' ';
  }
  out += ')';
  for (auto* p : spine) open.erase(p);
}

}  // namespace detail

/// `(A, (B, C), ())`
inline std::string print_aim8(const ListValue& v) {
  std::string out;
  detail::print_aim8(v, out);
  return out;
}

/// Maximal list sugar, dot only before an improper tail, `NIL` on its own.
/// A back-edge into structure still being printed renders as `#cycle`.
inline std::string print_classic(const PairValue& v) {
  std::string out;
  std::unordered_set<const void*> open;
  detail::print_classic(v, out, open);
  return out;
}

inline std::string print_sexpr(const AnyValue& v, Dialect d) {
  if (d == Dialect::aim8) {
    if (auto* l = std::get_if<ListValue>(&v)) return print_aim8(*l);
    throw KindMismatch("pair-kernel value cannot be printed in the aim8 dialect");
  }
  if (auto* p = std::get_if<PairValue>(&v)) return print_classic(*p);
  throw KindMismatch("list-kernel value cannot be printed in the classic dialect");
}

}  // namespace aim8

#endif
