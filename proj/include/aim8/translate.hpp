#ifndef AIM8_TRANSLATE_HPP
#define AIM8_TRANSLATE_HPP

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fexpr.hpp"
#include "value.hpp"

namespace aim8 {

enum class TranslateErrorKind { NameCollision, DuplicateDefinition };

class TranslateError : public std::runtime_error {
 public:
  TranslateError(TranslateErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  TranslateErrorKind kind() const noexcept { return kind_; }

 private:
  TranslateErrorKind kind_;
};

/// Head atoms of the S-language special forms, plus the top-level DEFINE
/// wrapper used in `.sexp` program files.
inline constexpr std::array<std::string_view, 5> reserved_heads{"QUOTE", "COND", "LAMBDA", "LABEL", "DEFINE"};

namespace detail {

inline std::string upcase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) { return (c >= 'a' && c <= 'z') ? c - 32 : c; });
  return out;
}

inline ListValue name_atom(const std::string& name) {
  std::string up = upcase(name);
  if (std::find(reserved_heads.begin(), reserved_heads.end(), up) != reserved_heads.end())
    throw TranslateError(TranslateErrorKind::NameCollision, "name '" + name + "' collides with special form " + up);
  return ListValue::atom(std::move(up));
}

inline ListValue head(std::string_view name) { return ListValue::atom(std::string(name)); }

}  // namespace detail

/// Notation-only mapping to the S-language:
///   x                  -> X
///   (A, B)             -> (QUOTE, (A, B))
///   f[a; b]            -> (F, a*, b*)
///   [p -> e; ...]      -> (COND, (p*, e*), ...)
///   lambda[[x; y]; e]  -> (LAMBDA, (X, Y), e*)
///   label[f; e]        -> (LABEL, F, e*)
/// The result is always a proper list.
inline ListValue translate(const FExpr& e) {
  return std::visit(
      [](const auto& n) -> ListValue {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, fexpr::Var>) {
          return detail::name_atom(n.name);
        } else if constexpr (std::is_same_v<T, fexpr::Const>) {
          return ListValue::list({detail::head("QUOTE"), n.value});
        } else if constexpr (std::is_same_v<T, fexpr::App>) {
          std::vector<ListValue> items{translate(n.fn)};
          for (const auto& arg : n.args) items.push_back(translate(arg));
          return ListValue::list(items);
        } else if constexpr (std::is_same_v<T, fexpr::Cond>) {
          std::vector<ListValue> items{detail::head("COND")};
          for (const auto& c : n.clauses) items.push_back(ListValue::list({translate(c.test), translate(c.result)}));
          return ListValue::list(items);
        } else if constexpr (std::is_same_v<T, fexpr::Lambda>) {
          std::vector<ListValue> params;
          for (const auto& p : n.params) params.push_back(detail::name_atom(p));
          return ListValue::list({detail::head("LAMBDA"), ListValue::list(params), translate(n.body)});
        } else {
          return ListValue::list({detail::head("LABEL"), detail::name_atom(n.name), translate(n.body)});
        }
      },
      static_cast<const FExpr::Node::variant&>(e.node()));
}

using Definition = std::pair<std::string, FExpr>;
using TranslatedDefinition = std::pair<Symbol, ListValue>;

inline std::vector<TranslatedDefinition> translate_program(const std::vector<Definition>& defs) {
  std::vector<TranslatedDefinition> out;
  std::set<std::string> seen;
  for (const auto& [name, body] : defs) {
    if (!seen.insert(name).second)
      throw TranslateError(TranslateErrorKind::DuplicateDefinition, "'" + name + "' defined twice");
    out.emplace_back(detail::name_atom(name).symbol(), translate(body));
  }
  return out;
}

/// Translates a parsed `.mexp` file. Definitions become `(DEFINE, NAME, e*)`,
/// bare expressions translate as themselves.
inline std::vector<ListValue> translate_forms(const std::vector<TopLevel>& forms) {
  std::vector<ListValue> out;
  std::set<std::string> seen;
  for (const auto& f : forms) {
    if (!f.name) {
      out.push_back(translate(f.expr));
      continue;
    }
    if (!seen.insert(*f.name).second)
      throw TranslateError(TranslateErrorKind::DuplicateDefinition, "'" + *f.name + "' defined twice");
    out.push_back(ListValue::list({detail::head("DEFINE"), detail::name_atom(*f.name), translate(f.expr)}));
  }
  return out;
}

}  // namespace aim8

#endif
