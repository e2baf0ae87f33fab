#ifndef AIM8_SYMBOL_HPP
#define AIM8_SYMBOL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aim8 {

/// True for an uppercase letter or digit run starting with a letter, e.g. `A`,
/// `NIL`, `X2`. This is the whole atom lexicon; lowercase is reserved for
/// F-expression identifiers.
constexpr bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'A' || name.front() > 'Z') return false;
  for (char c : name) {
    bool upper = c >= 'A' && c <= 'Z';
    bool digit = c >= '0' && c <= '9';
    if (!upper && !digit) return false;
  }
  return true;
}

/// Lowercase counterpart used for F-expression variables and function names.
constexpr bool is_identifier_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    bool lower = c >= 'a' && c <= 'z';
    bool digit = c >= '0' && c <= '9';
    if (!lower && !digit) return false;
  }
  return true;
}

class Symbol {
 public:
  explicit Symbol(std::string name) : name_(std::move(name)) {
    if (!is_atom_name(name_)) throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string name_;
};

}  // namespace aim8

#endif
