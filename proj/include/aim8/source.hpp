#ifndef AIM8_SOURCE_HPP
#define AIM8_SOURCE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace aim8 {

struct SourcePosition {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

enum class ParseErrorKind { UnexpectedChar, UnbalancedParen, DotMisuse, EmptyInput, TrailingInput };

inline const char* message_prefix(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::UnexpectedChar: return "unexpected character";
    case ParseErrorKind::UnbalancedParen: return "unbalanced bracket";
    case ParseErrorKind::DotMisuse: return "misplaced dot";
    case ParseErrorKind::EmptyInput: return "empty input";
    case ParseErrorKind::TrailingInput: return "trailing input";
  }
  return "parse error";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourcePosition position, const std::string& detail, bool at_end = false)
      : std::runtime_error(std::to_string(position.line) + ":" + std::to_string(position.column) + ": " +
                           compose(kind, detail)),
        kind_(kind),
        position_(position),
        message_(compose(kind, detail)),
        detail_(detail),
        at_end_(at_end) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  SourcePosition position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& detail() const noexcept { return detail_; }
  /// The input stopped early; more text could complete it.
  bool incomplete() const noexcept { return at_end_; }

 private:
  static std::string compose(ParseErrorKind kind, const std::string& detail) {
    std::string out = message_prefix(kind);
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ParseErrorKind kind_;
  SourcePosition position_;
  std::string message_;
  std::string detail_;
  bool at_end_;
};

/// Character cursor shared by the S-expression and F-expression readers.
/// `#` starts a comment running to end of line.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const noexcept { return at_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return at_ + ahead < text_.size() ? text_[at_ + ahead] : '\0';
  }
  SourcePosition position() const noexcept { return pos_; }
  std::size_t offset() const noexcept { return at_; }

  char get() noexcept {
    char c = text_[at_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_blank() noexcept {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        get();
      } else {
        break;
      }
    }
  }

  /// Consumes a run of letters and digits.
  std::string_view word() noexcept {
    std::size_t start = at_;
    while (!eof() && is_word_char(peek())) get();
    return text_.substr(start, at_ - start);
  }

  static bool is_word_char(char c) noexcept {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  }

  [[noreturn]] void fail(ParseErrorKind kind, const std::string& detail) const {
    throw ParseError(kind, pos_, detail, eof() && kind == ParseErrorKind::UnbalancedParen);
  }

  [[noreturn]] void unexpected() const {
    if (eof()) fail(ParseErrorKind::UnbalancedParen, "unexpected end of input");
    fail(ParseErrorKind::UnexpectedChar, describe(peek()));
  }

  static std::string describe(char c) {
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
      const char* hex = "0123456789abcdef";
      auto u = static_cast<unsigned char>(c);
      return std::string("byte 0x") + hex[u >> 4] + hex[u & 15];
    }
    return std::string("'") + c + "'";
  }

 private:
  std::string_view text_;
  std::size_t at_ = 0;
  SourcePosition pos_;
};

}  // namespace aim8

#endif
