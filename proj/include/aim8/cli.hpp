#ifndef AIM8_CLI_HPP
#define AIM8_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evaluator.hpp"
#include "fexpr.hpp"
#include "sexpr.hpp"
#include "translate.hpp"

namespace aim8::cli {

enum class Lang { mexpr, sexpr };

enum ExitCode : int {
  ok = 0,
  translation_failure = 1,
  data_error = 65,      // parse error
  software_error = 70,  // runtime error
  io_error = 74,
};

struct Options {
  Kernel kernel = Kernel::list;
  std::optional<Lang> lang;
  std::optional<Dialect> dialect;
  std::size_t max_depth = ListEvaluator::default_max_depth;

  /// aim8 for the list kernel, classic for the pair kernel, unless overridden.
  Dialect effective_dialect() const {
    return dialect.value_or(kernel == Kernel::list ? Dialect::aim8 : Dialect::classic);
  }
};

/// `--max-depth`, else AIM8_MAX_DEPTH, else the evaluator default.
inline std::size_t resolve_max_depth(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("AIM8_MAX_DEPTH")) {
    try {
      std::size_t used = 0;
      unsigned long long n = std::stoull(env, &used);
      if (used == std::string(env).size() && n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return ListEvaluator::default_max_depth;
}

inline Lang lang_for(const std::filesystem::path& path, const Options& opts) {
  if (opts.lang) return *opts.lang;
  return path.extension() == ".sexp" ? Lang::sexpr : Lang::mexpr;
}

/// A value that cannot be read into, or printed from, the active kernel in the
/// chosen dialect; e.g. `(A . B)` under the list kernel.
class DialectError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One evaluator plus the dialect conversions around it.
template <class K>
class Session {
 public:
  using Ev = Evaluator<K>;
  using Value = typename K::Value;

  Session(Dialect dialect, std::size_t max_depth) : dialect_(dialect), ev_(max_depth) {}

  Ev& evaluator() noexcept { return ev_; }
  Dialect dialect() const noexcept { return dialect_; }

  Value from_sexpr(const AnyValue& v) const {
    if constexpr (K::tag == Kernel::list) {
      if (auto* l = std::get_if<ListValue>(&v)) return *l;
      try {
        return pair_to_list(std::get<PairValue>(v));
      } catch (const StructureError&) {
        throw DialectError("the list kernel has no pairs: " + print_classic(std::get<PairValue>(v)) +
                           " is not a proper list");
      }
    } else {
      if (auto* p = std::get_if<PairValue>(&v)) return *p;
      return list_to_pair(std::get<ListValue>(v));
    }
  }

  Value from_list(const ListValue& v) const {
    if constexpr (K::tag == Kernel::list) {
      return v;
    } else {
      return list_to_pair(v);
    }
  }

  std::string print(const Value& v) const {
    if constexpr (K::tag == Kernel::list) {
      return dialect_ == Dialect::aim8 ? print_aim8(v) : print_classic(list_to_pair(v));
    } else {
      if (dialect_ == Dialect::classic) return print_classic(v);
      try {
        return print_aim8(pair_to_list(v));
      } catch (const StructureError&) {
        throw DialectError("no aim8 rendering for " + print_classic(v));
      }
    }
  }

  std::string print(const typename Ev::Object& o) const {
    if (auto* v = std::get_if<Value>(&o)) return print(*v);
    return Ev::show(o);
  }

  /// Evaluates one top-level form and renders the result.
  std::string run(const Value& form) { return print(ev_.eval_top_level(form)); }

 private:
  Dialect dialect_;
  Ev ev_;
};

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return text.str();
}

/// Parses a whole source text into list-kernel-independent forms: F-language
/// sources are translated, S-language sources are read in `dialect`.
inline std::vector<AnyValue> parse_forms(std::string_view text, Lang lang, Dialect dialect) {
  std::vector<AnyValue> forms;
  if (lang == Lang::mexpr) {
    for (auto& f : translate_forms(read_program(text))) forms.emplace_back(std::move(f));
    return forms;
  }
  SexprStream in(text, dialect);
  while (!in.done()) forms.push_back(in.next());
  return forms;
}

template <class K>
int run_forms(const std::vector<AnyValue>& forms, const Options& opts, std::ostream& out, std::ostream& err) {
  Session<K> session(opts.effective_dialect(), opts.max_depth);
  for (const auto& form : forms) {
    try {
      typename K::Value expr = session.from_sexpr(form);
      bool definition = Evaluator<K>::as_definition(expr).has_value();
      std::string shown = session.run(expr);
      if (!definition) out << shown << '\n';
    } catch (const typename Evaluator<K>::RuntimeError& e) {
      err << "error: " << e.what() << '\n';
      return software_error;
    } catch (const DialectError& e) {
      err << "error: " << e.what() << '\n';
      return software_error;
    }
  }
  return ok;
}

/// `run <file>`: definitions are bound in order, every other form is evaluated
/// and its value printed.
inline int run_file(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path.string() << '\n';
    return io_error;
  }
  std::vector<AnyValue> forms;
  try {
    forms = parse_forms(*text, lang_for(path, opts), opts.effective_dialect());
  } catch (const ParseError& e) {
    err << path.string() << ":" << e.what() << '\n';
    return data_error;
  } catch (const TranslateError& e) {
    err << "error: " << e.what() << '\n';
    return translation_failure;
  }
  if (opts.kernel == Kernel::list) return run_forms<ListKernel>(forms, opts, out, err);
  return run_forms<PairKernel>(forms, opts, out, err);
}

/// `translate <file>`: one S-expression per definition or expression.
inline int run_translate(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path.string() << '\n';
    return io_error;
  }
  std::vector<ListValue> forms;
  try {
    forms = translate_forms(read_program(*text));
  } catch (const ParseError& e) {
    err << path.string() << ":" << e.what() << '\n';
    return data_error;
  } catch (const TranslateError& e) {
    err << "error: " << e.what() << '\n';
    return translation_failure;
  }
  Dialect d = opts.dialect.value_or(Dialect::aim8);
  for (const auto& f : forms) out << (d == Dialect::aim8 ? print_aim8(f) : print_classic(list_to_pair(f))) << '\n';
  return ok;
}

namespace detail {

inline bool blank(std::string_view text) {
  Cursor c(text);
  c.skip_blank();
  return c.eof();
}

template <class K>
int repl(std::istream& in, std::ostream& out, std::ostream& err, const Options& opts, bool interactive) {
  Session<K> session(opts.effective_dialect(), opts.max_depth);
  Lang lang = opts.lang.value_or(Lang::mexpr);
  std::string buffer;
  std::string line;
  for (;;) {
    if (interactive) out << (buffer.empty() ? "* " : "  ") << std::flush;
    if (!std::getline(in, line)) break;
    buffer += line;
    buffer += '\n';
    if (blank(buffer)) {
      buffer.clear();
      continue;
    }
    std::vector<AnyValue> forms;
    try {
      forms = parse_forms(buffer, lang, session.dialect());
    } catch (const ParseError& e) {
      if (e.incomplete()) continue;
      err << "error: " << e.what() << '\n';
      buffer.clear();
      continue;
    } catch (const TranslateError& e) {
      err << "error: " << e.what() << '\n';
      buffer.clear();
      continue;
    }
    buffer.clear();
    for (const auto& form : forms) {
      try {
        out << session.run(session.from_sexpr(form)) << '\n';
      } catch (const typename Evaluator<K>::RuntimeError& e) {
        err << "error: " << e.what() << '\n';
      } catch (const DialectError& e) {
        err << "error: " << e.what() << '\n';
      }
    }
  }
  if (in.bad()) return io_error;
  if (!blank(buffer)) err << "error: incomplete input at end of stream\n";
  if (interactive) out << '\n';
  return ok;
}

}  // namespace detail

/// Reads one form per prompt; errors are reported and the session goes on.
/// Input spanning several lines is collected until it parses.
inline int run_repl(std::istream& in, std::ostream& out, std::ostream& err, const Options& opts, bool interactive) {
  if (opts.kernel == Kernel::list) return detail::repl<ListKernel>(in, out, err, opts, interactive);
  return detail::repl<PairKernel>(in, out, err, opts, interactive);
}

}  // namespace aim8::cli

#endif
