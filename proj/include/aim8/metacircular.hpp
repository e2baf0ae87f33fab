#ifndef AIM8_METACIRCULAR_HPP
#define AIM8_METACIRCULAR_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "evaluator.hpp"
#include "fexpr.hpp"
#include "translate.hpp"

namespace aim8 {

class AssetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Translates universal-function source text. Parse errors carry the
/// position inside the asset.
inline ListValue load_universal_source(std::string_view text) { return ListValue::list(translate_forms(read_program(text))); }

/// Reads and translates `universal.mexp`: a list of `(DEFINE, NAME, e)` forms
/// for METAEVAL, METAAPPLY, METAEVCON, METAASSOC and METAPAIRUP.
inline ListValue load_universal(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AssetError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return load_universal_source(text.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.position(), path.string() + ": " + e.detail(), e.incomplete());
  }
}

/// The universal function running on the host list-kernel evaluator.
class MetaCircular {
 public:
  explicit MetaCircular(const ListValue& definitions, std::size_t max_depth = ListEvaluator::default_max_depth)
      : host_(max_depth) {
    for (const auto& form : definitions) host_.eval_top_level(form);
  }

  /// Runs METAEVAL on the quoted program with an empty meta-environment.
  ListValue eval(const ListValue& program) {
    auto quote = [](const ListValue& v) { return ListValue::list({ListValue::atom("QUOTE"), v}); };
    return host_.eval_value(ListValue::list({ListValue::atom("METAEVAL"), quote(program), quote(ListValue())}));
  }

  ListEvaluator& host() noexcept { return host_; }

 private:
  ListEvaluator host_;
};

}  // namespace aim8

#endif
