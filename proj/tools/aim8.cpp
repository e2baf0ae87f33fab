#include <unistd.h>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aim8/cli.hpp"

int main(int argc, char** argv) {
  using namespace aim8;
  using namespace aim8::cli;

  CLI::App app{"aim8: list-kernel and pair-kernel Lisp with F-expression front end"};
  app.require_subcommand(0, 1);

  Options opts;
  std::optional<std::size_t> max_depth;
  const std::map<std::string, Kernel> kernels{{"list", Kernel::list}, {"pair", Kernel::pair}};
  const std::map<std::string, Lang> langs{{"mexpr", Lang::mexpr}, {"sexpr", Lang::sexpr}};
  const std::map<std::string, Dialect> dialects{{"aim8", Dialect::aim8}, {"classic", Dialect::classic}};

  app.add_option("--kernel", opts.kernel, "kernel (default list)")
      ->transform(CLI::CheckedTransformer(kernels, CLI::ignore_case).description(""))
      ->option_text("list|pair");
  app.add_option("--lang", opts.lang, "source language (default: by extension, mexpr in the REPL)")
      ->transform(CLI::CheckedTransformer(langs, CLI::ignore_case).description(""))
      ->option_text("mexpr|sexpr");
  app.add_option("--dialect", opts.dialect, "concrete syntax (default aim8 for the list kernel, classic for the pair kernel)")
      ->transform(CLI::CheckedTransformer(dialects, CLI::ignore_case).description(""))
      ->option_text("aim8|classic");
  app.add_option("--max-depth", max_depth, "evaluation depth limit (env AIM8_MAX_DEPTH, default 10000)")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* repl = app.add_subcommand("repl", "interactive read-eval-print loop");
  auto* run = app.add_subcommand("run", "load definitions from a file and print each expression's value");
  run->add_option("file", file, ".mexp or .sexp source")->required();
  auto* translate = app.add_subcommand("translate", "print the S-expression translation of a .mexp file");
  translate->add_option("file", file, ".mexp source")->required();
  for (auto* sub : {repl, run, translate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;  // usage error
  }
  opts.max_depth = resolve_max_depth(max_depth);

  if (*run) return run_file(file, opts, std::cout, std::cerr);
  if (*translate) return run_translate(file, opts, std::cout, std::cerr);
  return run_repl(std::cin, std::cout, std::cerr, opts, isatty(STDIN_FILENO) != 0);
}
