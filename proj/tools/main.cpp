#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace moplex::cli;

  CLI::App app{"moplexkit: moplexes, graph-search orderings and gadgets over edge-list files"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::uint64_t seed = 0;
  std::size_t limit = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomised corpora")->capture_default_str();
  app.add_option("--limit", limit, "Number of graphs for corpus output")->capture_default_str();

  std::string file;
  std::optional<std::string> tau;
  std::string kind;

  auto* analyze = app.add_subcommand("analyze", "Moplexes, avoidable vertices, asteroidal number, classes");
  analyze->add_option("file", file, "Edge-list file")->required();

  auto* hampath = app.add_subcommand("hampath", "Hamiltonian path of a connected 2-moplex graph");
  hampath->add_option("file", file, "Edge-list file")->required();

  auto* order = app.add_subcommand("order", "DFS+, LDFS+ or cocomparability ordering");
  order->add_option("file", file, "Edge-list file")->required();
  order->add_option("--kind", kind, "Ordering kind")
      ->required()
      ->check(CLI::IsMember({"dfs+", "ldfs+", "cocomp"}));
  order->add_option("--tau", tau, "Prior ordering, whitespace separated");

  GadgetArgs gadget_args;
  std::optional<std::string> out_prefix;
  auto* gadget = app.add_subcommand("gadget", "Build an embedding, Max-Cut or GI gadget");
  gadget->add_option("file", file, "Edge-list file")->required();
  gadget->add_option("--kind", gadget_args.kind, "Gadget kind")
      ->required()
      ->check(CLI::IsMember({"embed", "maxcut", "gi"}));
  gadget->add_option("--tau", tau, "Umbrella-free ordering for embed");
  gadget->add_option("--out", out_prefix, "Write <prefix>.el and <prefix>.roles.json");

  VerifyArgs verify_args;
  std::optional<std::string> original;
  std::string certificate;
  auto* verify = app.add_subcommand("verify", "Re-check a serialised certificate");
  verify->add_option("file", file, "Edge-list file the certificate refers to")->required();
  verify->add_option("--artifact", verify_args.artifact, "Certificate kind")
      ->required()
      ->check(CLI::IsMember({"hampath", "ordering", "gadget"}));
  verify->add_option("--certificate", certificate, "JSON certificate")->required();
  verify->add_option("--original", original, "Source graph of a gadget");

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand("corpus", "Emit graphs from a named corpus");
  corpus->add_option("--kind", corpus_args.kind, "Corpus kind")->required();
  corpus->add_option("--n", corpus_args.n, "Number of vertices")->required();
  corpus->add_option("--p", corpus_args.p, "Edge probability")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::input_error);
  }

  const Format format = format_name == "text" ? Format::text : Format::json;
  CommandResult result;
  if (analyze->parsed()) {
    result = cmd_analyze(file);
  } else if (hampath->parsed()) {
    result = cmd_hampath(file);
  } else if (order->parsed()) {
    result = cmd_order(file, kind, tau);
  } else if (gadget->parsed()) {
    gadget_args.tau = tau;
    if (out_prefix) gadget_args.out_prefix = *out_prefix;
    result = cmd_gadget(file, gadget_args);
  } else if (verify->parsed()) {
    verify_args.certificate = certificate;
    if (original) verify_args.original = *original;
    result = cmd_verify(file, verify_args);
  } else if (corpus->parsed()) {
    corpus_args.seed = seed;
    corpus_args.limit = limit;
    result = cmd_corpus(corpus_args);
  }

  std::cout << render(result, format);
  return static_cast<int>(result.code);
}
