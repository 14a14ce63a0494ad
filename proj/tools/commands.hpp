#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace moplex::cli {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int {
  ok = 0,
  property_violation = 1,
  input_error = 2,
  resource_limit = 3,
};

enum class Format { json, text };

struct CommandResult {
  ExitCode code = ExitCode::ok;
  nlohmann::json payload;

  bool ok() const { return code == ExitCode::ok; }
};

/// Serialises a result; JSON objects come out with sorted keys.
std::string render(const CommandResult& result, Format format);

CommandResult cmd_analyze(const std::filesystem::path& path);
CommandResult cmd_hampath(const std::filesystem::path& path);
/// kind: "dfs+", "ldfs+" or "cocomp". tau is a whitespace-separated vertex
/// list (labels or ids); identity when absent.
CommandResult cmd_order(const std::filesystem::path& path, const std::string& kind,
                        const std::optional<std::string>& tau);

struct GadgetArgs {
  std::string kind;                 // embed | maxcut | gi
  std::optional<std::string> tau;   // embed only; cocomparability ordering when absent
  std::optional<std::filesystem::path> out_prefix;
};
CommandResult cmd_gadget(const std::filesystem::path& path, const GadgetArgs& args);

struct VerifyArgs {
  std::string artifact;  // hampath | ordering | gadget
  std::filesystem::path certificate;
  std::optional<std::filesystem::path> original;
};
CommandResult cmd_verify(const std::filesystem::path& path, const VerifyArgs& args);

struct CorpusArgs {
  std::string kind;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t limit = 1;
};
CommandResult cmd_corpus(const CorpusArgs& args);

}  // namespace moplex::cli
