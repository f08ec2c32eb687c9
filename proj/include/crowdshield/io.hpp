#pragma once
// Corpus ingestion and serialization: native JSONL (one thread per line)
// and the RumourEval-2019 directory layout with an optional claim sidecar.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "crowdshield/thread.hpp"

namespace crowdshield {

enum class CorpusFormat { NativeJsonl, RumourEval };

std::optional<CorpusFormat> corpus_format_from_string(std::string_view s);

struct LoadOptions {
  CorpusFormat format = CorpusFormat::NativeJsonl;
  // RumourEval only: JSON file {reply_id: bool}; replies missing from it
  // default to non-claim with a logged warning.
  std::filesystem::path claim_sidecar;
  // strict: invariant violations abort the load; lenient keeps the bad
  // thread so `validate` can report it.
  bool strict = true;
};

Dataset load_threads(const std::filesystem::path& path, const LoadOptions& opts = {});

std::string thread_to_json_line(const Thread& t, Split split);
void save_native_jsonl(const Dataset& d, const std::filesystem::path& path);
std::string dataset_to_jsonl(const Dataset& d);

}  // namespace crowdshield
