#include "crowdshield/io.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "crowdshield/error.hpp"

namespace crowdshield {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<CorpusFormat> corpus_format_from_string(std::string_view s) {
  if (s == "native-jsonl") return CorpusFormat::NativeJsonl;
  if (s == "rumoureval") return CorpusFormat::RumourEval;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& path, size_t line, const std::string& msg) {
  throw DataError(path.string() + ":" + std::to_string(line) + ": " + msg);
}

Thread parse_thread_line(const json& j, const std::filesystem::path& path, size_t line,
                         Split* split_out) {
  Thread t;
  if (!j.is_object()) fail_at(path, line, "expected a JSON object");
  try {
    t.thread_id = j.at("thread_id").get<std::string>();
    const auto v = veracity_from_string(j.at("veracity").get<std::string>());
    if (!v) fail_at(path, line, "unknown veracity: " + j.at("veracity").get<std::string>());
    t.veracity = *v;

    const json& src = j.at("source");
    t.source.id = src.at("id").get<std::string>();
    t.source.text = src.at("text").get<std::string>();
    t.source.time = src.at("time").get<int64_t>();
    t.source.parent_id.clear();
    t.source.stance = Stance::Root;
    // source posts assert checkable content unless annotated otherwise
    t.source.claim =
        src.value("claim", true) ? ClaimLabel::Claim : ClaimLabel::NonClaim;

    for (const json& rj : j.at("replies")) {
      Reply r;
      r.id = rj.at("id").get<std::string>();
      r.parent_id = rj.at("parent_id").get<std::string>();
      r.text = rj.at("text").get<std::string>();
      r.time = rj.at("time").get<int64_t>();
      const std::string stance_str = rj.at("stance").get<std::string>();
      const auto st = stance_from_string(stance_str);
      if (!st) fail_at(path, line, "unknown stance: " + stance_str);
      if (*st == Stance::Root) fail_at(path, line, "reply " + r.id + " carries stance root");
      r.stance = *st;
      r.claim = rj.at("claim").get<bool>() ? ClaimLabel::Claim : ClaimLabel::NonClaim;
      t.replies.push_back(std::move(r));
    }

    if (split_out) {
      const std::string split_str = j.value("split", "train");
      const auto sp = split_from_string(split_str);
      if (!sp) fail_at(path, line, "unknown split: " + split_str);
      *split_out = *sp;
    }
  } catch (const json::exception& e) {
    fail_at(path, line, std::string("malformed record: ") + e.what());
  }
  sort_replies(t.replies);
  return t;
}

Dataset load_native_jsonl(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path.string());

  Dataset d;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail_at(path, line_no, std::string("malformed JSON: ") + e.what());
    }
    Split split = Split::Train;
    Thread t = parse_thread_line(j, path, line_no, &split);
    if (d.split.count(t.thread_id)) {
      fail_at(path, line_no, "duplicate thread_id: " + t.thread_id);
    }
    if (opts.strict) {
      const ValidationReport report = validate_thread(t);
      if (!report.valid()) {
        const Violation& v = report.violations.front();
        fail_at(path, line_no,
                "thread " + t.thread_id + " violates " + v.rule + " at reply " + v.reply_id);
      }
    }
    d.split[t.thread_id] = split;
    d.threads.push_back(std::move(t));
  }
  return d;
}

// "Wed Jan 07 11:06:08 +0000 2015" -> epoch seconds
std::optional<int64_t> parse_twitter_time(const std::string& s) {
  std::tm tm = {};
  std::istringstream ss(s);
  ss.imbue(std::locale::classic());
  ss >> std::get_time(&tm, "%a %b %d %H:%M:%S +0000 %Y");
  if (ss.fail()) return std::nullopt;
  return static_cast<int64_t>(timegm(&tm));
}

struct AnnotationKeys {
  std::map<std::string, std::string> stance;    // post id -> stance string
  std::map<std::string, std::string> veracity;  // thread id -> true/false/unverified
  std::set<std::string> test_threads;           // ids listed in final-eval keys
};

void merge_key_file(const std::filesystem::path& file, AnnotationKeys& keys) {
  std::ifstream in(file);
  if (!in) return;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed key file " + file.string() + ": " + e.what());
  }
  const bool is_eval = file.filename().string().find("final-eval") != std::string::npos;
  if (j.contains("subtaskaenglish")) {
    for (auto& [id, stance] : j["subtaskaenglish"].items()) {
      keys.stance[id] = stance.get<std::string>();
    }
  }
  if (j.contains("subtaskbenglish")) {
    for (auto& [id, label] : j["subtaskbenglish"].items()) {
      keys.veracity[id] = label.get<std::string>();
      if (is_eval) keys.test_threads.insert(id);
    }
  }
}

void collect_structure_parents(const json& node, const std::string& parent,
                               std::map<std::string, std::string>& parent_of) {
  if (!node.is_object()) return;
  for (auto& [child, grandchildren] : node.items()) {
    if (!parent.empty()) parent_of[child] = parent;
    collect_structure_parents(grandchildren, child, parent_of);
  }
}

std::optional<Reply> read_tweet_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    throw DataError("malformed tweet JSON: " + file.string());
  }
  Reply r;
  if (j.contains("id_str")) {
    r.id = j["id_str"].get<std::string>();
  } else if (j.contains("id")) {
    r.id = j["id"].is_string() ? j["id"].get<std::string>() : std::to_string(j["id"].get<int64_t>());
  } else {
    return std::nullopt;
  }
  if (j.contains("text")) {
    r.text = j["text"].get<std::string>();
  } else if (j.contains("full_text")) {
    r.text = j["full_text"].get<std::string>();
  }
  if (j.contains("created_at")) {
    if (auto t = parse_twitter_time(j["created_at"].get<std::string>())) r.time = *t;
  }
  return r;
}

Dataset load_rumoureval(const std::filesystem::path& root, const LoadOptions& opts) {
  if (!std::filesystem::exists(root)) {
    throw DataError("rumoureval root does not exist: " + root.string());
  }

  AnnotationKeys keys;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() > 9 && name.substr(name.size() - 9) == "-key.json") {
      merge_key_file(entry.path(), keys);
    }
  }

  std::map<std::string, bool> sidecar;  // reply id -> claim
  if (!opts.claim_sidecar.empty()) {
    std::ifstream in(opts.claim_sidecar);
    if (!in) throw DataError("cannot open claim sidecar: " + opts.claim_sidecar.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw DataError("malformed claim sidecar: " + std::string(e.what()));
    }
    for (auto& [id, claim] : j.items()) sidecar[id] = claim.get<bool>();
  }

  Dataset d;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::filesystem::path dir = entry.path();
    if (!std::filesystem::exists(dir / "source-tweets") ||
        !std::filesystem::exists(dir / "structure.json")) {
      continue;
    }
    const std::string thread_id = dir.filename().string();

    auto vit = keys.veracity.find(thread_id);
    if (vit == keys.veracity.end()) {
      warn("rumoureval thread " + thread_id + " has no veracity key; skipped");
      continue;
    }
    VeracityLabel veracity;
    if (vit->second == "false") {
      veracity = VeracityLabel::Misinformation;
    } else if (vit->second == "true") {
      veracity = VeracityLabel::NonMisinformation;
    } else {
      warn("rumoureval thread " + thread_id + " labeled '" + vit->second + "'; skipped");
      continue;
    }

    auto source = read_tweet_json(dir / "source-tweets" / (thread_id + ".json"));
    if (!source) {
      warn("rumoureval thread " + thread_id + " has no readable source tweet; skipped");
      continue;
    }

    Thread t;
    t.thread_id = thread_id;
    t.source = *source;
    t.source.parent_id.clear();
    t.source.stance = Stance::Root;
    t.source.claim = ClaimLabel::Claim;
    t.veracity = veracity;

    json structure;
    {
      std::ifstream in(dir / "structure.json");
      try {
        in >> structure;
      } catch (const json::exception&) {
        throw DataError("malformed structure.json in " + dir.string());
      }
    }
    std::map<std::string, std::string> parent_of;
    collect_structure_parents(structure, "", parent_of);

    const std::filesystem::path replies_dir = dir / "replies";
    if (std::filesystem::exists(replies_dir)) {
      for (const auto& rf : std::filesystem::directory_iterator(replies_dir)) {
        if (!rf.is_regular_file() || rf.path().extension() != ".json") continue;
        auto reply = read_tweet_json(rf.path());
        if (!reply) continue;
        Reply r = *reply;
        auto pit = parent_of.find(r.id);
        if (pit != parent_of.end()) {
          r.parent_id = pit->second;
        } else {
          warn("reply " + r.id + " missing from structure.json; attached to source");
          r.parent_id = t.source.id;
        }
        auto sit = keys.stance.find(r.id);
        if (sit != keys.stance.end()) {
          const auto st = stance_from_string(sit->second);
          r.stance = (st && *st != Stance::Root) ? *st : Stance::Comment;
        } else {
          warn("reply " + r.id + " has no stance key; defaulting to comment");
          r.stance = Stance::Comment;
        }
        auto cit = sidecar.find(r.id);
        if (cit != sidecar.end()) {
          r.claim = cit->second ? ClaimLabel::Claim : ClaimLabel::NonClaim;
        } else {
          if (!opts.claim_sidecar.empty()) {
            warn("reply " + r.id + " missing from claim sidecar; defaulting to non-claim");
          }
          r.claim = ClaimLabel::NonClaim;
        }
        t.replies.push_back(std::move(r));
      }
    }

    for (auto& r : t.replies) {
      if (r.time < t.source.time) r.time = t.source.time;
    }
    sort_replies(t.replies);
    // structure sometimes references posts outside the dump or later in
    // chronological order; re-parent those to the source so the tree
    // invariant holds
    std::set<std::string> seen;
    seen.insert(t.source.id);
    for (auto& r : t.replies) {
      if (!seen.count(r.parent_id)) r.parent_id = t.source.id;
      seen.insert(r.id);
    }

    if (opts.strict) {
      const ValidationReport report = validate_thread(t);
      if (!report.valid()) {
        const Violation& v = report.violations.front();
        throw DataError("rumoureval thread " + thread_id + " violates " + v.rule + " at reply " +
                        v.reply_id);
      }
    }

    d.split[t.thread_id] =
        keys.test_threads.count(t.thread_id) ? Split::Test : Split::Train;
    d.threads.push_back(std::move(t));
  }

  std::sort(d.threads.begin(), d.threads.end(),
            [](const Thread& a, const Thread& b) { return a.thread_id < b.thread_id; });
  return d;
}

}  // namespace

Dataset load_threads(const std::filesystem::path& path, const LoadOptions& opts) {
  switch (opts.format) {
    case CorpusFormat::NativeJsonl: return load_native_jsonl(path, opts);
    case CorpusFormat::RumourEval: return load_rumoureval(path, opts);
  }
  throw DataError("unknown corpus format");
}

std::string thread_to_json_line(const Thread& t, Split split) {
  ordered_json j;
  j["thread_id"] = t.thread_id;
  j["veracity"] = std::string(to_string(t.veracity));
  ordered_json src;
  src["id"] = t.source.id;
  src["text"] = t.source.text;
  src["time"] = t.source.time;
  if (t.source.claim == ClaimLabel::NonClaim) src["claim"] = false;
  j["source"] = src;
  ordered_json replies = ordered_json::array();
  for (const auto& r : t.replies) {
    ordered_json rj;
    rj["id"] = r.id;
    rj["parent_id"] = r.parent_id;
    rj["text"] = r.text;
    rj["time"] = r.time;
    rj["stance"] = std::string(to_string(r.stance));
    rj["claim"] = r.claim == ClaimLabel::Claim;
    replies.push_back(rj);
  }
  j["replies"] = replies;
  j["split"] = std::string(to_string(split));
  return j.dump();
}

std::string dataset_to_jsonl(const Dataset& d) {
  std::string out;
  for (const auto& t : d.threads) {
    auto it = d.split.find(t.thread_id);
    const Split split = it == d.split.end() ? Split::Train : it->second;
    out += thread_to_json_line(t, split);
    out += "\n";
  }
  return out;
}

void save_native_jsonl(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file: " + path.string());
  out << dataset_to_jsonl(d);
}

}  // namespace crowdshield
