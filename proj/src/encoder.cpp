#include "crowdshield/encoder.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "crowdshield/error.hpp"
#include "crowdshield/rng.hpp"

namespace crowdshield {

using nlohmann::json;

double Embedding::norm() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(s);
}

std::vector<Embedding> TextEncoder::encode_batch(const std::vector<std::string>& texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(encode(t));
  return out;
}

std::vector<std::string> hash_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      cur.push_back(static_cast<char>(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

HashingEncoder::HashingEncoder(int dim, uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim <= 0) throw std::invalid_argument("HashingEncoder: dim must be positive");
}

Embedding HashingEncoder::encode(std::string_view text) const {
  Embedding e;
  e.values.assign(static_cast<size_t>(dim_), 0.0);
  const uint64_t basis = kFnvOffset ^ (seed_ * kSeedMix);
  for (const auto& token : hash_tokenize(text)) {
    const uint64_t h = fnv1a64(token, basis);
    const size_t bucket = static_cast<size_t>(h % static_cast<uint64_t>(dim_));
    const double sign = (splitmix64_mix(h ^ kSignSalt) & 1u) ? -1.0 : 1.0;
    e.values[bucket] += sign;
  }
  const double n = e.norm();
  if (n > 0.0) {
    for (double& v : e.values) v /= n;
  }
  return e;
}

ExternalEncoder::ExternalEncoder(EncoderConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.dim <= 0) throw std::invalid_argument("ExternalEncoder: dim must be positive");
  if (cfg_.endpoint.empty()) throw std::invalid_argument("ExternalEncoder: endpoint required");
}

Embedding ExternalEncoder::encode(std::string_view text) const {
  return encode_batch({std::string(text)}).front();
}

std::vector<Embedding> ExternalEncoder::encode_batch(const std::vector<std::string>& texts) const {
  return encode_batch_external(texts, cfg_);
}

namespace {

struct ParsedUrl {
  std::string host;
  int port = 80;
  std::string path = "/";
};

ParsedUrl parse_url(const std::string& url) {
  ParsedUrl out;
  std::string rest = url;
  if (rest.rfind("https://", 0) == 0) {
    throw DataError("https endpoints are not supported; use http: " + url);
  }
  const std::string scheme = "http://";
  if (rest.rfind(scheme, 0) == 0) rest = rest.substr(scheme.size());
  const size_t slash = rest.find('/');
  std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);
  const size_t colon = hostport.find(':');
  if (colon == std::string::npos) {
    out.host = hostport;
  } else {
    out.host = hostport.substr(0, colon);
    out.port = std::stoi(hostport.substr(colon + 1));
  }
  if (out.host.empty()) throw DataError("invalid encoder endpoint: " + url);
  return out;
}

std::vector<Embedding> post_chunk(const ParsedUrl& url, const EncoderConfig& cfg,
                                  const std::vector<std::string>& texts) {
  httplib::Client client(url.host, url.port);
  client.set_connection_timeout(0, cfg.timeout_ms * 1000);
  client.set_read_timeout(0, cfg.timeout_ms * 1000);
  client.set_write_timeout(0, cfg.timeout_ms * 1000);

  json req;
  req["texts"] = texts;
  auto res = client.Post(url.path, req.dump(), "application/json");
  if (!res) {
    throw DataError("encoder service unreachable or timed out: " + cfg.endpoint);
  }
  if (res->status != 200) {
    throw DataError("encoder service returned status " + std::to_string(res->status));
  }
  json body;
  try {
    body = json::parse(res->body);
  } catch (const json::exception& e) {
    throw DataError(std::string("encoder service sent malformed JSON: ") + e.what());
  }
  if (!body.contains("vectors") || !body["vectors"].is_array()) {
    throw DataError("encoder service payload missing \"vectors\" array");
  }
  const auto& vectors = body["vectors"];
  if (vectors.size() != texts.size()) {
    throw DataError("encoder service count mismatch: sent " + std::to_string(texts.size()) +
                    " texts, got " + std::to_string(vectors.size()) + " vectors");
  }
  std::vector<Embedding> out;
  out.reserve(vectors.size());
  for (const auto& vec : vectors) {
    Embedding e;
    if (!vec.is_array()) throw DataError("encoder service vector entry is not an array");
    e.values.reserve(vec.size());
    for (const auto& x : vec) e.values.push_back(x.get<double>());
    if (static_cast<int>(e.values.size()) != cfg.dim) {
      throw DataError("encoder service dim mismatch: expected " + std::to_string(cfg.dim) +
                      ", got " + std::to_string(e.values.size()));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<Embedding> encode_batch_external(const std::vector<std::string>& texts,
                                             const EncoderConfig& cfg) {
  if (cfg.kind != EncoderKind::External) {
    throw std::invalid_argument("encode_batch_external: config kind must be external");
  }
  if (texts.empty()) return {};
  const ParsedUrl url = parse_url(cfg.endpoint);
  const size_t chunk_size = cfg.batch_size > 0 ? static_cast<size_t>(cfg.batch_size) : 16;

  std::vector<std::vector<std::string>> chunks;
  for (size_t i = 0; i < texts.size(); i += chunk_size) {
    chunks.emplace_back(texts.begin() + static_cast<long>(i),
                        texts.begin() + static_cast<long>(std::min(i + chunk_size, texts.size())));
  }

  std::vector<std::vector<Embedding>> results(chunks.size());
  std::vector<std::string> errors(chunks.size());
  const size_t n_workers =
      std::min<size_t>(std::max(1, cfg.max_in_flight), chunks.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      try {
        results[i] = post_chunk(url, cfg, chunks[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& err : errors) {
    if (!err.empty()) throw DataError(err);
  }

  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (auto& chunk : results) {
    for (auto& e : chunk) out.push_back(std::move(e));
  }
  return out;
}

std::unique_ptr<TextEncoder> make_encoder(const EncoderConfig& cfg) {
  if (cfg.kind == EncoderKind::Hashing) {
    return std::make_unique<HashingEncoder>(cfg.dim, cfg.seed);
  }
  return std::make_unique<ExternalEncoder>(cfg);
}

Embedding encode(std::string_view text, const EncoderConfig& cfg) {
  return make_encoder(cfg)->encode(text);
}

std::string combined_text(const Thread& t) {
  std::string out = t.source.text;
  for (const auto& r : t.replies) {
    if (r.stance == Stance::Support || r.stance == Stance::Deny || r.stance == Stance::Query) {
      out += " [SEP] ";
      out += r.text;
    }
  }
  return out;
}

Embedding encode_combined(const Thread& t, const TextEncoder& enc) {
  return enc.encode(combined_text(t));
}

}  // namespace crowdshield
