#pragma once
// Text encoders behind one interface: a deterministic signed-hashing
// embedder for offline runs, and a client for an external embedding
// service.
//
// Hashing rule (the contract tests reimplement independently):
//   - lowercase ASCII letters; tokens are maximal runs of [a-z0-9] bytes
//   - bucket  = fnv1a64(token, basis = kFnvOffset ^ (seed * kSeedMix)) % dim
//   - sign    = +1 if splitmix64_mix(bucket_hash ^ kSignSalt) has low bit 0,
//               else -1
//   - each token occurrence adds `sign` to values[bucket]
//   - the vector is L2-normalized unless it is all-zero

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "crowdshield/thread.hpp"

namespace crowdshield {

inline constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr uint64_t kSeedMix = 0x9e3779b97f4a7c15ULL;
inline constexpr uint64_t kSignSalt = 0xd1b54a32d192ed03ULL;

struct Embedding {
  std::vector<double> values;
  size_t dim() const { return values.size(); }
  double norm() const;
};

enum class EncoderKind { Hashing, External };

struct EncoderConfig {
  EncoderKind kind = EncoderKind::Hashing;
  int dim = 256;
  uint64_t seed = 0;
  std::string endpoint;  // external only, e.g. http://127.0.0.1:8089/embed
  int batch_size = 16;   // texts per request
  int timeout_ms = 5000;
  int max_in_flight = 4;  // concurrent request cap
};

class TextEncoder {
 public:
  virtual ~TextEncoder() = default;
  virtual int dim() const = 0;
  virtual Embedding encode(std::string_view text) const = 0;
  virtual std::vector<Embedding> encode_batch(const std::vector<std::string>& texts) const;
};

class HashingEncoder final : public TextEncoder {
 public:
  HashingEncoder(int dim, uint64_t seed);
  int dim() const override { return dim_; }
  Embedding encode(std::string_view text) const override;

 private:
  int dim_;
  uint64_t seed_;
};

class ExternalEncoder final : public TextEncoder {
 public:
  explicit ExternalEncoder(EncoderConfig cfg);
  int dim() const override { return cfg_.dim; }
  Embedding encode(std::string_view text) const override;
  std::vector<Embedding> encode_batch(const std::vector<std::string>& texts) const override;

 private:
  EncoderConfig cfg_;
};

std::unique_ptr<TextEncoder> make_encoder(const EncoderConfig& cfg);

Embedding encode(std::string_view text, const EncoderConfig& cfg);

// Source text plus texts of replies with stance in {support, deny, query},
// chronological order, " [SEP] "-joined.
std::string combined_text(const Thread& t);
Embedding encode_combined(const Thread& t, const TextEncoder& enc);

// POSTs {"texts": [...]} in batches, expects {"vectors": [[...], ...]};
// count or dimension mismatches and transport failures raise DataError.
std::vector<Embedding> encode_batch_external(const std::vector<std::string>& texts,
                                             const EncoderConfig& cfg);

std::vector<std::string> hash_tokenize(std::string_view text);

}  // namespace crowdshield
