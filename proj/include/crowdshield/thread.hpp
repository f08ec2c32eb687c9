#pragma once
// Domain types for stance- and claim-annotated conversation threads:
// a source post plus its tree of replies ordered chronologically, with
// veracity gold labels on the source.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crowdshield {

// Enum order doubles as the Q-learning action index. Root is the sentinel
// stance of a source post and never appears on replies.
enum class Stance { Support = 0, Deny = 1, Query = 2, Comment = 3, Root = 4 };
enum class ClaimLabel { NonClaim = 0, Claim = 1 };
enum class VeracityLabel { NonMisinformation = 0, Misinformation = 1 };
enum class Split { Train, Test };

inline constexpr int kNumActions = 5;
inline constexpr int kNumReplyStances = 4;

std::string_view to_string(Stance s);
std::string_view to_string(VeracityLabel v);
std::string_view to_string(Split s);
std::optional<Stance> stance_from_string(std::string_view s);
std::optional<VeracityLabel> veracity_from_string(std::string_view s);
std::optional<Split> split_from_string(std::string_view s);

struct Reply {
  std::string id;
  std::string parent_id;  // empty on the source post
  std::string text;
  int64_t time = 0;  // epoch seconds
  Stance stance = Stance::Comment;
  ClaimLabel claim = ClaimLabel::NonClaim;
};

struct Thread {
  std::string thread_id;
  Reply source;                // stance == Root; claim defaults to Claim
  std::vector<Reply> replies;  // sorted by (time, id)
  VeracityLabel veracity = VeracityLabel::NonMisinformation;

  size_t n_replies() const { return replies.size(); }
  // 0 = source, 1..n = replies
  const Reply& node(size_t index) const;
};

struct Dataset {
  std::vector<Thread> threads;
  std::map<std::string, Split> split;  // every thread_id in exactly one split

  std::vector<Thread> threads_in(Split s) const;
};

struct Violation {
  std::string reply_id;
  std::string rule;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Lists every invariant violation with reply id and rule name. Rules:
// source-not-root, root-on-reply, duplicate-id, dangling-parent,
// forward-parent, unsorted-replies, time-before-source.
ValidationReport validate_thread(const Thread& t);

// (time, id lexicographic) ascending
void sort_replies(std::vector<Reply>& replies);

// Keeps the first tau replies chronologically; replies whose parent was
// dropped are re-parented to the source post.
Thread truncate_thread(const Thread& t, size_t tau);

// Deterministic shuffle by seed; dev size = max(1, floor(fraction * N))
// when fraction > 0. Throws std::invalid_argument when N < 2 and a
// nonempty dev set is requested.
std::pair<std::vector<Thread>, std::vector<Thread>> split_train_dev(
    const std::vector<Thread>& train, double dev_fraction, uint64_t seed);

}  // namespace crowdshield
