#include "crowdshield/thread.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

#include "crowdshield/error.hpp"
#include "crowdshield/rng.hpp"

namespace crowdshield {

void warn(const std::string& msg) { std::cerr << "[warn] " << msg << "\n"; }

std::string_view to_string(Stance s) {
  switch (s) {
    case Stance::Support: return "support";
    case Stance::Deny: return "deny";
    case Stance::Query: return "query";
    case Stance::Comment: return "comment";
    case Stance::Root: return "root";
  }
  return "comment";
}

std::string_view to_string(VeracityLabel v) {
  return v == VeracityLabel::Misinformation ? "misinformation" : "non-misinformation";
}

std::string_view to_string(Split s) { return s == Split::Train ? "train" : "test"; }

std::optional<Stance> stance_from_string(std::string_view s) {
  if (s == "support") return Stance::Support;
  if (s == "deny") return Stance::Deny;
  if (s == "query") return Stance::Query;
  if (s == "comment") return Stance::Comment;
  if (s == "root") return Stance::Root;
  return std::nullopt;
}

std::optional<VeracityLabel> veracity_from_string(std::string_view s) {
  if (s == "misinformation") return VeracityLabel::Misinformation;
  if (s == "non-misinformation") return VeracityLabel::NonMisinformation;
  return std::nullopt;
}

std::optional<Split> split_from_string(std::string_view s) {
  if (s == "train") return Split::Train;
  if (s == "test") return Split::Test;
  return std::nullopt;
}

const Reply& Thread::node(size_t index) const {
  if (index == 0) return source;
  if (index > replies.size()) throw std::out_of_range("Thread::node: index out of range");
  return replies[index - 1];
}

std::vector<Thread> Dataset::threads_in(Split s) const {
  std::vector<Thread> out;
  for (const auto& t : threads) {
    auto it = split.find(t.thread_id);
    if (it != split.end() && it->second == s) out.push_back(t);
  }
  return out;
}

void sort_replies(std::vector<Reply>& replies) {
  std::stable_sort(replies.begin(), replies.end(), [](const Reply& a, const Reply& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.id < b.id;
  });
}

ValidationReport validate_thread(const Thread& t) {
  ValidationReport report;
  auto add = [&](const std::string& id, const char* rule) {
    report.violations.push_back({id, rule});
  };

  if (t.source.stance != Stance::Root) add(t.source.id, "source-not-root");

  std::set<std::string> seen;
  seen.insert(t.source.id);

  for (size_t i = 0; i < t.replies.size(); ++i) {
    const Reply& r = t.replies[i];
    if (r.stance == Stance::Root) add(r.id, "root-on-reply");
    if (r.time < t.source.time) add(r.id, "time-before-source");
    if (i > 0) {
      const Reply& prev = t.replies[i - 1];
      if (r.time < prev.time || (r.time == prev.time && r.id < prev.id)) {
        add(r.id, "unsorted-replies");
      }
    }
    if (!seen.insert(r.id).second) add(r.id, "duplicate-id");

    // parent must be the source or an earlier reply
    if (r.parent_id == t.source.id) continue;
    bool found_earlier = false;
    bool found_anywhere = false;
    for (size_t j = 0; j < t.replies.size(); ++j) {
      if (t.replies[j].id == r.parent_id) {
        found_anywhere = true;
        if (j < i) found_earlier = true;
        break;
      }
    }
    if (!found_anywhere) {
      add(r.id, "dangling-parent");
    } else if (!found_earlier) {
      add(r.id, "forward-parent");
    }
  }
  return report;
}

Thread truncate_thread(const Thread& t, size_t tau) {
  Thread out;
  out.thread_id = t.thread_id;
  out.source = t.source;
  out.veracity = t.veracity;
  const size_t keep = std::min(tau, t.replies.size());
  out.replies.assign(t.replies.begin(), t.replies.begin() + static_cast<long>(keep));

  std::set<std::string> kept_ids;
  kept_ids.insert(out.source.id);
  for (const auto& r : out.replies) kept_ids.insert(r.id);
  for (auto& r : out.replies) {
    if (!kept_ids.count(r.parent_id)) r.parent_id = out.source.id;
  }
  return out;
}

std::pair<std::vector<Thread>, std::vector<Thread>> split_train_dev(
    const std::vector<Thread>& train, double dev_fraction, uint64_t seed) {
  if (dev_fraction < 0.0 || dev_fraction >= 1.0) {
    throw std::invalid_argument("split_train_dev: dev_fraction must be in [0, 1)");
  }
  if (dev_fraction == 0.0) return {train, {}};
  const size_t n = train.size();
  if (n < 2) {
    throw std::invalid_argument("split_train_dev: need at least 2 threads for a nonempty dev set");
  }
  size_t dev_size = static_cast<size_t>(dev_fraction * static_cast<double>(n));
  if (dev_size == 0) dev_size = 1;

  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  std::vector<Thread> dev, rest;
  dev.reserve(dev_size);
  rest.reserve(n - dev_size);
  for (size_t i = 0; i < n; ++i) {
    if (i < dev_size) {
      dev.push_back(train[order[i]]);
    } else {
      rest.push_back(train[order[i]]);
    }
  }
  return {rest, dev};
}

}  // namespace crowdshield
