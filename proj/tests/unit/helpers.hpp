#pragma once
// Shared fixtures for the unit suite.

#include <string>
#include <vector>

#include "crowdshield/thread.hpp"

namespace test_helpers {

inline crowdshield::Reply make_reply(std::string id, std::string parent, int64_t time,
                                     crowdshield::Stance stance,
                                     crowdshield::ClaimLabel claim =
                                         crowdshield::ClaimLabel::NonClaim,
                                     std::string text = "reply text") {
  crowdshield::Reply r;
  r.id = std::move(id);
  r.parent_id = std::move(parent);
  r.text = std::move(text);
  r.time = time;
  r.stance = stance;
  r.claim = claim;
  return r;
}

inline crowdshield::Thread make_thread(
    std::string id, std::vector<crowdshield::Reply> replies,
    crowdshield::VeracityLabel veracity = crowdshield::VeracityLabel::NonMisinformation,
    std::string source_text = "source text") {
  crowdshield::Thread t;
  t.thread_id = id;
  t.source.id = id + "-src";
  t.source.parent_id.clear();
  t.source.text = std::move(source_text);
  t.source.time = 0;
  t.source.stance = crowdshield::Stance::Root;
  t.source.claim = crowdshield::ClaimLabel::Claim;
  t.replies = std::move(replies);
  t.veracity = veracity;
  return t;
}

}  // namespace test_helpers
