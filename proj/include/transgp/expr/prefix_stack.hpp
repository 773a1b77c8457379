#ifndef TRANSGP_EXPR_PREFIX_STACK_HPP_
#define TRANSGP_EXPR_PREFIX_STACK_HPP_

#include <span>
#include <vector>

#include "transgp/expr/token.hpp"

namespace transgp {

// Tracks the open argument slots of a partially written prefix expression.
// Starts with the root slot open; empty exactly when the expression is
// complete. Each entry remembers the depth its children will sit at so that
// generation can be capped.
class PrefixStack {
 public:
  PrefixStack();

  // Replays a partial pre-order prefix (no START). Throws MalformedSequence if
  // it contains specials or completes before its last token.
  static PrefixStack from_prefix(std::span<const Token> nodes);

  // Consumes one function or terminal. Throws MalformedSequence if the
  // expression is already complete or `t` is special.
  void push(Token t);

  bool complete() const { return pending_.empty(); }
  int open_slots() const;
  // Depth of the node that fills the next open slot.
  int next_depth() const;
  std::size_t pending_size() const { return pending_.size(); }

 private:
  struct Slot {
    int remaining;
    int depth;
  };
  std::vector<Slot> pending_;
};

// Open slot below the depth cap: all functions and terminals. Open slot at the
// cap: terminals only. Complete: {END}.
TokenSet valid_next_tokens(const PrefixStack& stack, int max_depth = kDefaultMaxDepth);

}  // namespace transgp

#endif  // TRANSGP_EXPR_PREFIX_STACK_HPP_
