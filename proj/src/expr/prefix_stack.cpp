#include "transgp/expr/prefix_stack.hpp"

#include <numeric>
#include <string>

#include "transgp/common/error.hpp"

namespace transgp {

PrefixStack::PrefixStack() : pending_{{1, 0}} {}

PrefixStack PrefixStack::from_prefix(std::span<const Token> nodes) {
  PrefixStack stack;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (stack.complete()) {
      throw MalformedSequence("prefix completes before position " + std::to_string(i));
    }
    stack.push(nodes[i]);
  }
  return stack;
}

void PrefixStack::push(Token t) {
  if (is_special(t)) throw MalformedSequence("special token inside expression");
  if (pending_.empty()) throw MalformedSequence("expression already complete");
  Slot& top = pending_.back();
  const int depth = top.depth;
  if (--top.remaining == 0) pending_.pop_back();
  if (is_function(t)) pending_.push_back({2, depth + 1});
}

int PrefixStack::open_slots() const {
  return std::accumulate(pending_.begin(), pending_.end(), 0,
                         [](int acc, const Slot& s) { return acc + s.remaining; });
}

int PrefixStack::next_depth() const { return pending_.empty() ? -1 : pending_.back().depth; }

TokenSet valid_next_tokens(const PrefixStack& stack, int max_depth) {
  if (stack.complete()) return TokenSet::only(Token::kEnd);
  if (stack.next_depth() >= max_depth) return TokenSet::terminals_only();
  return TokenSet::functions_and_terminals();
}

}  // namespace transgp
