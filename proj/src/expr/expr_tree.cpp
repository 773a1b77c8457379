#include "transgp/expr/expr_tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transgp/common/error.hpp"

namespace transgp {

namespace {

// Returns the depth, or throws when `nodes` is not one complete prefix
// expression.
int validate_prefix(std::span<const Token> nodes) {
  if (nodes.empty()) throw MalformedSequence("empty expression");
  // Each entry is the depth of a pending child slot.
  std::vector<int> open{0};
  int depth = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Token t = nodes[i];
    if (is_special(t)) {
      throw MalformedSequence("special token inside expression at position " +
                              std::to_string(i));
    }
    if (open.empty()) {
      throw MalformedSequence("expression complete before position " + std::to_string(i));
    }
    const int d = open.back();
    open.pop_back();
    depth = std::max(depth, d);
    if (is_function(t)) {
      open.push_back(d + 1);
      open.push_back(d + 1);
    }
  }
  if (!open.empty()) {
    throw MalformedSequence("unfinished expression: " + std::to_string(open.size()) +
                            " open argument slot(s)");
  }
  return depth;
}

double clamp_priority(double v) {
  if (std::isnan(v)) return kPriorityClamp;
  return std::clamp(v, -kPriorityClamp, kPriorityClamp);
}

double apply(Token fn, double a, double b) {
  switch (fn) {
    case Token::kAdd:
      return a + b;
    case Token::kSub:
      return a - b;
    case Token::kMul:
      return a * b;
    case Token::kPDiv:
      return b == 0.0 ? 1.0 : a / b;
    case Token::kMax:
      return std::max(a, b);
    case Token::kMin:
      return std::min(a, b);
    default:
      return 0.0;
  }
}

void render(const ExprTree& tree, std::size_t& pos, int depth, int max_depth, std::string& out) {
  const Token t = tree.nodes()[pos++];
  if (depth > max_depth) {
    out += "...";
    if (is_function(t)) pos = tree.subtree_end(pos - 1);
    return;
  }
  out += token_symbol(t);
  if (is_function(t)) {
    out += '(';
    render(tree, pos, depth + 1, max_depth, out);
    out += ", ";
    render(tree, pos, depth + 1, max_depth, out);
    out += ')';
  }
}

class InfixParser {
 public:
  explicit InfixParser(std::string_view text) : text_(text) {}

  std::vector<Token> parse() {
    std::vector<Token> nodes;
    parse_node(nodes);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return nodes;
  }

 private:
  void parse_node(std::vector<Token>& nodes) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',' && text_[pos_] != ' ') {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    const auto token = token_from_text(word);
    if (!token || is_special(*token)) fail("unknown symbol '" + std::string(word) + "'");
    nodes.push_back(*token);
    skip_ws();
    if (is_function(*token)) {
      expect('(');
      parse_node(nodes);
      expect(',');
      parse_node(nodes);
      expect(')');
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("infix parse error at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprTree ExprTree::from_nodes(std::vector<Token> nodes) {
  const int depth = validate_prefix(nodes);
  return ExprTree(std::move(nodes), depth);
}

ExprTree ExprTree::leaf(Token terminal) {
  if (!is_terminal(terminal)) throw MalformedSequence("leaf must be a terminal");
  return ExprTree({terminal}, 0);
}

ExprTree ExprTree::make(Token function, const ExprTree& left, const ExprTree& right) {
  if (!is_function(function)) throw MalformedSequence("internal node must be a function");
  std::vector<Token> nodes;
  nodes.reserve(1 + left.size() + right.size());
  nodes.push_back(function);
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return ExprTree(std::move(nodes), 1 + std::max(left.depth_, right.depth_));
}

std::size_t ExprTree::subtree_end(std::size_t k) const {
  if (k >= nodes_.size()) throw IndexOutOfRange("node index " + std::to_string(k));
  int need = 1;
  std::size_t i = k;
  while (need > 0) {
    need += is_function(nodes_[i]) ? 1 : -1;
    ++i;
  }
  return i;
}

double evaluate(const ExprTree& tree, const FeatureVector& features) {
  // Reverse pre-order is post-order with swapped operands: a stack machine.
  const auto nodes = tree.nodes();
  thread_local std::vector<double> stack;
  stack.clear();
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const Token t = nodes[i];
    if (is_terminal(t)) {
      stack.push_back(features[t]);
    } else {
      const double a = stack.back();
      stack.pop_back();
      const double b = stack.back();
      stack.back() = clamp_priority(apply(t, a, b));
    }
  }
  return clamp_priority(stack.back());
}

TokenSequence to_prefix_tokens(const ExprTree& tree) {
  TokenSequence seq;
  seq.reserve(tree.size() + 2);
  seq.push_back(Token::kStart);
  seq.insert(seq.end(), tree.nodes().begin(), tree.nodes().end());
  seq.push_back(Token::kEnd);
  return seq;
}

ExprTree from_prefix_tokens(std::span<const Token> sequence) {
  if (sequence.size() < 3 || sequence.front() != Token::kStart ||
      sequence.back() != Token::kEnd) {
    throw MalformedSequence("sequence must be START, expression, END");
  }
  return ExprTree::from_nodes(
      std::vector<Token>(sequence.begin() + 1, sequence.end() - 1));
}

std::vector<int> to_token_ids(std::span<const Token> sequence) {
  std::vector<int> ids;
  ids.reserve(sequence.size());
  for (Token t : sequence) ids.push_back(token_id(t));
  return ids;
}

TokenSequence from_token_ids(std::span<const int> ids) {
  TokenSequence seq;
  seq.reserve(ids.size());
  for (int id : ids) seq.push_back(token_from_id(id));
  return seq;
}

std::string infix_string(const ExprTree& tree) {
  return infix_string_truncated(tree, tree.depth());
}

std::string infix_string_truncated(const ExprTree& tree, int max_depth) {
  std::string out;
  std::size_t pos = 0;
  render(tree, pos, 0, max_depth, out);
  return out;
}

ExprTree parse_infix(std::string_view text) {
  return ExprTree::from_nodes(InfixParser(text).parse());
}

std::string canonical_key(const ExprTree& tree) {
  std::string key;
  for (Token t : tree.nodes()) {
    if (!key.empty()) key += ' ';
    key += token_name(t);
  }
  return key;
}

ExprTree subtree_at(const ExprTree& tree, std::size_t k) {
  const std::size_t end = tree.subtree_end(k);
  const auto nodes = tree.nodes();
  return ExprTree::from_nodes(std::vector<Token>(nodes.begin() + static_cast<std::ptrdiff_t>(k),
                                                 nodes.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::vector<ExprTree> all_subtrees(const ExprTree& tree) {
  std::vector<ExprTree> out;
  out.reserve(tree.size());
  for (std::size_t k = 0; k < tree.size(); ++k) out.push_back(subtree_at(tree, k));
  return out;
}

std::vector<int> node_depths(const ExprTree& tree) {
  std::vector<int> depths;
  depths.reserve(tree.size());
  std::vector<int> open{0};
  for (Token t : tree.nodes()) {
    const int d = open.back();
    open.pop_back();
    depths.push_back(d);
    if (is_function(t)) {
      open.push_back(d + 1);
      open.push_back(d + 1);
    }
  }
  return depths;
}

ExprTree replace_subtree(const ExprTree& tree, std::size_t k, const ExprTree& replacement) {
  const std::size_t end = tree.subtree_end(k);
  const auto nodes = tree.nodes();
  std::vector<Token> out;
  out.reserve(tree.size() - (end - k) + replacement.size());
  out.insert(out.end(), nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), replacement.nodes().begin(), replacement.nodes().end());
  out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(end), nodes.end());
  return ExprTree::from_nodes(std::move(out));
}

}  // namespace transgp
