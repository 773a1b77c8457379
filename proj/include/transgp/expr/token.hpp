#ifndef TRANSGP_EXPR_TOKEN_HPP_
#define TRANSGP_EXPR_TOKEN_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace transgp {

// Vocabulary of rule trees. The numeric values are the token ids
// and must never change: model files and datasets store them directly.
enum class Token : std::uint8_t {
  kStart = 0,
  kEnd = 1,
  kAdd = 2,
  kSub = 3,
  kMul = 4,
  kPDiv = 5,
  kMax = 6,
  kMin = 7,
  kNIQ = 8,
  kWIQ = 9,
  kMWT = 10,
  kPT = 11,
  kNPT = 12,
  kOWT = 13,
  kWKR = 14,
  kNOR = 15,
  kSLACK = 16,
  kTIS = 17,
};

inline constexpr int kVocabSize = 18;
inline constexpr int kNumFunctions = 6;
inline constexpr int kNumTerminals = 10;
inline constexpr int kFirstFunctionId = 2;
inline constexpr int kFirstTerminalId = 8;
inline constexpr int kDefaultMaxDepth = 8;

inline constexpr std::array<Token, kNumFunctions> kFunctions = {
    Token::kAdd, Token::kSub, Token::kMul, Token::kPDiv, Token::kMax, Token::kMin};
inline constexpr std::array<Token, kNumTerminals> kTerminals = {
    Token::kNIQ, Token::kWIQ, Token::kMWT, Token::kPT,    Token::kNPT,
    Token::kOWT, Token::kWKR, Token::kNOR, Token::kSLACK, Token::kTIS};

constexpr int token_id(Token t) { return static_cast<int>(t); }
constexpr bool is_special(Token t) { return token_id(t) < kFirstFunctionId; }
constexpr bool is_function(Token t) {
  return token_id(t) >= kFirstFunctionId && token_id(t) < kFirstTerminalId;
}
constexpr bool is_terminal(Token t) { return token_id(t) >= kFirstTerminalId; }
constexpr int terminal_index(Token t) { return token_id(t) - kFirstTerminalId; }

// Throws MalformedSequence for ids outside [0, 18).
Token token_from_id(int id);

// Upper-case identifier: "START", "ADD", "PDIV", "SLACK", ...
std::string_view token_name(Token t);
// Rendering symbol used in infix text: "+", "-", "*", "/", "max", "min",
// or the terminal name.
std::string_view token_symbol(Token t);
// Accepts either a name or a symbol (case-sensitive for terminals).
std::optional<Token> token_from_text(std::string_view text);

// Small fixed-size set of tokens.
class TokenSet {
 public:
  TokenSet() = default;

  static TokenSet functions_and_terminals();
  static TokenSet terminals_only();
  static TokenSet only(Token t);

  void insert(Token t) { bits_.set(static_cast<std::size_t>(token_id(t))); }
  bool contains(Token t) const { return bits_.test(static_cast<std::size_t>(token_id(t))); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Token> to_vector() const;

  bool operator==(const TokenSet&) const = default;

 private:
  std::bitset<kVocabSize> bits_;
};

}  // namespace transgp

#endif  // TRANSGP_EXPR_TOKEN_HPP_
