#include "transgp/expr/token.hpp"

#include <string>

#include "transgp/common/error.hpp"

namespace transgp {

namespace {

constexpr std::array<std::string_view, kVocabSize> kNames = {
    "START", "END", "ADD", "SUB", "MUL", "PDIV", "MAX", "MIN",   "NIQ",
    "WIQ",   "MWT", "PT",  "NPT", "OWT", "WKR",  "NOR", "SLACK", "TIS"};

constexpr std::array<std::string_view, kVocabSize> kSymbols = {
    "START", "END", "+",   "-",   "*",   "/",   "max", "min",   "NIQ",
    "WIQ",   "MWT", "PT",  "NPT", "OWT", "WKR", "NOR", "SLACK", "TIS"};

}  // namespace

Token token_from_id(int id) {
  if (id < 0 || id >= kVocabSize) {
    throw MalformedSequence("token id out of range: " + std::to_string(id));
  }
  return static_cast<Token>(id);
}

std::string_view token_name(Token t) { return kNames[static_cast<std::size_t>(token_id(t))]; }

std::string_view token_symbol(Token t) {
  return kSymbols[static_cast<std::size_t>(token_id(t))];
}

std::optional<Token> token_from_text(std::string_view text) {
  for (int id = 0; id < kVocabSize; ++id) {
    if (kNames[static_cast<std::size_t>(id)] == text ||
        kSymbols[static_cast<std::size_t>(id)] == text) {
      return static_cast<Token>(id);
    }
  }
  return std::nullopt;
}

TokenSet TokenSet::functions_and_terminals() {
  TokenSet s;
  for (Token t : kFunctions) s.insert(t);
  for (Token t : kTerminals) s.insert(t);
  return s;
}

TokenSet TokenSet::terminals_only() {
  TokenSet s;
  for (Token t : kTerminals) s.insert(t);
  return s;
}

TokenSet TokenSet::only(Token t) {
  TokenSet s;
  s.insert(t);
  return s;
}

std::vector<Token> TokenSet::to_vector() const {
  std::vector<Token> out;
  for (int id = 0; id < kVocabSize; ++id) {
    if (bits_.test(static_cast<std::size_t>(id))) out.push_back(static_cast<Token>(id));
  }
  return out;
}

}  // namespace transgp
