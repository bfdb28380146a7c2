#include "coxrefl/words.hpp"

#include <charconv>
#include <sstream>

namespace coxrefl {

std::vector<Gen> to_letters(const WordEngine& engine, const Word& w) {
  std::vector<Gen> letters;
  letters.reserve(w.size());
  for (int s : w) {
    if (s < 1 || s > engine.rank())
      throw std::out_of_range("generator " + std::to_string(s) +
                              " out of range 1.." + std::to_string(engine.rank()));
    letters.push_back(static_cast<Gen>(s - 1));
  }
  return letters;
}

Word from_letters(std::string_view letters) {
  Word w;
  w.reserve(letters.size());
  for (char c : letters) w.push_back(static_cast<unsigned char>(c) + 1);
  return w;
}

Elt element_of(WordEngine& engine, const Word& w) {
  auto letters = to_letters(engine, w);
  return engine.from_word(letters);
}

Word normal_form(WordEngine& engine, const Word& w) {
  return from_letters(engine.word(element_of(engine, w)));
}

int length(WordEngine& engine, const Word& w) {
  return engine.length(element_of(engine, w));
}

bool is_reduced(WordEngine& engine, const Word& w) {
  return length(engine, w) == static_cast<int>(w.size());
}

Word multiply(WordEngine& engine, const Word& w, const Word& v) {
  Elt product = engine.mul(element_of(engine, w), element_of(engine, v));
  return from_letters(engine.word(product));
}

Word invert(WordEngine& engine, const Word& w) {
  return from_letters(engine.word(engine.inverse(element_of(engine, w))));
}

std::set<int> descent_set(WordEngine& engine, const Word& w) {
  std::uint64_t mask = engine.descent_mask(element_of(engine, w));
  std::set<int> out;
  for (int g = 0; g < engine.rank(); ++g)
    if (mask & (1ull << g)) out.insert(g + 1);
  return out;
}

Word parse_word_literal(std::string_view text) {
  Word w;
  std::size_t i = 0;
  bool saw_e = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
      throw std::invalid_argument("bad word token '" + std::string(tok) + "'");
    w.push_back(value);
  }
  if (saw_e && !w.empty())
    throw std::invalid_argument("'e' cannot be mixed with generator indices");
  return w;
}

std::string format_word_literal(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

}  // namespace coxrefl
