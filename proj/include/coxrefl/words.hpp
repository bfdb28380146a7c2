#ifndef COXREFL_WORDS_HPP_
#define COXREFL_WORDS_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coxrefl/word_engine.hpp"

namespace coxrefl {

// A group element as a sequence of 1-based generator indices.
using Word = std::vector<int>;

// Conversions between public 1-based words and engine letters.
std::vector<Gen> to_letters(const WordEngine& engine, const Word& w);
Word from_letters(std::string_view letters);

Elt element_of(WordEngine& engine, const Word& w);

// ShortLex-least reduced word representing the same element.
Word normal_form(WordEngine& engine, const Word& w);

int length(WordEngine& engine, const Word& w);
bool is_reduced(WordEngine& engine, const Word& w);
Word multiply(WordEngine& engine, const Word& w, const Word& v);
Word invert(WordEngine& engine, const Word& w);

// In(w) = { s : l(ws) < l(w) }.
std::set<int> descent_set(WordEngine& engine, const Word& w);

// Word literal syntax: whitespace-separated 1-based indices, "e" for the
// empty word.  Throws std::invalid_argument on malformed input.
Word parse_word_literal(std::string_view text);
std::string format_word_literal(const Word& w);

}  // namespace coxrefl

#endif
