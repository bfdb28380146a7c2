#include "coxrefl/coxeter_matrix.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace coxrefl {

Order Order::finite(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("order " + std::to_string(m) +
                                " is not odd and >= 3 (not odd-angled)");
  if (m > kMaxFiniteOrder)
    throw std::invalid_argument("order " + std::to_string(m) + " exceeds " +
                                std::to_string(kMaxFiniteOrder));
  return Order(m, false);
}

int Order::value() const {
  if (infinite_) throw std::logic_error("value() called on infinite order");
  return value_;
}

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  orders_.assign(static_cast<std::size_t>(rank) * (rank - 1) / 2,
                 Order::infinite());
}

int CoxeterMatrix::pair_index(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > rank_ || j > rank_)
    throw std::out_of_range("generator pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for rank " +
                            std::to_string(rank_));
  if (i > j) std::swap(i, j);
  // index of (i,j), 1 <= i < j <= n, in row-major upper triangle
  return (i - 1) * rank_ - (i - 1) * i / 2 + (j - i - 1);
}

Order CoxeterMatrix::order(int i, int j) const {
  return orders_[static_cast<std::size_t>(pair_index(i, j))];
}

void CoxeterMatrix::set_order(int i, int j, Order m) {
  orders_[static_cast<std::size_t>(pair_index(i, j))] = m;
}

std::string CoxeterMatrix::describe() const {
  std::ostringstream out;
  out << "rank " << rank_ << ":";
  for (int i = 1; i <= rank_; ++i)
    for (int j = i + 1; j <= rank_; ++j) {
      Order m = order(i, j);
      out << " m" << i << j << "=";
      if (m.is_finite())
        out << m.value();
      else
        out << "inf";
    }
  return out.str();
}

ParseError::ParseError(int line_, int column_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    tokens.push_back(
        {std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line_no, tok.column,
                     std::string("expected ") + what + ", got '" + tok.text + "'");
  return value;
}

}  // namespace

CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }

  int line_no = 0;
  int rank = -1;
  std::vector<bool> seen;
  CoxeterMatrix result(1);

  for (std::size_t li = 0; li < lines.size(); ++li) {
    line_no = static_cast<int>(li) + 1;
    auto tokens = tokenize_line(lines[li]);
    if (tokens.empty()) continue;

    if (rank < 0) {
      if (tokens[0].text != "rank")
        throw ParseError(line_no, tokens[0].column,
                         "first directive must be 'rank <n>'");
      if (tokens.size() != 2)
        throw ParseError(line_no, tokens[0].column, "'rank' takes one argument");
      rank = parse_int(tokens[1], line_no, "a positive integer");
      if (rank < 1)
        throw ParseError(line_no, tokens[1].column, "rank must be >= 1");
      result = CoxeterMatrix(rank);
      seen.assign(static_cast<std::size_t>(rank + 1) * (rank + 1), false);
      continue;
    }

    if (tokens[0].text != "m")
      throw ParseError(line_no, tokens[0].column,
                       "expected 'm <i> <j> <v>' directive");
    if (tokens.size() != 4)
      throw ParseError(line_no, tokens[0].column, "'m' takes three arguments");

    int i = parse_int(tokens[1], line_no, "a generator index");
    int j = parse_int(tokens[2], line_no, "a generator index");
    if (i < 1 || i > rank)
      throw ParseError(line_no, tokens[1].column,
                       "index " + std::to_string(i) + " out of range 1.." +
                           std::to_string(rank));
    if (j < 1 || j > rank)
      throw ParseError(line_no, tokens[2].column,
                       "index " + std::to_string(j) + " out of range 1.." +
                           std::to_string(rank));
    if (i == j)
      throw ParseError(line_no, tokens[2].column,
                       "diagonal entries are implicit; i and j must differ");

    int a = std::min(i, j), b = std::max(i, j);
    if (seen[static_cast<std::size_t>(a) * (rank + 1) + b])
      throw ParseError(line_no, tokens[1].column,
                       "duplicate pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
    seen[static_cast<std::size_t>(a) * (rank + 1) + b] = true;

    if (tokens[3].text == "inf") {
      result.set_order(i, j, Order::infinite());
      continue;
    }
    int v = parse_int(tokens[3], line_no, "an odd integer >= 3 or 'inf'");
    if (v < 3 || v % 2 == 0)
      throw ParseError(line_no, tokens[3].column,
                       "order " + std::to_string(v) + " not odd-angled");
    if (v > kMaxFiniteOrder)
      throw ParseError(line_no, tokens[3].column,
                       "order " + std::to_string(v) + " exceeds the cap " +
                           std::to_string(kMaxFiniteOrder));
    result.set_order(i, j, Order::finite(v));
  }

  if (rank < 0) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'rank' line");
  return result;
}

std::string format_coxeter_matrix(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << "rank " << m.rank() << "\n";
  for (int i = 1; i <= m.rank(); ++i)
    for (int j = i + 1; j <= m.rank(); ++j)
      if (m.order(i, j).is_finite())
        out << "m " << i << " " << j << " " << m.order(i, j).value() << "\n";
  return out.str();
}

CoxeterMatrix triangle_system(int m12, int m13, int m23) {
  CoxeterMatrix m(3);
  if (m12 != 0) m.set_order(1, 2, Order::finite(m12));
  if (m13 != 0) m.set_order(1, 3, Order::finite(m13));
  if (m23 != 0) m.set_order(2, 3, Order::finite(m23));
  return m;
}

}  // namespace coxrefl
