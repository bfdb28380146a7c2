#include "coxrefl/certificate_io.hpp"

#include <sstream>

namespace coxrefl {

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "index " << cert.index << "\n";
  out << "provenance " << to_string(cert.provenance) << "\n";
  out << "generators " << cert.generators.size() << "\n";
  for (const Word& w : cert.generators) out << format_word_literal(w) << "\n";
  out << "chambers " << cert.chambers.size() << "\n";
  for (const Word& w : cert.chambers) out << format_word_literal(w) << "\n";
  return out.str();
}

namespace {

struct LineReader {
  std::vector<std::string> lines;
  std::size_t next = 0;

  explicit LineReader(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(pos, end - pos));
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) lines.push_back(line);
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  std::string take(const char* what) {
    if (next >= lines.size())
      throw std::invalid_argument(std::string("certificate truncated; expected ") +
                                  what);
    return lines[next++];
  }
};

std::pair<std::string, std::string> split_keyword(const std::string& line) {
  std::istringstream in(line);
  std::string keyword, rest;
  in >> keyword;
  std::getline(in, rest);
  return {keyword, rest};
}

int parse_count(const std::string& line, const char* keyword) {
  auto [kw, rest] = split_keyword(line);
  if (kw != keyword)
    throw std::invalid_argument("expected '" + std::string(keyword) +
                                " <n>', got '" + line + "'");
  try {
    std::size_t used = 0;
    int value = std::stoi(rest, &used);
    if (value < 0) throw std::invalid_argument("negative count");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad count in '" + line + "'");
  }
}

}  // namespace

ParsedCertificate parse_certificate(std::string_view text) {
  LineReader reader(text);
  ParsedCertificate cert;
  cert.index = parse_count(reader.take("'index <n>'"), "index");

  auto [kw, tag] = split_keyword(reader.take("'provenance <tag>'"));
  if (kw != "provenance")
    throw std::invalid_argument("expected 'provenance <tag>'");
  std::istringstream tag_in(tag);
  std::string tag_word;
  tag_in >> tag_word;
  cert.provenance = provenance_from_string(tag_word);

  int gen_count = parse_count(reader.take("'generators <k>'"), "generators");
  for (int t = 0; t < gen_count; ++t)
    cert.generators.push_back(parse_word_literal(reader.take("a reflection word")));

  int chamber_count = parse_count(reader.take("'chambers <n>'"), "chambers");
  for (int t = 0; t < chamber_count; ++t)
    cert.chambers.push_back(parse_word_literal(reader.take("a chamber word")));

  if (cert.index != chamber_count)
    throw std::invalid_argument("certificate index " + std::to_string(cert.index) +
                                " does not equal its chamber count " +
                                std::to_string(chamber_count));
  return cert;
}

std::vector<Word> parse_chamber_list(std::string_view text) {
  LineReader reader(text);
  std::vector<Word> out;
  while (reader.next < reader.lines.size())
    out.push_back(parse_word_literal(reader.take("a chamber word")));
  return out;
}

std::string format_chamber_list(const std::vector<Word>& chambers) {
  std::ostringstream out;
  for (const Word& w : chambers) out << format_word_literal(w) << "\n";
  return out.str();
}

}  // namespace coxrefl
