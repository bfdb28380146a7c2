#ifndef COXREFL_CERTIFICATE_IO_HPP_
#define COXREFL_CERTIFICATE_IO_HPP_

#include <string>
#include <string_view>

#include "coxrefl/constructor.hpp"

namespace coxrefl {

// Certificate text format:
//   index <n>
//   provenance <tag>
//   generators <k>   followed by k reflection words, one per line
//   chambers <n>     followed by n chamber words, one per line
// Words use the literal syntax ("e" or whitespace-separated indices).
std::string format_certificate(const Certificate& cert);

// Parsed data carries no verification state; run the checks explicitly.
struct ParsedCertificate {
  int index = 0;
  Provenance provenance = Provenance::SingleMultipleEdge;
  std::vector<Word> generators;
  std::vector<Word> chambers;
};

ParsedCertificate parse_certificate(std::string_view text);

// Chamber-set file: one word per line.
std::vector<Word> parse_chamber_list(std::string_view text);
std::string format_chamber_list(const std::vector<Word>& chambers);

}  // namespace coxrefl

#endif
