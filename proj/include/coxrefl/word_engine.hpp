#ifndef COXREFL_WORD_ENGINE_HPP_
#define COXREFL_WORD_ENGINE_HPP_

#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxrefl/coxeter_matrix.hpp"

namespace coxrefl {

// Internal generator index, 0-based.  Public interfaces use 1-based ints.
using Gen = std::uint8_t;

// Handle to an interned group element.  0 is always the identity.
using Elt = std::uint32_t;

inline constexpr Elt kNoElt = 0xFFFFFFFFu;

struct WordEngineConfig {
  // Normal forms longer than this are an error, never a silent truncation.
  int length_cap = 64;
  // Safety valve on the rewriting search for a single product.
  std::size_t closure_budget = 500'000;
};

struct LengthCapExceeded : std::runtime_error {
  explicit LengthCapExceeded(int cap_)
      : std::runtime_error("word length cap " + std::to_string(cap_) +
                           " exceeded; raise the cap explicitly to proceed"),
        cap(cap_) {}
  int cap;
};

struct RewriteBudgetExceeded : std::runtime_error {
  explicit RewriteBudgetExceeded(std::size_t budget)
      : std::runtime_error("rewriting budget of " + std::to_string(budget) +
                           " words exceeded for a single normalization") {}
};

// Exact word problem solver.  Elements are interned by their ShortLex-least
// reduced word; products with a generator are computed by a breadth-first
// closure over the two rewriting operations (delete s s; replace the
// length-m_ij alternating run st st... by ts ts...) and memoized, so the
// engine doubles as a lazily built Cayley graph.
//
// All returned Elt values stay valid for the engine's lifetime.  Public
// methods are safe to call concurrently; the memo table behaves as an
// idempotent cache.
class WordEngine {
 public:
  explicit WordEngine(CoxeterMatrix system, WordEngineConfig config = {});

  const CoxeterMatrix& system() const { return system_; }
  int rank() const { return system_.rank(); }
  const WordEngineConfig& config() const { return config_; }

  Elt identity() const { return 0; }

  // Normal form of w * s_gen.  gen is 0-based.
  Elt mul_gen(Elt w, Gen gen);

  Elt mul(Elt a, Elt b);
  Elt inverse(Elt w);

  // Folds the letters (0-based) onto the identity.
  Elt from_word(std::span<const Gen> letters);

  // ShortLex normal form as 0-based letters, one byte each.
  std::string word(Elt w) const;
  int length(Elt w) const;

  // Bit i set iff length(w * s_i) < length(w): the descent set In(w).
  std::uint64_t descent_mask(Elt w);

  std::size_t size() const;

 private:
  Elt mul_gen_locked(Elt w, Gen gen);
  Elt intern(const std::string& word);
  std::string normalize(std::string u) const;
  bool braid_scan(const std::string& start, std::string& out) const;

  CoxeterMatrix system_;
  WordEngineConfig config_;
  std::vector<int> braid_len_;  // m_ij table, 0 encodes "no braid move"

  mutable std::mutex mutex_;
  std::deque<std::string> words_;            // id -> normal form
  std::unordered_map<std::string, Elt> ids_;  // normal form -> id
  std::vector<Elt> edges_;                    // id * rank + gen -> id, lazily filled
};

}  // namespace coxrefl

#endif
