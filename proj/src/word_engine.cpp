#include "coxrefl/word_engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace coxrefl {

WordEngine::WordEngine(CoxeterMatrix system, WordEngineConfig config)
    : system_(std::move(system)), config_(config) {
  int n = system_.rank();
  if (n > 64) throw std::invalid_argument("word engine supports rank <= 64");
  if (config_.length_cap < 1)
    throw std::invalid_argument("length cap must be positive");
  braid_len_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Order m = system_.order(i, j);
      if (m.is_finite())
        braid_len_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = m.value();
    }
  words_.emplace_back();  // identity
  ids_.emplace(std::string(), 0);
  edges_.assign(static_cast<std::size_t>(n), kNoElt);
}

namespace {

// Deletes the first adjacent equal pair, if any.
bool delete_pair(const std::string& w, std::string& out) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) {
      out.assign(w, 0, i);
      out.append(w, i + 2, std::string::npos);
      return true;
    }
  return false;
}

}  // namespace

// Breadth-first closure of `start` under length-preserving braid replacements.
// If some word in the closure carries an adjacent equal pair, writes that word
// with the pair deleted into `out` and returns true.  Otherwise writes the
// ShortLex-least word of the closure and returns false.
bool WordEngine::braid_scan(const std::string& start, std::string& out) const {
  if (delete_pair(start, out)) return true;

  const int n = system_.rank();
  std::unordered_set<std::string> visited;
  std::deque<const std::string*> queue;
  visited.insert(start);
  queue.push_back(&*visited.find(start));
  std::string best = start;

  std::string next;
  while (!queue.empty()) {
    const std::string& w = *queue.front();
    queue.pop_front();
    const std::size_t len = w.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const int a = static_cast<unsigned char>(w[i]);
      const int b = static_cast<unsigned char>(w[i + 1]);
      const int m = braid_len_[static_cast<std::size_t>(a) * n + b];
      if (m == 0 || i + static_cast<std::size_t>(m) > len) continue;
      bool alternating = true;
      for (int t = 2; t < m; ++t)
        if (static_cast<unsigned char>(w[i + t]) != (t % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      next = w;
      for (int t = 0; t < m; ++t)
        next[i + t] = static_cast<char>(t % 2 == 0 ? b : a);
      auto [it, inserted] = visited.insert(next);
      if (!inserted) continue;
      if (delete_pair(next, out)) return true;
      if (next < best) best = next;
      queue.push_back(&*it);
      if (visited.size() > config_.closure_budget)
        throw RewriteBudgetExceeded(config_.closure_budget);
    }
  }
  out = best;
  return false;
}

// ShortLex-least reduced word representing the same element as u.  Words with
// no shortening in their braid closure are reduced (Tits), and all reduced
// words of an element are braid-connected, so the closure minimum is canonical.
std::string WordEngine::normalize(std::string u) const {
  std::string out;
  while (braid_scan(u, out)) u = std::move(out);
  return out;
}

Elt WordEngine::intern(const std::string& word) {
  auto it = ids_.find(word);
  if (it != ids_.end()) return it->second;
  Elt id = static_cast<Elt>(words_.size());
  words_.push_back(word);
  ids_.emplace(word, id);
  edges_.resize(edges_.size() + system_.rank(), kNoElt);
  return id;
}

Elt WordEngine::mul_gen_locked(Elt w, Gen gen) {
  const int n = system_.rank();
  if (gen >= n) throw std::out_of_range("generator index out of range");
  Elt& slot = edges_[static_cast<std::size_t>(w) * n + gen];
  if (slot != kNoElt) return slot;

  std::string u = words_[w];
  u.push_back(static_cast<char>(gen));
  std::string nf = normalize(std::move(u));
  if (static_cast<int>(nf.size()) > config_.length_cap)
    throw LengthCapExceeded(config_.length_cap);
  Elt result = intern(nf);
  // Interning may reallocate edges_, so recompute the slot.
  edges_[static_cast<std::size_t>(w) * n + gen] = result;
  edges_[static_cast<std::size_t>(result) * n + gen] = w;  // (ws)s = w
  return result;
}

Elt WordEngine::mul_gen(Elt w, Gen gen) {
  std::lock_guard<std::mutex> lock(mutex_);
  return mul_gen_locked(w, gen);
}

Elt WordEngine::mul(Elt a, Elt b) {
  std::lock_guard<std::mutex> lock(mutex_);
  const std::string rhs = words_[b];
  Elt acc = a;
  for (char c : rhs) acc = mul_gen_locked(acc, static_cast<Gen>(c));
  return acc;
}

Elt WordEngine::inverse(Elt w) {
  std::lock_guard<std::mutex> lock(mutex_);
  const std::string word = words_[w];
  Elt acc = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = mul_gen_locked(acc, static_cast<Gen>(*it));
  return acc;
}

Elt WordEngine::from_word(std::span<const Gen> letters) {
  std::lock_guard<std::mutex> lock(mutex_);
  Elt acc = 0;
  for (Gen g : letters) acc = mul_gen_locked(acc, g);
  return acc;
}

std::string WordEngine::word(Elt w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return words_[w];
}

int WordEngine::length(Elt w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<int>(words_[w].size());
}

std::uint64_t WordEngine::descent_mask(Elt w) {
  std::lock_guard<std::mutex> lock(mutex_);
  const int len = static_cast<int>(words_[w].size());
  std::uint64_t mask = 0;
  for (int g = 0; g < system_.rank(); ++g)
    if (static_cast<int>(words_[mul_gen_locked(w, static_cast<Gen>(g))].size()) < len)
      mask |= 1ull << g;
  return mask;
}

std::size_t WordEngine::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return words_.size();
}

}  // namespace coxrefl
