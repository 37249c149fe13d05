#include "khtrans/braid.hpp"

#include "khtrans/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace khtrans {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw PreconditionError("braid must have at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_)
      throw PreconditionError("braid letter " + std::to_string(l) + " invalid on " +
                              std::to_string(strands_) + " strands");
  }
}

int BraidWord::positive_count() const noexcept {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(), [](int l) { return l > 0; }));
}

int BraidWord::negative_count() const noexcept {
  return static_cast<int>(letters_.size()) - positive_count();
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    out << (i ? " " : "") << letters_[i];
  return out.str();
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands_hint) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]))
      ++j;
    std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
      throw ParseError("non-integer token '" + std::string(token) + "' in braid word");
    if (value == 0)
      throw ParseError("braid letter 0 is not a generator");
    letters.push_back(value);
    i = j;
  }

  int needed = 1;
  for (int l : letters)
    needed = std::max(needed, std::abs(l) + 1);
  int strands = needed;
  if (strands_hint) {
    if (*strands_hint < 1)
      throw ParseError("strand count must be positive");
    if (*strands_hint < needed)
      throw ParseError("letter magnitude " + std::to_string(needed - 1) + " needs at least " +
                       std::to_string(needed) + " strands, got " + std::to_string(*strands_hint));
    strands = *strands_hint;
  }
  return BraidWord(strands, std::move(letters));
}

Diagram::Diagram(int strands, std::vector<Crossing> crossings)
    : strands_(strands), crossings_(std::move(crossings)) {
  for (const auto& c : crossings_) {
    if (c.position < 1 || c.position >= strands_ || (c.sign != 1 && c.sign != -1))
      throw PreconditionError("malformed crossing");
    (c.sign > 0 ? n_plus_ : n_minus_)++;
  }
}

Diagram closure_diagram(const BraidWord& w) {
  std::vector<Crossing> crossings;
  crossings.reserve(w.size());
  for (int l : w.letters())
    crossings.push_back({std::abs(l), l > 0 ? 1 : -1});
  return Diagram(w.strands(), std::move(crossings));
}

int self_linking(const BraidWord& w) {
  return -w.strands() + w.positive_count() - w.negative_count();
}

BraidWord markov_move(const BraidWord& w, const MarkovMove& move) {
  return std::visit(
      [&](const auto& m) -> BraidWord {
        using M = std::decay_t<decltype(m)>;
        std::vector<int> letters = w.letters();
        if constexpr (std::is_same_v<M, Conjugate>) {
          if (m.letter == 0 || std::abs(m.letter) >= w.strands())
            throw PreconditionError("conjugating letter out of range");
          letters.insert(letters.begin(), m.letter);
          letters.push_back(-m.letter);
          return BraidWord(w.strands(), std::move(letters));
        } else {
          constexpr int sign = std::is_same_v<M, PositiveStab> ? 1 : -1;
          letters.push_back(sign * w.strands());
          return BraidWord(w.strands() + 1, std::move(letters));
        }
      },
      move);
}

int link_components(const BraidWord& w) {
  std::vector<int> perm(w.strands());
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = perm[t])
      seen[t] = true;
  }
  return cycles;
}

bool is_positive_braid(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](int l) { return l > 0; });
}

} // namespace khtrans
