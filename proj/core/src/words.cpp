#include "escrate/words.hpp"

#include "escrate/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace escrate {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw InvalidArgument("an alphabet needs at least two symbols");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("empty symbol name");
    if (n.find(',') != std::string::npos) throw InvalidArgument("symbol names cannot contain ','");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate symbol '" + n + "'");
    if (n.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::letters(std::size_t size) {
  if (size > 26) throw InvalidArgument("letters() supports at most 26 symbols");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size()) throw IndexOutOfRange("symbol index out of range");
  return names_[s];
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Symbol>(it - names_.begin());
}

Word::Word(std::vector<Symbol> letters, std::size_t alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (letters_.empty()) throw InvalidArgument("words must be non-empty");
  if (alphabet_size_ < 2) throw InvalidArgument("an alphabet needs at least two symbols");
  for (Symbol s : letters_)
    if (s >= alphabet_size_) throw IndexOutOfRange("letter index outside the alphabet");
}

Word Word::repeat(Symbol s, std::size_t count, std::size_t alphabet_size) {
  return Word(std::vector<Symbol>(count, s), alphabet_size);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> letters;
  auto lookup = [&](std::string_view name) {
    auto idx = alphabet.index_of(name);
    if (!idx) throw ParseError("unknown symbol '" + std::string(name) + "'");
    letters.push_back(*idx);
  };
  if (text.find(',') != std::string_view::npos || !alphabet.single_character()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - start);
      lookup(piece);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) lookup(std::string_view(&c, 1));
  }
  if (letters.empty()) throw ParseError("empty word");
  return Word(std::move(letters), alphabet.size());
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.alphabet_size() != alphabet.size()) throw AlphabetMismatch("word and alphabet sizes differ");
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !alphabet.single_character()) out += ',';
    out += alphabet.name(w[i]);
  }
  return out;
}

AutocorrelationVector::AutocorrelationVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  if (bits_.empty() || bits_[0] != 1)
    throw InvalidArgument("autocorrelation vectors start with c_0 = 1");
}

std::size_t occurrence_count(const Word& w, Symbol a, std::size_t k, std::size_t n) {
  if (k > n || n > w.size()) throw IndexOutOfRange("occurrence_count requires 0 <= k <= n <= |w|");
  return static_cast<std::size_t>(
      std::count(w.letters().begin() + static_cast<std::ptrdiff_t>(k),
                 w.letters().begin() + static_cast<std::ptrdiff_t>(n), a));
}

std::vector<std::size_t> letter_counts(const Word& w) {
  std::vector<std::size_t> counts(w.alphabet_size(), 0);
  for (Symbol s : w.letters()) ++counts[s];
  return counts;
}

std::vector<std::size_t> failure_function(const Word& w) {
  const auto n = w.size();
  std::vector<std::size_t> fail(n, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

AutocorrelationVector autocorrelation(const Word& w) {
  const auto n = w.size();
  std::vector<std::uint8_t> bits(n, 0);
  bits[0] = 1;
  // Borders of w are the failure chain from the full word; a border of
  // length b puts a 1 at shift n - b.
  auto fail = failure_function(w);
  for (std::size_t b = fail[n - 1]; b > 0; b = fail[b - 1]) bits[n - b] = 1;
  return AutocorrelationVector(std::move(bits));
}

bool is_prime(const Word& w) {
  return failure_function(w).back() == 0;
}

std::size_t minimal_period(const Word& w) { return w.size() - failure_function(w).back(); }

std::uint64_t word_count(std::size_t alphabet_size, std::size_t length) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / alphabet_size)
      return std::numeric_limits<std::uint64_t>::max();
    count *= alphabet_size;
  }
  return count;
}

WordEnumeration::WordEnumeration(std::size_t alphabet_size, std::size_t length, std::uint64_t cap)
    : alphabet_size_(alphabet_size), length_(length), count_(word_count(alphabet_size, length)) {
  if (length == 0) throw InvalidArgument("word length must be at least 1");
  if (alphabet_size < 2) throw InvalidArgument("an alphabet needs at least two symbols");
  if (count_ > cap)
    throw CapExceeded("enumerating " + std::to_string(alphabet_size) + "^" + std::to_string(length) +
                      " words exceeds the cap of " + std::to_string(cap));
}

WordEnumeration::iterator WordEnumeration::begin() const {
  return iterator(Word(std::vector<Symbol>(length_, 0), alphabet_size_));
}

WordEnumeration::iterator& WordEnumeration::iterator::operator++() {
  auto letters = current_->letters();
  const auto base = current_->alphabet_size();
  std::size_t i = letters.size();
  while (i > 0) {
    --i;
    if (letters[i] + 1 < base) {
      ++letters[i];
      std::fill(letters.begin() + static_cast<std::ptrdiff_t>(i) + 1, letters.end(), 0);
      current_ = Word(std::move(letters), base);
      return *this;
    }
  }
  current_.reset();
  return *this;
}

WordEnumeration enumerate_words(std::size_t alphabet_size, std::size_t length, std::uint64_t cap) {
  return WordEnumeration(alphabet_size, length, cap);
}

} // namespace escrate
