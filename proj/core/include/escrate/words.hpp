#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace escrate {

using Symbol = std::uint32_t;

/// Ordered set of distinct symbol names. Symbols are referred to by their
/// index everywhere except at I/O boundaries.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  /// The first `size` lowercase letters: a, b, c, ...
  static Alphabet letters(std::size_t size);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const;
  std::optional<Symbol> index_of(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool single_character() const noexcept { return single_char_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

/// A finite, non-empty word over an alphabet of known size.
class Word {
public:
  Word(std::vector<Symbol> letters, std::size_t alphabet_size);

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }

  Symbol front() const { return letters_.front(); }
  Symbol back() const { return letters_.back(); }

  /// `count` copies of `s`.
  static Word repeat(Symbol s, std::size_t count, std::size_t alphabet_size);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
  std::vector<Symbol> letters_;
  std::size_t alphabet_size_;
};

/// Parses a word: concatenated names when every symbol is a single character,
/// otherwise comma-separated names.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Border structure of a word: bits[i] = 1 iff the suffix starting at i equals
/// the prefix of the same length. bits[0] is always 1.
class AutocorrelationVector {
public:
  explicit AutocorrelationVector(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const AutocorrelationVector&, const AutocorrelationVector&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Number of positions i in [k, n) with w_i = a. Zero when k == n.
std::size_t occurrence_count(const Word& w, Symbol a, std::size_t k, std::size_t n);

/// Occurrences of every symbol in the whole word.
std::vector<std::size_t> letter_counts(const Word& w);

/// KMP failure function: fail[i] is the length of the longest proper border
/// of the prefix of length i + 1.
std::vector<std::size_t> failure_function(const Word& w);

AutocorrelationVector autocorrelation(const Word& w);
bool is_prime(const Word& w);

/// Smallest t >= 1 with w_i = w_{i+t} for all valid i (t = |w| allowed).
std::size_t minimal_period(const Word& w);

/// Default cap on A^r for exhaustive enumeration.
inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

/// A^r, saturating at UINT64_MAX.
std::uint64_t word_count(std::size_t alphabet_size, std::size_t length);

/// Lazy lexicographic enumeration of all words of a fixed length.
class WordEnumeration {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    const Word& operator*() const { return *current_; }
    const Word* operator->() const { return &*current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.current_.has_value() == b.current_.has_value() &&
             (!a.current_ || a.current_->letters() == b.current_->letters());
    }

  private:
    friend class WordEnumeration;
    explicit iterator(std::optional<Word> w) : current_(std::move(w)) {}
    std::optional<Word> current_;
  };

  WordEnumeration(std::size_t alphabet_size, std::size_t length,
                  std::uint64_t cap = default_enumeration_cap);

  iterator begin() const;
  iterator end() const { return iterator(); }
  std::uint64_t size() const noexcept { return count_; }

private:
  std::size_t alphabet_size_;
  std::size_t length_;
  std::uint64_t count_;
};

/// Throws CapExceeded if A^r exceeds `cap`.
WordEnumeration enumerate_words(std::size_t alphabet_size, std::size_t length,
                                std::uint64_t cap = default_enumeration_cap);

} // namespace escrate
