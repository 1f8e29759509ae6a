#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace tgraph {

/// Number of zeros and ones among the last `k` digits of a sequence.
struct TailCounts {
  std::size_t zeros = 0;
  std::size_t ones = 0;
  std::size_t k = 0;

  friend bool operator==(const TailCounts&, const TailCounts&) = default;
};

/// Binary creation sequence s_1 ... s_m of an (m+1)-vertex threshold graph.
///
/// Digit i (1-based, left to right) records whether vertex i was added as an
/// isolated vertex (0) or a dominating vertex (1). Vertex 0 is the base
/// vertex and has no digit. Digits are packed 64 to a word.
class CreationSequence {
 public:
  CreationSequence() = default;

  /// Parses a string over {0,1}; the leftmost character is digit 1.
  /// Throws Error(InvalidCharacter) on anything else.
  static CreationSequence parse(std::string_view text);

  /// The sequence of `length` digits whose binary value, reading digit 1 as
  /// the most significant bit, is `value`. Requires length <= 64.
  static CreationSequence from_value(std::uint64_t value, std::size_t length);

  static CreationSequence from_digits(const std::vector<int>& digits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  /// Order of the encoded graph, |s| + 1.
  std::size_t order() const noexcept { return length_ + 1; }

  /// Digit at 1-based position `i`. Throws Error(OutOfRange).
  int digit(std::size_t i) const;
  /// Unchecked 1-based access.
  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U);
  }

  std::size_t ones() const noexcept;
  std::size_t zeros() const noexcept { return length_ - ones(); }

  /// Binary value with digit 1 as the most significant bit. Requires size() <= 64.
  std::uint64_t value() const;

  void push_back(int digit);

  /// First `len` digits s_1 ... s_len.
  CreationSequence prefix(std::size_t len) const;
  /// Sequence with the digit at 1-based position `i` removed.
  CreationSequence without(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const CreationSequence& a, const CreationSequence& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }
  friend bool operator<(const CreationSequence& a, const CreationSequence& b) {
    return a.to_string() < b.to_string();
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

inline CreationSequence parse_sequence(std::string_view text) {
  return CreationSequence::parse(text);
}

/// Zeros and ones among the last k digits. Throws Error(TailTooLong) if k > |s|.
TailCounts tail_counts(const CreationSequence& s, std::size_t k);

/// max over 0 <= k <= |s| of z_k(s) - u_k(s), by one right-to-left pass.
std::size_t h(const CreationSequence& s);

/// Same quantity evaluated literally from tail_counts for every k.
std::size_t h_by_definition(const CreationSequence& s);

/// Index of the right-most one, or 0 if the sequence has none.
std::size_t r(const CreationSequence& s);

/// True iff `a` can be obtained from `b` by deleting digits.
bool is_subsequence(const CreationSequence& a, const CreationSequence& b);

inline constexpr std::size_t kDefaultEnumerationCap = 30;

/// All 2^m sequences of length m in lexicographic order, optionally
/// restricted to the half-open value range [first, last).
class SequenceSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CreationSequence;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = CreationSequence;

    iterator() = default;
    iterator(std::uint64_t value, std::size_t length) : value_(value), length_(length) {}

    CreationSequence operator*() const { return CreationSequence::from_value(value_, length_); }
    iterator& operator++() {
      ++value_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++value_;
      return old;
    }
    std::uint64_t value() const noexcept { return value_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.value_ == b.value_; }

   private:
    std::uint64_t value_ = 0;
    std::size_t length_ = 0;
  };

  /// Throws Error(LengthCapExceeded) if m > cap.
  explicit SequenceSpace(std::size_t m, std::size_t cap = kDefaultEnumerationCap);
  SequenceSpace(std::size_t m, std::uint64_t first, std::uint64_t last,
                std::size_t cap = kDefaultEnumerationCap);

  iterator begin() const { return {first_, length_}; }
  iterator end() const { return {last_, length_}; }
  std::uint64_t size() const noexcept { return last_ - first_; }
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t length_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline SequenceSpace enumerate_sequences(std::size_t m, std::size_t cap = kDefaultEnumerationCap) {
  return SequenceSpace(m, cap);
}

}  // namespace tgraph
