#include "tgraph/creation_sequence.hpp"

#include <algorithm>
#include <bit>

#include "tgraph/error.hpp"

namespace tgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::TailTooLong: return "TailTooLong";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotThreshold: return "NotThreshold";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
  }
  return "Unknown";
}

CreationSequence CreationSequence::parse(std::string_view text) {
  CreationSequence s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidCharacter,
                  "character '" + std::string(1, c) + "' at position " + std::to_string(i + 1) +
                      " is not 0 or 1");
    }
    s.push_back(c - '0');
  }
  return s;
}

CreationSequence CreationSequence::from_value(std::uint64_t value, std::size_t length) {
  if (length > 64) {
    throw Error(ErrorCode::LengthCapExceeded, "from_value supports at most 64 digits");
  }
  CreationSequence s;
  s.length_ = length;
  if (length == 0) return s;
  // Digit i sits at bit i-1 of the word, so reverse the low `length` bits.
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < length; ++i) {
    packed |= ((value >> (length - 1 - i)) & 1U) << i;
  }
  s.words_.push_back(packed);
  return s;
}

CreationSequence CreationSequence::from_digits(const std::vector<int>& digits) {
  CreationSequence s;
  for (int d : digits) {
    if (d != 0 && d != 1) {
      throw Error(ErrorCode::InvalidCharacter, "digit " + std::to_string(d) + " is not 0 or 1");
    }
    s.push_back(d);
  }
  return s;
}

int CreationSequence::digit(std::size_t i) const {
  if (i == 0 || i > length_) {
    throw Error(ErrorCode::OutOfRange,
                "digit index " + std::to_string(i) + " outside 1.." + std::to_string(length_));
  }
  return (*this)[i];
}

std::size_t CreationSequence::ones() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::uint64_t CreationSequence::value() const {
  if (length_ > 64) {
    throw Error(ErrorCode::LengthCapExceeded, "value() supports at most 64 digits");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 1; i <= length_; ++i) v = (v << 1) | static_cast<std::uint64_t>((*this)[i]);
  return v;
}

void CreationSequence::push_back(int digit) {
  if (length_ % 64 == 0) words_.push_back(0);
  if (digit) words_.back() |= std::uint64_t{1} << (length_ % 64);
  ++length_;
}

CreationSequence CreationSequence::prefix(std::size_t len) const {
  len = std::min(len, length_);
  CreationSequence s;
  for (std::size_t i = 1; i <= len; ++i) s.push_back((*this)[i]);
  return s;
}

CreationSequence CreationSequence::without(std::size_t i) const {
  CreationSequence s;
  for (std::size_t j = 1; j <= length_; ++j) {
    if (j != i) s.push_back((*this)[j]);
  }
  return s;
}

std::string CreationSequence::to_string() const {
  std::string out;
  out.reserve(length_);
  for (std::size_t i = 1; i <= length_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

TailCounts tail_counts(const CreationSequence& s, std::size_t k) {
  if (k > s.size()) {
    throw Error(ErrorCode::TailTooLong, "tail length " + std::to_string(k) +
                                            " exceeds sequence length " + std::to_string(s.size()));
  }
  TailCounts t{0, 0, k};
  for (std::size_t i = s.size() - k + 1; i <= s.size(); ++i) {
    if (s[i]) {
      ++t.ones;
    } else {
      ++t.zeros;
    }
  }
  return t;
}

std::size_t h(const CreationSequence& s) {
  long long excess = 0;
  long long best = 0;
  for (std::size_t i = s.size(); i >= 1; --i) {
    excess += s[i] ? -1 : 1;
    best = std::max(best, excess);
  }
  return static_cast<std::size_t>(best);
}

std::size_t h_by_definition(const CreationSequence& s) {
  std::size_t best = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    const auto t = tail_counts(s, k);
    if (t.zeros > t.ones) best = std::max(best, t.zeros - t.ones);
  }
  return best;
}

std::size_t r(const CreationSequence& s) {
  for (std::size_t i = s.size(); i >= 1; --i) {
    if (s[i]) return i;
  }
  return 0;
}

bool is_subsequence(const CreationSequence& a, const CreationSequence& b) {
  std::size_t matched = 0;
  for (std::size_t j = 1; j <= b.size() && matched < a.size(); ++j) {
    if (b[j] == a[matched + 1]) ++matched;
  }
  return matched == a.size();
}

SequenceSpace::SequenceSpace(std::size_t m, std::size_t cap)
    : SequenceSpace(m, 0, 0, cap) {
  last_ = std::uint64_t{1} << m;
}

SequenceSpace::SequenceSpace(std::size_t m, std::uint64_t first, std::uint64_t last,
                             std::size_t cap)
    : length_(m), first_(first), last_(last) {
  if (m > cap || m > 62) {
    throw Error(ErrorCode::LengthCapExceeded, "cannot enumerate sequences of length " +
                                                  std::to_string(m) + " (cap " +
                                                  std::to_string(std::min<std::size_t>(cap, 62)) + ")");
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  last_ = std::min(last_, total);
  first_ = std::min(first_, last_);
}

}  // namespace tgraph
