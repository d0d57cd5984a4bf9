#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flatkit {

// Vector of +/-1 coefficients. Text form: one character per entry,
// '+' for +1 and '-' for -1 (the UTF-8 minus sign U+2212 is accepted too).
class SignSequence {
 public:
  SignSequence() = default;

  explicit SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("SignSequence: length must be >= 1");
    for (int e : entries_)
      if (e != 1 && e != -1) throw std::invalid_argument("SignSequence: entries must be +1 or -1");
  }

  static SignSequence from_string(std::string_view text) {
    std::vector<int> entries;
    entries.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == '+') {
        entries.push_back(+1);
      } else if (c == '-') {
        entries.push_back(-1);
      } else if (c == 0xE2 && i + 2 < text.size() &&
                 static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                 static_cast<unsigned char>(text[i + 2]) == 0x92) {
        entries.push_back(-1);  // U+2212 minus sign
        i += 2;
      } else {
        throw std::invalid_argument("SignSequence: invalid character in sign string");
      }
    }
    return SignSequence(std::move(entries));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (int e : entries_) s.push_back(e > 0 ? '+' : '-');
    return s;
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const SignSequence& o) const { return entries_ == o.entries_; }

  // Lexicographic order on the sign string, '+' before '-'.
  bool operator<(const SignSequence& o) const {
    const std::size_t n = std::min(entries_.size(), o.entries_.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (entries_[j] != o.entries_[j]) return entries_[j] > o.entries_[j];
    }
    return entries_.size() < o.entries_.size();
  }

 private:
  std::vector<int> entries_;
};

// Vector of 0/1 coefficients; the support is the index set of the ones.
class BinarySequence {
 public:
  BinarySequence() = default;

  explicit BinarySequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("BinarySequence: length must be >= 1");
    for (int e : entries_)
      if (e != 0 && e != 1) throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
  }

  static BinarySequence from_string(std::string_view text) {
    std::vector<int> entries;
    entries.reserve(text.size());
    for (char c : text) {
      if (c == '0') entries.push_back(0);
      else if (c == '1') entries.push_back(1);
      else throw std::invalid_argument("BinarySequence: invalid character in bit string");
    }
    return BinarySequence(std::move(entries));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (int e : entries_) s.push_back(e ? '1' : '0');
    return s;
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < entries_.size(); ++j)
      if (entries_[j]) s.push_back(j);
    return s;
  }

  std::int64_t support_size() const {
    std::int64_t n = 0;
    for (int e : entries_) n += e;
    return n;
  }

  double density() const {
    return static_cast<double>(support_size()) / static_cast<double>(entries_.size());
  }

  bool operator==(const BinarySequence& o) const { return entries_ == o.entries_; }

 private:
  std::vector<int> entries_;
};

}  // namespace flatkit
