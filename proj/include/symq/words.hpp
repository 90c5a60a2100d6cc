#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace symq {

/// Ordered list of distinct generator symbols. Symbols must look like
/// identifiers so the element syntax (~, ^, ., '-1) stays unambiguous.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;  // -1 when absent

  bool operator==(const GeneratorSet&) const = default;

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
};

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the free group on a generator set.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int gen, int exp = 1);

  /// Append a letter, cancelling against the tail.
  void push(Letter l);

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }
  FreeWord inverse() const;

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace symq
