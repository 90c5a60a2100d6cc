#include "symq/words.hpp"

#include <set>
#include <stdexcept>

namespace symq {

bool GeneratorSet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(name[0])) return false;
  for (char c : name.substr(1))
    if (!alnum(c)) return false;
  return true;
}

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty())
    throw std::invalid_argument("generator set must be non-empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n))
      throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

int GeneratorSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

FreeWord FreeWord::generator(int gen, int exp) {
  FreeWord w;
  w.push({gen, exp});
  return w;
}

void FreeWord::push(Letter l) {
  if (l.exp != 1 && l.exp != -1)
    throw std::invalid_argument("letter exponent must be +1 or -1");
  if (!letters_.empty() && letters_.back().gen == l.gen &&
      letters_.back().exp == -l.exp) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

}  // namespace symq
