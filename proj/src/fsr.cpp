#include "symq/fsr.hpp"

#include <sstream>
#include <stdexcept>

namespace symq {

FsrElement fsr_gen(int gen, bool barred) { return {{gen, barred}, {}}; }

FreeWord augment(const FsrElement& a) {
  FreeWord w = a.word.inverse();
  w.push({a.letter.gen, a.letter.barred ? -1 : 1});
  w *= a.word;
  return w;
}

FsrElement fsr_op(const FsrElement& a, const FsrElement& b) {
  return {a.letter, a.word * augment(b)};
}

FsrElement fsr_op_inv(const FsrElement& a, const FsrElement& b) {
  return {a.letter, a.word * augment(b).inverse()};
}

FsrElement fsr_act(FsrElement a, const FreeWord& z) {
  a.word *= z;
  return a;
}

FsrElement fsr_rho(FsrElement a) {
  a.letter.barred = !a.letter.barred;
  return a;
}

std::string to_string(const FreeWord& w, const GeneratorSet& gens) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << '.';
    os << gens.name(l.gen);
    if (l.exp < 0) os << "'-1";
    first = false;
  }
  return os.str();
}

std::string to_string(const FsrElement& e, const GeneratorSet& gens) {
  std::string s;
  if (e.letter.barred) s += '~';
  s += gens.name(e.letter.gen);
  if (!e.word.empty()) {
    s += '^';
    s += to_string(e.word, gens);
  }
  return s;
}

namespace {

// One "name['-1]" chunk out of a dotted word.
Letter parse_letter(std::string_view tok, const GeneratorSet& gens) {
  int exp = 1;
  if (tok.size() > 3 && tok.substr(tok.size() - 3) == "'-1") {
    exp = -1;
    tok.remove_suffix(3);
  }
  int g = gens.index_of(tok);
  if (g < 0)
    throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
  return {g, exp};
}

}  // namespace

FreeWord parse_word(std::string_view text, const GeneratorSet& gens) {
  FreeWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = text.substr(pos, dot - pos);
    if (tok.empty()) throw std::invalid_argument("empty letter in word");
    w.push(parse_letter(tok, gens));
    pos = dot + 1;
  }
  return w;
}

FsrElement parse_fsr_element(std::string_view text, const GeneratorSet& gens) {
  if (text.empty()) throw std::invalid_argument("empty element");
  FsrElement e;
  if (text[0] == '~') {
    e.letter.barred = true;
    text.remove_prefix(1);
  }
  std::size_t caret = text.find('^');
  std::string_view name =
      caret == std::string_view::npos ? text : text.substr(0, caret);
  int g = gens.index_of(name);
  if (g < 0)
    throw std::invalid_argument("unknown generator '" + std::string(name) +
                                "'");
  e.letter.gen = g;
  if (caret != std::string_view::npos)
    e.word = parse_word(text.substr(caret + 1), gens);
  return e;
}

}  // namespace symq
