#pragma once

#include <string>
#include <string_view>

#include "symq/words.hpp"

namespace symq {

/// Letter of a free symmetric rack element: a generator or its barred copy.
struct FsrLetter {
  int gen = 0;
  bool barred = false;
  auto operator<=>(const FsrLetter&) const = default;
};

/// Element letter^word. Words live in the free group on the unbarred
/// generators; bars turn into inverses only under augmentation.
struct FsrElement {
  FsrLetter letter;
  FreeWord word;
  auto operator<=>(const FsrElement&) const = default;
};

FsrElement fsr_gen(int gen, bool barred = false);

/// a^b = (a.letter, a.word * augment(b)).
FsrElement fsr_op(const FsrElement& a, const FsrElement& b);

/// The unique u with u^b = a.
FsrElement fsr_op_inv(const FsrElement& a, const FsrElement& b);

/// Right action of the free group: a^z.
FsrElement fsr_act(FsrElement a, const FreeWord& z);

/// The involution: toggles the bar, leaves the word alone.
FsrElement fsr_rho(FsrElement a);

/// letter^word -> word^-1 . letter . word, barred letters to inverses.
FreeWord augment(const FsrElement& a);

/// Text forms: word "x1.x2'-1.x3", element "x3^x2" / "~x4" / "x2^x3'-1".
std::string to_string(const FreeWord& w, const GeneratorSet& gens);
std::string to_string(const FsrElement& e, const GeneratorSet& gens);
FreeWord parse_word(std::string_view text, const GeneratorSet& gens);
FsrElement parse_fsr_element(std::string_view text, const GeneratorSet& gens);

}  // namespace symq
