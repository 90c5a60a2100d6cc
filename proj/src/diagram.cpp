#include "symq/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symq {

void validate(const Diagram& d) {
  if (d.m < 0) throw std::invalid_argument("m: negative semi-sheet count");
  if (!d.labels.empty() && static_cast<int>(d.labels.size()) != d.m)
    throw std::invalid_argument("labels: size must equal m");
  for (std::size_t k = 0; k < d.strata.size(); ++k) {
    const Stratum& s = d.strata[k];
    auto path = [&](const char* f) {
      return "strata[" + std::to_string(k) + "]." + f;
    };
    for (auto [v, f] : {std::pair{s.upper_i, "upper[0]"},
                        {s.upper_j, "upper[1]"},
                        {s.lower_s, "lower[0]"},
                        {s.lower_t, "lower[1]"}})
      if (v < 0 || v >= d.m)
        throw std::invalid_argument(path(f) + ": semi-sheet out of range");
    if (s.over != s.upper_i && s.over != s.upper_j)
      throw std::invalid_argument(path("over") +
                                  ": must be one of the upper semi-sheets");
  }
}

Diagram flip_normal(Diagram d, int sheet) {
  validate(d);
  if (sheet < 0 || sheet >= d.m)
    throw std::invalid_argument("flip_normal: semi-sheet out of range");
  for (Stratum& s : d.strata) {
    if (s.upper_i == sheet) s.upper_coherent = !s.upper_coherent;
    if (s.upper_j == sheet) s.upper_coherent = !s.upper_coherent;
    if (s.over == sheet) std::swap(s.lower_s, s.lower_t);
    if (s.lower_s == sheet) s.lower_coherent = !s.lower_coherent;
    if (s.lower_t == sheet) s.lower_coherent = !s.lower_coherent;
  }
  return d;
}

Diagram set_over(Diagram d, std::size_t stratum, int sheet) {
  validate(d);
  if (stratum >= d.strata.size())
    throw std::invalid_argument("set_over: stratum out of range");
  Stratum& s = d.strata[stratum];
  if (sheet != s.upper_i && sheet != s.upper_j)
    throw std::invalid_argument("set_over: not an upper semi-sheet");
  if (sheet == s.over) return d;
  s.over = sheet;
  if (!s.upper_coherent) std::swap(s.lower_s, s.lower_t);
  return d;
}

namespace {

GeneratorSet sheet_names(const Diagram& d) {
  // labels become generator names when they qualify; x1..xm otherwise
  bool usable = !d.labels.empty();
  if (usable) {
    std::set<std::string> seen;
    for (const std::string& l : d.labels)
      if (!GeneratorSet::valid_name(l) || !seen.insert(l).second) {
        usable = false;
        break;
      }
  }
  if (usable) return GeneratorSet(d.labels);
  std::vector<std::string> names;
  for (int i = 0; i < d.m; ++i) names.push_back("x" + std::to_string(i + 1));
  return GeneratorSet(std::move(names));
}

}  // namespace

SymQuandlePresentation presentation_from_diagram(const Diagram& d) {
  validate(d);
  if (d.m == 0)
    throw std::invalid_argument("diagram has no semi-sheets");
  SymQuandlePresentation p;
  p.generators = sheet_names(d);
  p.flavor = Flavor::symmetric_quandle;
  for (const Stratum& s : d.strata) {
    p.relations.push_back(
        {fsr_gen(s.upper_i), fsr_gen(s.upper_j, !s.upper_coherent)});
    FsrElement lhs{{s.lower_s, false}, FreeWord::generator(s.over)};
    p.relations.push_back(
        {std::move(lhs), fsr_gen(s.lower_t, !s.lower_coherent)});
  }
  return p;
}

SymQuandlePresentation oriented_presentation_from_diagram(const Diagram& d) {
  validate(d);
  if (d.m == 0)
    throw std::invalid_argument("diagram has no semi-sheets");
  for (std::size_t k = 0; k < d.strata.size(); ++k)
    if (!d.strata[k].upper_coherent || !d.strata[k].lower_coherent)
      throw std::invalid_argument(
          "stratum " + std::to_string(k) +
          " has incoherent normals; diagram is not orientation-consistent");

  // merge the two upper semi-sheets of each stratum into sheets
  std::vector<int> parent(d.m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Stratum& s : d.strata) {
    int a = find(s.upper_i), b = find(s.upper_j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> cls(d.m, -1);
  int count = 0;
  for (int i = 0; i < d.m; ++i)
    if (find(i) == i) cls[i] = count++;
  for (int i = 0; i < d.m; ++i) cls[i] = cls[find(i)];

  std::vector<std::string> names;
  for (int c = 0; c < count; ++c) names.push_back("x" + std::to_string(c + 1));
  SymQuandlePresentation p;
  p.generators = GeneratorSet(std::move(names));
  p.flavor = Flavor::quandle;
  for (const Stratum& s : d.strata) {
    FsrElement lhs{{cls[s.lower_s], false}, FreeWord::generator(cls[s.over])};
    p.relations.push_back({std::move(lhs), fsr_gen(cls[s.lower_t])});
  }
  return p;
}

}  // namespace symq
