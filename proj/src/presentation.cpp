#include "symq/presentation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "symq/smith.hpp"

namespace symq {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::rack: return "rack";
    case Flavor::quandle: return "quandle";
    case Flavor::symmetric_rack: return "symmetric-rack";
    case Flavor::symmetric_quandle: return "symmetric-quandle";
  }
  return "?";
}

Flavor flavor_from_string(std::string_view s) {
  if (s == "rack") return Flavor::rack;
  if (s == "quandle") return Flavor::quandle;
  if (s == "symmetric-rack") return Flavor::symmetric_rack;
  if (s == "symmetric-quandle") return Flavor::symmetric_quandle;
  throw std::invalid_argument("unknown flavor '" + std::string(s) + "'");
}

namespace {

void validate_element(const FsrElement& e, const GeneratorSet& gens,
                      bool allow_bar) {
  if (e.letter.gen < 0 || e.letter.gen >= gens.size())
    throw std::invalid_argument("generator index out of range");
  if (e.letter.barred && !allow_bar)
    throw std::invalid_argument("barred letter in a non-symmetric flavor");
  for (const Letter& l : e.word.letters())
    if (l.gen < 0 || l.gen >= gens.size())
      throw std::invalid_argument("word letter out of range");
}

bool mentions(const FsrElement& e, int g) {
  if (e.letter.gen == g) return true;
  for (const Letter& l : e.word.letters())
    if (l.gen == g) return true;
  return false;
}

Relation canon_pair(FsrElement a, FsrElement b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

void validate(const SymQuandlePresentation& p) {
  if (p.generators.size() == 0)
    throw std::invalid_argument("presentation has no generators");
  const bool bars = is_symmetric(p.flavor);
  for (const auto& [l, r] : p.relations) {
    validate_element(l, p.generators, bars);
    validate_element(r, p.generators, bars);
  }
}

// ---------------------------------------------------------------------------
// Consequence closure

namespace {

struct ClosureEngine {
  const SymQuandlePresentation& p;
  ClosureBudget budget;
  bool symmetric;

  std::vector<Relation> pairs;
  std::map<Relation, std::size_t> pair_index;
  // aug(first), aug(second) and their inverses, aligned with `pairs`
  std::vector<std::array<FreeWord, 4>> augs;
  std::vector<std::size_t> conj_done;  // elements consumed per pair
  std::vector<char> processed;
  std::vector<FsrElement> elems;
  std::set<FsrElement> elem_set;
  std::map<FsrElement, std::vector<std::size_t>> touching;
  // shortest pairs first, so small consequences are not starved by the
  // conjugation fan-out of earlier ones
  std::set<std::pair<std::size_t, std::size_t>> frontier;  // (cost, index)
  std::size_t atom_count = 0;
  bool capped = false;

  const Relation* watch = nullptr;
  bool watch_found = false;

  ClosureEngine(const SymQuandlePresentation& pres, const ClosureBudget& b)
      : p(pres), budget(b), symmetric(is_symmetric(pres.flavor)) {}

  bool done() const { return capped || watch_found; }

  void add_elem(const FsrElement& e) {
    if (elem_set.insert(e).second) elems.push_back(e);
  }

  void add_pair(const FsrElement& a, const FsrElement& b) {
    if (done() || a == b) return;
    if (static_cast<int>(a.word.size()) > budget.max_word_length ||
        static_cast<int>(b.word.size()) > budget.max_word_length)
      return;
    Relation r = canon_pair(a, b);
    if (watch && r == *watch) {
      watch_found = true;
      return;
    }
    if (pair_index.count(r)) return;
    if (pairs.size() >= budget.max_pairs) {
      capped = true;
      return;
    }
    std::size_t idx = pairs.size();
    pair_index.emplace(r, idx);
    touching[r.first].push_back(idx);
    touching[r.second].push_back(idx);
    FreeWord au = augment(r.first), av = augment(r.second);
    augs.push_back({au, av, au.inverse(), av.inverse()});
    conj_done.push_back(0);
    processed.push_back(0);
    frontier.insert({r.first.word.size() + r.second.word.size(), idx});
    add_elem(r.first);
    add_elem(r.second);
    pairs.push_back(std::move(r));
  }

  void seed() {
    for (int g = 0; g < p.generators.size(); ++g) {
      add_elem(fsr_gen(g));
      if (symmetric) add_elem(fsr_gen(g, true));
    }
    atom_count = elems.size();
    if (has_idempotence(p.flavor))
      for (int g = 0; g < p.generators.size(); ++g)
        add_pair(fsr_op(fsr_gen(g), fsr_gen(g)), fsr_gen(g));
    for (const auto& [l, r] : p.relations) add_pair(l, r);
  }

  void join_through(const Relation& pr, std::size_t self) {
    for (int side = 0; side < 2 && !done(); ++side) {
      const FsrElement& shared = side == 0 ? pr.first : pr.second;
      const FsrElement& mine = side == 0 ? pr.second : pr.first;
      auto it = touching.find(shared);
      if (it == touching.end()) continue;
      for (std::size_t k = 0; k < it->second.size() && !done(); ++k) {
        std::size_t j = it->second[k];
        if (j == self) continue;
        // copy: pairs may reallocate inside add_pair
        Relation other = pairs[j];
        const FsrElement& theirs =
            other.first == shared ? other.second : other.first;
        add_pair(mine, theirs);
      }
    }
  }

  // t^u ~ t^v and t^(u^-1) ~ t^(v^-1) for known elements t, consumed in
  // discovery order up to `bound`, a chunk at a time. The atoms sit at the
  // front, so processing a pair conjugates it by the generators right away;
  // products with bigger elements wait for the catch-up rounds and cannot
  // flood the budget before short consequences are reached.
  static constexpr std::size_t kConjChunk = 16;

  void conjugate(std::size_t i, std::size_t bound) {
    const std::array<FreeWord, 4> a = augs[i];
    const std::size_t stop =
        std::min(std::min(bound, elems.size()), conj_done[i] + kConjChunk);
    while (conj_done[i] < stop && !done()) {
      const FsrElement t = elems[conj_done[i]++];
      add_pair({t.letter, t.word * a[0]}, {t.letter, t.word * a[1]});
      add_pair({t.letter, t.word * a[2]}, {t.letter, t.word * a[3]});
    }
  }

  void process(std::size_t i) {
    const Relation pr = pairs[i];
    processed[i] = 1;
    join_through(pr, i);
    for (int g = 0; g < p.generators.size() && !done(); ++g)
      for (int exp : {1, -1}) {
        FreeWord z = FreeWord::generator(g, exp);
        add_pair(fsr_act(pr.first, z), fsr_act(pr.second, z));
      }
    if (symmetric && !done())
      add_pair(fsr_rho(pr.first), fsr_rho(pr.second));
    if (!done()) conjugate(i, atom_count);
  }

  ClosureResult run() {
    seed();
    while (!done()) {
      bool progress = false;
      while (!frontier.empty() && !done()) {
        std::size_t i = frontier.begin()->second;
        frontier.erase(frontier.begin());
        process(i);
        progress = true;
      }
      if (done()) break;
      // the rest of the pair-by-element grid, one chunk per pair per round
      for (std::size_t i = 0; i < pairs.size() && !done(); ++i)
        if (processed[i] && conj_done[i] < elems.size()) {
          conjugate(i, elems.size());
          progress = true;
        }
      if (!progress) break;
    }
    ClosureResult res;
    res.saturated = !capped;
    res.pairs = std::move(pairs);
    std::sort(res.pairs.begin(), res.pairs.end());
    return res;
  }
};

}  // namespace

ClosureResult consequence_closure(const SymQuandlePresentation& p,
                                  const ClosureBudget& budget) {
  validate(p);
  if (budget.max_word_length < 0 || budget.max_pairs == 0)
    throw std::invalid_argument("closure budget must be positive");
  ClosureEngine engine(p, budget);
  return engine.run();
}

bool closure_contains(const ClosureResult& r, const FsrElement& lhs,
                      const FsrElement& rhs) {
  if (lhs == rhs) return true;
  Relation key = canon_pair(lhs, rhs);
  return std::binary_search(r.pairs.begin(), r.pairs.end(), key);
}

ProofStatus prove_equal(const SymQuandlePresentation& p, const FsrElement& lhs,
                        const FsrElement& rhs, const ClosureBudget& budget) {
  validate(p);
  if (budget.max_word_length < 0 || budget.max_pairs == 0)
    throw std::invalid_argument("closure budget must be positive");
  const bool bars = is_symmetric(p.flavor);
  validate_element(lhs, p.generators, bars);
  validate_element(rhs, p.generators, bars);
  if (lhs == rhs) return ProofStatus::proven;
  ClosureEngine engine(p, budget);
  Relation target = canon_pair(lhs, rhs);
  engine.watch = &target;
  engine.run();
  return engine.watch_found ? ProofStatus::proven : ProofStatus::unknown;
}

// ---------------------------------------------------------------------------
// Tietze-style rewriting

SymQuandlePresentation eliminate_generator(const SymQuandlePresentation& p,
                                           int gen, std::size_t defining) {
  validate(p);
  if (gen < 0 || gen >= p.generators.size())
    throw std::invalid_argument("generator index out of range");
  if (p.generators.size() == 1)
    throw std::invalid_argument("cannot eliminate the last generator");
  if (defining >= p.relations.size())
    throw std::invalid_argument("defining relation index out of range");

  const auto& [a, b] = p.relations[defining];
  auto bare = [gen](const FsrElement& e) {
    return e.word.empty() && e.letter.gen == gen;
  };
  const FsrElement* def = nullptr;
  const FsrElement* other = nullptr;
  if (bare(a)) {
    def = &a;
    other = &b;
  } else if (bare(b)) {
    def = &b;
    other = &a;
  } else {
    throw std::invalid_argument(
        "defining relation does not solve for the generator");
  }
  if (mentions(*other, gen))
    throw std::invalid_argument("generator occurs on both sides");

  // def side barred means rho(gen) = other, i.e. gen = rho(other).
  FsrElement rep = def->letter.barred ? fsr_rho(*other) : *other;
  FreeWord rep_aug = augment(rep);
  FreeWord rep_aug_inv = rep_aug.inverse();

  auto subst_word = [&](const FreeWord& w) {
    FreeWord out;
    for (const Letter& l : w.letters()) {
      if (l.gen == gen)
        out *= l.exp > 0 ? rep_aug : rep_aug_inv;
      else
        out.push(l);
    }
    return out;
  };
  auto subst = [&](const FsrElement& e) {
    FreeWord w = subst_word(e.word);
    if (e.letter.gen != gen) return FsrElement{e.letter, std::move(w)};
    FsrElement base = e.letter.barred ? fsr_rho(rep) : rep;
    base.word *= w;
    return base;
  };

  // drop `gen` from the name list, shift higher indices down
  std::vector<std::string> names;
  std::vector<int> remap(p.generators.size(), -1);
  for (int i = 0; i < p.generators.size(); ++i) {
    if (i == gen) continue;
    remap[i] = static_cast<int>(names.size());
    names.push_back(p.generators.name(i));
  }
  auto remap_element = [&](const FsrElement& e) {
    FsrElement out;
    out.letter = {remap[e.letter.gen], e.letter.barred};
    for (const Letter& l : e.word.letters()) out.word.push({remap[l.gen], l.exp});
    return out;
  };

  SymQuandlePresentation out;
  out.generators = GeneratorSet(std::move(names));
  out.flavor = p.flavor;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (i == defining) continue;
    out.relations.push_back({remap_element(subst(p.relations[i].first)),
                             remap_element(subst(p.relations[i].second))});
  }
  return out;
}

std::optional<std::pair<int, std::size_t>> find_eliminable(
    const SymQuandlePresentation& p) {
  if (p.generators.size() <= 1) return std::nullopt;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& [a, b] = p.relations[i];
    if (a.word.empty() && !mentions(b, a.letter.gen))
      return std::pair{a.letter.gen, i};
    if (b.word.empty() && !mentions(a, b.letter.gen))
      return std::pair{b.letter.gen, i};
  }
  return std::nullopt;
}

namespace {

bool all_positive(const FreeWord& w) {
  for (const Letter& l : w.letters())
    if (l.exp < 0) return false;
  return true;
}

}  // namespace

Relation normalize_relation(const Relation& r, Flavor flavor) {
  std::vector<Relation> cands;
  auto consider = [&](FsrElement lhs, FsrElement rhs) {
    FreeWord z = rhs.word.inverse();
    cands.push_back({fsr_act(std::move(lhs), z), fsr_act(std::move(rhs), z)});
  };
  for (const auto& [lhs, rhs] :
       {Relation{r.first, r.second}, Relation{r.second, r.first}}) {
    consider(lhs, rhs);
    if (is_symmetric(flavor)) consider(fsr_rho(lhs), fsr_rho(rhs));
  }
  auto rank = [](const Relation& c) {
    return std::tuple(c.first.letter.barred, !all_positive(c.first.word),
                      c.first.word.size(), c);
  };
  return *std::min_element(cands.begin(), cands.end(),
                           [&](const Relation& x, const Relation& y) {
                             return rank(x) < rank(y);
                           });
}

SymQuandlePresentation normalize_relations(const SymQuandlePresentation& p) {
  validate(p);
  SymQuandlePresentation out{p.generators, {}, p.flavor};
  std::set<Relation> seen;
  for (const Relation& r : p.relations) {
    Relation n = normalize_relation(r, p.flavor);
    if (n.first == n.second) continue;
    if (seen.insert(n).second) out.relations.push_back(std::move(n));
  }
  return out;
}

SymQuandlePresentation relabel_generators(const SymQuandlePresentation& p,
                                          const std::vector<int>& perm,
                                          const GeneratorSet& new_names) {
  validate(p);
  if (static_cast<int>(perm.size()) != p.generators.size() ||
      new_names.size() != p.generators.size())
    throw std::invalid_argument("relabel: size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || hit[v])
      throw std::invalid_argument("relabel: not a permutation");
    hit[v] = 1;
  }
  auto map_element = [&](const FsrElement& e) {
    FsrElement out;
    out.letter = {perm[e.letter.gen], e.letter.barred};
    for (const Letter& l : e.word.letters()) out.word.push({perm[l.gen], l.exp});
    return out;
  };
  SymQuandlePresentation out{new_names, {}, p.flavor};
  for (const Relation& r : p.relations)
    out.relations.push_back({map_element(r.first), map_element(r.second)});
  return out;
}

// ---------------------------------------------------------------------------
// Associated group

GroupPresentation associated_group(const SymQuandlePresentation& p) {
  validate(p);
  GroupPresentation g{p.generators, {}};
  for (const auto& [u, v] : p.relations) {
    FreeWord rel = augment(u) * augment(v).inverse();
    if (!rel.empty()) g.relators.push_back(std::move(rel));
  }
  return g;
}

std::vector<long long> abelianization(const GroupPresentation& g) {
  const int cols = g.generators.size();
  std::vector<std::vector<long long>> m;
  for (const FreeWord& rel : g.relators) {
    std::vector<long long> row(cols, 0);
    for (const Letter& l : rel.letters()) row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  std::vector<long long> diag = smith_diagonal(std::move(m));
  std::vector<long long> out;
  for (long long d : diag)
    if (d > 1) out.push_back(d);
  for (int i = static_cast<int>(diag.size()); i < cols; ++i) out.push_back(0);
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms into finite symmetric quandles

int eval_element(const FsrElement& e, const std::vector<int>& assignment,
                 const SymmetricQuandleTable& target,
                 const std::vector<int>& inv) {
  const int n = target.quandle.n;
  int v = assignment[e.letter.gen];
  if (e.letter.barred) v = target.rho[v];
  for (const Letter& l : e.word.letters()) {
    int w = assignment[l.gen];
    v = l.exp > 0 ? target.quandle.at(v, w)
                  : inv[static_cast<std::size_t>(v) * n + w];
  }
  return v;
}

void for_each_hom(const SymQuandlePresentation& p,
                  const SymmetricQuandleTable& target,
                  const std::function<void(const std::vector<int>&)>& fn) {
  validate(p);
  if (Verdict v = verify_quandle(target.quandle); !v)
    throw std::invalid_argument("hom target: " + v.describe());
  if (Verdict v = verify_good_involution(target); !v)
    throw std::invalid_argument("hom target: " + v.describe());
  const int k = p.generators.size();
  const int n = target.quandle.n;
  std::vector<int> inv = op_inverse_table(target.quandle);

  // check each relation as soon as all generators it mentions are assigned
  auto max_gen = [](const FsrElement& e) {
    int m = e.letter.gen;
    for (const Letter& l : e.word.letters()) m = std::max(m, l.gen);
    return m;
  };
  std::vector<std::vector<const Relation*>> by_depth(k);
  for (const Relation& r : p.relations)
    by_depth[std::max(max_gen(r.first), max_gen(r.second))].push_back(&r);

  std::vector<int> assign(k, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      fn(assign);
      return;
    }
    for (int v = 0; v < n; ++v) {
      assign[depth] = v;
      bool ok = true;
      for (const Relation* r : by_depth[depth])
        if (eval_element(r->first, assign, target, inv) !=
            eval_element(r->second, assign, target, inv)) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

std::uint64_t hom_count(const SymQuandlePresentation& p,
                        const SymmetricQuandleTable& target) {
  std::uint64_t count = 0;
  for_each_hom(p, target, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace symq
