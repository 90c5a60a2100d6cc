#include <numeric>

#include "doctest.h"
#include "symq/io.hpp"
#include "symq/presentation.hpp"
#include "symq/smith.hpp"
#include "test_util.hpp"

using namespace symq;

namespace {

SymQuandlePresentation pres(const std::string& text) {
  return parse_presentation(text);
}

const char* kTrefoil6 =
    "flavor symmetric-quandle\n"
    "gen x1 x2 x3 x4 x5 x6\n"
    "rel x2 = x6\n"
    "rel x3 = ~x4\n"
    "rel x5 = ~x1\n"
    "rel x3^x2 = x1\n"
    "rel x2^x4 = ~x5\n"
    "rel x4^x5 = ~x6\n";

const char* kTrefoil3 =
    "flavor symmetric-quandle\n"
    "gen x1 x2 x3\n"
    "rel x3^x2 = x1\n"
    "rel x1^x3 = x2\n"
    "rel x2^x1 = x3\n";

// gcd-of-minors oracle for the invariant factors of a small matrix
long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    long long term = m[0][c] * det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

std::vector<long long> minor_gcd_factors(
    const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> dets{1};  // D_0 = 1
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    auto loop_cols = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == k) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        g = std::gcd(g, det(sub));
        return;
      }
      for (std::size_t c = start; c < cols; ++c) {
        ci[pos] = c;
        self(self, pos + 1, c + 1);
      }
    };
    auto loop_rows = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == k) {
        loop_cols(loop_cols, 0, 0);
        return;
      }
      for (std::size_t r = start; r < rows; ++r) {
        ri[pos] = r;
        self(self, pos + 1, r + 1);
      }
    };
    loop_rows(loop_rows, 0, 0);
    if (g == 0) break;
    dets.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < dets.size(); ++k)
    out.push_back(dets[k] / dets[k - 1]);
  return out;
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(pres("gen x\nrel y = x\n"), std::invalid_argument);
  CHECK_THROWS_AS(pres("flavor quandle\ngen x\nrel ~x = x\n"),
                  std::invalid_argument);
  SymQuandlePresentation p = pres("gen x\nrel ~x = x\n");
  CHECK(p.flavor == Flavor::symmetric_quandle);
  CHECK(p.relations.size() == 1);
}

TEST_CASE("closure produces the stated consequences") {
  ClosureBudget small{2, 500};
  GeneratorSet one({"x"});

  SymQuandlePresentation free_sq{one, {}, Flavor::symmetric_quandle};
  ClosureResult r = consequence_closure(free_sq, small);
  CHECK(r.saturated);
  CHECK(closure_contains(r, fsr_op(fsr_gen(0), fsr_gen(0)), fsr_gen(0)));

  GeneratorSet two({"x", "y"});
  Relation base{fsr_gen(0), fsr_gen(1)};
  SymQuandlePresentation rack{two, {base}, Flavor::rack};
  ClosureResult rr = consequence_closure(rack, small);
  CHECK(closure_contains(rr, fsr_gen(1), fsr_gen(0)));

  SymQuandlePresentation sq{two, {base}, Flavor::symmetric_quandle};
  ClosureResult sr = consequence_closure(sq, small);
  CHECK(closure_contains(sr, fsr_gen(0, true), fsr_gen(1, true)));
  // diagonal pairs are virtually present
  CHECK(closure_contains(sr, fsr_gen(0), fsr_gen(0)));
}

TEST_CASE("rack and quandle closures never produce barred letters") {
  GeneratorSet two({"x", "y"});
  Relation base{fsr_gen(0), {{1, false}, FreeWord::generator(0)}};  // x = y^x
  for (Flavor f : {Flavor::rack, Flavor::quandle}) {
    SymQuandlePresentation p{two, {base}, f};
    ClosureResult r = consequence_closure(p, {3, 2000});
    CHECK(!r.pairs.empty());
    for (const Relation& pr : r.pairs) {
      CHECK_FALSE(pr.first.letter.barred);
      CHECK_FALSE(pr.second.letter.barred);
    }
  }
  // quandle flavor also knows idempotence
  SymQuandlePresentation q{two, {}, Flavor::quandle};
  ClosureResult r = consequence_closure(q, {2, 2000});
  CHECK(closure_contains(r, fsr_op(fsr_gen(1), fsr_gen(1)), fsr_gen(1)));
  SymQuandlePresentation rk{two, {}, Flavor::rack};
  ClosureResult rr = consequence_closure(rk, {2, 2000});
  CHECK_FALSE(closure_contains(rr, fsr_op(fsr_gen(1), fsr_gen(1)), fsr_gen(1)));
}

TEST_CASE("closure is idempotent and monotone in the budget") {
  SymQuandlePresentation p = pres("gen x y\nrel x = ~y\n");
  ClosureBudget b2{2, 20000}, b3{3, 20000};
  ClosureResult c2 = consequence_closure(p, b2);
  ClosureResult c3 = consequence_closure(p, b3);
  REQUIRE(c2.saturated);
  REQUIRE(c3.saturated);

  SymQuandlePresentation again{p.generators, c2.pairs, p.flavor};
  ClosureResult c2b = consequence_closure(again, b2);
  CHECK(c2b.pairs == c2.pairs);

  for (const Relation& r : c2.pairs)
    CHECK(closure_contains(c3, r.first, r.second));

  // deterministic
  CHECK(consequence_closure(p, b3).pairs == c3.pairs);

  // a capped run is still deterministic and reports the cap
  ClosureBudget tight{3, 40};
  ClosureResult t1 = consequence_closure(p, tight);
  CHECK_FALSE(t1.saturated);
  CHECK(t1.pairs.size() == 40);
  CHECK(consequence_closure(p, tight).pairs == t1.pairs);
}

TEST_CASE("closure pairs hold in every finite model") {
  SymQuandlePresentation p = pres(kTrefoil6);
  ClosureResult r = consequence_closure(p, {4, 800});
  for (const SymmetricQuandleTable& target : testutil::builtin_pool(4)) {
    std::vector<int> inv = op_inverse_table(target.quandle);
    for_each_hom(p, target, [&](const std::vector<int>& hom) {
      for (const Relation& pr : r.pairs)
        CHECK(eval_element(pr.first, hom, target, inv) ==
              eval_element(pr.second, hom, target, inv));
    });
  }
}

TEST_CASE("prove_equal") {
  ClosureBudget budget{4, 4000};
  SymQuandlePresentation free_sq = pres("gen x\n");
  CHECK(prove_equal(free_sq, fsr_gen(0), fsr_gen(0), budget) ==
        ProofStatus::proven);
  CHECK(prove_equal(free_sq, fsr_gen(0), fsr_gen(0, true), budget) ==
        ProofStatus::unknown);
  CHECK(prove_equal(free_sq, fsr_gen(0), fsr_gen(0, true), {8, 20000}) ==
        ProofStatus::unknown);

  // the alternate reading of each crossing relation is derivable
  SymQuandlePresentation p = pres(kTrefoil6);
  ClosureBudget wide{8, 10000};
  auto el = [&](const char* s) { return parse_fsr_element(s, p.generators); };
  CHECK(prove_equal(p, el("x3^x6"), el("x1"), wide) == ProofStatus::proven);
  CHECK(prove_equal(p, el("x5^x3"), el("~x2"), wide) == ProofStatus::proven);
  CHECK(prove_equal(p, el("x6^x1"), el("~x4"), wide) == ProofStatus::proven);
  // intermediate steps of the rewriting chain
  CHECK(prove_equal(p, el("x2^x4"), el("x2^x3'-1"), wide) ==
        ProofStatus::proven);
  CHECK(prove_equal(p, el("x2"), el("~x5^x3"), wide) == ProofStatus::proven);
}

TEST_CASE("generator elimination follows the rewriting chain") {
  SymQuandlePresentation p = pres(kTrefoil6);

  SymQuandlePresentation no6 = eliminate_generator(p, 5, 0);  // x6 := x2
  SymQuandlePresentation no56 = eliminate_generator(no6, 4, 1);  // x5 := ~x1
  CHECK(no56.generators.names() ==
        std::vector<std::string>{"x1", "x2", "x3", "x4"});
  SymQuandlePresentation expected4 = pres(
      "gen x1 x2 x3 x4\n"
      "rel x3 = ~x4\n"
      "rel x3^x2 = x1\n"
      "rel x2^x4 = x1\n"
      "rel x4^x1'-1 = ~x2\n");
  CHECK(testutil::relation_multiset(no56) ==
        testutil::relation_multiset(expected4));

  SymQuandlePresentation no456 = eliminate_generator(no56, 3, 0);  // x4 := ~x3
  SymQuandlePresentation final3 = normalize_relations(no456);
  CHECK(testutil::relation_multiset(final3) ==
        testutil::relation_multiset(pres(kTrefoil3)));

  // hom counts and the abelianized group do not change along the way
  std::vector<const SymQuandlePresentation*> chain{&p, &no6, &no56, &no456,
                                                   &final3};
  for (const SymmetricQuandleTable& target : testutil::builtin_pool(6)) {
    std::uint64_t base = hom_count(p, target);
    for (const SymQuandlePresentation* q : chain)
      CHECK(hom_count(*q, target) == base);
  }
  for (const SymQuandlePresentation* q : chain)
    CHECK(abelianization(associated_group(*q)) ==
          std::vector<long long>{0});
}

TEST_CASE("elimination edge cases") {
  SymQuandlePresentation p = pres("gen x y\nrel y = x\n");
  SymQuandlePresentation q = eliminate_generator(p, 1, 0);
  CHECK(q.generators.names() == std::vector<std::string>{"x"});
  CHECK(q.relations.empty());

  SymQuandlePresentation bad = pres("gen x y\nrel y^x = x\n");
  CHECK_THROWS_AS(eliminate_generator(bad, 1, 0), std::invalid_argument);
  SymQuandlePresentation both = pres("gen x y\nrel y = x^y\n");
  CHECK_THROWS_AS(eliminate_generator(both, 1, 0), std::invalid_argument);

  auto found = find_eliminable(p);
  REQUIRE(found.has_value());
  CHECK(found->first == 1);
  CHECK(found->second == 0);
  CHECK_FALSE(find_eliminable(bad).has_value());
}

TEST_CASE("hom counts are stable under adding closure consequences") {
  SymQuandlePresentation p = pres(kTrefoil6);
  ClosureResult r = consequence_closure(p, {3, 400});
  SymQuandlePresentation enlarged = p;
  for (const Relation& pr : r.pairs) enlarged.relations.push_back(pr);
  for (const SymmetricQuandleTable& target : testutil::builtin_pool(6))
    CHECK(hom_count(enlarged, target) == hom_count(p, target));
}

TEST_CASE("associated groups of the worked examples") {
  GroupPresentation free1 = associated_group(pres("gen x\n"));
  CHECK(free1.relators.empty());
  CHECK(abelianization(free1) == std::vector<long long>{0});

  GroupPresentation z2 = associated_group(pres("gen x\nrel ~x = x\n"));
  REQUIRE(z2.relators.size() == 1);
  CHECK(z2.relators[0].size() == 2);
  CHECK(abelianization(z2) == std::vector<long long>{2});

  GroupPresentation zxz = associated_group(
      pres("flavor quandle\ngen x y\nrel x^y = x\nrel y^x = y\n"));
  CHECK(abelianization(zxz) == std::vector<long long>{0, 0});

  GroupPresentation wirtinger = associated_group(pres(
      "flavor quandle\ngen x1 x2 x3\n"
      "rel x2^x3 = x1\nrel x1^x2 = x3\nrel x3^x1 = x2\n"));
  REQUIRE(wirtinger.relators.size() == 3);
  GeneratorSet gens = wirtinger.generators;
  CHECK(to_string(wirtinger.relators[0], gens) == "x3'-1.x2.x3.x1'-1");
  CHECK(abelianization(wirtinger) == std::vector<long long>{0});
}

TEST_CASE("smith diagonal against the minor-gcd oracle") {
  CHECK(smith_diagonal({{2, 0}, {0, 4}}) == std::vector<long long>{2, 4});
  CHECK(smith_diagonal({{4, 0}, {0, 2}}) == std::vector<long long>{2, 4});
  CHECK(smith_diagonal({{2, 3}}) == std::vector<long long>{1});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}).empty());
  CHECK(smith_diagonal({}).empty());

  testutil::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng.below(3), cols = 1 + rng.below(3);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& v : row) v = rng.below(9) - 4;
    CHECK(smith_diagonal(m) == minor_gcd_factors(m));
  }
}

TEST_CASE("hom counting") {
  SymQuandlePresentation free1 = pres("gen x\n");
  for (const SymmetricQuandleTable& target : testutil::builtin_pool(6))
    CHECK(hom_count(free1, target) ==
          static_cast<std::uint64_t>(target.size()));

  SymQuandlePresentation fixed = pres("gen x\nrel ~x = x\n");
  CHECK(hom_count(fixed, builtin_target("D-R3")) == 0);
  CHECK(hom_count(fixed, builtin_target("R3-id")) == 3);

  SymQuandlePresentation trefoil3 = pres(kTrefoil3);
  SymmetricQuandleTable r3 = builtin_target("R3-id");
  CHECK(hom_count(trefoil3, r3) == 9);

  // brute-force oracle over all assignments
  std::vector<int> inv = op_inverse_table(r3.quandle);
  std::uint64_t brute = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::vector<int> hom{a, b, c};
        bool ok = true;
        for (const Relation& r : trefoil3.relations)
          if (eval_element(r.first, hom, r3, inv) !=
              eval_element(r.second, hom, r3, inv))
            ok = false;
        if (ok) ++brute;
      }
  CHECK(brute == 9);
}

TEST_CASE("relation normalization reaches solved forms") {
  SymQuandlePresentation p = pres(kTrefoil3);
  auto el = [&](const char* s) { return parse_fsr_element(s, p.generators); };
  Flavor f = Flavor::symmetric_quandle;

  CHECK(normalize_relation({el("x3^x2"), el("x1")}, f) ==
        Relation{el("x3^x2"), el("x1")});
  CHECK(normalize_relation({el("x2^x3'-1"), el("x1")}, f) ==
        Relation{el("x1^x3"), el("x2")});
  CHECK(normalize_relation({el("~x3^x1'-1"), el("~x2")}, f) ==
        Relation{el("x2^x1"), el("x3")});
  CHECK(normalize_relation({el("x3"), el("~x2")}, f) ==
        Relation{el("x2"), el("~x3")});

  SymQuandlePresentation dup = pres(
      "gen x y\nrel x^y = x\nrel x^y = x\nrel x = x\n");
  CHECK(normalize_relations(dup).relations.size() == 1);
}

TEST_CASE("presentation serializations round trip") {
  SymQuandlePresentation p = pres(kTrefoil6);
  SymQuandlePresentation via_text = parse_presentation(presentation_text(p));
  CHECK(via_text.generators == p.generators);
  CHECK(via_text.relations == p.relations);
  CHECK(via_text.flavor == p.flavor);

  SymQuandlePresentation via_json =
      load_presentation_json(save_presentation_json(p));
  CHECK(via_json.relations == p.relations);
  CHECK(load_presentation(save_presentation_json(p)).relations == p.relations);
  CHECK(load_presentation(presentation_text(p)).relations == p.relations);
}

TEST_CASE("relabeling permutes relations consistently") {
  SymQuandlePresentation p = pres(kTrefoil3);
  std::vector<int> perm{1, 2, 0};
  SymQuandlePresentation q = relabel_generators(p, perm, p.generators);
  CHECK(testutil::presentations_match(p, q));
  CHECK_THROWS_AS(relabel_generators(p, {0, 0, 1}, p.generators),
                  std::invalid_argument);
}
