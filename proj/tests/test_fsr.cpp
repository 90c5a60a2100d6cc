#include "doctest.h"
#include "symq/fsr.hpp"
#include "test_util.hpp"

using namespace symq;

namespace {
const FsrElement x = fsr_gen(0);
const FsrElement y = fsr_gen(1);
}  // namespace

TEST_CASE("rack operation on atoms") {
  // x^y carries the bare word y
  CHECK(fsr_op(x, y) == FsrElement{{0, false}, FreeWord::generator(1)});
  // acting by a barred atom inverts
  CHECK(fsr_op(x, fsr_rho(y)) == FsrElement{{0, false}, FreeWord::generator(1, -1)});
  // (x, y)^(y, eps) = (x, y^2), undone by the inverse op
  FsrElement xy{{0, false}, FreeWord::generator(1)};
  FsrElement sq = fsr_op(xy, y);
  CHECK(sq.word.size() == 2);
  CHECK(fsr_op_inv(sq, y) == xy);
}

TEST_CASE("rho is an involution compatible with the operation") {
  CHECK(fsr_rho(x).letter.barred);
  CHECK(fsr_rho(fsr_rho(FsrElement{{0, false}, FreeWord::generator(1)})) ==
        FsrElement{{0, false}, FreeWord::generator(1)});
  CHECK(fsr_op(fsr_rho(x), y) == fsr_rho(fsr_op(x, y)));
}

TEST_CASE("augmentation") {
  CHECK(augment(x) == FreeWord::generator(0));
  CHECK(augment(fsr_rho(x)) == FreeWord::generator(0, -1));
  FreeWord yxy = FreeWord::generator(1, -1) * FreeWord::generator(0) *
                 FreeWord::generator(1);
  CHECK(augment(FsrElement{{0, false}, FreeWord::generator(1)}) == yxy);
}

TEST_CASE("free symmetric rack laws hold on random triples") {
  testutil::Rng rng(2026);
  for (int trial = 0; trial < 2000; ++trial) {
    FsrElement a = testutil::random_element(rng, 3, 6);
    FsrElement b = testutil::random_element(rng, 3, 6);
    FsrElement c = testutil::random_element(rng, 3, 6);

    // bijectivity of - ^ b
    CHECK(fsr_op_inv(fsr_op(a, b), b) == a);
    CHECK(fsr_op(fsr_op_inv(a, b), b) == a);
    // self-distributivity
    CHECK(fsr_op(fsr_op(a, b), c) == fsr_op(fsr_op(a, c), fsr_op(b, c)));
    // good involution identities
    CHECK(fsr_rho(fsr_op(a, b)) == fsr_op(fsr_rho(a), b));
    CHECK(fsr_op(a, fsr_rho(b)) == fsr_op_inv(a, b));
    // augmentation is equivariant
    CHECK(augment(fsr_op(a, b)) ==
          augment(b).inverse() * augment(a) * augment(b));
  }
}
