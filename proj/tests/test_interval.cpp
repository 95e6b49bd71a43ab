#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expansive/boxeval.hpp"
#include "expansive/interval.hpp"
#include "expansive/problem.hpp"

using namespace expansive;

TEST_CASE("interval arithmetic") {
  Interval a(Rat(-1), Rat(2)), b(Rat(3), Rat(4));
  CHECK((a + b).lo == 2);
  CHECK((a + b).hi == 6);
  CHECK((a - b).lo == -5);
  CHECK((a - b).hi == -1);
  CHECK((a * b).lo == -4);
  CHECK((a * b).hi == 8);
  CHECK((-a).lo == -2);
  CHECK(a.contains_zero());
  CHECK(!b.contains_zero());
  CHECK(a.mag() == 2);
}

TEST_CASE("even powers tighten to nonnegative") {
  Interval a(Rat(-2), Rat(1));
  Interval sq = ipow(a, 2);
  CHECK(sq.lo == 0);
  CHECK(sq.hi == 4);
  Interval cube = ipow(a, 3);
  CHECK(cube.lo == -8);
  CHECK(cube.hi == 1);
}

TEST_CASE("cosine enclosure over turns") {
  Interval full = icos_turn(Interval(Rat(0), Rat(1)));
  CHECK(full.lo == -1);
  CHECK(full.hi == 1);

  Interval quarter = icos_turn(Interval(Rat(0), Rat(1, 4)));
  CHECK(quarter.hi == 1);  // critical point at u = 0
  CHECK(to_double(quarter.lo) == doctest::Approx(0.0).epsilon(1e-9));

  // shift invariance modulo 1
  Interval shifted = icos_turn(Interval(Rat(5), Rat(21, 4)));
  CHECK(shifted.hi == quarter.hi);
  CHECK(shifted.lo == quarter.lo);
}

TEST_CASE("sine enclosure hits critical points exactly") {
  Interval s = isin_turn(Interval(Rat(0), Rat(1, 2)));
  CHECK(s.hi == 1);  // u = 1/4 inside
  CHECK(to_double(s.lo) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("dyadic boxes split deterministically") {
  DyadicBox box = DyadicBox::root(2);
  CHECK(box.widest() == 0);  // ties break to the lowest index
  auto [a, b] = box.split(0);
  CHECK(a.sides[0].lo() == 0.0);
  CHECK(a.sides[0].hi() == 0.5);
  CHECK(b.sides[0].lo() == 0.5);
  CHECK(b.sides[0].hi() == 1.0);
  CHECK(a.widest() == 1);
  CHECK(a.max_level() == 1);
}

TEST_CASE("box evaluation excludes coefficient-dominated generators") {
  LaurentPoly f = parse_polynomial("x1 - 2");
  TorusGenerator gen(f, {1});
  CHECK(gen.eval_box(DyadicBox::root(1)).excludes_zero());

  LaurentPoly g = parse_polynomial("x1 - 1");
  TorusGenerator gen2(g, {1});
  CHECK(!gen2.eval_box(DyadicBox::root(1)).excludes_zero());
}

TEST_CASE("point evaluation bounds the true value") {
  LaurentPoly g = parse_polynomial("x1 - 1");
  TorusGenerator gen(g, {1});
  Enclosure e = gen.eval_point({0.5});  // value -2, normalized scale
  CHECK(e.mag_upper() == doctest::Approx(2.0).epsilon(1e-6));
  Enclosure z = gen.eval_point({0.0});
  CHECK(z.mag_upper() < 1e-9);
}

TEST_CASE("box enclosures contain sampled point values") {
  LaurentPoly f = parse_polynomial("3*x1^2*x2^-1 - x2 + 1");
  std::vector<int> vars{1, 2};
  TorusGenerator gen(f, vars);
  DyadicBox box = DyadicBox::root(2);
  auto [l, r] = box.split(0);
  auto [ll, lr] = l.split(1);
  Enclosure e = gen.eval_box(lr);
  // the box is [0, 1/2] x [1/2, 1]; its midpoint value must land inside
  Enclosure mid = gen.eval_point({0.25, 0.75});
  CHECK(mid.re_lo >= e.re_lo - 1e-9);
  CHECK(mid.re_hi <= e.re_hi + 1e-9);
  CHECK(mid.im_lo >= e.im_lo - 1e-9);
  CHECK(mid.im_hi <= e.im_hi + 1e-9);
}
