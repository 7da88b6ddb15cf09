#include <gtest/gtest.h>

#include "vnumlab/ideal.hpp"

using namespace vnl;

namespace {

RingPtr xyz() { return make_ring({"X", "Y", "Z"}); }

MonomialIdeal ideal(const char* text, const RingPtr& r) { return parse_ideal(text, r); }

}  // namespace

TEST(Monomial, ParseAndRender) {
  auto r = xyz();
  EXPECT_EQ(parse_monomial("1", *r), Monomial({0, 0, 0}));
  EXPECT_EQ(parse_monomial("X*Z*X", *r), Monomial({2, 0, 1}));
  EXPECT_EQ(render(Monomial({2, 0, 1}), *r), "X^2*Z");
  EXPECT_EQ(render(Monomial({0, 0, 0}), *r), "1");
  EXPECT_THROW(parse_monomial("W", *r), ParseError);
  EXPECT_THROW(parse_monomial("X^", *r), ParseError);
  EXPECT_THROW(parse_monomial("X**Y", *r), ParseError);
}

TEST(Monomial, WeightedDegree) {
  auto unit = xyz();
  EXPECT_EQ(degree(Monomial({2, 0, 3}), *unit), 5);
  auto w = make_ring({"X", "Y", "Z"}, {2, 3, 5});
  EXPECT_EQ(degree(Monomial({0, 0, 0}), *w), 0);
  EXPECT_EQ(degree(Monomial({1, 2, 0}), *w), 8);
  EXPECT_THROW(make_ring({"X", "Y"}, {1, 0}), Error);
  EXPECT_THROW(make_ring({"X", "X"}), Error);
}

TEST(Monomial, Lattice) {
  auto l = lattice(Monomial({1, 0, 1}), Monomial({1, 1, 1}));
  EXPECT_TRUE(l.divides);
  EXPECT_EQ(l.gcd, Monomial({1, 0, 1}));
  EXPECT_EQ(l.lcm, Monomial({1, 1, 1}));
  EXPECT_EQ(l.colon, Monomial({0, 0, 0}));

  l = lattice(Monomial({3, 0, 0}), Monomial({1, 1, 0}));
  EXPECT_FALSE(l.divides);
  EXPECT_EQ(l.gcd, Monomial({1, 0, 0}));
  EXPECT_EQ(l.lcm, Monomial({3, 1, 0}));
  EXPECT_EQ(l.colon, Monomial({2, 0, 0}));

  l = lattice(Monomial({0, 0, 0}), Monomial({4, 1, 2}));
  EXPECT_TRUE(l.divides);
  EXPECT_TRUE(l.colon.is_unit());
}

TEST(Ideal, Minimalize) {
  auto r = xyz();
  EXPECT_EQ(render(ideal("(X, X^2*Y, Z)", r)), "(X, Z)");
  EXPECT_TRUE(ideal("(1, X)", r).is_unit());
  EXPECT_EQ(ideal("(X^2*Y^2, X*Y*Z, Z^2)", r).size(), 3u);
}

TEST(Ideal, Contains) {
  auto r = xyz();
  auto j = ideal("(X^3, Y, X*Z)", r);
  EXPECT_TRUE(j.contains(parse_monomial("X*Y", *r)));
  EXPECT_FALSE(j.contains(parse_monomial("X^2", *r)));
  for (const auto& g : j.gens()) EXPECT_TRUE(j.contains(g));
}

TEST(Ideal, SumProductPower) {
  auto r = xyz();
  EXPECT_EQ(sum(ideal("(X)", r), ideal("(X^3, Y, X*Z)", r)), ideal("(X, Y)", r));
  auto i = ideal("(X*Y, Z)", r);
  EXPECT_EQ(product(i, i), ideal("(X^2*Y^2, X*Y*Z, Z^2)", r));
  EXPECT_TRUE(sum(i, MonomialIdeal::unit(r)).is_unit());
  EXPECT_TRUE(power(i, 0).is_unit());
  EXPECT_EQ(power(i, 2), ideal("(X^2*Y^2, X*Y*Z, Z^2)", r));
  EXPECT_THROW(power(ideal("(X, Y, Z)", r), 20, 50), Error);
}

TEST(Ideal, Intersect) {
  auto r = xyz();
  EXPECT_EQ(intersect(ideal("(X)", r), ideal("(X^3, Y)", r)), ideal("(X^3, X*Y)", r));
  auto i = ideal("(X^2, Y*Z)", r);
  EXPECT_EQ(intersect(i, MonomialIdeal::unit(r)), i);
  auto j3 = intersect(intersect(ideal("(X)", r), ideal("(X^3, Y)", r)),
                      ideal("(X^3, Y^4, X^2*Y^3*Z^3, X^2*Z^6, Y^3*Z^6, Z^9)", r));
  EXPECT_EQ(j3, ideal("(X^3, X*Y^4, X^2*Y^3*Z^3, X^2*Y*Z^6, X*Y^3*Z^6, X*Y*Z^9)", r));
}

TEST(Ideal, Colon) {
  auto r = xyz();
  auto j = ideal("(X^3, Y, X*Z)", r);
  EXPECT_TRUE(colon(j, parse_monomial("X*Y", *r)).is_unit());
  EXPECT_EQ(colon(j, parse_monomial("Z", *r)), ideal("(X, Y)", r));
  EXPECT_EQ(colon(j, ideal("(X*Y, Z)", r)), ideal("(X, Y)", r));
  EXPECT_EQ(colon(j, MonomialIdeal::unit(r)), j);
  auto k = ideal("(X^3, X*Y^4)", r);
  EXPECT_EQ(colon(k, ideal("(X, Y^2, Z^3)", r)), k);
}

TEST(Ideal, Saturate) {
  auto r = xyz();
  auto s = saturate(ideal("(X^3, Y, X*Z)", r), ideal("(X*Y, Z)", r));
  EXPECT_EQ(s.ideal, ideal("(X, Y)", r));
  EXPECT_EQ(s.onset, 2u);
  auto i = ideal("(X^2, Y)", r);
  s = saturate(i, MonomialIdeal::unit(r));
  EXPECT_EQ(s.ideal, i);
  EXPECT_EQ(s.onset, 1u);
  s = saturate(ideal("(X^3, X*Y^4)", r), ideal("(X, Y^2, Z^3)", r));
  EXPECT_EQ(s.ideal, ideal("(X^3, X*Y^4)", r));
  EXPECT_EQ(s.onset, 1u);
}

TEST(Ideal, GeneratorDegrees) {
  auto r = xyz();
  EXPECT_EQ(generator_degrees(ideal("(X*Y, Z)", r)), (std::vector<Degree>{1, 2}));
  EXPECT_EQ(generator_degrees(ideal("(X, Y^2, Z^3)", r)), (std::vector<Degree>{1, 2, 3}));
  EXPECT_EQ(generator_degrees(ideal("(X)", r)), (std::vector<Degree>{1}));
  EXPECT_THROW(generator_degrees(MonomialIdeal::unit(r)), Error);
}

TEST(Ideal, ZeroIdeal) {
  auto r = xyz();
  auto z = MonomialIdeal::zero(r);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(render(z), "(0)");
  EXPECT_EQ(parse_ideal("(0)", r), z);
  auto i = ideal("(X, Y)", r);
  EXPECT_EQ(sum(z, i), i);
  EXPECT_TRUE(product(z, i).is_zero());
  EXPECT_TRUE(intersect(z, i).is_zero());
  EXPECT_TRUE(colon(z, i).is_zero());
}

TEST(Ideal, CanonicalOrder) {
  auto r = xyz();
  EXPECT_EQ(render(ideal("(Z^2, X*Y, X)", r)), "(X, Z^2)");
  EXPECT_EQ(render(ideal("(Y*Z, X*Z, X*Y)", r)), "(X*Y, X*Z, Y*Z)");
}
