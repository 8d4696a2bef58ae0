#include <random>

#include "catch_amalgamated.hpp"
#include "qweb/qrep.hpp"
#include "qweb/webterm.hpp"
#include "random_webs.hpp"

using namespace qweb;
using qweb::testing::random_diagram;
using qweb::testing::random_morphism;
using qweb::testing::RandomWebOptions;

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

TEST_CASE("generator boundaries") {
  Generator m{Gen::Merge, 2, 1}, s{Gen::Split, 1, 3}, c{Gen::Cross, 2, 1};
  CHECK(m.inputs() == Composition{2, 1});
  CHECK(m.outputs() == Composition{3});
  CHECK(s.inputs() == Composition{4});
  CHECK(s.outputs() == Composition{1, 3});
  CHECK(c.outputs() == Composition{1, 2});
  CHECK(Generator{Gen::WDot, 3, 0}.parity() == 1);
  CHECK(Generator{Gen::BDot, 3, 0}.degree() == 3);
  CHECK(Generator{Gen::BDot, 3, 0}.parity() == 0);
  CHECK(merge(2, 1).tgt() == Composition{3});
  CHECK(split(1, 3).tgt() == Composition{1, 3});
}

TEST_CASE("zero thicknesses collapse to identities, negatives throw") {
  CHECK(merge(0, 2) == id({2}));
  CHECK(split(2, 0) == id({2}));
  CHECK(cross(0, 3) == id({3}));
  CHECK(bdot(0) == id({}));
  CHECK(wdot(0).is_zero());
  CHECK(id({2, 0, 1}) == id({2, 1}));
  CHECK_THROWS_AS(merge(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({Gen::Merge, 2, 0}), std::invalid_argument);
  CHECK(omega(3, 4).is_zero());
  CHECK(omega_circ(3, 3).is_zero());
  CHECK(omega(3, 0) == id({3}));
  CHECK(omega(3, 3) == bdot(3));
}

TEST_CASE("boundary mismatches are rejected") {
  CHECK_THROWS_AS(apply_slice({1, 1}, Slice{0, {Gen::Merge, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_slice({1, 1}, Slice{1, {Gen::Merge, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(compose(merge(1, 1), merge(1, 1)), std::invalid_argument);
  CHECK_THROWS(merge(1, 1) + id({2}));
  CHECK_THROWS_AS(packet(2, {2, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(packet(2, {3}, {}), std::invalid_argument);
  CHECK_THROWS_AS(rung_left(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(DiagramTerm({1, 0}, {}), std::invalid_argument);
}

TEST_CASE("far-apart white dots anticommute") {
  auto w0 = Morphism::from_slices({1, 1}, {Slice{0, {Gen::WDot, 1, 0}}, Slice{1, {Gen::WDot, 1, 0}}});
  auto w1 = Morphism::from_slices({1, 1}, {Slice{1, {Gen::WDot, 1, 0}}, Slice{0, {Gen::WDot, 1, 0}}});
  CHECK(w0 == -w1);
  CHECK(w0.terms().size() == 1);
  // f (x) g puts g lower, so the right dot comes first.
  CHECK(tensor(wdot(1), wdot(1)) == w1);
  // Even generators slide freely.
  auto b0 = Morphism::from_slices({1, 1}, {Slice{0, {Gen::BDot, 1, 0}}, Slice{1, {Gen::BDot, 1, 0}}});
  auto b1 = Morphism::from_slices({1, 1}, {Slice{1, {Gen::BDot, 1, 0}}, Slice{0, {Gen::BDot, 1, 0}}});
  CHECK(b0 == b1);
  // A double white dot on one strand is not zero in the free category.
  CHECK_FALSE(compose(wdot(1), wdot(1)).is_zero());
}

TEST_CASE("canonical form does not depend on the slicing") {
  std::mt19937_64 rng(3);
  RandomWebOptions o;
  o.max_slices = 7;
  for (int t = 0; t < 200; ++t) {
    Morphism f = random_diagram(rng, testing::random_object(rng, 1 + t % 4), o);
    Morphism g = random_diagram(rng, f.tgt(), o);
    Morphism h = random_diagram(rng, g.tgt(), o);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(id(f.tgt()), f) == f);
    CHECK(compose(f, id(f.src())) == f);
  }
}

TEST_CASE("parity and degree are additive") {
  std::mt19937_64 rng(5);
  RandomWebOptions o;
  for (int t = 0; t < 200; ++t) {
    Morphism f = random_morphism(rng, o);
    Morphism g = random_diagram(rng, f.tgt(), o);
    Morphism h = random_morphism(rng, o);
    REQUIRE(f.parity());
    REQUIRE(g.parity());
    Morphism gf = compose(g, f);
    if (!gf.is_zero()) {
      CHECK(*gf.parity() == ((*g.parity() + *f.parity()) & 1));
      CHECK(gf.degree() == g.degree() + f.degree());
    }
    Morphism fh = tensor(f, h);
    if (!fh.is_zero() && h.parity()) {
      CHECK(*fh.parity() == ((*f.parity() + *h.parity()) & 1));
      CHECK(fh.degree() == f.degree() + h.degree());
    }
  }
}

TEST_CASE("super interchange law") {
  std::mt19937_64 rng(17);
  RandomWebOptions o;
  o.max_slices = 4;
  for (int t = 0; t < 200; ++t) {
    Morphism f1 = random_diagram(rng, testing::random_object(rng, 1 + t % 3), o);
    Morphism f2 = random_diagram(rng, f1.tgt(), o);
    Morphism g1 = random_diagram(rng, testing::random_object(rng, 1 + (t / 3) % 3), o);
    Morphism g2 = random_diagram(rng, g1.tgt(), o);
    Morphism lhs = compose(tensor(f2, g2), tensor(f1, g1));
    Morphism rhs = tensor(compose(f2, f1), compose(g2, g1)) * Scalar(sgn(*g2.parity() * *f1.parity()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor is associative and bilinear") {
  std::mt19937_64 rng(23);
  RandomWebOptions o;
  o.max_terms = 3;
  o.max_slices = 3;
  o.max_weight = 2;
  for (int t = 0; t < 100; ++t) {
    Morphism f = random_morphism(rng, o), g = random_morphism(rng, o), h = random_morphism(rng, o);
    CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    CHECK(tensor(f, g + g * Scalar(2)) == tensor(f, g) * Scalar(3));
    CHECK(tensor(id({}), f) == f);
  }
}

TEST_CASE("the flip is an involutive antiautomorphism") {
  std::mt19937_64 rng(29);
  RandomWebOptions o;
  o.max_terms = 2;
  for (int t = 0; t < 200; ++t) {
    Morphism f = random_morphism(rng, o);
    CHECK(flip_div(flip_div(f)) == f);
    CHECK(flip_div(f).src() == f.tgt());
    Morphism g = random_diagram(rng, f.tgt(), o);
    CHECK(flip_div(compose(g, f)) == compose(flip_div(f), flip_div(g)));
    Morphism h = random_diagram(rng, testing::random_object(rng, 2), o);
    if (f.parity())
      CHECK(flip_div(tensor(f, h)) ==
            tensor(flip_div(f), flip_div(h)) * Scalar(sgn(*f.parity() * *h.parity())));
  }
  CHECK(flip_div(merge(2, 1)) == split(2, 1));
  CHECK(flip_div(cross(2, 1)) == cross(1, 2));
  CHECK(flip_div(wdot(2)) == wdot(2));
}

TEST_CASE("relation suites are well formed") {
  const auto& names = relation_suite_names();
  REQUIRE(names.size() >= 6);
  for (const auto& name : names) {
    auto rels = relation_suite(name, 2);
    CHECK_FALSE(rels.empty());
    for (const auto& r : rels) {
      INFO(name << ": " << r.name);
      CHECK(r.lhs.src() == r.rhs.src());
      CHECK(r.lhs.tgt() == r.rhs.tgt());
    }
  }
  CHECK_THROWS(relation_suite("no-such-suite", 2));
}

TEST_CASE("relations hold under the functor for gl(2)") {
  for (const auto& name : relation_suite_names()) {
    for (const auto& r : relation_suite(name, 3)) {
      INFO(name << ": " << r.name);
      CHECK(eval_morphism(r.lhs, 2) == eval_morphism(r.rhs, 2));
    }
  }
}

TEST_CASE("the flip preserves the defining relations") {
  for (const auto& name : relation_suite_names()) {
    for (const auto& r : relation_suite(name, 3)) {
      INFO(name << ": " << r.name);
      CHECK(eval_morphism(flip_div(r.lhs), 2) == eval_morphism(flip_div(r.rhs), 2));
    }
  }
}

TEST_CASE("substitution and thin black dots") {
  // Replacing nothing is the identity operation.
  auto f = chain({merge(1, 2), tensor(bdot(1), wdot(2)), split(1, 2)});
  CHECK(substitute(f, [](const Generator&) { return std::nullopt; }) == f);
  // A boundary-changing rule is refused.
  CHECK_THROWS_AS(substitute(f, [](const Generator& g) -> std::optional<Morphism> {
                    if (g.kind == Gen::WDot) return id({g.a});
                    if (g.kind == Gen::BDot) return merge(1, 1);
                    return std::nullopt;
                  }),
                  std::invalid_argument);
  // Thin dots leave thickness-one dots alone and expand thick ones.
  CHECK(thin_black_dots(bdot(1)) == bdot(1));
  CHECK(thin_black_dots(bdot(2)) == dotted_balloon(2) * Scalar::frac(1, 2));
  // The functor sees a thick dot and its thin expansion identically.
  for (int a = 1; a <= 3; ++a)
    CHECK(eval_morphism(dotted_balloon(a), 2) == eval_morphism(bdot(a), 2) * Scalar(factorial(a)));
}

TEST_CASE("rungs and packets have the expected shapes") {
  auto r = rung_left(2, 1, 1);
  CHECK(r.src() == Composition{2, 1});
  CHECK(r.tgt() == Composition{3});
  auto rw = rung_right(2, 2, 1, true);
  CHECK(rw.src() == Composition{2, 2});
  CHECK(rw.tgt() == Composition{1, 3});
  CHECK(*rw.parity() == 1);
  auto p = packet(3, {3, 1}, {2});
  CHECK(p.degree() == 2 + 0 + 2);
  CHECK(*p.parity() == 0);
  CHECK(omega_nu(3, {}) == id({3}));
  auto swap = thin_block_swap(1, 2, cross(1, 1));
  CHECK(swap.src() == Composition{1, 1, 1});
}
