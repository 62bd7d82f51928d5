#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfv/invariants.h"

using namespace mfv;

namespace {

Polynomial p(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }

// C* acting with weight +1 on x and -1 on y; chi the identity character.
TorusWeightSystem hyperbolic_torus() {
  Ring r = RingSignature::make({"x", "y"}, MonomialOrder::grevlex());
  return TorusWeightSystem{r, 1, {{1}, {-1}}, {1}};
}

}  // namespace

TEST_CASE("monomial weights are additive") {
  auto ws = hyperbolic_torus();
  CHECK(monomial_weight(ws, Monomial{{2, 1}}) == std::vector<int>{1});
  CHECK(monomial_weight(ws, Monomial{{0, 0}}) == std::vector<int>{0});
  CHECK(monomial_weight(ws, Monomial{{0, 3}}) == std::vector<int>{-3});
}

TEST_CASE("semi-invariant enumeration is exhaustive and ordered") {
  auto ws = hyperbolic_torus();
  auto chi1 = semi_invariant_basis(ws, 1, 3);
  REQUIRE(chi1.size() == 2);
  CHECK(to_string(ws.ring, chi1[0]) == "x");
  CHECK(to_string(ws.ring, chi1[1]) == "x^2*y");
  auto chi0 = semi_invariant_basis(ws, 0, 3);
  REQUIRE(chi0.size() == 2);
  CHECK(chi0[0].is_one());
  CHECK(to_string(ws.ring, chi0[1]) == "x*y");
  CHECK(semi_invariant_basis(ws, -1, 1).size() == 1);  // just y
  CHECK(semi_invariant_basis(ws, 4, 3).empty());
}

TEST_CASE("polynomial weight rejects weight-mixed input") {
  auto ws = hyperbolic_torus();
  CHECK(polynomial_weight(ws, p(ws.ring, "x^2*y + 3*x")) == std::vector<int>{1});
  CHECK_THROWS_AS(polynomial_weight(ws, p(ws.ring, "x + y")), DomainError);
}

TEST_CASE("generation check distinguishes complete generator sets") {
  auto ws = hyperbolic_torus();
  std::vector<NamedGenerator> partial = {{"f", p(ws.ring, "x")}};
  CHECK_FALSE(check_generation(partial, ws, 2, 4));
  std::vector<NamedGenerator> complete = {{"f", p(ws.ring, "x")}, {"g", p(ws.ring, "x*y")}};
  CHECK(check_generation(complete, ws, 3, 6));
}

TEST_CASE("scalar equivariance probe") {
  Ring r = RingSignature::make({"x", "y"}, MonomialOrder::grevlex());
  GroupFactor plain{"u", {1, 1}, 1, 1};
  CHECK(scalar_equivariance(p(r, "x*y"), plain) == 2);
  CHECK(scalar_equivariance(p(r, "x + y"), plain) == 1);
  CHECK_THROWS_AS(scalar_equivariance(p(r, "x + x*y"), plain), DomainError);

  GroupFactor det_type{"g", {1, 1}, 1, 2};
  CHECK(scalar_equivariance(p(r, "x*y"), det_type) == 1);
  CHECK(scalar_equivariance(p(r, "x^2*y^2"), det_type) == 2);
  CHECK_THROWS_AS(scalar_equivariance(p(r, "x"), det_type), DomainError);
}

TEST_CASE("Mat2 algebra identities") {
  Ring r = RingSignature::make({"a", "b", "c", "d"}, MonomialOrder::grevlex());
  Mat2 m = Mat2::generic(r, 0, 1, 2, 3);
  CHECK(m.trace() == p(r, "a + d"));
  CHECK(m.det() == p(r, "a*d - b*c"));
  Mat2 prod = m * m.adjugate();
  Mat2 expect = Mat2::scalar(m.det());
  for (int i = 0; i < 4; ++i)
    CHECK(prod.a[static_cast<std::size_t>(i)] == expect.a[static_cast<std::size_t>(i)]);
  CHECK(Mat2::identity(r).det() == p(r, "1"));
  CHECK(Mat2::zero(r).trace().is_zero());

  Mat2 n = Mat2::generic(r, 3, 2, 1, 0);
  CHECK(commutator(m, n).trace().is_zero());
  CHECK((m * n).trace() == (n * m).trace());
}

TEST_CASE("traceless matrices satisfy X^2 = -det(X) I") {
  Ring r = RingSignature::make({"d", "u", "l"}, MonomialOrder::grevlex());
  Mat2 x = Mat2::traceless(r, 0, 1, 2);
  CHECK(x.trace().is_zero());
  Mat2 sq = x * x;
  CHECK(sq.at(0, 1).is_zero());
  CHECK(sq.at(1, 0).is_zero());
  CHECK(sq.at(0, 0) == -x.det());
  CHECK(sq.at(0, 0) == p(r, "d^2 + u*l"));
}

TEST_CASE("vector action and column determinant") {
  Ring r = RingSignature::make({"a", "b", "c", "d", "s", "t"}, MonomialOrder::grevlex());
  Mat2 m = Mat2::generic(r, 0, 1, 2, 3);
  Vec2 v{p(r, "s"), p(r, "t")};
  Vec2 mv = m * v;
  CHECK(mv.x == p(r, "a*s + b*t"));
  CHECK(mv.y == p(r, "c*s + d*t"));
  Vec2 w{p(r, "1"), p(r, "0")};
  CHECK(det2(v, w) == -det2(w, v));
  CHECK(det2(v, v).is_zero());
  // det2(Mv, Mw) = det(M) det2(v, w)
  CHECK(det2(m * v, m * w) == m.det() * det2(v, w));
}

TEST_CASE("nilpotent pair relations kill squares, products, commutator") {
  Ring r = RingSignature::make({"d1", "u1", "l1", "d2", "u2", "l2"}, MonomialOrder::grevlex());
  Mat2 x = Mat2::traceless(r, 0, 1, 2);
  Mat2 y = Mat2::traceless(r, 3, 4, 5);
  Ideal nil(r, nilpotent_pair_relations(x, y));
  for (const Mat2& m : {x * x, y * y, x * y, y * x, commutator(x, y)})
    for (const Polynomial& e : m.a) CHECK(nil.contains(e));
  CHECK_FALSE(nil.contains(p(r, "d1")));
  CHECK(nil.contains(p(r, "d1^2 + u1*l1")));
}

TEST_CASE("xi system: seven stacked-column determinants") {
  auto sys = classical_generators(ClassicalCase::XiHalf);
  REQUIRE(sys.gens.size() == 7);
  for (int i = 0; i < 7; ++i)
    CHECK(sys.gens[static_cast<std::size_t>(i)].name == "xi" + std::to_string(i));
  const Ring& r = sys.ambient;
  CHECK(sys.gens[0].expr == p(r, "z11*z22 - z21*z12"));
  CHECK(sys.gens[1].expr == p(r, "2*z11*z21*a1d + z21^2*a1u - z11^2*a1l"));
  CHECK(sys.gens[2].expr == p(r, "2*z11*z21*a2d + z21^2*a2u - z11^2*a2l"));
  CHECK_FALSE(sys.nilpotency.is_zero());
  CHECK(sys.nilpotency.contains(p(r, "a1d^2 + a1u*a1l")));
}

TEST_CASE("zeta system: five trace generators") {
  auto sys = classical_generators(ClassicalCase::ZetaFull);
  REQUIRE(sys.gens.size() == 5);
  for (int i = 0; i < 5; ++i)
    CHECK(sys.gens[static_cast<std::size_t>(i)].name == "zeta" + std::to_string(i));
  const Ring& r = sys.ambient;
  CHECK(sys.gens[0].expr == p(r, "z11*z22 - z21*z12"));
  // each trace generator is linear in b, linear in a, quadratic in z
  for (int i = 1; i <= 4; ++i) {
    const Polynomial& z = sys.gens[static_cast<std::size_t>(i)].expr;
    CHECK_FALSE(z.is_zero());
    CHECK(z.is_homogeneous());
    CHECK(z.total_degree() == 4);
  }
  // swapping the b pair maps zeta1 -> zeta2, swapping the a pair maps zeta1 -> zeta3
  std::vector<std::pair<std::string, std::string>> swap_b = {
      {"b1d", "b2d"}, {"b1u", "b2u"}, {"b1l", "b2l"},
      {"b2d", "b1d"}, {"b2u", "b1u"}, {"b2l", "b1l"}};
  std::vector<std::pair<std::string, std::string>> swap_a = {
      {"a1d", "a2d"}, {"a1u", "a2u"}, {"a1l", "a2l"},
      {"a2d", "a1d"}, {"a2u", "a1u"}, {"a2l", "a1l"}};
  CHECK(rename_into(sys.gens[1].expr, r, swap_b) == sys.gens[2].expr);
  CHECK(rename_into(sys.gens[1].expr, r, swap_a) == sys.gens[3].expr);
  CHECK(rename_into(sys.gens[4].expr, r, swap_b) == sys.gens[3].expr);
  CHECK(sys.nilpotency.contains(p(r, "b1d^2 + b1u*b1l")));
  CHECK(sys.nilpotency.contains(p(r, "a1d^2 + a1u*a1l")));
}

TEST_CASE("trace system: four mixed traces") {
  auto sys = classical_generators(ClassicalCase::TraceSl2);
  REQUIRE(sys.gens.size() == 4);
  const Ring& r = sys.ambient;
  CHECK(sys.gens[0].name == "t1");
  CHECK(sys.gens[0].expr == p(r, "z1*w1 + z3*w5 + z5*w3 + z7*w7"));
  CHECK(sys.gens[3].expr == p(r, "z2*w2 + z4*w6 + z6*w4 + z8*w8"));
  CHECK(sys.nilpotency.is_zero());
}

TEST_CASE("relation ideal of the quadratic Veronese") {
  Ring amb = RingSignature::make({"u", "v"}, MonomialOrder::grevlex());
  std::vector<NamedGenerator> gens = {
      {"a", p(amb, "u^2")}, {"b", p(amb, "u*v")}, {"c", p(amb, "v^2")}};
  auto rel = relation_ideal(gens, Ideal(amb, {}));
  CHECK(rel.ring()->vars() == std::vector<std::string>{"a", "b", "c"});
  CHECK(rel.ring()->order() == MonomialOrder::grevlex());
  REQUIRE(rel.groebner_basis().size() == 1);
  CHECK(rel.groebner_basis()[0] == p(rel.ring(), "b^2 - a*c"));

  auto rel_lex = relation_ideal(gens, Ideal(amb, {}), MonomialOrder::lex());
  CHECK(rel_lex.ring()->order() == MonomialOrder::lex());
  CHECK(rel_lex.contains(p(rel_lex.ring(), "b^2 - a*c")));
}

TEST_CASE("relation ideal respects ambient relations") {
  Ring amb = RingSignature::make({"u"}, MonomialOrder::grevlex());
  std::vector<NamedGenerator> gens = {{"a", p(amb, "u")}, {"b", p(amb, "u")}};
  auto rel = relation_ideal(gens, Ideal(amb, {p(amb, "u^3")}));
  CHECK(rel.contains(p(rel.ring(), "a - b")));
  CHECK(rel.contains(p(rel.ring(), "a^3")));
  CHECK_FALSE(rel.contains(p(rel.ring(), "a")));
}
