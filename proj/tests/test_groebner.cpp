#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mfv/groebner.h"

using namespace mfv;

namespace {

Ring make_ring(std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::grevlex()) {
  return RingSignature::make(std::move(vars), ord);
}

Polynomial p(const Ring& r, std::string_view s) { return parse_polynomial(r, s); }

Ideal ideal(const Ring& r, std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial> ps;
  for (auto s : gens) ps.push_back(p(r, s));
  return Ideal(r, std::move(ps));
}

// Reducedness invariants: monic, auto-reduced, ascending leading terms.
void check_reduced(const Ring& r, const std::vector<Polynomial>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    CHECK(gb[i].leading_coeff() == 1);
    if (i + 1 < gb.size())
      CHECK(compare(r->order(), gb[i].leading_monomial(), gb[i + 1].leading_monomial()) < 0);
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : gb[i].terms()) CHECK_FALSE(divides(gb[j].leading_monomial(), t.mono));
    }
  }
}

}  // namespace

TEST_CASE("twisted cubic reduced lex basis") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x^2 - y", "x*y - z"});
  const auto& gb = I.groebner_basis();
  REQUIRE(gb.size() == 4);
  CHECK(gb[0] == p(r, "y^3 - z^2"));
  CHECK(gb[1] == p(r, "x*z - y^2"));
  CHECK(gb[2] == p(r, "x*y - z"));
  CHECK(gb[3] == p(r, "x^2 - y"));
  check_reduced(r, gb);
}

TEST_CASE("twisted cubic elimination oracle") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x^2 - y", "x*y - z"});
  auto elim = elimination_ideal(I, {"y", "z"});
  CHECK(elim.ring()->vars() == std::vector<std::string>{"y", "z"});
  CHECK(elim.ring()->order() == MonomialOrder::grevlex());
  REQUIRE(elim.groebner_basis().size() == 1);
  CHECK(elim.groebner_basis()[0] == p(elim.ring(), "y^3 - z^2"));
}

TEST_CASE("degenerate ideals") {
  auto r = make_ring({"x", "y"});
  CHECK(Ideal(r, {}).is_zero());
  CHECK(Ideal(r, {p(r, "0")}).is_zero());
  auto unit = Ideal(r, {p(r, "7")});
  CHECK(unit.is_unit());
  REQUIRE(unit.groebner_basis().size() == 1);
  CHECK(unit.groebner_basis()[0] == p(r, "1"));
  CHECK(unit.contains(p(r, "x^5 - y")));
  CHECK(ideal(r, {"x - 1", "x"}).is_unit());
}

TEST_CASE("reduced basis is invariant under permutation and scaling") {
  std::mt19937 rng(90125);
  auto r = make_ring({"x", "y", "z"});
  std::vector<Ideal> pool = {
      ideal(r, {"x^2 - y", "x*y - z"}),
      ideal(r, {"x^2 + y^2 + z^2 - 1", "x*y - z", "x - z^2"}),
      ideal(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}),  // cyclic-3
      ideal(r, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}),
      ideal(r, {"x^2*y - 1", "x*y^2 - x"})};
  std::uniform_int_distribution<long> num(1, 7);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Ideal& base = pool[static_cast<std::size_t>(trial) % pool.size()];
    auto gens = base.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) {
      Rational c = rat(num(rng), den(rng));
      if (sign(rng)) c = -c;
      g = g.scaled(c);
    }
    Ideal shuffled(r, std::move(gens));
    CHECK(shuffled.groebner_basis() == base.groebner_basis());
    CHECK(same_ideal(shuffled, base));
  }
}

TEST_CASE("buchberger criteria do not change the reduced basis") {
  auto r = make_ring({"x", "y", "z"});
  std::vector<std::vector<Polynomial>> systems = {
      {p(r, "x^2 - y"), p(r, "x*y - z")},
      {p(r, "x + y + z"), p(r, "x*y + y*z + z*x"), p(r, "x*y*z - 1")},
      {p(r, "x^2 + y^2 - 1"), p(r, "x^2 - z")}};
  for (const auto& gens : systems) {
    auto full = buchberger(r, gens);
    for (bool coprime_on : {false, true})
      for (bool chain_on : {false, true}) {
        BuchbergerOptions opts{coprime_on, chain_on};
        CHECK(buchberger(r, gens, opts) == full);
      }
  }
}

TEST_CASE("normal form properties") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x^2 - y", "x*y - z"});
  const auto& gb = I.groebner_basis();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> expd(0, 3);
  std::uniform_int_distribution<long> cf(-4, 4);
  for (int i = 0; i < 100; ++i) {
    std::vector<Term> ts;
    for (int t = 0; t < 4; ++t)
      ts.push_back({Monomial{{expd(rng), expd(rng), expd(rng)}}, rat(cf(rng))});
    auto f = Polynomial::from_terms(r, std::move(ts));
    auto g = p(r, "x*z - y^2");
    auto nf = normal_form(f, gb);
    // remainder is fully reduced and congruent to f
    for (const Term& t : nf.terms())
      for (const auto& b : gb) CHECK_FALSE(divides(b.leading_monomial(), t.mono));
    CHECK(I.contains(f - nf));
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
  }
  CHECK(normal_form(p(r, "x^2"), gb) == p(r, "y"));
  CHECK(ideal_membership(p(r, "x^3 - z"), I));
  CHECK_FALSE(ideal_membership(p(r, "x"), I));
}

TEST_CASE("with_order preserves the ideal") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x^2 - y", "x*y - z"});
  auto J = with_order(I, MonomialOrder::grevlex());
  CHECK(J.ring()->order() == MonomialOrder::grevlex());
  auto back = with_order(J, MonomialOrder::lex());
  CHECK(same_ideal(back, I));
  // membership is order-independent
  CHECK(J.contains(rename_into(p(r, "x^3 - z"), J.ring())));
}

TEST_CASE("kernel of a monomial curve parametrization") {
  auto src = make_ring({"u", "v"});
  auto tgt = make_ring({"x"});
  RingMap phi{src, tgt, {p(tgt, "x^2"), p(tgt, "x^3")}, std::nullopt};
  auto ker = kernel_of_map(phi);
  REQUIRE(ker.groebner_basis().size() == 1);
  CHECK(ker.groebner_basis()[0] == p(src, "u^3 - v^2"));
  CHECK(apply_map(phi, p(src, "u^3 - v^2")).is_zero());
}

TEST_CASE("kernel respects target relations") {
  auto src = make_ring({"a", "b"});
  auto tgt = make_ring({"x"});
  Ideal rel(tgt, {p(tgt, "x^2")});
  RingMap phi{src, tgt, {p(tgt, "x"), p(tgt, "x")}, rel};
  auto ker = kernel_of_map(phi);
  CHECK(ker.contains(p(src, "a - b")));
  CHECK(ker.contains(p(src, "a^2")));
  CHECK_FALSE(ker.contains(p(src, "a")));
}

TEST_CASE("preimage of an ideal under a ring map") {
  auto src = make_ring({"u", "v"});
  auto tgt = make_ring({"x", "y"});
  auto phi = make_map(src, tgt, {{"u", p(tgt, "x^2")}, {"v", p(tgt, "y")}});
  auto pre = preimage_ideal(phi, Ideal(tgt, {p(tgt, "x^2 - y")}));
  CHECK(pre.contains(p(src, "u - v")));
  CHECK_FALSE(pre.contains(p(src, "u")));
}

TEST_CASE("make_map fills unlisted variables by name") {
  auto src = make_ring({"x", "s"});
  auto tgt = make_ring({"x", "y"});
  auto phi = make_map(src, tgt, {{"s", p(tgt, "x*y")}});
  CHECK(apply_map(phi, p(src, "s - x")) == p(tgt, "x*y - x"));
  CHECK_THROWS_AS(make_map(make_ring({"q"}), tgt, {}), RingError);
}

TEST_CASE("radical membership via the Rabinowitsch trick") {
  auto r = make_ring({"x", "y"});
  CHECK(radical_membership(p(r, "x"), ideal(r, {"x^2"})));
  CHECK(radical_membership(p(r, "x + y"), ideal(r, {"(x + y)^5"})));
  CHECK(radical_membership(p(r, "x*y"), ideal(r, {"x^3"})));
  CHECK(radical_membership(p(r, "x"), ideal(r, {"1"})));
  CHECK(radical_membership(p(r, "0"), ideal(r, {"y"})));
  CHECK_FALSE(radical_membership(p(r, "x"), ideal(r, {"y^2"})));
  CHECK_FALSE(radical_membership(p(r, "1"), ideal(r, {"x"})));
  CHECK_FALSE(radical_membership(p(r, "x + 1"), ideal(r, {"x^2"})));
}

TEST_CASE("same_variety is mutual generator-wise radical membership") {
  auto r = make_ring({"x", "y"});
  CHECK(same_variety(ideal(r, {"x"}), ideal(r, {"x^2"})));
  CHECK(same_variety(ideal(r, {"x", "y"}), ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(same_variety(ideal(r, {"x*y"}), ideal(r, {"x^2*y"})));
  CHECK_FALSE(same_variety(ideal(r, {"x"}), ideal(r, {"y"})));
  CHECK_FALSE(same_variety(ideal(r, {"x"}), ideal(r, {"x", "y"})));
}

TEST_CASE("same_ideal is reduced-basis equality") {
  auto r = make_ring({"x", "y"});
  CHECK(same_ideal(ideal(r, {"x", "y"}), ideal(r, {"x + y", "y"})));
  CHECK_FALSE(same_ideal(ideal(r, {"x"}), ideal(r, {"x^2"})));
}

TEST_CASE("sum, product, power, intersection") {
  auto r = make_ring({"x", "y"});
  auto X = ideal(r, {"x"});
  auto Y = ideal(r, {"y"});
  CHECK(same_ideal(ideal_sum(X, Y), ideal(r, {"x", "y"})));
  CHECK(same_ideal(ideal_product(X, Y), ideal(r, {"x*y"})));
  CHECK(same_ideal(ideal_intersection(X, Y), ideal(r, {"x*y"})));
  CHECK(same_ideal(ideal_intersection(ideal(r, {"x^2", "y"}), X), ideal(r, {"x^2", "x*y"})));
  CHECK(same_ideal(ideal_power(ideal(r, {"x", "y"}), 2), ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(ideal_power(X, 0).is_unit());
  CHECK_THROWS_AS(ideal_power(X, -1), DomainError);
  // intersection of comaximal ideals is the product
  auto A = ideal(r, {"x - 1"});
  auto B = ideal(r, {"x + 1"});
  CHECK(same_ideal(ideal_intersection(A, B), ideal(r, {"x^2 - 1"})));
}

TEST_CASE("hilbert series canonical form") {
  auto hs = make_series({1, 0, -1}, 2);  // (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t)
  CHECK(hs.num == std::vector<Integer>{1, 1});
  CHECK(hs.denom_power == 1);
  CHECK(to_string(hs) == "(1 + t) / (1 - t)");
  CHECK(hs.coefficient(0) == 1);
  CHECK(hs.coefficient(5) == 2);
  auto zero = make_series({}, 0);
  CHECK(zero.num.empty());
  CHECK(to_string(make_series({1}, 0)) == "1");
}

TEST_CASE("hilbert series oracles") {
  auto r2 = make_ring({"x", "y"});
  CHECK(hilbert_series(Ideal(r2, {})) == make_series({1}, 2));
  CHECK(hilbert_series(ideal(r2, {"x", "y"})) == make_series({1}, 0));
  CHECK(hilbert_series(ideal(r2, {"x^2"})) == make_series({1, 1}, 1));
  auto r1 = make_ring({"x"});
  CHECK(hilbert_series(ideal(r1, {"x^3"})) == make_series({1, 1, 1}, 0));
  // coordinate ring of the quadric cone in five variables
  auto r5 = make_ring({"a", "b", "c", "d", "e"});
  CHECK(hilbert_series(ideal(r5, {"b*e - c*d"})) == make_series({1, 1}, 4));
  CHECK_THROWS_AS(hilbert_series(ideal(r2, {"x^2 - y"})), DomainError);
}

TEST_CASE("hilbert series does not depend on the order") {
  auto r = make_ring({"x", "y", "z"}, MonomialOrder::lex());
  std::vector<std::vector<std::string_view>> systems = {
      {"x^2 - y*z", "x*y"}, {"x^2", "y^3", "z^4"}, {"x*y - z^2", "x^2 - y*z"}};
  for (const auto& sys : systems) {
    std::vector<Polynomial> gens;
    for (auto s : sys) gens.push_back(p(r, s));
    Ideal lexI(r, gens);
    CHECK(hilbert_series(lexI) == hilbert_series(with_order(lexI, MonomialOrder::grevlex())));
  }
}

TEST_CASE("quadratic rank") {
  auto r = make_ring({"x", "y", "z", "w"});
  CHECK(quadratic_rank(p(r, "x^2 + y^2")) == 2);
  CHECK(quadratic_rank(p(r, "(x + y)^2")) == 1);
  CHECK(quadratic_rank(p(r, "x*y")) == 2);
  CHECK(quadratic_rank(p(r, "x^2 - y^2 - z^2 + w^2")) == 4);
  CHECK(quadratic_rank(p(r, "x*y - z*w")) == 4);
  CHECK(quadratic_rank(p(r, "0")) == 0);
  CHECK_THROWS_AS(quadratic_rank(p(r, "x^2 + x")), DomainError);
  CHECK_THROWS_AS(quadratic_rank(p(r, "x^3")), DomainError);
}

TEST_CASE("matrix rank over the rationals") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{rat(1), rat(2)}, {rat(2), rat(4)}}) == 1);
  CHECK(matrix_rank({{rat(1), rat(0)}, {rat(0), rat(1)}}) == 2);
  CHECK(matrix_rank({{rat(1, 3), rat(1, 2)}, {rat(2, 3), rat(1)}}) == 1);
  CHECK(matrix_rank({{rat(0), rat(0)}, {rat(0), rat(0)}}) == 0);
}

TEST_CASE("elimination keeps variables in declared order") {
  auto r = make_ring({"t", "x", "y", "z"}, MonomialOrder::lex());
  auto I = ideal(r, {"x - t^2", "y - t^3", "z - t^4"});
  auto elim = elimination_ideal(I, {"x", "y", "z"});
  CHECK(elim.ring()->vars() == std::vector<std::string>{"x", "y", "z"});
  CHECK(elim.contains(p(elim.ring(), "x^2 - z")));
  CHECK(elim.contains(p(elim.ring(), "y^2 - x*z")));
  CHECK(elim.contains(p(elim.ring(), "x^3 - y^2")));
  CHECK_FALSE(elim.contains(p(elim.ring(), "x - y")));
  CHECK_THROWS_AS(elimination_ideal(I, {"nosuch"}), RingError);
}

TEST_CASE("contains_ideal") {
  auto r = make_ring({"x", "y"});
  CHECK(ideal(r, {"x", "y"}).contains_ideal(ideal(r, {"x^2 + y"})));
  CHECK_FALSE(ideal(r, {"x^2 + y"}).contains_ideal(ideal(r, {"x", "y"})));
}
