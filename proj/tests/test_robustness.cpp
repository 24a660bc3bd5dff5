#include "support.hpp"

#include "robusta/errors.hpp"
#include "robusta/fan.hpp"
#include "robusta/graver.hpp"
#include "robusta/groebner.hpp"
#include "robusta/monomial_matrix.hpp"
#include "robusta/robustness.hpp"

#include <doctest.h>

using namespace robusta;
using namespace robusta::testing;

namespace {

const VariableContext af({"a", "b", "c", "d", "e", "f"});

MonomialMatrix mmat(const std::string& text) { return io::parse_monomial_matrix(text); }

ScaledBinomial scaled(const char* text, const VariableContext& ctx) { return io::parse_binomial(text, ctx); }

/// Restrictions of a robust generating set to variable prefixes stay robust.
void check_robust_properties(const BinomialIdeal& I, const RobustnessReport& r) {
  REQUIRE(r.robust);
  CHECK(terms_pairwise_distinct(r.universal_gb));
  const BinomialIdeal F(I.context(), r.universal_gb);
  for (std::size_t k = 1; k <= I.num_vars(); ++k) {
    const auto R = restrict_to_variables(F, k);
    if (R.empty()) continue;
    CHECK(robust_set_check(R).robust());
  }
}

} // namespace

TEST_CASE("robust_check examples") {
  const auto fn = robust_check(ideal("vars: x y z\nx - y\ny - z"));
  CHECK_FALSE(fn.robust);
  CHECK(fn.mu == 2);
  CHECK(fn.ugb_size == 3);

  const auto I = toric_from_matrix(matrix_4x6());
  const auto r = robust_check(I);
  CHECK(r.robust);
  CHECK(r.mu == 4);
  CHECK(r.ugb_size == 4);
  CHECK_FALSE(r.lawrence_like);
  CHECK(r.redundant_elements.empty());
  check_robust_properties(I, r);

  const auto m24 = generic_minors(2, 4);
  const auto r24 = robust_check(m24);
  CHECK(r24.robust);
  CHECK(r24.mu == 6);
  CHECK(r24.ugb_size == 6);
  check_robust_properties(m24, r24);
}

TEST_CASE("robust iff no redundant element and |UGB| = mu") {
  std::mt19937_64 rng(12);
  std::vector<BinomialIdeal> ideals{generic_minors(2, 3), generic_minors(3, 3), ideal("vars: x y z\nx - y\ny - z")};
  for (int k = 0; k < 8; ++k) ideals.push_back(toric_from_matrix(random_graded_matrix(rng, 2, 5, 3)));
  for (const auto& I : ideals) {
    if (I.empty()) continue;
    const auto r = robust_check(I);
    CHECK(r.robust == (r.redundant_elements.empty() && r.ugb_size == r.mu));
    CHECK(r.mu <= r.ugb_size);
    CHECK(r.ugb_size <= r.graver_size);
    if (r.robust) {
      check_robust_properties(I, r);
      // Every initial ideal of a robust ideal has mu generators.
      for (const auto& in : enumerate_initial_ideals(I)) CHECK(in.size() == r.mu);
    }
  }
}

TEST_CASE("Lawrence lifts are robust with mu = |UGB| = |Graver|") {
  for (const auto& A : {IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}),
                        IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}})}) {
    const auto L = lawrence_lift(kernel_lattice(A));
    const auto J = toric_ideal(L, lawrence_context(A.cols()));
    const auto r = robust_check(J);
    CHECK(r.robust);
    CHECK(r.lawrence_like);
    CHECK(r.graver_equals_mingens);
    CHECK(r.ugb_size == r.mu);
    CHECK(r.graver_size == r.mu);
    check_robust_properties(J, r);
  }
}

TEST_CASE("is_lawrence_lattice") {
  const auto L = kernel_lattice(IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}}));
  CHECK_FALSE(is_lawrence_lattice(L));
  CHECK(is_lawrence_lattice(lawrence_lift(L)));
  CHECK_FALSE(is_lawrence_lattice(kernel_lattice(matrix_4x6())));
}

TEST_CASE("irreducible_components examples") {
  CHECK(irreducible_components(ideal("vars: x1 x2 x3 x4\nx1 - x2\nx3 - x4")).size() == 2);
  CHECK(irreducible_components(generic_minors(2, 3)).size() == 1);
  const auto split = irreducible_components(ideal("vars: x y z w p q r s\nx*y - z*w\nx^2 - y*z\np*q - r*s\np^2 - q*r"));
  REQUIRE(split.size() == 2);
  const auto& xs = split[0].variables[0] == 0 ? split[0] : split[1];
  const auto& ps = split[0].variables[0] == 0 ? split[1] : split[0];
  CHECK(xs.variables == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(ps.variables == std::vector<std::size_t>{4, 5, 6, 7});
  CHECK(xs.generators.size() == 2);
  CHECK(ps.generators.context().names() == std::vector<std::string>{"p", "q", "r", "s"});
}

TEST_CASE("classify_quadratic examples") {
  CHECK(classify_quadratic(ideal("vars: x y z w\nx*y - z*w")).kind == QuadraticShape::Kind::Singleton);

  const auto m24 = generic_minors(2, 4);
  const auto shape = classify_quadratic(m24);
  CHECK(shape.kind == QuadraticShape::Kind::DeterminantalTwoByN);
  CHECK(shape.n == 4);
  // The recovered rows reproduce the minors.
  std::vector<Binomial> rebuilt;
  for (std::size_t i = 0; i < shape.n; ++i)
    for (std::size_t j = i + 1; j < shape.n; ++j) {
      Monomial p(8), m(8);
      p.set(shape.top[i], 1);
      p.set(shape.bottom[j], 1);
      m.set(shape.top[j], 1);
      m.set(shape.bottom[i], 1);
      rebuilt.push_back(Binomial::make(p, m));
    }
  CHECK(sorted(rebuilt) == sorted(m24.generators()));

  const auto F = ideal("vars: x1 x2 x3 x4 x5 x6\nx1*x2 - x3*x4\nx1*x3 - x5*x6");
  CHECK(classify_quadratic(F).kind == QuadraticShape::Kind::NotRobustShape);
  CHECK_FALSE(robust_set_check(F).robust());
  CHECK_FALSE(robust_check(toric_ideal(ideal_lattice(F), F.context())).robust);

  CHECK_THROWS_AS(classify_quadratic(ideal("vars: x y z\nx^3 - y*z^2")), InvalidInput);
}

TEST_CASE("rescale_normalize examples") {
  const VariableContext xyzw({"x", "y", "z", "w"});
  const auto one = rescale_normalize(xyzw, {scaled("2*x*y - z*w", xyzw)});
  CHECK(one.ideal.generators() == binomials(xyzw, {"x*y - z*w"}));

  // Minors of [[2a 3b 5c] [7d 11e 13f]].
  const auto r = rescale_normalize(af, {scaled("22*a*e - 21*b*d", af), scaled("26*a*f - 35*c*d", af),
                                        scaled("39*b*f - 55*c*e", af)});
  CHECK(sorted(r.ideal.generators()) == binomials(af, {"a*e - b*d", "a*f - c*d", "b*f - c*e"}));

  const VariableContext xy({"x", "y"});
  CHECK_THROWS_AS(rescale_normalize(xy, {scaled("x^2 - 2*y^2", xy)}), NotRescalable);
}

TEST_CASE("rescale_normalize: factors turn inputs into multiples of pure differences") {
  const auto gens = std::vector<ScaledBinomial>{scaled("22*a*e - 21*b*d", af), scaled("3*a*f - 5*c*d", af)};
  const auto r = rescale_normalize(af, gens);
  for (const auto& g : gens) {
    mpq_class p = g.c_plus, m = g.c_minus;
    for (std::size_t i = 0; i < 6; ++i) {
      for (int k = 0; k < g.plus[i]; ++k) p *= r.factors[i];
      for (int k = 0; k < g.minus[i]; ++k) m *= r.factors[i];
    }
    CHECK(p == -m);
  }
}

TEST_CASE("minors_of_monomial_matrix examples") {
  const auto generic = minors_of_monomial_matrix(mmat("vars: a b c d e f\n2 3\na b c\nd e f"));
  CHECK(sorted(generic.minors.generators()) == binomials(af, {"a*e - b*d", "a*f - c*d", "b*f - c*e"}));
  CHECK(generic.reducible.empty());

  const auto A = mmat("vars: a b c d e f g\n2 3\na*c b f\nd c*e g");
  const auto M = minors_of_monomial_matrix(A);
  CHECK(M.reducible.empty());
  const auto bin = binomial("a*c^2*e - b*d", A.context);
  CHECK(std::count(M.minors.generators().begin(), M.minors.generators().end(), bin) == 1);
  for (const auto& g : M.minors.generators()) CHECK(is_irreducible_binomial(g));

  const auto shared = minors_of_monomial_matrix(mmat("vars: a b c\n2 2\na b\na c"));
  CHECK(shared.reducible.size() == 1);
}

TEST_CASE("coprimality_criterion examples") {
  CHECK(coprimality_criterion(mmat("vars: a b c d e f\n2 3\na b c\nd e f")).coprime);

  const auto A = mmat("vars: a b c d e f g\n2 3\na*c b f\nd c*e g");
  const auto c = coprimality_criterion(A);
  CHECK_FALSE(c.coprime);
  CHECK(c.witness_label == "z12");
  REQUIRE(c.witness);
  CHECK(*c.witness == monomial("c", A.context));
  CHECK_FALSE(robust_set_check(minors_of_monomial_matrix(A).minors).robust());

  const auto powers = mmat("vars: u1 u2 u3 u4 u5 u6\n2 3\nu1^2 u3 u5\nu4 u2^3 u6");
  CHECK(coprimality_criterion(powers).coprime);
  CHECK(robust_set_check(minors_of_monomial_matrix(powers).minors).robust());

  CHECK_THROWS_AS(coprimality_criterion(mmat("vars: a b c\n2 2\na b\na c")), HypothesisViolation);
}

TEST_CASE("monomial matrix rejects degree-zero entries") {
  CHECK_THROWS_AS(mmat("vars: a b c\n2 2\na 1\nb c"), InvalidInput);
}

TEST_CASE("minors robustness agrees with coprimality on random monomial matrices") {
  std::mt19937_64 rng(404);
  const auto ctx = default_context(8);
  int tested = 0, coprime = 0;
  for (int attempt = 0; tested < 30 && attempt < 5000; ++attempt) {
    const std::size_t n = 3 + rng() % 2;
    std::vector<Monomial> top, bottom;
    auto entry = [&] {
      Monomial m(8);
      const auto deg = 1 + rng() % 2;
      for (std::size_t k = 0; k < deg; ++k) {
        const auto v = rng() % 8;
        m.set(v, m[v] + 1);
      }
      return m;
    };
    for (std::size_t k = 0; k < n; ++k) top.push_back(entry());
    for (std::size_t k = 0; k < n; ++k) bottom.push_back(entry());
    const MonomialMatrix A(ctx, top, bottom);
    const auto M = minors_of_monomial_matrix(A);
    if (!M.reducible.empty()) continue;
    const auto c = coprimality_criterion(A);
    CHECK(robust_set_check(M.minors).robust() == c.coprime);
    ++tested;
    coprime += c.coprime ? 1 : 0;
  }
  CHECK(tested == 30);
  MESSAGE("coprime instances: " << coprime);
}

TEST_CASE("robust_set_check on explicit sets") {
  CHECK(robust_set_check(generic_minors(2, 4)).robust());
  const auto fn = robust_set_check(ideal("vars: x y z\nx - y\ny - z"));
  CHECK_FALSE(fn.universal);
  CHECK(fn.minimal);
  REQUIRE(fn.failing_weight);
  const auto three = robust_set_check(ideal("vars: x y z\nx - y\ny - z\nx - z"));
  CHECK(three.universal);
  CHECK_FALSE(three.minimal);
}

TEST_CASE("quadratic exhaustion: robust iff determinantal or singleton") {
  for (std::size_t vars : {5, 6}) {
    const auto cases = quadratic_exhaustion(vars, 3);
    CHECK(cases.size() > 5);
    std::size_t determinantal = 0;
    for (const auto& c : cases) {
      CHECK(c.robust == (c.shape.kind != QuadraticShape::Kind::NotRobustShape));
      if (c.robust) CHECK(terms_pairwise_distinct(c.generators.generators()));
      determinantal += c.shape.kind == QuadraticShape::Kind::DeterminantalTwoByN ? 1 : 0;
    }
    // The 2x3 minors need six variables.
    CHECK(determinantal == (vars == 6 ? 1 : 0));
  }
}
