#include <gtest/gtest.h>

#include <random>

#include <toricfan/charts.hpp>
#include <toricfan/error.hpp>
#include <toricfan/gallery.hpp>

#include "oracles.hpp"

using namespace toricfan;

namespace {

using Rows = std::vector<std::vector<Rational>>;

Rows columns_of(const TopologicalFan& fan, const Simplex& s, int which) {
  const std::size_t n = s.size();
  Rows m(n, std::vector<Rational>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const Cocharacter& beta = fan.beta[static_cast<std::size_t>(s[c])];
    for (std::size_t r = 0; r < n; ++r) {
      m[r][c] = which == 0 ? beta.b[r] : which == 1 ? beta.c[r] : Rational(beta.v[r]);
    }
  }
  return m;
}

Rows mul(const Rows& a, const Rows& b) {
  Rows out(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Dual rows from adjugate inverses: X = B^-1, U = V^-1, Y = -U C X.
std::vector<Character> oracle_dual(const TopologicalFan& fan, const Simplex& s) {
  const Rows x = oracle::adjugate_inverse(columns_of(fan, s, 0));
  const Rows u = oracle::adjugate_inverse(columns_of(fan, s, 2));
  Rows y = mul(mul(u, columns_of(fan, s, 1)), x);
  std::vector<Character> rows;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Character a;
    for (std::size_t k = 0; k < s.size(); ++k) {
      a.x.push_back(x[i][k]);
      a.y.push_back(Rational(-y[i][k]));
      EXPECT_TRUE(is_integral(u[i][k]));
      a.u.push_back(u[i][k].get_num());
    }
    rows.push_back(a);
  }
  return rows;
}

// z_i * prod_{k not in I} chi^{alpha_i}(lambda_{beta_k}(z_k)), evaluated pointwise.
std::vector<Complex> oracle_chart(const TopologicalFan& fan, const Simplex& s, const std::vector<Character>& dual,
                                  const std::vector<Complex>& z) {
  std::vector<Complex> out;
  for (std::size_t r = 0; r < s.size(); ++r) {
    Complex value = z[static_cast<std::size_t>(s[r])];
    for (std::size_t k = 0; k < fan.ray_count(); ++k) {
      if (std::find(s.begin(), s.end(), static_cast<int>(k)) != s.end()) continue;
      value *= oracle::character_after_cocharacter(dual[r], fan.beta[k], z[k]);
    }
    out.push_back(value);
  }
  return out;
}

EndoParam E(Rational re, Rational im, long w) { return {re, im, Integer(w)}; }

TopologicalFan double_b(const TopologicalFan& fan) {
  TopologicalFan out = fan;
  for (Cocharacter& beta : out.beta)
    for (Rational& q : beta.b) q *= 2;
  return out;
}

}  // namespace

TEST(DualSet, StandardBasis) {
  TopologicalFan fan = cpn(2);
  const DualSet d = dual_set(fan, {0, 1});
  EXPECT_EQ(d.rows[0].x, (RatVector{1, 0}));
  EXPECT_EQ(d.rows[1].x, (RatVector{0, 1}));
  EXPECT_EQ(d.rows[0].u, (IntVector{1, 0}));
  EXPECT_TRUE(is_zero(d.rows[0].y) && is_zero(d.rows[1].y));
}

TEST(DualSet, Cp2Chart23) {
  const TopologicalFan fan = cpn(2);
  const DualSet d = dual_set(fan, {1, 2});
  EXPECT_EQ(d.rows[0].u, (IntVector{-1, 1}));
  EXPECT_EQ(d.rows[1].u, (IntVector{-1, 0}));
  EXPECT_EQ(d.rows, oracle_dual(fan, {1, 2}));
}

TEST(DualSet, ImaginaryPartFromC) {
  TopologicalFan fan = toricfan::cpn(2);
  fan.beta[1].c = {1, 0};
  const DualSet d = dual_set(fan, {0, 1});
  EXPECT_EQ(d.rows, oracle_dual(fan, {0, 1}));
  EXPECT_FALSE(is_zero(d.rows[0].y));
  EXPECT_EQ(d.rows[0].y, (RatVector{0, -1}));
  EXPECT_TRUE(is_zero(d.rows[1].y));
}

TEST(DualSet, MatchesOracleOnGallery) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    for (const Simplex& s : fan.maximal_simplices) EXPECT_EQ(dual_set(fan, s).rows, oracle_dual(fan, s)) << name;
  }
}

TEST(DualSet, Errors) {
  TopologicalFan fan = cpn(2);
  fan.beta[1].v = {Integer(0), Integer(2)};
  try {
    dual_set(fan, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnimodularV);
  }
  TopologicalFan flat = cpn(2);
  flat.beta[1].b = {2, 0};
  try {
    dual_set(flat, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularB);
  }
}

TEST(DualSet, DeltaPropertyOnGallery) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    for (const Simplex& s : fan.maximal_simplices) {
      const DualSet d = dual_set(fan, s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          const EndoParam p = pair(d.rows[i], fan.beta[static_cast<std::size_t>(s[j])]);
          EXPECT_EQ(p, i == j ? EndoParam::identity() : EndoParam::zero()) << name;
        }
      }
    }
  }
}

TEST(Transition, Cp1Golden) {
  const TopologicalFan fan = cpn(1);
  const TransitionMap t = transition(fan, {0}, {1});
  ASSERT_EQ(t.matrix.rows(), 1u);
  EXPECT_EQ(t.matrix.at(0, 0), E(-1, 0, -1));
  ASSERT_TRUE(t.laurent.has_value());
  EXPECT_EQ((*t.laurent)[0][0], (LaurentExponent{-1, 0}));
  EXPECT_EQ(render_transition(t), "w = z_1^-1\n");
}

TEST(Transition, Cp2Chart12To23) {
  const TopologicalFan fan = cpn(2);
  const TransitionMap t = transition(fan, {0, 1}, {1, 2});
  EXPECT_EQ(t.matrix.row_labels(), (std::vector<int>{1, 2}));
  EXPECT_EQ(t.matrix.col_labels(), (std::vector<int>{0, 1}));
  EXPECT_EQ(t.matrix.at(0, 0), E(-1, 0, -1));
  EXPECT_EQ(t.matrix.at(0, 1), EndoParam::identity());
  EXPECT_EQ(t.matrix.at(1, 0), E(-1, 0, -1));
  EXPECT_EQ(t.matrix.at(1, 1), EndoParam::zero());
  EXPECT_EQ(render_transition(t), "w_2 = z_1^-1 z_2^1\nw_3 = z_1^-1\n");
}

TEST(Transition, Cp2ComposeExample) {
  const TopologicalFan fan = cpn(2);
  const MonomialMatrix composed =
      matrix_compose(transition(fan, {1, 2}, {0, 2}).matrix, transition(fan, {0, 1}, {1, 2}).matrix);
  EXPECT_EQ(composed, transition(fan, {0, 1}, {0, 2}).matrix);
}

TEST(Transition, SelfIsIdentityAndSharedColumnsAreDelta) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    for (const Simplex& i : fan.maximal_simplices) {
      EXPECT_EQ(transition(fan, i, i).matrix, MonomialMatrix::identity(i)) << name;
      for (const Simplex& j : fan.maximal_simplices) {
        const TransitionMap t = transition(fan, i, j);
        for (std::size_t c = 0; c < i.size(); ++c) {
          const auto pos = std::find(j.begin(), j.end(), i[c]);
          if (pos == j.end()) continue;
          for (std::size_t r = 0; r < j.size(); ++r) {
            EXPECT_EQ(t.matrix.at(r, c), j[r] == i[c] ? EndoParam::identity() : EndoParam::zero());
          }
        }
      }
    }
  }
}

TEST(ChartImage, TrivialOutsideCoordinates) {
  const TopologicalFan fan = gallery("perturbed(cpn(2),4)");
  std::vector<Complex> z{{0.3, 1.2}, {-0.7, 0.4}, {1, 0}};
  EXPECT_EQ(chart_image(fan, {0, 1}, z), (std::vector<Complex>{z[0], z[1]}));
  z[0] = 0;
  EXPECT_NO_THROW(chart_image(fan, {0, 1}, z));
  try {
    chart_image(fan, {1, 2}, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroForbidden);
  }
}

TEST(ChartImage, LargeCoordinatesStayFinite) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    std::vector<Complex> z(fan.ray_count(), Complex(0.8, -0.6));
    z.back() = Complex(1e6, 0);
    for (const Simplex& s : fan.maximal_simplices) {
      for (const Complex& w : chart_image(fan, s, z)) EXPECT_TRUE(std::isfinite(w.real()) && std::isfinite(w.imag()));
    }
  }
}

TEST(ChartImage, MatchesPointwiseOracle) {
  std::mt19937_64 rng(41);
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    for (const Simplex& s : fan.maximal_simplices) {
      const auto dual = oracle_dual(fan, s);
      for (int k = 0; k < 20; ++k) {
        std::vector<Complex> z(fan.ray_count());
        for (Complex& x : z) x = oracle::random_unit_scale(rng);
        const auto got = chart_image(fan, s, z);
        const auto want = oracle_chart(fan, s, dual, z);
        EXPECT_LT(max_relative_error(got, want), 1e-10) << name;
      }
    }
  }
}

TEST(ChartImage, TransitionsMatchOracleCharts) {
  std::mt19937_64 rng(43);
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    for (const Simplex& i : fan.maximal_simplices) {
      const auto dual_i = oracle_dual(fan, i);
      for (const Simplex& j : fan.maximal_simplices) {
        const auto dual_j = oracle_dual(fan, j);
        const TransitionMap t = transition(fan, i, j);
        for (int k = 0; k < 100; ++k) {
          std::vector<Complex> z(fan.ray_count());
          for (Complex& x : z) x = oracle::random_unit_scale(rng);
          const auto via = matrix_eval(t.matrix, oracle_chart(fan, i, dual_i, z));
          EXPECT_LT(max_relative_error(via, oracle_chart(fan, j, dual_j, z)), 1e-9) << name;
        }
      }
    }
  }
}

TEST(ChartOracle, GalleryPasses) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    const OracleReport r = chart_oracle(fan, 100, 1e-9, 5);
    EXPECT_TRUE(r.pass()) << name << " " << r.max_relative_error;
    EXPECT_EQ(r.pairs.size(), fan.maximal_simplices.size() * fan.maximal_simplices.size());
  }
}

TEST(Cocycle, ExactOnGallery) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    const CocycleReport r = cocycle_check(fan);
    EXPECT_TRUE(r.pass()) << name;
    const std::size_t k = fan.maximal_simplices.size();
    EXPECT_EQ(r.triples, k * k * k);
  }
}

TEST(Cocycle, NumericOnGallery) {
  for (const auto& name : oracle::gallery_names()) {
    CocycleOptions o;
    o.mode = CocycleMode::Numeric;
    o.points = 20;
    o.seed = 3;
    EXPECT_TRUE(cocycle_check(gallery(name), o).pass()) << name;
  }
}

TEST(Cocycle, TrivialTriple) {
  const TopologicalFan fan = cpn(2);
  const MonomialMatrix t = transition(fan, {0, 1}, {0, 1}).matrix;
  EXPECT_EQ(matrix_compose(t, t), t);
}

TEST(Cocycle, RefusesInvalidFan) {
  TopologicalFan fan = cpn(2);
  fan.beta[0].v = {Integer(-1), Integer(0)};
  fan.beta[0].b = {-1, 0};
  EXPECT_FALSE(validate(fan).valid());
  EXPECT_THROW(cocycle_check(fan), InvalidFanError);
}

TEST(Atlas, Cp2AllAlgebraic) {
  const auto charts = atlas(cpn(2));
  ASSERT_EQ(charts.size(), 3u);
  for (const ChartRecord& c : charts) {
    EXPECT_TRUE(c.algebraic);
    EXPECT_TRUE(c.real_algebraic);
    EXPECT_TRUE(c.smooth);
  }
  EXPECT_EQ(charts[0].removed, std::vector<int>{2});
  EXPECT_EQ(charts[1].removed, std::vector<int>{1});
  EXPECT_EQ(charts[2].removed, std::vector<int>{0});
}

TEST(Atlas, NiceNontoricFlags) {
  const TopologicalFan fan = nice_nontoric();
  const auto charts = atlas(fan);
  bool some_not_algebraic = false;
  for (const ChartRecord& c : charts) {
    EXPECT_TRUE(c.real_algebraic);
    if (c.algebraic) { EXPECT_TRUE(c.real_algebraic); }
    some_not_algebraic = some_not_algebraic || !c.algebraic;
    // Recompute the flags from the oracle dual rows.
    bool real = true, alg = true;
    for (const Character& a : oracle_dual(fan, c.simplex)) {
      for (std::size_t k = 0; k < a.x.size(); ++k) {
        real = real && a.y[k] == 0 && is_integral(a.x[k]) && is_even(Integer(a.x[k].get_num() - a.u[k]));
        alg = alg && a.y[k] == 0 && a.x[k] == Rational(a.u[k]);
      }
    }
    EXPECT_EQ(c.real_algebraic, real);
    EXPECT_EQ(c.algebraic, alg);
  }
  EXPECT_TRUE(some_not_algebraic);
}

TEST(Atlas, RemovedIsComplement) {
  const TopologicalFan fan = hirzebruch(2);
  for (const ChartRecord& c : atlas(fan)) {
    EXPECT_EQ(c.simplex.size() + c.removed.size(), fan.ray_count());
    for (int k : c.removed) EXPECT_EQ(std::count(c.simplex.begin(), c.simplex.end(), k), 0);
  }
}

TEST(Laurent, NiceFansHaveLaurentTransitions) {
  for (const auto& name : oracle::gallery_names()) {
    const TopologicalFan fan = gallery(name);
    const Classification cls = classify(fan);
    for (const Simplex& i : fan.maximal_simplices) {
      for (const Simplex& j : fan.maximal_simplices) {
        const TransitionMap t = transition(fan, i, j);
        if (cls.nice) { EXPECT_TRUE(t.laurent.has_value()) << name; }
        if (cls.toric) {
          ASSERT_TRUE(t.laurent.has_value());
          for (const auto& row : *t.laurent)
            for (const LaurentExponent& e : row) EXPECT_EQ(e.q, 0) << name;
        }
      }
    }
  }
}

TEST(Laurent, PerturbedFansAreNotLaurent) {
  for (const char* name : {"perturbed(cpn(2),4)", "perturbed(hirzebruch(1),9)"}) {
    const TopologicalFan fan = gallery(name);
    bool all = true;
    for (const Simplex& i : fan.maximal_simplices)
      for (const Simplex& j : fan.maximal_simplices) all = all && transition(fan, i, j).laurent.has_value();
    EXPECT_FALSE(all) << name;
  }
}

// Doubling b keeps every transition exponent nice (re = w) while b = 2v is
// not congruent to v mod 2, so Laurent transitions alone do not force a nice
// fan. The atlas criterion also asks for a real-algebraic chart.
TEST(Laurent, LaurentTransitionsDoNotImplyNiceFan) {
  const TopologicalFan fan = double_b(cpn(2));
  ASSERT_TRUE(validate(fan).valid());
  EXPECT_FALSE(classify(fan).nice);
  for (const Simplex& i : fan.maximal_simplices)
    for (const Simplex& j : fan.maximal_simplices) EXPECT_TRUE(transition(fan, i, j).laurent.has_value());
  const AtlasClassification a = classify_atlas(fan);
  EXPECT_TRUE(a.transitions_laurent);
  EXPECT_FALSE(a.some_chart_real_algebraic);
  EXPECT_FALSE(a.nice_criterion);
}

TEST(AtlasCriteria, ToricIffCriterionNiceImpliesCriterion) {
  std::vector<TopologicalFan> fans;
  for (const auto& name : oracle::gallery_names()) fans.push_back(gallery(name));
  fans.push_back(double_b(cpn(2)));
  fans.push_back(double_b(hirzebruch(1)));
  for (const TopologicalFan& fan : fans) {
    const Classification cls = classify(fan);
    const AtlasClassification a = classify_atlas(fan);
    EXPECT_EQ(a.toric_criterion, cls.toric);
    if (cls.nice) { EXPECT_TRUE(a.nice_criterion); }
  }
}

// Transitions only see b up to a linear change of coordinates: b = A v with
// A = diag(1, 1/3) has the transitions of CP^2 and a real-algebraic chart
// {1,2} (X = diag(1,3), U = Id), yet b_2 = (0, 1/3) is not integral.
TEST(AtlasCriteria, NiceCriterionDoesNotImplyNiceFan) {
  TopologicalFan fan = cpn(2);
  for (Cocharacter& beta : fan.beta) beta.b[1] /= 3;
  ASSERT_TRUE(validate(fan).valid());
  EXPECT_FALSE(classify(fan).nice);
  const AtlasClassification a = classify_atlas(fan);
  EXPECT_TRUE(a.transitions_holomorphic);
  EXPECT_TRUE(a.some_chart_real_algebraic);
  EXPECT_TRUE(a.nice_criterion);
  for (const Simplex& i : fan.maximal_simplices)
    for (const Simplex& j : fan.maximal_simplices) EXPECT_EQ(transition(fan, i, j).matrix, transition(cpn(2), i, j).matrix);
}

TEST(AtlasCriteria, NiceNontoricHasConjugateFactors) {
  const AtlasClassification a = classify_atlas(nice_nontoric());
  EXPECT_TRUE(a.transitions_laurent);
  EXPECT_FALSE(a.transitions_holomorphic);
  EXPECT_TRUE(a.nice_criterion);
  EXPECT_FALSE(a.toric_criterion);
}
