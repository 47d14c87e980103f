#include <doctest.h>

#include <random>
#include <vector>

#include "bfa/approx.hpp"
#include "bfa/consistency.hpp"
#include "bfa/error.hpp"
#include "bfa/partition.hpp"
#include "bfa/random.hpp"

#include "test_helpers.hpp"

using namespace bfa;

namespace {

MassFunction half_half(const Frame& frame) {
  return MassFunction::from_entries(
      frame, std::vector<MassFunction::Entry>{{test::subset(frame, {"a"}), 0.5},
                                              {test::subset(frame, {"a", "b"}), 0.5}});
}

}  // namespace

TEST_CASE("df on the fixture") {
  const MassFunction m0 = test::fixture_m0();
  const Frame& frame = m0.frame();

  CHECK(df(m0, m0) == 0.0);
  CHECK(df(m0, MassFunction::vacuous(frame)) == doctest::Approx(2.6));
  CHECK(df(m0, half_half(frame)) == doctest::Approx(0.6));

  SUBCASE("modes agree") {
    CHECK(df(m0, half_half(frame), DfMode::definitional) ==
          doctest::Approx(df(m0, half_half(frame), DfMode::closed_form)).epsilon(1e-12));
  }

  SUBCASE("frame mismatch") {
    const Frame other = Frame::from_labels({"a", "b"});
    CHECK_THROWS_AS(df(m0, MassFunction::vacuous(other)), Error);
  }
}

TEST_CASE("df modes agree on random pairs") {
  const Frame frame = Frame::from_labels({"a", "b", "c", "d", "e", "f"});
  std::mt19937_64 rng(61);
  for (int round = 0; round < 100; ++round) {
    const int s1 = 1 + static_cast<int>(uniform_below(rng, 20));
    const int s2 = 1 + static_cast<int>(uniform_below(rng, 20));
    const MassFunction a = test::random_mass(frame, s1, rng);
    const MassFunction b = test::random_mass(frame, s2, rng);
    CHECK(df(a, b, DfMode::definitional) ==
          doctest::Approx(df(a, b, DfMode::closed_form)).epsilon(1e-9));
  }
}

TEST_CASE("vacuous maximizes df among valid approximations") {
  const Frame frame = Frame::from_labels({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(67);
  for (int round = 0; round < 50; ++round) {
    const MassFunction m = test::random_mass(frame, 6, rng);
    const MassFunction other = test::random_mass(frame, 4, rng);
    CHECK(df(m, MassFunction::vacuous(frame)) >= df(m, other) - 1e-12);
  }
}

TEST_CASE("scaled df") {
  const MassFunction m0 = test::fixture_m0();
  const Frame& frame = m0.frame();
  const MassFunction best = half_half(frame);  // df 0.6 is optimal for k = 2

  SUBCASE("optimal scores zero") {
    CHECK(scaled_df(m0, best, 0.6, ScaleMode::optimal_vacuous) == doctest::Approx(0.0));
  }

  SUBCASE("forced merge of {a} and {b} scores one half") {
    const MassFunction merged = blocks_to_mass(m0, Partition::from_assignment({0, 0, 1}));
    CHECK(df(m0, merged) == doctest::Approx(1.6));
    CHECK(scaled_df(m0, merged, 0.6, ScaleMode::optimal_vacuous) == doctest::Approx(0.5));
  }

  SUBCASE("vacuous scores one") {
    CHECK(scaled_df(m0, MassFunction::vacuous(frame), 0.6, ScaleMode::optimal_vacuous) ==
          doctest::Approx(1.0));
  }

  SUBCASE("vacuous-only mode") {
    CHECK(scaled_df(m0, best, std::nullopt, ScaleMode::vacuous_only) ==
          doctest::Approx(0.6 / 2.6));
  }

  SUBCASE("missing optimal") {
    CHECK_THROWS_AS(scaled_df(m0, best, std::nullopt, ScaleMode::optimal_vacuous), Error);
  }

  SUBCASE("degenerate denominator returns zero") {
    const Frame f2 = Frame::from_labels({"a", "b"});
    const MassFunction v = MassFunction::vacuous(f2);
    CHECK(scaled_df(v, v, 0.0, ScaleMode::optimal_vacuous) == 0.0);
    CHECK(scaled_df(v, v, std::nullopt, ScaleMode::vacuous_only) == 0.0);
  }
}

TEST_CASE("weak consistency") {
  const MassFunction m0 = test::fixture_m0();
  const Frame& frame = m0.frame();

  SUBCASE("merged approximations are consistent") {
    const auto verdict = is_weakly_consistent(half_half(frame), m0);
    CHECK(verdict.consistent);
    CHECK(!verdict.witness);
  }

  SUBCASE("reflexive") {
    CHECK(is_weakly_consistent(m0, m0).consistent);
  }

  SUBCASE("the Bayesian approximation violates and the worst subset is reported") {
    const MassFunction bayes = bayesian_approximation(m0).mass;
    const auto verdict = is_weakly_consistent(bayes, m0);
    CHECK(!verdict.consistent);
    REQUIRE(verdict.witness);
    // Violations: {a}: 7/12 - 1/2 = 1/12; {b}: 5/12 - 3/10 = 7/60 (the max,
    // also attained at {b,c}; {b} comes first in bit order).
    CHECK(verdict.max_violation == doctest::Approx(5.0 / 12.0 - 0.3));
    CHECK(*verdict.witness == test::subset(frame, {"b"}));
  }

  SUBCASE("frames beyond the enumeration guard are rejected") {
    std::vector<std::string> labels;
    for (int i = 0; i < 21; ++i) labels.push_back("x" + std::to_string(i));
    const Frame big = Frame::from_labels(labels);
    const MassFunction v = MassFunction::vacuous(big);
    CHECK_THROWS_AS(is_weakly_consistent(v, v), Error);
    // The flow oracle has no such limit.
    CHECK(is_strongly_consistent(v, v).consistent);
  }
}

TEST_CASE("strong consistency") {
  const MassFunction m0 = test::fixture_m0();
  const Frame& frame = m0.frame();

  SUBCASE("feasible transport with witness") {
    const auto verdict = is_strongly_consistent(half_half(frame), m0);
    CHECK(verdict.consistent);
    CHECK(verdict.witness.residual == doctest::Approx(0.0));
    // Row sums reproduce the original masses, column sums the approximation.
    std::vector<double> row(3, 0.0);
    std::vector<double> col(2, 0.0);
    for (const auto& edge : verdict.witness.edges) {
      const Subset from = m0.entries()[static_cast<std::size_t>(edge.original_index)].set;
      const Subset to =
          half_half(frame).entries()[static_cast<std::size_t>(edge.approx_index)].set;
      CHECK(to.contains(from));
      row[static_cast<std::size_t>(edge.original_index)] += edge.flow;
      col[static_cast<std::size_t>(edge.approx_index)] += edge.flow;
    }
    for (int i = 0; i < 3; ++i) {
      CHECK(row[static_cast<std::size_t>(i)] ==
            doctest::Approx(m0.entries()[static_cast<std::size_t>(i)].mass));
    }
    for (int j = 0; j < 2; ++j) {
      CHECK(col[static_cast<std::size_t>(j)] ==
            doctest::Approx(half_half(frame).entries()[static_cast<std::size_t>(j)].mass));
    }
  }

  SUBCASE("vacuous is consistent with everything") {
    CHECK(is_strongly_consistent(MassFunction::vacuous(frame), m0).consistent);
  }

  SUBCASE("mass with no admissible superset is rejected") {
    const MassFunction just_a = MassFunction::from_entries(
        frame, std::vector<MassFunction::Entry>{{test::subset(frame, {"a"}), 1.0}});
    const auto verdict = is_strongly_consistent(just_a, m0);
    CHECK(!verdict.consistent);
    CHECK(verdict.witness.residual > 0.0);
  }
}

TEST_CASE("strong consistency implies weak consistency") {
  const Frame frame = Frame::from_labels({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(71);
  int strong_seen = 0;
  for (int round = 0; round < 60; ++round) {
    const int s = 2 + static_cast<int>(uniform_below(rng, 10));
    const MassFunction m = test::random_mass(frame, s, rng);
    // Candidate approximations: random block merges of m.
    std::vector<int> labels(static_cast<std::size_t>(s));
    const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s)));
    for (auto& label : labels) label = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    const MassFunction approx = blocks_to_mass(m, Partition::normalized_from_labels(labels));
    const auto strong = is_strongly_consistent(approx, m);
    if (strong.consistent) {
      ++strong_seen;
      CHECK(is_weakly_consistent(approx, m).consistent);
    }
  }
  CHECK(strong_seen > 0);
}

TEST_CASE("df is nonnegative under weak consistency") {
  const Frame frame = Frame::from_labels({"a", "b", "c", "d"});
  std::mt19937_64 rng(73);
  for (int round = 0; round < 50; ++round) {
    const int s = 2 + static_cast<int>(uniform_below(rng, 8));
    const MassFunction m = test::random_mass(frame, s, rng);
    std::vector<int> labels(static_cast<std::size_t>(s));
    for (auto& label : labels) label = static_cast<int>(uniform_below(rng, 3));
    const MassFunction approx = blocks_to_mass(m, Partition::normalized_from_labels(labels));
    if (is_weakly_consistent(approx, m).consistent) {
      CHECK(df(m, approx) >= -kMassEpsilon);
    }
  }
}
