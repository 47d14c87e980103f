#include <doctest.h>

#include <cmath>
#include <random>

#include "bfa/error.hpp"
#include "bfa/mass.hpp"
#include "bfa/random.hpp"

#include "test_helpers.hpp"

using namespace bfa;

TEST_CASE("mass construction validates and merges") {
  const Frame frame = test::abc_frame();

  SUBCASE("well-formed input") {
    const MassFunction m = test::fixture_m0();
    CHECK(m.focal_count() == 3);
    CHECK(m.mass_of(test::subset(frame, {"a"})) == doctest::Approx(0.5));
  }

  SUBCASE("duplicate subsets merge by summation") {
    const Frame ab = Frame::from_labels({"a", "b"});
    const std::vector<MassFunction::Entry> entries{
        {ab.subset_from_labels(std::vector<std::string>{"a"}), 0.5},
        {ab.subset_from_labels(std::vector<std::string>{"a"}), 0.5},
    };
    const MassFunction m = MassFunction::from_entries(ab, entries);
    CHECK(m.focal_count() == 1);
    CHECK(m.entries()[0].mass == doctest::Approx(1.0));
  }

  SUBCASE("not normalized") {
    const std::vector<MassFunction::Entry> entries{{test::subset(frame, {"a"}), 0.5}};
    CHECK_THROWS_AS(MassFunction::from_entries(frame, entries), Error);
  }

  SUBCASE("empty focal") {
    const std::vector<MassFunction::Entry> entries{
        {Subset::from_bits(0), 0.3}, {test::subset(frame, {"a"}), 0.7}};
    CHECK_THROWS_AS(MassFunction::from_entries(frame, entries), Error);
  }

  SUBCASE("non-positive mass") {
    const std::vector<MassFunction::Entry> entries{
        {test::subset(frame, {"a"}), -0.1}, {test::subset(frame, {"b"}), 1.1}};
    CHECK_THROWS_AS(MassFunction::from_entries(frame, entries), Error);
  }
}

TEST_CASE("bel and pl on the fixture") {
  const MassFunction m = test::fixture_m0();
  const Frame& frame = m.frame();

  CHECK(bel(m, test::subset(frame, {"a", "b"})) == doctest::Approx(1.0));
  CHECK(bel(m, test::subset(frame, {"a"})) == doctest::Approx(0.5));
  CHECK(bel(m, Subset::from_bits(0)) == 0.0);
  CHECK(bel(m, frame.universe()) == doctest::Approx(1.0));

  CHECK(pl(m, test::subset(frame, {"c"})) == 0.0);
  CHECK(pl(m, test::subset(frame, {"a"})) == doctest::Approx(0.7));
  CHECK(pl(m, frame.universe()) == doctest::Approx(1.0));
  CHECK(pl(m, Subset::from_bits(0)) == 0.0);
}

TEST_CASE("bel/pl duality on random mass functions") {
  const Frame frame = Frame::from_labels({"a", "b", "c", "d", "e", "f"});
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const int s = 1 + static_cast<int>(uniform_below(rng, 20));
    const MassFunction m = test::random_mass(frame, s, rng);
    const auto a = Subset::from_bits(uniform_below(rng, std::uint64_t{1} << 6));
    CHECK(bel(m, a) + pl(m, frame.complement(a)) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Mobius inversion") {
  const Frame frame = test::abc_frame();

  SUBCASE("round trip reproduces the fixture") {
    const MassFunction m = test::fixture_m0();
    const auto table = bel_table(m);
    const MassFunction back = mass_from_bel(frame, table);
    REQUIRE(back.focal_count() == m.focal_count());
    for (int i = 0; i < m.focal_count(); ++i) {
      CHECK(back.entries()[i].set == m.entries()[i].set);
      CHECK(back.entries()[i].mass ==
            doctest::Approx(m.entries()[i].mass).epsilon(1e-12));
    }
  }

  SUBCASE("vacuous table") {
    std::vector<double> table(8, 0.0);
    table[7] = 1.0;
    const MassFunction back = mass_from_bel(frame, table);
    CHECK(back.focal_count() == 1);
    CHECK(back.entries()[0].set == frame.universe());
  }

  SUBCASE("superadditivity violation is rejected") {
    const Frame ab = Frame::from_labels({"a", "b"});
    // Bel({a}) = Bel({b}) = 0.6 forces m({a,b}) = -0.2.
    const std::vector<double> table{0.0, 0.6, 0.6, 1.0};
    CHECK_THROWS_AS(mass_from_bel(ab, table), Error);
  }

  SUBCASE("random round trips") {
    const Frame big = Frame::from_labels({"a", "b", "c", "d", "e", "f"});
    std::mt19937_64 rng(13);
    for (int round = 0; round < 20; ++round) {
      const int s = 1 + static_cast<int>(uniform_below(rng, 30));
      const MassFunction m = test::random_mass(big, s, rng);
      const MassFunction back = mass_from_bel(big, bel_table(m));
      REQUIRE(back.focal_count() == m.focal_count());
      for (int i = 0; i < m.focal_count(); ++i) {
        CHECK(back.entries()[i].set == m.entries()[i].set);
        CHECK(back.entries()[i].mass ==
              doctest::Approx(m.entries()[i].mass).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("Dempster combination") {
  const Frame frame = Frame::from_labels({"a", "b"});
  const Subset a = frame.singleton(0);
  const Subset b = frame.singleton(1);
  const Subset x = frame.universe();

  const MassFunction m1 =
      MassFunction::from_entries(frame, std::vector<MassFunction::Entry>{{a, 0.6}, {x, 0.4}});
  const MassFunction m2 =
      MassFunction::from_entries(frame, std::vector<MassFunction::Entry>{{b, 0.5}, {x, 0.5}});

  SUBCASE("hand-enumerated example") {
    // Products: a&b empty (0.3 conflict), a&X=a (0.3), X&b=b (0.2), X&X=X (0.2).
    const MassFunction combined = combine_dempster(m1, m2);
    CHECK(combined.mass_of(a) == doctest::Approx(3.0 / 7.0));
    CHECK(combined.mass_of(b) == doctest::Approx(2.0 / 7.0));
    CHECK(combined.mass_of(x) == doctest::Approx(2.0 / 7.0));
  }

  SUBCASE("vacuous is the identity") {
    const MassFunction combined = combine_dempster(MassFunction::vacuous(frame), m1);
    CHECK(combined.mass_of(a) == doctest::Approx(0.6));
    CHECK(combined.mass_of(x) == doctest::Approx(0.4));
  }

  SUBCASE("total conflict") {
    const MassFunction ma =
        MassFunction::from_entries(frame, std::vector<MassFunction::Entry>{{a, 1.0}});
    const MassFunction mb =
        MassFunction::from_entries(frame, std::vector<MassFunction::Entry>{{b, 1.0}});
    CHECK_THROWS_AS(combine_dempster(ma, mb), Error);
  }

  SUBCASE("commutativity on random pairs") {
    const Frame big = Frame::from_labels({"a", "b", "c", "d"});
    std::mt19937_64 rng(17);
    for (int round = 0; round < 30; ++round) {
      const MassFunction p = test::random_mass(big, 4, rng);
      const MassFunction q = test::random_mass(big, 4, rng);
      try {
        const MassFunction pq = combine_dempster(p, q);
        const MassFunction qp = combine_dempster(q, p);
        REQUIRE(pq.focal_count() == qp.focal_count());
        for (int i = 0; i < pq.focal_count(); ++i) {
          CHECK(pq.entries()[i].set == qp.entries()[i].set);
          CHECK(pq.entries()[i].mass ==
                doctest::Approx(qp.entries()[i].mass).epsilon(1e-12));
        }
      } catch (const Error&) {
        // total conflict: also fine for both orders
      }
    }
  }
}

TEST_CASE("total belief weight") {
  const MassFunction m0 = test::fixture_m0();
  CHECK(total_belief_weight(m0) == doctest::Approx(3.6));

  const Frame frame = test::abc_frame();
  CHECK(total_belief_weight(MassFunction::vacuous(frame)) == 1.0);

  // m(X \ {c}) = 1 on n = 3 weighs 2.
  const MassFunction mab = MassFunction::from_entries(
      frame, std::vector<MassFunction::Entry>{{test::subset(frame, {"a", "b"}), 1.0}});
  CHECK(total_belief_weight(mab) == doctest::Approx(2.0));

  SUBCASE("equals the exponential belief sum") {
    const Frame big = Frame::from_labels({"a", "b", "c", "d", "e", "f"});
    std::mt19937_64 rng(19);
    for (int round = 0; round < 30; ++round) {
      const int s = 1 + static_cast<int>(uniform_below(rng, 25));
      const MassFunction m = test::random_mass(big, s, rng);
      const auto table = bel_table(m);
      double sum = 0.0;
      for (const double value : table) sum += value;
      CHECK(total_belief_weight(m) == doctest::Approx(sum).epsilon(1e-9));
    }
  }
}

TEST_CASE("vacuous mass function") {
  const Frame frame = test::abc_frame();
  const MassFunction v = MassFunction::vacuous(frame);
  CHECK(v.focal_count() == 1);
  CHECK(v.mass_of(frame.universe()) == 1.0);
  CHECK(bel(v, test::subset(frame, {"a", "b"})) == 0.0);
  CHECK(total_belief_weight(v) == 1.0);
}
