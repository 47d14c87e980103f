#include <doctest.h>

#include <random>
#include <set>

#include "bfa/error.hpp"
#include "bfa/frame.hpp"
#include "bfa/random.hpp"

#include "test_helpers.hpp"

using namespace bfa;

TEST_CASE("frame validation") {
  CHECK_THROWS_AS(Frame::from_labels({}), Error);
  CHECK_THROWS_AS(Frame::from_labels({"a", "a"}), Error);
  CHECK_THROWS_AS(Frame::from_labels({"a", ""}), Error);
  CHECK_THROWS_AS(Frame::from_labels(std::vector<std::string>(65, "x")), Error);

  const Frame frame = Frame::from_labels({"a", "b", "c"});
  CHECK(frame.size() == 3);
  CHECK(frame.universe().bits() == 0b111);
  CHECK(frame.index_of("b") == 1);
  CHECK(!frame.index_of("z"));
  CHECK(frame.singleton(2).bits() == 0b100);
}

TEST_CASE("subset labels round trip") {
  const Frame frame = test::abc_frame();
  const Subset ab = test::subset(frame, {"a", "b"});
  CHECK(ab.bits() == 0b011);
  CHECK(frame.labels_of(ab) == std::vector<std::string>{"a", "b"});
  CHECK(frame.complement(ab).bits() == 0b100);
  CHECK_THROWS_AS(test::subset(frame, {"d"}), Error);
}

namespace {

// Element-list model of the bit-set operations.
std::set<int> as_set(Subset s, int n) {
  std::set<int> out;
  for (int i = 0; i < n; ++i) {
    if (s.contains_element(i)) out.insert(i);
  }
  return out;
}

}  // namespace

TEST_CASE("subset algebra agrees with the element-list oracle") {
  const int n = 12;
  std::mt19937_64 rng(7);
  for (int round = 0; round < 1000; ++round) {
    const auto a = Subset::from_bits(uniform_below(rng, std::uint64_t{1} << n));
    const auto b = Subset::from_bits(uniform_below(rng, std::uint64_t{1} << n));
    const auto sa = as_set(a, n);
    const auto sb = as_set(b, n);

    std::set<int> su = sa;
    su.insert(sb.begin(), sb.end());
    CHECK(as_set(a | b, n) == su);

    std::set<int> si;
    for (const int e : sa) {
      if (sb.count(e)) si.insert(e);
    }
    CHECK(as_set(a & b, n) == si);

    CHECK(a.cardinality() == static_cast<int>(sa.size()));
    CHECK(a.contains(b) == std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()));
    CHECK(a.intersects(b) == !si.empty());
  }
}
