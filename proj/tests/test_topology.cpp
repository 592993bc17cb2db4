#include <doctest.h>

#include "uclab/topology.hpp"

using namespace uclab;

namespace {
// the three-point space with opens {}, {l}, {r}, {l,r}, {l,m,r}
FiniteTopSpace lmr() {
  return make_space({"l", "m", "r"}, {0b000, 0b001, 0b100, 0b101, 0b111});
}
}  // namespace

TEST_CASE("make_space") {
  CHECK(lmr().open_masks().size() == 5);
  CHECK(make_space({"p", "q"}, {0b00, 0b01, 0b10, 0b11}).n_points() == 2);
  // missing the whole space
  CHECK_THROWS_AS(make_space({"l", "m", "r"}, {0b000, 0b001}), InvalidInput);
  // {l} and {m} open but their union {l,m} is not
  CHECK_THROWS_AS(make_space({"l", "m", "r"}, {0b000, 0b001, 0b010, 0b111}),
                  InvalidInput);
  CHECK_THROWS_AS(make_space({}, {0}), InvalidInput);
}

TEST_CASE("interior, closure, regular closed sets") {
  const auto x = lmr();
  CHECK(x.interior(0b011) == 0b001);      // Int {l,m} = {l}
  CHECK(x.closure(0b001) == 0b011);       // Cl {l} = {l,m}
  CHECK(x.is_regular_closed(0b011));      // {l,m}
  CHECK(x.is_regular_closed(0b110));      // {m,r}
  CHECK_FALSE(x.is_regular_closed(0b010));
  CHECK_FALSE(x.is_regular_closed(0b001));
  CHECK(x.is_regular_closed(0));
  CHECK(x.is_regular_closed(0b111));
}

TEST_CASE("rc_algebra") {
  const auto rc = rc_algebra(lmr());
  CHECK(rc.algebra().carrier_size() == 4);
  CHECK(rc.atom_extents() == std::vector<std::uint32_t>{0b011, 0b110});
  CHECK(rc.algebra().atom_names() == std::vector<std::string>{"l,m", "m,r"});
  CHECK(rc.extent_of_mask(0b11) == 0b111);
  CHECK(rc.element_for_extent(0b011) == rc.algebra().atom(0));
  CHECK_THROWS_AS(rc.element_for_extent(0b010), InvalidInput);

  const auto discrete = rc_algebra(
      make_space({"p", "q"}, {0b00, 0b01, 0b10, 0b11}));
  CHECK(discrete.algebra().carrier_size() == 4);

  const auto point = rc_algebra(make_space({"p"}, {0b0, 0b1}));
  CHECK(point.algebra().carrier_size() == 2);
}

TEST_CASE("intersection_uc") {
  const auto rc = rc_algebra(lmr());
  const auto k = intersection_uc(rc);
  // the two halves {l,m} and {m,r} share m although their algebra meet is 0
  const auto both = Family::from_masks(rc.algebra(), {1, 2});
  CHECK(k.contains(both));
  CHECK_FALSE(kmin_contains(both));
  CHECK(k == kmax(rc.algebra()));
  CHECK(kmin(rc.algebra()).subset_of(k));
  CHECK(k != kmin(rc.algebra()));

  const auto discrete = rc_algebra(
      make_space({"p", "q"}, {0b00, 0b01, 0b10, 0b11}));
  CHECK(intersection_uc(discrete) == kmin(discrete.algebra()));

  // {X} is always a member
  CHECK(k.contains(Family::from_masks(rc.algebra(), {0b11})));
}
