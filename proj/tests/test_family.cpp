#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "uclab/family.hpp"

using namespace uclab;

namespace {
BooleanAlgebra b3() { return BooleanAlgebra({"a", "b", "c"}); }
Family fam(const BooleanAlgebra& b, std::vector<std::uint32_t> masks) {
  return Family::from_masks(b, std::move(masks));
}
}  // namespace

TEST_CASE("up_closure") {
  const auto b = b3();
  const auto up_ab = up_closure(fam(b, {1, 2}));
  CHECK(up_ab.expand().masks() ==
        std::vector<std::uint32_t>{1, 2, 0b011, 0b101, 0b110, 0b111});
  CHECK(up_closure(Family(b)).empty());
  CHECK(up_closure(fam(b, {0b111})).expand().masks() ==
        std::vector<std::uint32_t>{0b111});

  // Agreement with the naive double-loop expansion on all of B3.
  for (const auto& f : oracles::all_families(b)) {
    CHECK(up_closure(f).expand().masks() == oracles::naive_upset(b, f.masks()));
  }
}

TEST_CASE("stack antichains are canonical") {
  const auto b = b3();
  const auto u = up_closure(fam(b, {1, 2, 0b011, 0b111}));
  CHECK(u.antichain() == std::vector<std::uint32_t>{1, 2});
  CHECK(up_closure(fam(b, {1, 2})) == u);
}

TEST_CASE("supports and similar") {
  const auto b = b3();
  const auto up_a = up_closure(fam(b, {1})).expand();
  CHECK(supports(fam(b, {1}), up_a));
  CHECK(supports(up_a, fam(b, {1})));
  CHECK(similar(fam(b, {1}), up_a));
  CHECK(supports(fam(b, {0}), fam(b, {1, 2})));
  CHECK(supports(fam(b, {1}), Family(b)));       // empty target
  CHECK_FALSE(supports(Family(b), fam(b, {1}))); // empty source
  CHECK(supports(Family(b), Family(b)));
  CHECK(similar(fam(b, {1, 2, 0b111}), fam(b, {1, 2})));
  CHECK_FALSE(similar(fam(b, {1}), fam(b, {2})));

  for (const auto& f : oracles::all_families(b)) {
    for (const auto& g : oracles::all_families(b)) {
      CHECK(supports(f, g) == oracles::naive_supports(f.masks(), g.masks()));
    }
  }
}

TEST_CASE("minkowski_sum") {
  const auto b4 = BooleanAlgebra({"a", "b", "c", "d"});
  CHECK(minkowski_sum({fam(b4, {1, 2}), fam(b4, {4, 8})}) ==
        fam(b4, {0b0101, 0b0110, 0b1001, 0b1010}));
  // a split of a non-atom: {a,c}+{b,c} over B3 has the documented shape
  const auto b = b3();
  CHECK(minkowski_sum({fam(b, {1, 4}), fam(b, {2, 4})}) ==
        fam(b, {0b011, 0b101, 0b110, 0b100}));
  CHECK(minkowski_sum({fam(b, {1}), Family(b)}) == Family(b));
  CHECK_THROWS_AS(minkowski_sum({}), InvalidInput);
}

TEST_CASE("classify") {
  const auto b = b3();
  const auto grill_ab =
      Family::from_masks(b, oracles::naive_upset(b, {1, 2}));
  auto c = classify(grill_ab);
  CHECK(c.is_stack);
  CHECK(c.is_grill);
  CHECK_FALSE(c.is_filter);

  c = classify(fam(b, {0, 1}));
  CHECK(c.is_ideal);
  CHECK(c.is_proper_ideal);
  CHECK_FALSE(c.is_grill);

  c = classify(fam(b, {0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(c.is_stack);
  CHECK(c.is_filter);
  CHECK_FALSE(c.is_proper_filter);
  CHECK_FALSE(c.is_grill);

  CHECK_FALSE(classify(Family(b)).is_grill);
  CHECK_FALSE(classify(Family(b)).is_filter);
  CHECK(classify(Family(b)).is_stack);
}

TEST_CASE("generate_ideal") {
  const auto b = b3();
  CHECK(generate_ideal(fam(b, {1, 2})) == fam(b, {0, 1, 2, 0b011}));
  CHECK(generate_ideal(Family(b)) == fam(b, {0}));
  CHECK(generate_ideal(fam(b, {0b111})).size() == 8);

  // Smallest ideal: every ideal containing M contains the generated one.
  for (const auto& m : oracles::all_families(BooleanAlgebra({"a", "b"}))) {
    const auto gen = generate_ideal(m);
    CHECK(classify(gen).is_ideal);
    for (const auto& i : oracles::all_families(m.algebra())) {
      if (!classify(i).is_ideal) continue;
      bool contains_m = true;
      for (std::uint32_t e : m.masks()) contains_m &= i.contains_mask(e);
      if (!contains_m) continue;
      for (std::uint32_t e : gen.masks()) CHECK(i.contains_mask(e));
    }
  }
}

TEST_CASE("enumerate_stacks") {
  CHECK(enumerate_stacks(BooleanAlgebra({"a"})).size() == 3);
  CHECK(enumerate_stacks(BooleanAlgebra({"a", "b"})).size() == 6);
  const auto b = b3();
  const auto stacks = enumerate_stacks(b);
  CHECK(stacks.size() == 20);

  // Cross-check against the filter over all 256 subsets.
  const auto brute = oracles::stacks_by_filter(b);
  REQUIRE(brute.size() == stacks.size());
  std::vector<std::vector<std::uint32_t>> expanded;
  for (const auto& u : stacks) expanded.push_back(u.expand().masks());
  std::sort(expanded.begin(), expanded.end());
  auto sorted_brute = brute;
  std::sort(sorted_brute.begin(), sorted_brute.end());
  CHECK(expanded == sorted_brute);

  for (const auto& u : stacks) {
    // antichain members pairwise incomparable
    for (std::uint32_t x : u.antichain()) {
      for (std::uint32_t y : u.antichain()) {
        if (x != y) CHECK_FALSE(oracles::leq_mask(x, y));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_stacks(BooleanAlgebra({"a", "b", "c", "d", "e"})),
                  CapExceeded);
}

TEST_CASE("enumerate_grills and count_grills") {
  const auto b = b3();
  const auto grills = enumerate_grills(b);
  REQUIRE(grills.size() == 7);
  for (const auto& g : grills) CHECK(classify(g).is_grill);

  // They are exactly the unions of principal ultrafilters.
  const auto ufs = ultrafilters(b);
  std::vector<std::vector<std::uint32_t>> unions;
  for (std::uint32_t pick = 1; pick < 8; ++pick) {
    std::vector<std::uint32_t> masks;
    for (int i = 0; i < 3; ++i) {
      if ((pick >> i) & 1u) {
        masks.insert(masks.end(), ufs[i].masks().begin(),
                     ufs[i].masks().end());
      }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    unions.push_back(std::move(masks));
  }
  std::sort(unions.begin(), unions.end());
  std::vector<std::vector<std::uint32_t>> got;
  for (const auto& g : grills) got.push_back(g.masks());
  std::sort(got.begin(), got.end());
  CHECK(got == unions);

  // Exhaustive: the enumerated grills are exactly the classify-positive
  // families of B3.
  std::size_t count = 0;
  for (const auto& f : oracles::all_families(b)) {
    if (classify(f).is_grill) ++count;
  }
  CHECK(count == 7);

  CHECK(enumerate_grills(BooleanAlgebra({"a", "b"})).size() == 3);
  CHECK(enumerate_grills(BooleanAlgebra({"a"})).size() == 1);
  CHECK(count_grills(BooleanAlgebra(
            {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j",
             "k", "l", "m", "n", "o", "p", "q", "r", "s", "t"})) ==
        (1u << 20) - 1);
}

TEST_CASE("grill_partial_meet") {
  const auto b = b3();
  const auto up = [&](std::uint32_t x) {
    return Family::from_masks(b, oracles::naive_upset(b, {x}));
  };
  auto union_fam = [&](const Family& f, const Family& g) {
    std::vector<std::uint32_t> masks = f.masks();
    masks.insert(masks.end(), g.masks().begin(), g.masks().end());
    return Family::from_masks(b, masks);
  };
  const auto g_ab = union_fam(up(1), up(2));
  const auto g_ac = union_fam(up(1), up(4));

  auto meet = grill_partial_meet({g_ab, g_ac});
  REQUIRE(meet.has_value());
  CHECK(*meet == up(1));

  CHECK_FALSE(grill_partial_meet({up(1), up(2)}).has_value());
  CHECK(grill_partial_meet({g_ab}) == g_ab);
  CHECK_THROWS_AS(grill_partial_meet({fam(b, {1, 2})}), PreconditionFailed);

  // Equivalence with the ideal-side formula: the result is the complement
  // of the down-set of the join of all non-members of the intersection.
  const auto grills = enumerate_grills(b);
  for (std::uint32_t pick = 1; pick < (1u << grills.size()); ++pick) {
    std::vector<Family> chosen;
    for (std::size_t i = 0; i < grills.size(); ++i) {
      if ((pick >> i) & 1u) chosen.push_back(grills[i]);
    }
    std::uint32_t join_of_nonmembers = 0;
    for (std::uint32_t e = 0; e < b.carrier_size(); ++e) {
      bool in_all = true;
      for (const auto& g : chosen) in_all &= g.contains_mask(e);
      if (!in_all) join_of_nonmembers |= e;
    }
    std::vector<std::uint32_t> formula;
    for (std::uint32_t e = 0; e < b.carrier_size(); ++e) {
      if ((e & join_of_nonmembers) != e) formula.push_back(e);
    }
    const auto via_ultrafilters = grill_partial_meet(chosen);
    if (formula.empty()) {
      CHECK_FALSE(via_ultrafilters.has_value());
    } else {
      REQUIRE(via_ultrafilters.has_value());
      CHECK(via_ultrafilters->masks() == formula);
    }
  }
}

TEST_CASE("class_join and class_meet") {
  const auto b = b3();
  CHECK(class_join(fam(b, {1}), fam(b, {2})) == up_closure(fam(b, {0b011})));
  CHECK(class_meet(fam(b, {1}), fam(b, {2})) == up_closure(fam(b, {1, 2})));
  CHECK(class_join(fam(b, {1, 2}), fam(b, {0b111})) ==
        up_closure(fam(b, {0b111})));

  // ↑(F+G) = ↑F ∩ ↑G and, for stacks, U ∩ V = U + V; all pairs of B2.
  const auto b2 = BooleanAlgebra({"a", "b"});
  for (const auto& f : oracles::all_families(b2)) {
    for (const auto& g : oracles::all_families(b2)) {
      const auto joined = class_join(f, g).expand().masks();
      std::vector<std::uint32_t> inter;
      const auto uf = oracles::naive_upset(b2, f.masks());
      const auto ug = oracles::naive_upset(b2, g.masks());
      std::set_intersection(uf.begin(), uf.end(), ug.begin(), ug.end(),
                            std::back_inserter(inter));
      CHECK(joined == inter);
    }
  }
  for (const auto& u : enumerate_stacks(b2)) {
    for (const auto& v : enumerate_stacks(b2)) {
      const auto uu = u.expand();
      const auto vv = v.expand();
      if (uu.empty() || vv.empty()) continue;
      std::vector<std::uint32_t> inter;
      std::set_intersection(uu.masks().begin(), uu.masks().end(),
                            vv.masks().begin(), vv.masks().end(),
                            std::back_inserter(inter));
      CHECK(minkowski_sum({uu, vv}).masks() == inter);
    }
  }
}

TEST_CASE("support relation property suite") {
  CHECK(properties::support_basics_b2());
  CHECK(properties::support_preorder_b2());
  CHECK(properties::element_class_characterization_b2());
}

TEST_CASE("grill property suite") {
  CHECK(properties::grill_ideal_duality(BooleanAlgebra({"a", "b"})));
  CHECK(properties::grill_ideal_duality(b3()));
  CHECK(properties::grill_meet_primality(b3()));
  CHECK(properties::grill_prime_characterization_b2());
  CHECK(properties::finite_grill_lemma(b3()));
}
