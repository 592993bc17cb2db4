#include <doctest.h>

#include <algorithm>
#include <array>
#include <bitset>

#include "support/oracles.hpp"
#include "uclab/simplicial.hpp"
#include "uclab/uc.hpp"

using namespace uclab;

namespace {

BooleanAlgebra b3() { return BooleanAlgebra({"a", "b", "c"}); }
BooleanAlgebra b4() { return BooleanAlgebra({"a", "b", "c", "d"}); }

Family fam(const BooleanAlgebra& b, std::vector<std::uint32_t> masks) {
  return Family::from_masks(b, std::move(masks));
}

Family upset_fam(const BooleanAlgebra& b, std::vector<std::uint32_t> gens) {
  return Family::from_masks(b, oracles::naive_upset(b, gens));
}

// Explicit member list of kmin by the defining predicate, independently of
// the witness machinery.
std::vector<Family> kmin_members_by_bound(const BooleanAlgebra& b) {
  std::vector<Family> out;
  for (const auto& f : oracles::all_families(b)) {
    if (f.empty()) continue;
    std::uint32_t lower = b.carrier_size() - 1;
    for (std::uint32_t m : f.masks()) lower &= m;
    if (lower != 0) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("uc_from_explicit accepts kmin and canonicalizes its witnesses") {
  const auto b = b3();
  const auto members = kmin_members_by_bound(b);
  CHECK(members.size() == 37);
  const auto k = uc_from_explicit(b, members);
  CHECK(k == kmin(b));
  CHECK(k.witness_count() == 10);
}

TEST_CASE("uc_from_explicit names the violated axiom") {
  const auto b = b3();

  SUBCASE("missing supported family is a K3 violation") {
    auto members = kmin_members_by_bound(b);
    members.push_back(fam(b, {1, 2}));
    const auto violation = check_uc_axioms(ExplicitUc(b, members));
    REQUIRE(violation.has_value());
    CHECK(violation->axiom == "K3");
    // the mathematical content: {a, b+c} is supported by {a,b} yet absent
    const ExplicitUc uc(b, members);
    CHECK(uc.contains(fam(b, {1, 2})));
    CHECK_FALSE(uc.contains(fam(b, {1, 0b110})));
    CHECK(supports(fam(b, {1, 2}), fam(b, {1, 0b110})));
    CHECK_THROWS_AS(uc_from_explicit(b, members), AxiomError);
  }

  SUBCASE("a member containing zero is a K1 violation") {
    auto members = kmin_members_by_bound(b);
    members.push_back(fam(b, {0, 1}));
    const auto violation = check_uc_axioms(ExplicitUc(b, members));
    REQUIRE(violation.has_value());
    CHECK(violation->axiom == "K1");
  }

  SUBCASE("the empty family is a K0 violation") {
    auto members = kmin_members_by_bound(b);
    members.push_back(Family(b));
    const auto violation = check_uc_axioms(ExplicitUc(b, members));
    REQUIRE(violation.has_value());
    CHECK(violation->axiom == "K0");
  }

  SUBCASE("a missing singleton is a K2 violation") {
    const auto violation = check_uc_axioms(ExplicitUc(b, {fam(b, {1})}));
    REQUIRE(violation.has_value());
    CHECK(violation->axiom == "K2");
  }
}

TEST_CASE("uc_membership") {
  const auto b = b3();
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  CHECK(uc_membership(k_ab, fam(b, {1, 0b110})));
  CHECK_FALSE(uc_membership(kmin(b), fam(b, {1, 2})));
  CHECK_FALSE(uc_membership(k_ab, Family(b)));
}

TEST_CASE("kmin and kmax") {
  const auto b = b3();
  CHECK(kmin(b).contains(fam(b, {0b011, 0b101})));
  CHECK_FALSE(kmin(b).contains(fam(b, {0b011, 0b101, 0b110})));
  CHECK(kmax(b).contains(fam(b, {1, 2, 4})));
  CHECK_FALSE(kmax(b).contains(fam(b, {0})));
  CHECK(kmin(b).witness_count() == 10);
  CHECK(kmax(b).witness_count() == 18);
  CHECK(kmin(b).subset_of(kmax(b)));

  const auto big = b4();
  const auto k_min4 = kmin(big);
  const auto k_max4 = kmax(big);
  bool min_agree = true, max_agree = true;
  for (const auto& f : oracles::all_families(big)) {
    min_agree &= k_min4.contains(f) == kmin_contains(f);
    max_agree &= k_max4.contains(f) == kmax_contains(f);
  }
  CHECK(min_agree);
  CHECK(max_agree);
}

TEST_CASE("uc_join") {
  const auto b = b3();
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  const auto k_ac = extend_by_atoms(kmin(b), fam(b, {1, 4}));
  const auto k_bc = extend_by_atoms(kmin(b), fam(b, {2, 4}));
  const auto joined = uc_join({k_ab, k_ac, k_bc});
  CHECK(joined.witness_count() == 17);
  CHECK(uc_join({k_ab, k_ab}) == k_ab);
  CHECK(uc_join({k_ab, kmax(b)}) == kmax(b));
}

TEST_CASE("uc_meet") {
  const auto b = b4();
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  const auto k_cd = extend_by_atoms(kmin(b), fam(b, {4, 8}));
  CHECK(uc_meet({k_ab, k_cd}) == kmin(b));

  const auto b3_ = b3();
  const auto k_sm = uc_join({extend_by_atoms(kmin(b3_), fam(b3_, {1, 2})),
                             extend_by_atoms(kmin(b3_), fam(b3_, {1, 4})),
                             extend_by_atoms(kmin(b3_), fam(b3_, {2, 4}))});
  const auto k_abc = extend_by_atoms(kmin(b3_), fam(b3_, {1, 2, 4}));
  CHECK(uc_meet({k_sm, k_abc}) == k_sm);
  CHECK(uc_meet({k_sm, kmax(b3_)}) == k_sm);
}

TEST_CASE("meet is the greatest lower bound, by exhaustive search") {
  const auto b = b3();
  const auto ucs = enumerate_ucs(b);
  REQUIRE(ucs.size() == 9);
  for (const auto& k1 : ucs) {
    for (const auto& k2 : ucs) {
      const auto m = uc_meet({k1, k2});
      CHECK(m.subset_of(k1));
      CHECK(m.subset_of(k2));
      for (const auto& below : ucs) {
        if (below.subset_of(k1) && below.subset_of(k2)) {
          CHECK(below.subset_of(m));
        }
      }
      const auto j = uc_join({k1, k2});
      CHECK(k1.subset_of(j));
      CHECK(k2.subset_of(j));
      for (const auto& above : ucs) {
        if (k1.subset_of(above) && k2.subset_of(above)) {
          CHECK(j.subset_of(above));
        }
      }
    }
  }
}

TEST_CASE("meet_oracle") {
  const auto b = b3();
  const auto ucs = enumerate_ucs(b);
  for (const auto& k : ucs) CHECK(meet_oracle({k}) == k);
  // full pairwise agreement is re-run by the acceptance suite; spot-check
  // one nontrivial pair here
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  const auto k_ac = extend_by_atoms(kmin(b), fam(b, {1, 4}));
  CHECK(meet_oracle({k_ab, k_ac}) == uc_meet({k_ab, k_ac}));

  const auto b4_ = b4();
  const auto k1 = extend_by_atoms(kmin(b4_), fam(b4_, {1, 2}));
  const auto k2 = extend_by_atoms(kmin(b4_), fam(b4_, {4, 8}));
  const auto sum = minkowski_sum({fam(b4_, {1, 2}), fam(b4_, {4, 8})});
  CHECK(k1.contains(sum));
  CHECK(k2.contains(sum));
  CHECK_FALSE(meet_oracle_contains({k1, k2}, sum));
  CHECK_THROWS_AS(meet_oracle({k1, k2}), CapExceeded);
}

TEST_CASE("extend_by_grills") {
  const auto b = b3();
  const auto g_ab = upset_fam(b, {1, 2});  // not a grill: {a,b} is no stack...
  // the grill is the up-closure of the two atoms
  CHECK(classify(g_ab).is_grill);
  const auto k_ab = extend_by_grills(kmin(b), {g_ab});
  CHECK(k_ab.contains(fam(b, {1, 2})));
  CHECK(k_ab.witness_count() == 14);
  CHECK(extend_by_grills(kmin(b), {upset_fam(b, {1})}) == kmin(b));
  CHECK(extend_by_grills(kmin(b), enumerate_grills(b)) == kmax(b));
  CHECK_THROWS_AS(extend_by_grills(kmin(b), {fam(b, {1, 2})}),
                  PreconditionFailed);
}

TEST_CASE("extend_by_set") {
  const auto b = b3();
  const auto base = kmin(b);

  const auto not_grill = extend_by_set(base, fam(b, {1, 2}));
  CHECK_FALSE(not_grill.is_uc);
  REQUIRE(not_grill.violation.has_value());
  CHECK(not_grill.violation->axiom == "K3");

  const auto grill = extend_by_set(base, upset_fam(b, {1, 2}));
  CHECK(grill.is_uc);
  CHECK(*grill.as_uc == extend_by_atoms(base, fam(b, {1, 2})));

  const auto member = extend_by_set(base, fam(b, {0b011, 0b101}));
  CHECK(member.is_uc);
  CHECK(*member.as_uc == base);
}

TEST_CASE("extend_by_atoms") {
  const auto b = b3();
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  CHECK(k_ab == extend_by_grills(kmin(b), {upset_fam(b, {1, 2})}));
  CHECK(extend_by_atoms(kmin(b), Family(b)) == kmin(b));
  CHECK_THROWS_AS(extend_by_atoms(kmin(b), fam(b, {0b011, 4})),
                  PreconditionFailed);

  // The naive enlargement by the non-atom set {a+b, c} fails the splitting
  // axiom at {a,c} + {b,c}, exactly as documented.
  std::vector<Family> naive = kmin_members_by_bound(b);
  for (const auto& f : oracles::all_families(b)) {
    if (!f.empty() && supports(fam(b, {0b011, 4}), f)) naive.push_back(f);
  }
  const auto violation = check_uc_axioms(ExplicitUc(b, naive));
  REQUIRE(violation.has_value());
  CHECK(violation->axiom == "K4");
  const ExplicitUc uc(b, naive);
  const auto sum = minkowski_sum({fam(b, {1, 4}), fam(b, {2, 4})});
  CHECK(uc.contains(sum));
  CHECK_FALSE(uc.contains(fam(b, {1, 4})));
  CHECK_FALSE(uc.contains(fam(b, {2, 4})));
}

TEST_CASE("witness_meet_failure") {
  const auto b = b4();
  const auto m = upset_fam(b, {0b0011, 0b1100});
  const auto [k1, k2] = witness_meet_failure(m);
  CHECK(k1.contains(m));
  CHECK(k2.contains(m));
  CHECK_FALSE(uc_meet({k1, k2}).contains(m));

  CHECK_THROWS_WITH_AS(witness_meet_failure(upset_fam(b, {1})),
                       "witness_meet_failure: the family has a nonzero "
                       "lower bound",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(witness_meet_failure(upset_fam(b, {1, 2})),
                       "witness_meet_failure: the family is a grill",
                       PreconditionFailed);
  CHECK_THROWS_AS(witness_meet_failure(fam(b, {1, 2})), PreconditionFailed);
  CHECK_THROWS_AS(witness_meet_failure(Family(b)), PreconditionFailed);
}

TEST_CASE("chain_meet") {
  const auto b = b3();
  const auto k_ab = extend_by_atoms(kmin(b), fam(b, {1, 2}));
  CHECK(chain_meet({kmax(b), k_ab, kmin(b)}) == kmin(b));
  CHECK(chain_meet({k_ab}) == k_ab);
  CHECK(chain_meet({kmax(b), kmin(b)}) == kmin(b));
  CHECK_THROWS_AS(
      chain_meet({k_ab, extend_by_atoms(kmin(b), fam(b, {1, 4}))}),
      PreconditionFailed);
}

TEST_CASE("every ultracontact is similarity- and subset-closed") {
  const auto b = b3();
  const auto families = oracles::all_families(b);
  for (const auto& k : enumerate_ucs(b)) {
    const auto mem = k.explicit_members();
    for (const auto& f : families) {
      if (!mem.contains(f)) continue;
      for (const auto& g : families) {
        if (similar(f, g)) CHECK(mem.contains(g));
      }
      // closed under nonempty subsets
      for (std::uint64_t sub = 1; sub < (1u << f.size()); ++sub) {
        std::vector<std::uint32_t> masks;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if ((sub >> i) & 1u) masks.push_back(f.masks()[i]);
        }
        CHECK(mem.contains(fam(b, masks)));
      }
    }
  }
}

TEST_CASE("sums respect membership: one side in, sum in; triple splitting") {
  const auto b = b3();

  // minkowski table over element-set masks of the 8-element carrier
  std::array<std::array<std::uint16_t, 256>, 256> mink{};
  for (int f = 0; f < 256; ++f) {
    for (int g = 0; g < 256; ++g) {
      std::uint16_t out = 0;
      for (int x = 0; x < 8; ++x) {
        if (!((f >> x) & 1)) continue;
        for (int y = 0; y < 8; ++y) {
          if ((g >> y) & 1) out |= std::uint16_t(1u << (x | y));
        }
      }
      mink[f][g] = out;
    }
  }

  for (const auto& k : enumerate_ucs(b)) {
    const auto mem_list = k.explicit_members().member_bits();
    std::bitset<256> mem;
    for (std::size_t i = 0; i < 256; ++i) mem[i] = mem_list[i];

    bool pair_laws = true;
    for (int f = 1; f < 256; ++f) {
      for (int g = 1; g < 256; ++g) {
        pair_laws &= ((mem[f] || mem[g]) == bool(mem[mink[f][g]]));
      }
    }
    CHECK(pair_laws);
    // triple form of the splitting axiom
    bool triple = true;
    for (int f = 1; f < 256 && triple; ++f) {
      for (int g = 1; g < 256 && triple; ++g) {
        const int fg = mink[f][g];
        for (int h = 1; h < 256; ++h) {
          if (mem[mink[fg][h]] && !mem[f] && !mem[g] && !mem[h]) {
            triple = false;
            break;
          }
        }
      }
    }
    CHECK(triple);
  }
}

TEST_CASE("each member is supported by an atom family member") {
  const auto b = b3();
  for (const auto& k : enumerate_ucs(b)) {
    const auto mem = k.explicit_members();
    for (const auto& f : oracles::all_families(b)) {
      if (!mem.contains(f)) continue;
      bool found = false;
      for (std::uint32_t atoms = 1; atoms < 8 && !found; ++atoms) {
        std::vector<std::uint32_t> gens;
        for (int i = 0; i < 3; ++i) {
          if ((atoms >> i) & 1u) gens.push_back(1u << i);
        }
        const auto g = fam(b, gens);
        found = mem.contains(g) && supports(g, f);
      }
      CHECK(found);
    }
  }
}
