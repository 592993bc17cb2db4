#include "uclab/theorems.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "internal.hpp"
#include "uclab/contact.hpp"
#include "uclab/json_io.hpp"
#include "uclab/simplicial.hpp"
#include "uclab/stacksys.hpp"
#include "uclab/topology.hpp"

namespace uclab::theorems {

using detail::ESet;

namespace {

BooleanAlgebra b(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return BooleanAlgebra(names);
}

Family fam(const BooleanAlgebra& algebra, std::vector<std::uint32_t> masks) {
  return Family::from_masks(algebra, std::move(masks));
}

Family fam_from_eset(const BooleanAlgebra& algebra, ESet s) {
  return internal::from_eset(algebra, s);
}

// All 2^carrier families of a small algebra, ascending by element-set mask.
std::vector<Family> all_families(const BooleanAlgebra& algebra) {
  std::vector<Family> out;
  const std::uint64_t n = std::uint64_t{1} << algebra.carrier_size();
  for (std::uint64_t m = 0; m < n; ++m) {
    out.push_back(fam_from_eset(algebra, m));
  }
  return out;
}

// Grill of every element meeting the atom set.
Family grill_of_atoms(const BooleanAlgebra& algebra, std::uint32_t atom_set) {
  return fam_from_eset(
      algebra, detail::meets_atom_set(atom_set, algebra.n_atoms()));
}

// The three one-edge extensions, their pairwise joins, the full-graph
// ultracontact and the two bounds: all nine ultracontacts of the three-atom
// algebra, via the enumeration.
std::vector<Ultracontact> nine_ucs(const BooleanAlgebra& b3) {
  return enumerate_ucs(b3);
}

nlohmann::json family_json(const Family& f) { return io::family_to_json(f); }

}  // namespace

void Report::check(bool ok, const std::string& what) {
  lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  if (!ok && passed) {
    passed = false;
    if (counterexample.is_null()) counterexample = {{"check", what}};
  }
}

namespace {

Report smallest_uc() {
  Report r{"smallest-uc"};
  const auto b3 = b(3);
  const auto k = kmin(b3);
  r.check(!check_uc_axioms(k.explicit_members()).has_value(),
          "kmin(B3) satisfies K0-K4 in explicit form");
  bool below_all = true;
  for (const auto& other : nine_ucs(b3)) below_all &= k.subset_of(other);
  r.check(below_all, "kmin(B3) is below each of the 9 ultracontacts");
  r.check(k.contains(fam(b3, {0b011, 0b101})),
          "{a+b, a+c} has the lower bound a");
  r.check(!k.contains(fam(b3, {0b011, 0b101, 0b110})),
          "{a+b, a+c, b+c} has meet zero and is excluded");
  r.check(!k.contains(Family(b3)), "the empty family is excluded");
  const auto b4 = b(4);
  const auto k4 = kmin(b4);
  bool agree = true;
  for (const auto& f : all_families(b4)) {
    agree &= k4.contains(f) == kmin_contains(f);
  }
  r.check(agree, "membership matches the lower-bound predicate on B4");
  return r;
}

Report largest_uc() {
  Report r{"largest-uc"};
  const auto b3 = b(3);
  const auto k = kmax(b3);
  r.check(!check_uc_axioms(k.explicit_members()).has_value(),
          "kmax(B3) satisfies K0-K4 in explicit form");
  bool above_all = true;
  for (const auto& other : nine_ucs(b3)) above_all &= other.subset_of(k);
  r.check(above_all, "kmax(B3) is above each of the 9 ultracontacts");
  r.check(k.contains(fam(b3, {1, 2, 4})), "{a, b, c} is a member");
  r.check(!k.contains(fam(b3, {0})), "{0} is excluded");
  const auto b4 = b(4);
  const auto k4 = kmax(b4);
  bool agree = true;
  for (const auto& f : all_families(b4)) {
    agree &= k4.contains(f) == kmax_contains(f);
  }
  r.check(agree, "membership matches the zero-free predicate on B4");
  return r;
}

Report meet_formula() {
  Report r{"meet-formula"};
  const auto b3 = b(3);
  const auto ucs = nine_ucs(b3);
  bool all_pairs = true;
  for (std::size_t i = 0; i < ucs.size(); ++i) {
    for (std::size_t j = i + 1; j < ucs.size(); ++j) {
      if (meet_oracle({ucs[i], ucs[j]}) != uc_meet({ucs[i], ucs[j]})) {
        all_pairs = false;
        r.counterexample = {{"pair", {i, j}}};
      }
    }
  }
  r.check(all_pairs, "oracle agrees with the meet on all 36 pairs of B3");
  bool idem = true;
  for (const auto& k : ucs) idem &= meet_oracle({k}) == k;
  r.check(idem, "oracle of a single ultracontact returns it unchanged");

  const auto b4 = b(4);
  const auto k_ab = extend_by_atoms(kmin(b4), fam(b4, {1, 2}));
  const auto k_cd = extend_by_atoms(kmin(b4), fam(b4, {4, 8}));
  const auto sum = minkowski_sum({fam(b4, {1, 2}), fam(b4, {4, 8})});
  r.check(k_ab.contains(sum) && k_cd.contains(sum),
          "{a,b}+{c,d} lies in both B4 extensions");
  r.check(!meet_oracle_contains({k_ab, k_cd}, sum),
          "the oracle excludes {a,b}+{c,d} from the meet");
  return r;
}

Report chain_meet_thm() {
  Report r{"chain-meet"};
  const auto b3 = b(3);
  const auto kab = extend_by_atoms(kmin(b3), fam(b3, {1, 2}));
  const std::vector<Ultracontact> chain{kmax(b3), kab, kmin(b3)};
  r.check(chain_meet(chain) == kmin(b3),
          "chain [kmax, k_ab, kmin] meets at kmin");
  r.check(chain_meet({kab}) == kab, "singleton chain is fixed");
  r.check(chain_meet({kmax(b3), kmin(b3)}) == kmin(b3),
          "[kmax, kmin] meets at kmin");
  r.check(chain_meet(chain) == uc_meet(chain),
          "chain intersection equals the lattice meet");
  bool threw = false;
  try {
    chain_meet({kab, extend_by_atoms(kmin(b3), fam(b3, {1, 4}))});
  } catch (const PreconditionFailed&) {
    threw = true;
  }
  r.check(threw, "incomparable inputs are rejected");
  return r;
}

Report co_heyting() {
  Report r{"co-heyting"};
  const auto b3 = b(3);
  const auto ucs = nine_ucs(b3);
  bool law = true;
  for (const auto& k : ucs) {
    for (std::uint32_t subset = 1; subset < (1u << ucs.size()); ++subset) {
      std::vector<Ultracontact> chosen, joined;
      for (std::size_t i = 0; i < ucs.size(); ++i) {
        if ((subset >> i) & 1u) {
          chosen.push_back(ucs[i]);
          joined.push_back(uc_join({k, ucs[i]}));
        }
      }
      if (uc_join({k, uc_meet(chosen)}) != uc_meet(joined)) {
        law = false;
        r.counterexample = {{"subset", subset}};
      }
    }
  }
  r.check(law, "join distributes over meets: 9 x 511 combinations on B3");

  // Supporting lemma at the two-atom scale: G u (H1+H2) supports
  // (G u H1)+(G u H2).
  const auto b2 = b(2);
  const auto families = all_families(b2);
  bool lemma = true;
  for (const auto& g : families) {
    for (const auto& h1 : families) {
      for (const auto& h2 : families) {
        const ESet ge = internal::to_eset(g);
        const ESet sum = detail::minkowski(internal::to_eset(h1),
                                           internal::to_eset(h2));
        const ESet lhs = ge | sum;
        const ESet rhs = detail::minkowski(ge | internal::to_eset(h1),
                                           ge | internal::to_eset(h2));
        lemma &= detail::supports(lhs, rhs, 2);
      }
    }
  }
  r.check(lemma, "union-with-sum support lemma over all triples of B2");
  return r;
}

Report grill_extension() {
  Report r{"grill-extension"};
  const auto b3 = b(3);
  const auto base = kmin(b3);
  const auto g_ab = grill_of_atoms(b3, 0b011);
  const auto k_ab = extend_by_grills(base, {g_ab});
  r.check(k_ab == extend_by_atoms(base, fam(b3, {1, 2})),
          "grill extension by up(a) u up(b) equals the atom extension");
  r.check(k_ab.contains(fam(b3, {1, 2})), "{a,b} joins the extension");

  const auto uf_a = fam_from_eset(b3, detail::upset_of(1, 3));
  r.check(extend_by_grills(k_ab, {uf_a}) == k_ab,
          "a principal ultrafilter adds nothing");

  r.check(extend_by_grills(base, enumerate_grills(b3)) == kmax(b3),
          "extending by all 7 grills reaches kmax");

  // Minimality against every ultracontact of the algebra.
  bool minimal = true;
  for (const auto& other : nine_ucs(b3)) {
    if (base.subset_of(other) && other.contains(g_ab)) {
      minimal &= k_ab.subset_of(other);
    }
  }
  r.check(minimal, "smallest extension containing the grill");

  bool rejected = false;
  try {
    extend_by_grills(base, {fam(b3, {1, 2})});
  } catch (const PreconditionFailed&) {
    rejected = true;
  }
  r.check(rejected, "a non-grill input is rejected");
  return r;
}

Report km_iff_grill() {
  Report r{"kM-iff-grill"};
  const auto b3 = b(3);
  const auto base = kmin(b3);
  bool equivalence = true;
  int tested = 0;
  for (const auto& m : all_families(b3)) {
    if (m.empty() || base.contains(m)) continue;
    ++tested;
    const auto ext = extend_by_set(base, m);
    if (ext.is_uc != classify(m).is_grill) {
      equivalence = false;
      r.counterexample = family_json(m);
    }
  }
  r.check(equivalence,
          "extension is an ultracontact iff the set is a grill (" +
              std::to_string(tested) + " nonempty non-member sets on B3)");
  bool stacks_only = true;
  for (const auto& m : all_families(b3)) {
    if (m.empty() || base.contains(m)) continue;
    if (extend_by_set(base, m).is_uc &&
        !detail::is_up_closed(internal::to_eset(m), 3)) {
      stacks_only = false;
    }
  }
  r.check(stacks_only, "a proper extension set is always a stack");
  r.check(extend_by_set(base, Family(b3)).is_uc,
          "the empty set extends to the base itself");
  const auto member = fam(b3, {0b011, 0b101});
  const auto unchanged = extend_by_set(base, member);
  r.check(unchanged.is_uc && *unchanged.as_uc == base,
          "extending by a member returns the base unchanged");
  const auto bad = extend_by_set(base, fam(b3, {1, 2}));
  r.check(!bad.is_uc && bad.violation && bad.violation->axiom == "K3",
          "extending kmin by {a,b} fails the support axiom");
  return r;
}

Report meet_failure_witness() {
  Report r{"meet-failure-witness"};
  const auto b4 = b(4);
  // up(a+b) u up(c+d)
  const auto m = fam_from_eset(b4, detail::upset_of(0b0011, 4) |
                                       detail::upset_of(0b1100, 4));
  const auto [k1, k2] = witness_meet_failure(m);
  r.check(k1.contains(m) && k2.contains(m),
          "the stack joins both constructed ultracontacts");
  r.check(!uc_meet({k1, k2}).contains(m), "their meet excludes it");
  r.check(!meet_oracle_contains({k1, k2}, m),
          "the meet oracle confirms the exclusion");

  bool lb = false, gr = false;
  try {
    witness_meet_failure(fam_from_eset(b4, detail::upset_of(1, 4)));
  } catch (const PreconditionFailed& e) {
    lb = std::string(e.what()).find("lower bound") != std::string::npos;
  }
  r.check(lb, "a principal stack is rejected (nonzero lower bound)");
  try {
    witness_meet_failure(
        fam_from_eset(b4, detail::upset_of(1, 4) | detail::upset_of(2, 4)));
  } catch (const PreconditionFailed& e) {
    gr = std::string(e.what()).find("grill") != std::string::npos;
  }
  r.check(gr, "a grill is rejected");
  return r;
}

Report meet_not_intersection() {
  Report r{"meet-not-intersection"};
  const auto b4 = b(4);
  const auto k_ab = extend_by_atoms(kmin(b4), fam(b4, {1, 2}));
  const auto k_cd = extend_by_atoms(kmin(b4), fam(b4, {4, 8}));
  r.check(!k_cd.contains(fam(b4, {1, 2})) && !k_ab.contains(fam(b4, {4, 8})),
          "neither generator belongs to the other extension");
  const auto sum = minkowski_sum({fam(b4, {1, 2}), fam(b4, {4, 8})});
  r.check(sum == fam(b4, {0b0101, 0b1001, 0b0110, 0b1010}),
          "{a,b}+{c,d} = {a+c, a+d, b+c, b+d}");
  r.check(k_ab.contains(sum) && k_cd.contains(sum),
          "the sum lies in the intersection of the extensions");
  r.check(uc_meet({k_ab, k_cd}) == kmin(b4), "their meet collapses to kmin");
  r.check(!kmin(b4).contains(fam(b4, {1, 2})),
          "so the intersection is not an ultracontact: K4 fails");
  return r;
}

Report contact_axioms() {
  Report r{"contact-axioms"};
  const auto b3 = b(3);
  bool derived_ok = true;
  for (const auto& k : nine_ucs(b3)) {
    derived_ok &= !check_contact_axioms(derive_contact(k)).has_value();
  }
  r.check(derived_ok, "contacts derived from all 9 ultracontacts pass C0-C4");
  for (int n = 1; n <= 4; ++n) {
    const auto bn = b(n);
    r.check(derive_contact(kmin(bn)) == overlap_contact(bn),
            "kmin induces overlap on B" + std::to_string(n));
    r.check(derive_contact(kmax(bn)) == full_contact(bn),
            "kmax induces the full contact on B" + std::to_string(n));
  }
  const auto b4 = b(4);
  const auto k_ab = extend_by_atoms(kmin(b4), fam(b4, {1, 2}));
  r.check(!check_contact_axioms(derive_contact(k_ab)).has_value(),
          "a sampled B4 extension derives a valid contact");

  // Atom reduction and the equality criterion on B3.
  bool atom_red = true;
  for (const auto& k : nine_ucs(b3)) {
    const auto c = derive_contact(k);
    const auto faces = internal::uc_faces(k);
    for (std::uint32_t x = 0; x < 8 && atom_red; ++x) {
      for (std::uint32_t y = 0; y < 8; ++y) {
        bool by_atoms = false;
        for (std::uint32_t f : faces) {
          if (std::popcount(f) > 2) continue;
          const std::uint32_t lo = 1u << std::countr_zero(f);
          const std::uint32_t hi = 1u << (31 - std::countl_zero(f));
          // {lo, hi} supports {x, y} in one of the two pairings.
          if (((lo & x) == lo && (hi & y) == hi) ||
              ((lo & y) == lo && (hi & x) == hi)) {
            by_atoms = true;
            break;
          }
        }
        if (c.related_masks(x, y) != by_atoms) {
          atom_red = false;
          break;
        }
      }
    }
  }
  r.check(atom_red, "contact reduces to supported atom pairs on B3");

  bool criterion = true;
  const auto ucs = nine_ucs(b3);
  for (const auto& k1 : ucs) {
    for (const auto& k2 : ucs) {
      auto two_faces = [](const Ultracontact& k) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t f : internal::uc_faces(k)) {
          if (std::popcount(f) <= 2) out.push_back(f);
        }
        return out;
      };
      criterion &= (derive_contact(k1) == derive_contact(k2)) ==
                   (two_faces(k1) == two_faces(k2));
    }
  }
  r.check(criterion,
          "equal contacts iff equal 2-element face sets, over all 81 pairs");
  return r;
}

Report same_contact_different_uc() {
  Report r{"same-contact-different-uc"};
  const auto b3 = b(3);
  const auto k_sm = uc_join({extend_by_atoms(kmin(b3), fam(b3, {1, 2})),
                             extend_by_atoms(kmin(b3), fam(b3, {1, 4})),
                             extend_by_atoms(kmin(b3), fam(b3, {2, 4}))});
  const auto k_abc = extend_by_atoms(kmin(b3), fam(b3, {1, 2, 4}));
  r.check(k_sm != k_abc, "the two ultracontacts differ");
  r.check(derive_contact(k_sm) == full_contact(b3) &&
              derive_contact(k_abc) == full_contact(b3),
          "both derive the full contact on B3");
  r.check(k_abc.contains(fam(b3, {1, 2, 4})) &&
              !k_sm.contains(fam(b3, {1, 2, 4})),
          "{a,b,c} separates them");
  r.check(smallest_uc_for(full_contact(b3)) == k_sm,
          "the edge-graph ultracontact is the smallest for the full contact");
  r.check(largest_uc_for(full_contact(b3)) == k_abc,
          "the clique ultracontact is the largest for the full contact");
  return r;
}

Report clique_k4_failure() {
  Report r{"clique-k4-failure"};
  const auto b4 = b(4);
  const auto w = k4_violation_witness(overlap_contact(b4));
  r.check(w.has_value(), "overlap on B4 yields a witness");
  if (w) {
    r.check(w->p.mask() == 0b0011 && w->q.mask() == 0b1100 &&
                w->r.mask() == 0b0101 && w->s.mask() == 0b1010,
            "the first witness is (a+b, c+d, a+c, b+d)");
    r.check(w->sum == fam(b4, {0b0111, 0b1011, 0b1101, 0b1110}),
            "{a+b,c+d}+{a+c,b+d} is the four 3-atom elements");
    const auto c = overlap_contact(b4);
    r.check(is_clique(c, w->sum) && !is_clique(c, w->left) &&
                !is_clique(c, w->right),
            "the sum is a clique while neither summand is");
  }
  r.check(!k4_violation_witness(overlap_contact(b(3))).has_value(),
          "overlap on B3 admits no witness");
  r.check(!k4_violation_witness(full_contact(b4)).has_value(),
          "the full contact admits no witness");
  return r;
}

Report hypercontact_thm() {
  Report r{"hypercontact"};
  const auto b3 = b(3);
  bool all_pass = true;
  for (const auto& k : nine_ucs(b3)) {
    all_pass &= !check_hypercontact_axioms(derive_hypercontact(k)).has_value();
  }
  r.check(all_pass, "H1-H5 hold for the hypercontacts of all 9 ultracontacts");
  const auto d_min = derive_hypercontact(kmin(b3));
  r.check(d_min.contains(fam(b3, {1, 0b011, 0b111})),
          "{a, a+b, 1} has a common lower bound");
  r.check(d_min.contains(Family(b3)), "the empty family belongs to it");
  const auto d_max = derive_hypercontact(kmax(b3));
  bool max_shape = true;
  for (const auto& f : all_families(b3)) {
    max_shape &= d_max.contains(f) == (f.empty() || !f.contains_zero());
  }
  r.check(max_shape, "the kmax hypercontact holds every zero-free family");
  return r;
}

Report sigma_iso() {
  Report r{"sigma-iso"};
  const int counts[] = {0, 1, 2, 9};
  for (int n = 1; n <= 4; ++n) {
    const auto bn = b(n);
    const auto ucs = enumerate_ucs(bn);
    const auto complexes = enumerate_complexes(bn.atom_names());
    r.check(ucs.size() == complexes.size(),
            "B" + std::to_string(n) + ": " + std::to_string(ucs.size()) +
                " ultracontacts, one per complex");
    if (n <= 3) {
      r.check(static_cast<int>(ucs.size()) == counts[n],
              "B" + std::to_string(n) + " has the expected count");
    }
    bool round = true, order = true;
    for (const auto& k : ucs) {
      round &= sigma_inverse(sigma(k), bn) == k;
    }
    for (const auto& k1 : ucs) {
      for (const auto& k2 : ucs) {
        const auto f1 = sigma(k1).face_masks();
        const auto f2 = sigma(k2).face_masks();
        const bool faces_sub =
            std::includes(f2.begin(), f2.end(), f1.begin(), f1.end());
        order &= k1.subset_of(k2) == faces_sub;
      }
    }
    r.check(round, "B" + std::to_string(n) + ": round trips are exact");
    r.check(order, "B" + std::to_string(n) + ": order preserved and reflected");
  }
  r.check(enumerate_ucs(b(4)).size() == 114, "B4 carries 114 ultracontacts");

  // Meets and joins transfer to face intersections and unions on B3.
  const auto b3 = b(3);
  const auto ucs = nine_ucs(b3);
  bool transfer = true;
  for (const auto& k1 : ucs) {
    for (const auto& k2 : ucs) {
      const auto f1 = sigma(k1).face_masks();
      const auto f2 = sigma(k2).face_masks();
      std::vector<std::uint32_t> fu, fi;
      std::set_union(f1.begin(), f1.end(), f2.begin(), f2.end(),
                     std::back_inserter(fu));
      std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(),
                            std::back_inserter(fi));
      transfer &= sigma(uc_join({k1, k2})).face_masks() == fu;
      transfer &= sigma(uc_meet({k1, k2})).face_masks() == fi;
    }
  }
  r.check(transfer, "join/meet become face union/intersection on B3");

  bool agree_on_atoms = true;
  for (const auto& k1 : ucs) {
    for (const auto& k2 : ucs) {
      if (sigma(k1) == sigma(k2) && k1 != k2) agree_on_atoms = false;
    }
  }
  r.check(agree_on_atoms, "ultracontacts agreeing on atom sets coincide");

  const auto faces = sigma(kmax(b3)).face_masks();
  bool poset_iso = faces.size() == 7;
  for (std::uint32_t f : faces) poset_iso &= f >= 1 && f <= 7;
  r.check(poset_iso,
          "the kmax complex is all nonempty atom sets, mirroring B+ by mask");
  return r;
}

Report contact_sandwich() {
  Report r{"contact-sandwich"};
  const auto b3 = b(3);
  bool sandwich = true, derive_back = true;
  for (const auto& k : nine_ucs(b3)) {
    const auto c = derive_contact(k);
    const auto lo = smallest_uc_for(c);
    const auto hi = largest_uc_for(c);
    sandwich &= lo.subset_of(k) && k.subset_of(hi);
    derive_back &= derive_contact(lo) == c && derive_contact(hi) == c;
  }
  r.check(sandwich, "every B3 ultracontact sits between the two bounds");
  r.check(derive_back, "both bounds derive the original contact back");
  const auto overlap = overlap_contact(b3);
  r.check(smallest_uc_for(overlap) == kmin(b3) &&
              largest_uc_for(overlap) == kmin(b3),
          "overlap pins both bounds at kmin (atoms pairwise apart)");
  return r;
}

Report stack_roundtrip() {
  Report r{"stack-roundtrip"};
  const auto b3 = b(3);
  const auto ucs = nine_ucs(b3);
  bool k_trip = true, s_trip = true;
  for (const auto& k : ucs) {
    const auto explicit_k = k.explicit_members();
    const auto s = sk_of(explicit_k);
    k_trip &= ks_of(s) == explicit_k;
    s_trip &= sk_of(ks_of(s)) == s;
  }
  r.check(k_trip, "K = K_{S_K} for all 9 ultracontacts of B3");
  r.check(s_trip, "S = S_{K_S} for their stack systems");
  bool order = true;
  for (const auto& k1 : ucs) {
    for (const auto& k2 : ucs) {
      order &= k1.subset_of(k2) == sk_of(k1).subset_of(sk_of(k2));
    }
  }
  r.check(order, "inclusion transfers both ways");
  const auto s_min = sk_of(kmin(b3));
  r.check(s_min.contains_eset(detail::up_closure(
              (ESet{1} << 0b011) | (ESet{1} << 0b101), 3)),
          "up{a+b, a+c} belongs to S_kmin (meet a)");
  return r;
}

Report smin_smax_thm() {
  Report r{"smin-smax"};
  const auto b3 = b(3);
  r.check(smin(b3) == sk_of(kmin(b3)), "smin(B3) equals S_kmin");
  r.check(smax(b3) == sk_of(kmax(b3)), "smax(B3) equals S_kmax");
  r.check(smin(b3).size() == 10,
          "smin(B3) has 10 stacks (nonempty, nonzero meet)");
  r.check(smax(b3).size() == 18, "smax(B3) has 18 stacks");
  bool bounds = true;
  for (const auto& k : nine_ucs(b3)) {
    const auto s = sk_of(k);
    bounds &= smin(b3).subset_of(s) && s.subset_of(smax(b3));
  }
  r.check(bounds, "every B3 stack system sits between smin and smax");
  const auto b1 = b(1);
  r.check(smin(b1) == smax(b1) && smin(b1).size() == 1,
          "one atom: smin = smax = {{1}}");
  return r;
}

Report topological_uc() {
  Report r{"topological-uc"};
  const std::vector<std::string> pts{"l", "m", "r"};
  const FiniteTopSpace x(pts, {0b000, 0b001, 0b100, 0b101, 0b111});
  const auto rc = rc_algebra(x);
  r.check(rc.algebra().carrier_size() == 4,
          "the {l,m,r} example has the 4-element regular closed algebra");
  r.check(rc.atom_extents() == std::vector<std::uint32_t>({0b011, 0b110}),
          "its atoms are {l,m} and {m,r}");
  const auto k = intersection_uc(rc);
  const auto two_atoms =
      fam(rc.algebra(), {1, 2});  // the two regular closed halves
  r.check(k.contains(two_atoms),
          "the two halves share the middle point, so they form a member");
  r.check(k == kmax(rc.algebra()) && kmin(rc.algebra()) != k,
          "the example yields kmax, strictly above kmin");

  const FiniteTopSpace discrete({"p", "q"}, {0b00, 0b01, 0b10, 0b11});
  r.check(intersection_uc(discrete) == kmin(rc_algebra(discrete).algebra()),
          "a discrete space yields kmin");

  // Every topology on 3 labeled points.
  int count = 0;
  bool all_valid = true, sandwich = true;
  for (std::uint32_t chosen = 0; chosen < (1u << 6); ++chosen) {
    std::vector<std::uint32_t> opens{0b000, 0b111};
    for (int s = 1; s <= 6; ++s) {
      if ((chosen >> (s - 1)) & 1u) opens.push_back(s);
    }
    bool closed = true;
    auto is_in = [&](std::uint32_t v) {
      return std::find(opens.begin(), opens.end(), v) != opens.end();
    };
    for (std::uint32_t a : opens) {
      for (std::uint32_t b2 : opens) {
        closed &= is_in(a | b2) && is_in(a & b2);
      }
    }
    if (!closed) continue;
    ++count;
    const FiniteTopSpace space(pts, opens);
    const auto rca = rc_algebra(space);
    const auto uc = intersection_uc(rca);
    all_valid &= !check_uc_axioms(uc.explicit_members()).has_value();
    sandwich &=
        kmin(rca.algebra()).subset_of(uc) && uc.subset_of(kmax(rca.algebra()));
  }
  r.check(count == 29, "29 topologies on 3 labeled points");
  r.check(all_valid, "each intersection ultracontact passes K0-K4");
  r.check(sandwich, "each sits between kmin and kmax of its algebra");
  return r;
}

Report kmin_example_discrepancy() {
  Report r{"kmin-example-discrepancy"};
  const auto b3 = b(3);
  const auto k = kmin(b3);

  // The documented exclusion list for B3, as canonical stacks.
  const std::vector<std::vector<std::uint32_t>> listed{
      {1, 2}, {1, 4}, {2, 4}, {1, 2, 4}, {1, 0b110}, {2, 0b101}, {4, 0b011}};
  std::vector<ESet> listed_stacks;
  for (const auto& gens : listed) {
    ESet s = 0;
    for (std::uint32_t g : gens) s |= detail::upset_of(g, 3);
    listed_stacks.push_back(s);
  }
  std::sort(listed_stacks.begin(), listed_stacks.end());

  // All non-member similarity classes: stacks of meet zero.
  std::vector<ESet> nonmember_stacks;
  for (ESet s : detail::all_stack_esets(3)) {
    if (s != 0 && detail::meet_of(s, 3) == 0) nonmember_stacks.push_back(s);
  }
  const ESet full = detail::full_eset(3);
  r.check(nonmember_stacks.size() == 9,
          "kmin(B3) excludes 9 similarity classes (8 zero-free plus the "
          "zero-containing class)");

  const ESet odd_one =
      detail::upset_of(0b011, 3) | detail::upset_of(0b101, 3) |
      detail::upset_of(0b110, 3);
  r.check(!k.contains(fam(b3, {0b011, 0b101, 0b110})),
          "{a+b, a+c, b+c} is excluded although absent from the documented "
          "7-class list");
  r.check(!std::binary_search(listed_stacks.begin(), listed_stacks.end(),
                              odd_one),
          "its stack is indeed not among the documented classes");

  bool exact = true;
  for (ESet s : nonmember_stacks) {
    const bool expected =
        s == full || s == odd_one ||
        std::binary_search(listed_stacks.begin(), listed_stacks.end(), s);
    exact &= expected;
  }
  r.check(exact,
          "the excluded classes are exactly: the 7 documented ones, "
          "{a+b,a+c,b+c}, and the zero-containing class");
  return r;
}

Report smax_discrepancy() {
  Report r{"smax-discrepancy"};
  const auto b3 = b(3);
  const ESet full = detail::full_eset(3);
  r.check(!smax(b3).contains_eset(full),
          "the whole carrier is not a member of S_kmax");
  r.check(!sk_of(kmax(b3)).contains_eset(full),
          "no member of kmax has the whole carrier as its up-closure");

  // All nonempty stacks, the carrier included, fail the axioms.
  std::vector<ESet> with_carrier;
  for (ESet s : detail::all_stack_esets(3)) {
    if (s != 0) with_carrier.push_back(s);
  }
  const auto violation = internal::check_stack_system_esets(b3, with_carrier);
  r.check(violation.has_value() && violation->axiom == "SS1",
          "adding the carrier to smax violates SS1");

  // The same off-by-one on the other end: admitting the empty stack into
  // smin (every empty-meet convention would) breaks SS0.
  std::vector<ESet> with_empty = smin(b3).member_esets();
  with_empty.insert(with_empty.begin(), 0);
  const auto violation2 = internal::check_stack_system_esets(b3, with_empty);
  r.check(violation2.has_value() && violation2->axiom == "SS0",
          "adding the empty stack to smin violates SS0");
  return r;
}

using SuiteFn = Report (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"smallest-uc", smallest_uc},
      {"largest-uc", largest_uc},
      {"meet-formula", meet_formula},
      {"chain-meet", chain_meet_thm},
      {"co-heyting", co_heyting},
      {"grill-extension", grill_extension},
      {"kM-iff-grill", km_iff_grill},
      {"meet-failure-witness", meet_failure_witness},
      {"meet-not-intersection", meet_not_intersection},
      {"contact-axioms", contact_axioms},
      {"same-contact-different-uc", same_contact_different_uc},
      {"clique-k4-failure", clique_k4_failure},
      {"hypercontact", hypercontact_thm},
      {"sigma-iso", sigma_iso},
      {"contact-sandwich", contact_sandwich},
      {"stack-roundtrip", stack_roundtrip},
      {"smin-smax", smin_smax_thm},
      {"topological-uc", topological_uc},
      {"kmin-example-discrepancy", kmin_example_discrepancy},
      {"smax-discrepancy", smax_discrepancy},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& all_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Report run(const std::string& id) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn();
  }
  throw InvalidInput("unknown theorem id '" + id + "'");
}

}  // namespace uclab::theorems
