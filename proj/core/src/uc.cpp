#include "uclab/uc.hpp"

#include <algorithm>
#include <set>

#include "internal.hpp"

namespace uclab {

using detail::ESet;

namespace internal {

void require_carrier_at_most(const BooleanAlgebra& algebra, int max_atoms,
                             const char* op) {
  if (algebra.n_atoms() > max_atoms) {
    throw CapExceeded(std::string(op) + ": needs n_atoms <= " +
                      std::to_string(max_atoms) + ", got " +
                      std::to_string(algebra.n_atoms()));
  }
}

ESet to_eset(const Family& f) {
  if (f.algebra().n_atoms() > detail::kMaxESetAtoms) {
    throw CapExceeded("carrier does not fit the element-set form");
  }
  ESet s = 0;
  for (std::uint32_t m : f.masks()) s |= ESet{1} << m;
  return s;
}

Family from_eset(const BooleanAlgebra& algebra, ESet s) {
  std::vector<std::uint32_t> masks;
  while (s) {
    masks.push_back(static_cast<std::uint32_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return Family::from_masks(algebra, std::move(masks));
}

Stack stack_from_eset(const BooleanAlgebra& algebra, ESet s) {
  return Stack::generated_by(from_eset(algebra, s));
}

bool is_grill_eset(ESet s, int n_atoms) {
  if (s == 0 || detail::eset_contains(s, 0)) return false;
  if (!detail::is_up_closed(s, n_atoms)) return false;
  const std::uint32_t carrier = 1u << n_atoms;
  for (std::uint32_t a = 0; a < carrier; ++a) {
    for (std::uint32_t b = 0; b < carrier; ++b) {
      if (detail::eset_contains(s, a | b) && !detail::eset_contains(s, a) &&
          !detail::eset_contains(s, b)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> uc_faces(const Ultracontact& k) {
  const int n = k.algebra().n_atoms();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t h = 1; h < (1u << n); ++h) {
    if (k.contains_witness_eset(detail::meets_atom_set(h, n))) {
      faces.push_back(h);
    }
  }
  return faces;
}

std::vector<ESet> witnesses_for_faces(int n_atoms,
                                      const std::vector<std::uint32_t>& faces) {
  std::vector<ESet> supports;
  supports.reserve(faces.size());
  for (std::uint32_t h : faces) {
    supports.push_back(detail::meets_atom_set(h, n_atoms));
  }
  std::vector<ESet> out;
  for (ESet u : detail::all_stack_esets(n_atoms)) {
    if (u == 0) continue;
    for (ESet s : supports) {
      if ((u & ~s) == 0) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

}  // namespace internal

namespace {

constexpr int kMaxWitnessAtoms = 5;  // materialized ultracontacts

void require_same(const BooleanAlgebra& a, const BooleanAlgebra& b,
                  const char* op) {
  detail::require_same_algebra(a, b, op);
}

std::string family_text(const Family& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : f.members()) {
    if (!first) out += ", ";
    out += e.name();
    first = false;
  }
  return out + "}";
}

}  // namespace

ExplicitUc::ExplicitUc(BooleanAlgebra algebra,
                       const std::vector<Family>& members)
    : algebra_(std::move(algebra)) {
  internal::require_carrier_at_most(algebra_, 4, "ExplicitUc");
  member_by_mask_.assign(std::size_t{1} << algebra_.carrier_size(), false);
  for (const auto& f : members) {
    require_same(algebra_, f.algebra(), "ExplicitUc");
    member_by_mask_[internal::to_eset(f)] = true;
  }
}

ExplicitUc ExplicitUc::from_family_masks(BooleanAlgebra algebra,
                                         std::vector<bool> member_by_mask) {
  internal::require_carrier_at_most(algebra, 4, "ExplicitUc");
  if (member_by_mask.size() !=
      (std::size_t{1} << algebra.carrier_size())) {
    throw InvalidInput("ExplicitUc: member table has the wrong size");
  }
  ExplicitUc uc(std::move(algebra), {});
  uc.member_by_mask_ = std::move(member_by_mask);
  return uc;
}

bool ExplicitUc::contains(const Family& f) const {
  require_same(algebra_, f.algebra(), "ExplicitUc::contains");
  return member_by_mask_[internal::to_eset(f)];
}

std::size_t ExplicitUc::size() const {
  return static_cast<std::size_t>(
      std::count(member_by_mask_.begin(), member_by_mask_.end(), true));
}

std::vector<Family> ExplicitUc::members() const {
  std::vector<Family> out;
  for (std::uint64_t m = 0; m < member_by_mask_.size(); ++m) {
    if (member_by_mask_[m]) out.push_back(internal::from_eset(algebra_, m));
  }
  return out;
}

std::optional<AxiomReport> check_uc_axioms(const ExplicitUc& uc) {
  const BooleanAlgebra& algebra = uc.algebra();
  const int n = algebra.n_atoms();
  const std::uint32_t carrier = algebra.carrier_size();
  const auto& mem = uc.member_bits();
  const std::uint64_t n_families = std::uint64_t{1} << carrier;
  auto fam = [&](std::uint64_t m) { return internal::from_eset(algebra, m); };

  if (mem[0]) {
    return AxiomReport{"K0", "the empty family is a member", {fam(0)}};
  }
  for (std::uint64_t m = 1; m < n_families; ++m) {
    if (mem[m] && (m & 1)) {
      return AxiomReport{"K1",
                         "member " + family_text(fam(m)) + " contains zero",
                         {fam(m)}};
    }
  }
  for (std::uint32_t e = 1; e < carrier; ++e) {
    const std::uint64_t singleton = std::uint64_t{1} << e;
    if (!mem[singleton]) {
      return AxiomReport{"K2",
                         "singleton " + family_text(fam(singleton)) +
                             " of a nonzero element is missing",
                         {fam(singleton)}};
    }
  }

  // K3 through a subset-closure table: closed[m] says that m and all its
  // nonempty subfamilies are members.
  const auto tables = detail::make_carrier_tables(n);
  std::vector<bool> closed(n_families, false);
  closed[0] = true;
  for (std::uint64_t m = 1; m < n_families; ++m) {
    bool ok = mem[m];
    std::uint64_t rest = m;
    while (ok && rest) {
      const std::uint64_t sub = m & ~(rest & (~rest + 1));
      rest &= rest - 1;
      ok = (sub == 0) || closed[sub];
    }
    closed[m] = ok;
  }
  for (std::uint64_t m = 1; m < n_families; ++m) {
    if (!mem[m]) continue;
    const ESet up = tables.up_closure[m];
    if (closed[up]) continue;
    for (std::uint64_t g = 1; g < n_families; ++g) {
      if ((g & ~up) == 0 && !mem[g]) {
        return AxiomReport{"K3",
                           family_text(fam(m)) + " supports " +
                               family_text(fam(g)) + " which is absent",
                           {fam(m), fam(g)}};
      }
    }
  }

  // K4 over pairs of stacks: sums of stacks are intersections, and once K3
  // holds membership only depends on the up-closure, so this quantification
  // covers every family-level splitting.
  const auto stacks = detail::all_stack_esets(n);
  for (ESet u : stacks) {
    if (u == 0) continue;
    for (ESet v : stacks) {
      if (v == 0) continue;
      const ESet i = u & v;
      if (mem[i] && !mem[u] && !mem[v]) {
        return AxiomReport{"K4",
                           family_text(fam(u)) + " + " + family_text(fam(v)) +
                               " = " + family_text(fam(i)) +
                               " is a member but neither summand is",
                           {fam(u), fam(v), fam(i)}};
      }
    }
  }
  return std::nullopt;
}

Ultracontact uc_from_explicit(const ExplicitUc& candidate) {
  if (auto violation = check_uc_axioms(candidate)) {
    throw AxiomError(*violation);
  }
  const auto tables = detail::make_carrier_tables(candidate.algebra().n_atoms());
  std::set<ESet> witnesses;
  const auto& mem = candidate.member_bits();
  for (std::uint64_t m = 1; m < mem.size(); ++m) {
    if (mem[m]) witnesses.insert(tables.up_closure[m]);
  }
  return Ultracontact::from_witness_esets(
      candidate.algebra(), {witnesses.begin(), witnesses.end()});
}

Ultracontact uc_from_explicit(const BooleanAlgebra& algebra,
                              const std::vector<Family>& members) {
  return uc_from_explicit(ExplicitUc(algebra, members));
}

std::vector<Stack> Ultracontact::witnesses() const {
  std::vector<Stack> out;
  out.reserve(witnesses_.size());
  for (ESet w : witnesses_) {
    out.push_back(internal::stack_from_eset(algebra_, w));
  }
  return out;
}

bool Ultracontact::contains(const Family& f) const {
  require_same(algebra_, f.algebra(), "Ultracontact::contains");
  if (f.empty()) return false;
  const ESet up = detail::up_closure(internal::to_eset(f), algebra_.n_atoms());
  return contains_witness_eset(up);
}

bool Ultracontact::contains_witness_eset(ESet stack_eset) const {
  return std::binary_search(witnesses_.begin(), witnesses_.end(), stack_eset);
}

ExplicitUc Ultracontact::explicit_members() const {
  internal::require_carrier_at_most(algebra_, 4, "explicit_members");
  const auto tables = detail::make_carrier_tables(algebra_.n_atoms());
  std::vector<bool> bits(std::size_t{1} << algebra_.carrier_size(), false);
  for (std::uint64_t m = 1; m < bits.size(); ++m) {
    bits[m] = contains_witness_eset(tables.up_closure[m]);
  }
  return ExplicitUc::from_family_masks(algebra_, std::move(bits));
}

bool Ultracontact::subset_of(const Ultracontact& other) const {
  require_same(algebra_, other.algebra_, "Ultracontact::subset_of");
  return std::includes(other.witnesses_.begin(), other.witnesses_.end(),
                       witnesses_.begin(), witnesses_.end());
}

Ultracontact Ultracontact::from_witness_esets(
    BooleanAlgebra algebra, std::vector<std::uint64_t> witnesses) {
  internal::require_carrier_at_most(algebra, kMaxWitnessAtoms,
                                    "Ultracontact witnesses");
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                  witnesses.end());
  if (algebra.n_atoms() <= 4) {
    if (auto violation = internal::check_stack_system_esets(algebra, witnesses)) {
      AxiomReport r = *violation;
      r.message = "witness set is not a stack system: " + r.message;
      throw AxiomError(std::move(r));
    }
  } else {
    // Full validation needs the stack enumeration; beyond its comfortable
    // range only the structural invariants are rechecked.
    const ESet full = detail::full_eset(algebra.n_atoms());
    for (ESet w : witnesses) {
      if (w == 0 || w == full) {
        throw AxiomError(AxiomReport{
            "SS0", "witness set contains the empty stack or the carrier", {}});
      }
    }
  }
  return Ultracontact(std::move(algebra), std::move(witnesses));
}

bool uc_membership(const Ultracontact& k, const Family& f) {
  return k.contains(f);
}

Ultracontact kmin(const BooleanAlgebra& algebra) {
  internal::require_carrier_at_most(algebra, kMaxWitnessAtoms, "kmin");
  std::vector<ESet> witnesses;
  for (ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    if (s != 0 && detail::meet_of(s, algebra.n_atoms()) != 0) {
      witnesses.push_back(s);
    }
  }
  return Ultracontact::from_witness_esets(algebra, std::move(witnesses));
}

Ultracontact kmax(const BooleanAlgebra& algebra) {
  internal::require_carrier_at_most(algebra, kMaxWitnessAtoms, "kmax");
  const ESet full = detail::full_eset(algebra.n_atoms());
  std::vector<ESet> witnesses;
  for (ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    if (s != 0 && s != full) witnesses.push_back(s);
  }
  return Ultracontact::from_witness_esets(algebra, std::move(witnesses));
}

bool kmin_contains(const Family& f) {
  return !f.empty() && f.lower_bound().mask() != 0;
}

bool kmax_contains(const Family& f) {
  return !f.empty() && !f.contains_zero();
}

Ultracontact uc_join(const std::vector<Ultracontact>& ks) {
  if (ks.empty()) throw InvalidInput("uc_join: empty input");
  std::vector<ESet> witnesses = ks.front().witness_esets();
  for (std::size_t i = 1; i < ks.size(); ++i) {
    require_same(ks.front().algebra(), ks[i].algebra(), "uc_join");
    const auto& w = ks[i].witness_esets();
    witnesses.insert(witnesses.end(), w.begin(), w.end());
  }
  return Ultracontact::from_witness_esets(ks.front().algebra(),
                                          std::move(witnesses));
}

Ultracontact uc_meet(const std::vector<Ultracontact>& ks) {
  if (ks.empty()) throw InvalidInput("uc_meet: empty input");
  const BooleanAlgebra& algebra = ks.front().algebra();
  std::vector<std::uint32_t> faces = internal::uc_faces(ks.front());
  for (std::size_t i = 1; i < ks.size(); ++i) {
    require_same(algebra, ks[i].algebra(), "uc_meet");
    const auto other = internal::uc_faces(ks[i]);
    std::vector<std::uint32_t> merged;
    std::set_intersection(faces.begin(), faces.end(), other.begin(),
                          other.end(), std::back_inserter(merged));
    faces = std::move(merged);
  }
  return Ultracontact::from_witness_esets(
      algebra, internal::witnesses_for_faces(algebra.n_atoms(), faces));
}

namespace {

// Common witnesses of the inputs, then everything reachable from the
// remaining nonempty stacks by intersection: the image of the tuple
// quantifier in the meet condition.
std::vector<ESet> nonwitness_intersection_closure(
    const std::vector<Ultracontact>& ks) {
  const BooleanAlgebra& algebra = ks.front().algebra();
  std::vector<ESet> common = ks.front().witness_esets();
  for (std::size_t i = 1; i < ks.size(); ++i) {
    require_same(algebra, ks[i].algebra(), "meet_oracle");
    std::vector<ESet> merged;
    const auto& w = ks[i].witness_esets();
    std::set_intersection(common.begin(), common.end(), w.begin(), w.end(),
                          std::back_inserter(merged));
    common = std::move(merged);
  }
  std::set<ESet> closure;
  for (ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    if (s != 0 &&
        !std::binary_search(common.begin(), common.end(), s)) {
      closure.insert(s);
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ESet> current(closure.begin(), closure.end());
    for (ESet a : current) {
      for (ESet b : current) {
        if (closure.insert(a & b).second) grew = true;
      }
    }
  }
  return {closure.begin(), closure.end()};
}

bool excluded_by_closure(const std::vector<ESet>& closure, ESet up_of_f) {
  for (ESet x : closure) {
    if ((x & ~up_of_f) == 0) return true;
  }
  return false;
}

}  // namespace

Ultracontact meet_oracle(const std::vector<Ultracontact>& ks) {
  if (ks.empty()) throw InvalidInput("meet_oracle: empty input");
  const BooleanAlgebra& algebra = ks.front().algebra();
  internal::require_carrier_at_most(algebra, 3, "meet_oracle");
  const auto closure = nonwitness_intersection_closure(ks);
  std::vector<ESet> witnesses;
  for (ESet u : detail::all_stack_esets(algebra.n_atoms())) {
    if (u != 0 && !excluded_by_closure(closure, u)) witnesses.push_back(u);
  }
  return Ultracontact::from_witness_esets(algebra, std::move(witnesses));
}

bool meet_oracle_contains(const std::vector<Ultracontact>& ks,
                          const Family& f) {
  if (ks.empty()) throw InvalidInput("meet_oracle_contains: empty input");
  const BooleanAlgebra& algebra = ks.front().algebra();
  internal::require_carrier_at_most(algebra, 4, "meet_oracle_contains");
  require_same(algebra, f.algebra(), "meet_oracle_contains");
  if (f.empty()) return false;
  const auto closure = nonwitness_intersection_closure(ks);
  const ESet up = detail::up_closure(internal::to_eset(f), algebra.n_atoms());
  return !excluded_by_closure(closure, up);
}

Ultracontact extend_by_grills(const Ultracontact& k,
                              const std::vector<Family>& grills) {
  const BooleanAlgebra& algebra = k.algebra();
  const int n = algebra.n_atoms();
  std::vector<ESet> grill_esets;
  for (const auto& g : grills) {
    require_same(algebra, g.algebra(), "extend_by_grills");
    const ESet s = internal::to_eset(g);
    if (!internal::is_grill_eset(s, n)) {
      throw PreconditionFailed("extend_by_grills: " + family_text(g) +
                               " is not a grill");
    }
    grill_esets.push_back(s);
  }
  std::vector<ESet> witnesses = k.witness_esets();
  for (ESet u : detail::all_stack_esets(n)) {
    if (u == 0) continue;
    for (ESet g : grill_esets) {
      if ((u & ~g) == 0) {
        witnesses.push_back(u);
        break;
      }
    }
  }
  return Ultracontact::from_witness_esets(algebra, std::move(witnesses));
}

SetExtension extend_by_set(const Ultracontact& k, const Family& m) {
  const BooleanAlgebra& algebra = k.algebra();
  internal::require_carrier_at_most(algebra, 4, "extend_by_set");
  require_same(algebra, m.algebra(), "extend_by_set");
  std::vector<bool> bits = k.explicit_members().member_bits();
  const ESet m_eset = internal::to_eset(m);
  for (ESet sub = m_eset; sub; sub = (sub - 1) & m_eset) {
    bits[sub] = true;
  }
  SetExtension out{ExplicitUc::from_family_masks(algebra, std::move(bits)),
                   false, std::nullopt, std::nullopt};
  out.violation = check_uc_axioms(out.candidate);
  out.is_uc = !out.violation.has_value();
  if (out.is_uc) out.as_uc = uc_from_explicit(out.candidate);
  return out;
}

Ultracontact extend_by_atoms(const Ultracontact& k, const Family& atom_set) {
  require_same(k.algebra(), atom_set.algebra(), "extend_by_atoms");
  if (atom_set.empty()) return k;
  std::uint32_t atoms = 0;
  for (const auto& e : atom_set.members()) {
    if (!e.is_atom()) {
      throw PreconditionFailed(
          "extend_by_atoms: member " + e.name() +
          " is not an atom; the enlargement by a non-atom family can break "
          "the splitting axiom");
    }
    atoms |= e.mask();
  }
  const Family grill = internal::from_eset(
      k.algebra(), detail::meets_atom_set(atoms, k.algebra().n_atoms()));
  return extend_by_grills(k, {grill});
}

std::pair<Ultracontact, Ultracontact> witness_meet_failure(const Family& m) {
  const BooleanAlgebra& algebra = m.algebra();
  internal::require_carrier_at_most(algebra, kMaxWitnessAtoms,
                                    "witness_meet_failure");
  const int n = algebra.n_atoms();
  const ESet m_eset = internal::to_eset(m);
  if (m.empty()) {
    throw PreconditionFailed("witness_meet_failure: the family is empty");
  }
  if (!detail::is_up_closed(m_eset, n)) {
    throw PreconditionFailed("witness_meet_failure: the family is not a stack");
  }
  if (m.contains_zero()) {
    throw PreconditionFailed("witness_meet_failure: the family contains zero");
  }
  if (m.lower_bound().mask() != 0) {
    throw PreconditionFailed(
        "witness_meet_failure: the family has a nonzero lower bound");
  }
  if (internal::is_grill_eset(m_eset, n)) {
    throw PreconditionFailed("witness_meet_failure: the family is a grill");
  }

  const std::uint32_t carrier = algebra.carrier_size();
  std::uint32_t x = 0, y = 0;
  bool found = false;
  for (std::uint32_t a = 0; a < carrier && !found; ++a) {
    if (detail::eset_contains(m_eset, a)) continue;
    for (std::uint32_t b = 0; b < carrier; ++b) {
      if (detail::eset_contains(m_eset, b)) continue;
      if (detail::eset_contains(m_eset, a | b)) {
        x = a;
        y = b;
        found = true;
        break;
      }
    }
  }
  if (!found) {
    throw Error("witness_meet_failure: no splitting pair exists");
  }

  auto not_below = [&](std::uint32_t e) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t a = 0; a < carrier; ++a) {
      if ((a & ~e) != 0) masks.push_back(a);
    }
    return Family::from_masks(algebra, std::move(masks));
  };
  const Ultracontact base = kmin(algebra);
  Ultracontact k1 = extend_by_grills(base, {not_below(x)});
  Ultracontact k2 = extend_by_grills(base, {not_below(y)});

  if (!k1.contains(m) || !k2.contains(m) || uc_meet({k1, k2}).contains(m)) {
    throw Error("witness_meet_failure: construction failed its guarantee");
  }
  return {std::move(k1), std::move(k2)};
}

Ultracontact chain_meet(const std::vector<Ultracontact>& chain) {
  if (chain.empty()) throw InvalidInput("chain_meet: empty input");
  const BooleanAlgebra& algebra = chain.front().algebra();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require_same(algebra, chain[i].algebra(), "chain_meet");
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (!chain[i].subset_of(chain[j]) && !chain[j].subset_of(chain[i])) {
        throw PreconditionFailed("chain_meet: inputs are not pairwise comparable");
      }
    }
  }
  std::vector<ESet> witnesses = chain.front().witness_esets();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::vector<ESet> merged;
    const auto& w = chain[i].witness_esets();
    std::set_intersection(witnesses.begin(), witnesses.end(), w.begin(),
                          w.end(), std::back_inserter(merged));
    witnesses = std::move(merged);
  }
  return Ultracontact::from_witness_esets(algebra, std::move(witnesses));
}

}  // namespace uclab
