#include "uclab/detail/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace uclab::detail {

namespace {

void antichain_rec(std::uint32_t next, ESet blocked, ESet upset_so_far,
                   const std::vector<ESet>& comparable,
                   const std::vector<ESet>& upsets, std::uint32_t carrier,
                   std::vector<ESet>& out) {
  out.push_back(upset_so_far);
  for (std::uint32_t e = next; e < carrier; ++e) {
    if (eset_contains(blocked, e)) continue;
    antichain_rec(e + 1, blocked | comparable[e], upset_so_far | upsets[e],
                  comparable, upsets, carrier, out);
  }
}

}  // namespace

std::vector<ESet> all_stack_esets(int n_atoms) {
  if (n_atoms < 1 || (1 << n_atoms) > 64) {
    throw std::invalid_argument("all_stack_esets: carrier must fit in 64 bits");
  }
  const std::uint32_t carrier = 1u << n_atoms;
  std::vector<ESet> upsets(carrier);
  std::vector<ESet> comparable(carrier);
  for (std::uint32_t e = 0; e < carrier; ++e) {
    upsets[e] = upset_of(e, n_atoms);
    comparable[e] = upsets[e] | downset_of(e);
  }
  std::vector<ESet> out;
  antichain_rec(0, 0, 0, comparable, upsets, carrier, out);
  std::sort(out.begin(), out.end());
  return out;
}

CarrierTables make_carrier_tables(int n_atoms) {
  if (n_atoms < 1 || n_atoms > 4) {
    throw std::invalid_argument(
        "make_carrier_tables: explicit family tables need carrier <= 16");
  }
  CarrierTables t;
  t.n_atoms = n_atoms;
  t.carrier = 1u << n_atoms;
  t.upset.resize(t.carrier);
  for (std::uint32_t e = 0; e < t.carrier; ++e) {
    t.upset[e] = upset_of(e, n_atoms);
  }
  t.up_closure.resize(std::size_t{1} << t.carrier);
  t.up_closure[0] = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << t.carrier); ++m) {
    const std::uint32_t low =
        static_cast<std::uint32_t>(std::countr_zero(m));
    t.up_closure[m] = t.up_closure[m & (m - 1)] | t.upset[low];
  }
  return t;
}

}  // namespace uclab::detail
