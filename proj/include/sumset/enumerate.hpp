#ifndef SUMSET_ENUMERATE_HPP
#define SUMSET_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

inline constexpr std::uint64_t kDefaultFragmentCap = 1u << 20;

/// All elements whose Z-factor coordinates lie in [-bound, bound]; the full
/// group when every factor is finite. Sorted by element order. Throws
/// ResourceError when the fragment would exceed `cap` elements.
std::vector<Element> enumerate_fragment(const GroupRef& g, long long bound,
                                        std::uint64_t cap = kDefaultFragmentCap);

/// Fragment elements g with 2g = 0. This is the exact two-torsion subgroup
/// of the whole group for any bound >= 0 (a nonzero Z coordinate never
/// doubles to zero).
std::vector<Element> two_torsion(const GroupRef& g, long long bound,
                                 std::uint64_t cap = kDefaultFragmentCap);

/// Image of the doubling map over the fragment, deduplicated and sorted.
std::vector<Element> double_image(const GroupRef& g, long long bound,
                                  std::uint64_t cap = kDefaultFragmentCap);

/// Fragment elements g with 4g = 0.
std::vector<Element> quadruple_kernel(const GroupRef& g, long long bound,
                                      std::uint64_t cap = kDefaultFragmentCap);

/// All x in `domain` with 2x = c.
std::vector<Element> solve_double(const Element& c, const std::vector<Element>& domain);

/// All y in `domain` with 4y = d.
std::vector<Element> solve_quadruple(const Element& d, const std::vector<Element>& domain);

/// X+X = { x+y : x,y in X }, doubles included; sorted, deduplicated.
std::vector<Element> sumset_of(const std::vector<Element>& xs);

/// Specs of every finite Abelian group of order <= max_order, one per
/// isomorphism class (elementary divisor form, primes ascending, prime
/// powers descending). Order 1 is the empty factor list.
std::vector<GroupSpec> all_abelian_specs(long long max_order);

} // namespace sumset

#endif
