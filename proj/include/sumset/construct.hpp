#ifndef SUMSET_CONSTRUCT_HPP
#define SUMSET_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumset/coloring.hpp"
#include "sumset/group.hpp"
#include "sumset/witness.hpp"

namespace sumset {

/// A sequence g_0, g_1, ... built so that {1,2,4}-coefficient combinations
/// over it behave injectively where the pattern constructions need them to:
/// no nonempty combination vanishes, and equal coefficient vectors applied
/// to order-separated index blocks give distinct values.
struct Independent124Sequence {
    std::vector<Element> terms;
    std::vector<std::string> log; // chosen candidates and rejections, in order
};

/// Build a length-`length` sequence. When the group has an element of
/// infinite order the multiples 1a, 2a, ..., Na of the canonical generator
/// are used; a torsion group is searched greedily in fragment order,
/// backtracking on dead ends, keeping {g, 2g, 4g} clear of the subgroup
/// generated by the prefix (the first term must have order outside
/// {1,2,4}). Throws ConstructionError with the achieved length when the
/// fragment cannot supply `length` terms.
Independent124Sequence build_independent_124(const GroupRef& g, long long bound, int length,
                                             std::uint64_t cap = kDefaultFragmentCap);

struct IndependenceReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exhaustive check of the prefix g_0..g_{prefix_len-1}:
///   (a) no nonempty combination sum(eps_i * g_{k_i}) with eps_i in {1,2,4}
///       over increasing indices equals zero;
///   (b) the same coefficient vector applied to two order-separated index
///       blocks (every index of one below every index of the other) never
///       gives equal values.
/// These are the uniqueness facts the pattern construction consumes.
/// prefix_len is capped at 6.
IndependenceReport verify_independence_124(const std::vector<Element>& terms, int prefix_len);

/// Pairs (z_n, 2 z_n) where each 2 z_n has order 2 and is independent of
/// the previous doubles (outside the subgroup they generate).
struct Order2Basis {
    std::vector<Element> roots;   // z_n
    std::vector<Element> doubles; // 2 z_n
    std::vector<std::string> log;
};

/// Greedy scan of the fragment for roots; throws ConstructionError with the
/// achieved length when the order-2 supply runs out.
Order2Basis build_order2_basis(const GroupRef& g, long long bound, int length,
                               std::uint64_t cap = kDefaultFragmentCap);

/// With eps_0=3, eps_1=1, del_0=0, del_1=2, checks over every choice of 2n
/// distinct root indices i_1..i_n, j_1..j_n and every pair of sign maps
/// f, g: {1..n} -> {0,1} that
///   sum(eps_{f(k)} z_{i_k} + del_{f(k)} z_{j_k}) equals the g-version
/// exactly when f = g. Exhaustive; n is capped at 3.
bool verify_epsilon_delta(const std::vector<Element>& roots, int n);

struct RamseyResult {
    enum class Status { Found, Exhausted, Capped };
    Status status = Status::Exhausted;
    std::vector<int> subset;
    std::uint64_t nodes = 0;
};

/// Backtracking search for a size-`target` index set Y whose increasing
/// arity-tuples all share one d-color. Explored in lexicographic order, so
/// the first acceptable Y is returned deterministically; an optional accept
/// predicate can reject a completed Y and resume the search. Exhausted
/// means no acceptable Y exists in the domain; Capped means the budget ran
/// out first.
RamseyResult ramsey_monochromatic_subset(
    const TupleColoring& d, int target, const SearchLimits& limits = {},
    const std::function<bool(const std::vector<int>&)>& accept = nullptr);

/// Result of a pattern-based witness construction (the r-color case over a
/// sequence with independent {1,2,4}-combinations).
struct PatternWitness {
    Witness witness;
    std::vector<int> homogeneous; // the monochromatic index set used
    int i = -1, j = -1;           // the matched pattern pair
    std::vector<std::string> log;
};

/// Builds the induced 2r-tuple coloring over `seq`, finds a monochromatic
/// index set, matches two block patterns of equal color by pigeonhole, and
/// assembles n elements whose sumset is monochromatic for `c`. The index
/// set size is 2r + (n-1)(j-i), computed from the matched pair; targets are
/// tried from the worst case down. `c` should use at most r colors.
PatternWitness construct_via_patterns(const Coloring& c, int r, int n,
                                      const Independent124Sequence& seq,
                                      const SearchLimits& limits = {});

struct Order2Witness {
    Witness witness;
    std::vector<int> i_block, j_block;
    std::vector<std::pair<std::vector<int>, Element>> assignments; // sign map -> element
    std::vector<std::string> log;
};

/// The order-2 case: d(k_1..k_n) = c(2z_{k_1} + ... + 2z_{k_n}), find a
/// monochromatic 2n-element index set, split it into the i- and j-blocks,
/// and return X = { x_f : f in {0,1}^n } of size 2^n.
Order2Witness construct_via_order2(const Coloring& c, int n, const Order2Basis& basis,
                                   const SearchLimits& limits = {});

struct Z4BasisWitness {
    Witness witness;
    std::vector<int> alphas; // the 2n chosen basis indices, increasing
    std::vector<std::pair<std::vector<int>, Element>> assignments;
    std::vector<std::string> log;
};

/// The Z/4 direct-sum construction: with eps_0=1, del_0=2, eps_1=3,
/// del_1=0, s_f = (eps_{f(1)}, del_{f(1)}, ..., eps_{f(n)}, del_{f(n)})
/// applied to 2n basis vectors e_{alpha_1} < ... < e_{alpha_2n} chosen from
/// a monochromatic set of the doubled-basis-sum coloring. Returns X of
/// size 2^n with X+X monochromatic, satisfying coordinatewise
///   2 x_f      = sum_j 2 e_{alpha_{2j-1}}
///   x_f + x_g  = sum_j 2 e_{alpha_{2j-1+i_j}},  i_j = |f(j)-g(j)|.
Z4BasisWitness construct_via_z4_basis(const Coloring& c, const GroupRef& g, int n,
                                      const SearchLimits& limits = {});

/// All sums of 1..max_terms distinct doubled basis vectors of `g` (the
/// domain the induced basis-sum coloring queries).
std::vector<Element> doubled_basis_sums(const GroupRef& g, int max_terms);

} // namespace sumset

#endif
