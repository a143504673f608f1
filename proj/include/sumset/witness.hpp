#ifndef SUMSET_WITNESS_HPP
#define SUMSET_WITNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumset/coloring.hpp"
#include "sumset/group.hpp"

namespace sumset {

/// A set X with X+X contained in a single color class, plus that color.
struct Witness {
    std::vector<Element> elements; // sorted, pairwise distinct
    Color color;
};

enum class Outcome { Found, NoneInDomain, Capped };

struct SearchLimits {
    std::uint64_t node_cap = 10'000'000;
    double time_cap_seconds = 60.0;
    int threads = 1;
    std::uint64_t fragment_cap = kDefaultFragmentCap;
};

struct SearchResult {
    Outcome outcome = Outcome::NoneInDomain;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;
};

/// True plus the common color iff every element of X+X gets the same color.
/// Throws DomainError when a sum is outside the coloring's domain and Error
/// when X is empty.
std::pair<bool, std::optional<Color>> verify_witness(const std::vector<Element>& xs,
                                                     const Coloring& c);

/// Search `domain` for an n-element X whose sumset is colored and
/// monochromatic. Candidates are partitioned by the color of 2x (every
/// member of a witness shares it), then a backtracking pass inside each
/// class prunes on pair-sum colors. Sums that fall outside the coloring's
/// domain disqualify a candidate set; they are never an error here.
///
/// Found results carry the lexicographically least witness in element
/// order. NoneInDomain is exhaustive for the given domain. The result,
/// including the node count, does not depend on `limits.threads`.
SearchResult find_witness(const std::vector<Element>& domain, const Coloring& c, int n,
                          const SearchLimits& limits = {});

struct FragmentJob {
    std::string label;
    GroupRef spec;
    long long bound = 0;
};

struct Certificate {
    std::string label;
    int n = 0;
    std::uint64_t domain_size = 0;
    SearchResult result;
};

/// Run find_witness over an increasing sweep of fragments, rebuilding the
/// coloring rule for each one. The sweep stops at the first fragment whose
/// outcome is not NoneInDomain, so nothing is claimed past a failure.
std::vector<Certificate> certify_sweep(const std::vector<FragmentJob>& jobs,
                                       const std::string& coloring_source, int n,
                                       const SearchLimits& limits = {});

/// A family of increasing finite fragments indexed by a size parameter.
struct FragmentFamily {
    std::string name;
    int start = 0;
    std::function<std::vector<Element>(int)> fragment;
    std::function<std::string(int)> label;
    std::string divergence_note; // shown when no answer exists up to the sweep max
};

FragmentFamily nat_family(bool exclude_zero = false); // {0..M} of Z (or {1..M})
FragmentFamily z4sum_family();                        // (Z/4)^K
FragmentFamily z2sum_family();                        // (Z/2)^K

struct MinimalResult {
    enum class Status { Determined, ExhaustedMax, Capped };
    Status status = Status::ExhaustedMax;
    int M = -1;            // least size parameter forcing a witness, when Determined
    std::uint64_t nodes = 0;
    int avoiding_M = -1;   // size parameter of the avoiding coloring below
    std::vector<Element> avoiding_fragment;
    std::vector<int> avoiding_colors; // per avoiding_fragment position
    std::string note;
};

/// Least M such that every r-coloring of the family's fragment at M admits
/// an n-element witness with its whole sumset inside the fragment. The
/// search over colorings backtracks in fragment order with the first
/// element's color fixed to 0 (color relabeling symmetry); the avoiding
/// coloring found at M-1 is returned as the counterexample certificate.
MinimalResult minimal_fragment_number(const FragmentFamily& family, int r, int n, int max_m,
                                      const SearchLimits& limits = {});

} // namespace sumset

#endif
