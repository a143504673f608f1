#ifndef SUMSET_GROUP_HPP
#define SUMSET_GROUP_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumset/circle_value.hpp"

namespace sumset {

/// One direct summand: Z/modulus for modulus >= 2, or a copy of Z when
/// modulus == 0.
struct Factor {
    long long modulus = 0;
    bool infinite() const { return modulus == 0; }
    bool operator==(const Factor&) const = default;
};

/// A finitely generated Abelian group presented as an ordered list of
/// cyclic factors. Text grammar (one line): factors separated by spaces,
/// each "Z" or "Z/<m>" with m >= 2, e.g. "Z/4 Z/4 Z".
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    static GroupSpec parse(const std::string& text);
    static GroupSpec cyclic_power(long long modulus, int count);

    const std::vector<Factor>& factors() const { return factors_; }
    int size() const { return static_cast<int>(factors_.size()); }
    bool all_torsion() const;
    bool has_infinite_factor() const;

    std::string str() const;
    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<Factor> factors_;
};

using GroupRef = std::shared_ptr<const GroupSpec>;

inline GroupRef make_group(GroupSpec spec) {
    return std::make_shared<const GroupSpec>(std::move(spec));
}
inline GroupRef parse_group(const std::string& text) {
    return make_group(GroupSpec::parse(text));
}

class Element;

/// Truncated linear combination: sum of coeffs[i] * terms[i] over
/// i < min(#coeffs, #terms). Empty inputs give the zero element of `g`.
Element pattern_apply(const std::vector<long long>& coeffs, const std::vector<Element>& terms,
                      const GroupRef& g);

/// A finitely supported element of a group: sparse list of
/// (factor index, raw coordinate) pairs, sorted by index.
///
/// Stored coordinates are always canonical and nonzero: 0 < r < m for a
/// cyclic factor, k != 0 for a copy of Z, so the key set is exactly the
/// support. Comparison is lexicographic on the (index, coordinate) pairs;
/// every enumeration in the library is sorted by this order.
class Element {
public:
    using Coords = std::vector<std::pair<int, long long>>;

    Element() = default;

    static Element zero(GroupRef g);
    static Element unit(GroupRef g, int index);                       // e_index
    static Element make(GroupRef g, const std::vector<long long>& dense);
    static Element make_sparse(GroupRef g, Coords coords);            // reduces
    static Element parse(GroupRef g, const std::string& text);        // "1,0,1"

    Element operator+(const Element& o) const;
    Element operator-() const;
    Element times(long long k) const;
    Element doubled() const { return times(2); }

    bool is_zero() const { return coords_.empty(); }
    long long coord(int index) const;
    std::vector<int> support() const;

    /// Least k >= 1 with k*g = 0; nullopt when the element has infinite
    /// order (some coordinate sits in a Z factor).
    std::optional<mpz_class> order() const;
    bool has_order_dividing(long long k) const { return times(k).is_zero(); }

    /// Canonical coordinates in Q[sqrt(2)]/Z, support order preserved:
    /// Z/m residue r maps to (r/m, 0) and Z integer k maps to (0, k).
    std::vector<std::pair<int, CircleValue>> canonical_values() const;

    const Coords& coords() const { return coords_; }
    const GroupRef& group() const { return group_; }

    std::string str() const; // dense, e.g. "1,0,1"

    bool operator==(const Element& o) const { return coords_ == o.coords_; }
    bool operator<(const Element& o) const { return coords_ < o.coords_; }

private:
    GroupRef group_;
    Coords coords_;

    void check_compatible(const Element& o) const;
};

} // namespace sumset

#endif
