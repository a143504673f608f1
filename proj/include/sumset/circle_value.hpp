#ifndef SUMSET_CIRCLE_VALUE_HPP
#define SUMSET_CIRCLE_VALUE_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace sumset {

/// Exact element of the group Q[sqrt(2)]/Z: frac + root2 * sqrt(2) (mod Z).
///
/// Every cyclic factor Z/m embeds via r -> r/m and every copy of Z embeds
/// via k -> k*sqrt(2); since sqrt(2) is irrational, two values are equal
/// exactly when both components agree, so comparisons stay rational.
struct CircleValue {
    mpq_class frac;  // fractional part, always reduced and in [0, 1)
    mpq_class root2; // coefficient of sqrt(2)

    CircleValue() : frac(0), root2(0) {}
    CircleValue(mpq_class f, mpq_class r);

    static CircleValue from_cyclic(long long residue, long long modulus);
    static CircleValue from_integer(long long k);

    CircleValue operator+(const CircleValue& o) const;
    CircleValue operator-() const;
    CircleValue times(long long k) const;

    bool is_zero() const { return frac == 0 && root2 == 0; }

    /// Least k >= 1 with k*v = 0, or nullopt when no such k exists
    /// (i.e. the sqrt(2) component is nonzero).
    std::optional<mpz_class> order() const;

    std::string str() const; // "(1/2,0)", "(0,2)", ...

    bool operator==(const CircleValue& o) const { return frac == o.frac && root2 == o.root2; }
    bool operator<(const CircleValue& o) const {
        if (frac != o.frac) return frac < o.frac;
        return root2 < o.root2;
    }
};

/// q reduced into [0, 1).
mpq_class mod_one(const mpq_class& q);

} // namespace sumset

#endif
