#ifndef SUMSET_COLORING_HPP
#define SUMSET_COLORING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumset/enumerate.hpp"
#include "sumset/group.hpp"

namespace sumset {

/// An opaque comparable color. Either a small integer, a finite sequence of
/// nonzero circle-group values (the support coloring's colors), or a tuple
/// of colors (induced tuple colorings). Equality is structural and exact,
/// tag included, so colors of different kinds never compare equal.
class Color {
public:
    Color() : v_(0ll) {}

    static Color small(long long i) { return Color(V(i)); }
    static Color seq(std::vector<CircleValue> vals) { return Color(V(std::move(vals))); }
    static Color tuple(std::vector<Color> parts) { return Color(V(std::move(parts))); }

    bool is_small() const { return v_.index() == 0; }
    long long small_value() const { return std::get<0>(v_); }
    const std::vector<CircleValue>& seq_values() const { return std::get<1>(v_); }
    bool is_tuple() const { return v_.index() == 2; }
    const std::vector<Color>& tuple_parts() const { return std::get<2>(v_); }

    std::string str() const;

    bool operator==(const Color& o) const { return v_ == o.v_; }
    bool operator!=(const Color& o) const { return !(v_ == o.v_); }
    bool operator<(const Color& o) const { return v_ < o.v_; }

private:
    using V = std::variant<long long, std::vector<CircleValue>, std::vector<Color>>;
    explicit Color(V v) : v_(std::move(v)) {}
    V v_;
};

/// A total coloring rule on group elements. Construction fixes the rule:
///
///   support    - color of g is the sequence of its nonzero canonical
///                circle-group coordinates, in increasing index order
///   finite2g   - the doubling image {h_0,...,h_{k-1}} of a fragment gets
///                colors 0..k-1; everything else gets color k
///   injective  - each element of a finite domain gets its own color
///   table      - explicit element -> color map
///   random     - seeded pseudo-random color in {0..colors-1}; total, and
///                stable across runs and platforms
class Coloring {
public:
    enum class Rule { Support, Finite2G, Injective, Table, Random };

    static Coloring support(GroupRef g);
    static Coloring finite_2g(GroupRef g, long long bound,
                              std::uint64_t cap = kDefaultFragmentCap);
    static Coloring injective(GroupRef g, long long bound,
                              std::uint64_t cap = kDefaultFragmentCap);
    static Coloring injective_over(GroupRef g, std::vector<Element> domain);
    static Coloring table(GroupRef g, std::map<Element, Color> entries);
    static Coloring random_rule(GroupRef g, long long colors, std::uint64_t seed);

    /// Color of g. Throws DomainError when g is outside the declared domain
    /// (injective and table rules only; the other rules are total).
    Color at(const Element& g) const;

    /// Color of g, or nullopt when g is outside the domain.
    std::optional<Color> try_at(const Element& g) const;

    Rule rule() const { return rule_; }
    const GroupRef& group() const { return group_; }

    /// The finite2g rule's enumeration of the doubling image.
    const std::vector<Element>& two_g_list() const { return list_; }

    std::string save() const;
    static Coloring load(const std::string& text, GroupRef g, long long bound,
                         std::uint64_t cap = kDefaultFragmentCap);
    /// CLI-facing: `source` is a rule name ("support", "finite2g",
    /// "injective", "random:<colors>:<seed>") or a path to a coloring file.
    static Coloring from_source(const std::string& source, GroupRef g, long long bound,
                                std::uint64_t cap = kDefaultFragmentCap);

private:
    Coloring(Rule r, GroupRef g) : rule_(r), group_(std::move(g)) {}

    Rule rule_;
    GroupRef group_;
    long long bound_ = 0;
    std::vector<Element> list_;        // finite2g: 2G enumeration; injective: domain
    std::map<Element, Color> table_;
    long long colors_ = 0;             // random rule
    std::uint64_t seed_ = 0;           // random rule
};

/// A coloring of strictly increasing `arity`-tuples of indices drawn from
/// {0, ..., domain_size-1}. Evaluations are cached.
class TupleColoring {
public:
    using Tuple = std::vector<int>;

    TupleColoring(int arity, int domain_size, std::function<Color(const Tuple&)> fn);

    Color at(const Tuple& increasing) const;
    int arity() const { return arity_; }
    int domain_size() const { return domain_size_; }

private:
    int arity_;
    int domain_size_;
    std::function<Color(const Tuple&)> fn_;
    mutable std::map<Tuple, Color> cache_;
};

/// d(a_1,...,a_n) = base(2 e_{a_1} + ... + 2 e_{a_n}) over the factors of
/// `g` (the doubled-basis-sum coloring used by the Z/4 direct-sum
/// construction). Throws DomainError through `base` when a sum is outside
/// the base coloring's domain.
TupleColoring induced_basis_sum_coloring(const Coloring& base, GroupRef g, int arity);

/// The coefficient patterns (4,...,4, 2,...,2) with r-i fours and 2i twos,
/// for i = 0..r.
std::vector<std::vector<long long>> block_patterns(int r);

/// d(n_1,...,n_2r) = tuple of base colors of the r+1 block-pattern
/// evaluations against (terms[n_1], ..., terms[n_2r]).
TupleColoring induced_pattern_coloring(const Coloring& base, const std::vector<Element>& terms,
                                       int r);

} // namespace sumset

#endif
