#ifndef SUMSET_TEST_HELPERS_HPP
#define SUMSET_TEST_HELPERS_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "sumset/coloring.hpp"
#include "sumset/enumerate.hpp"
#include "sumset/group.hpp"
#include "sumset/witness.hpp"

namespace sumset::test {

/// Unpruned reference search: walk every n-subset of the (sorted) domain in
/// lexicographic order and return the first whose sumset is colored and
/// monochromatic. Independent of the engine's class partition / pruning.
inline std::optional<Witness> naive_find_witness(std::vector<Element> domain, const Coloring& c,
                                                 int n) {
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    std::vector<int> idx;
    std::optional<Witness> found;

    std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == n) {
            std::vector<Element> xs;
            for (int i : idx) xs.push_back(domain[static_cast<size_t>(i)]);
            std::optional<Color> common;
            for (size_t i = 0; i < xs.size(); ++i)
                for (size_t j = i; j < xs.size(); ++j) {
                    auto col = c.try_at(xs[i] + xs[j]);
                    if (!col) return false;
                    if (!common)
                        common = *col;
                    else if (*col != *common)
                        return false;
                }
            found = Witness{xs, *common};
            return true;
        }
        for (int i = from; i < static_cast<int>(domain.size()); ++i) {
            idx.push_back(i);
            if (rec(i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

/// Seeded random table coloring over the given domain.
inline Coloring random_table(const GroupRef& g, const std::vector<Element>& domain, int colors,
                             std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, colors - 1);
    std::map<Element, Color> entries;
    for (const Element& e : domain) entries[e] = Color::small(pick(rng));
    return Coloring::table(g, std::move(entries));
}

} // namespace sumset::test

#endif
