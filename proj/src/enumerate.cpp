#include "sumset/enumerate.hpp"

#include <algorithm>
#include <map>

#include "sumset/errors.hpp"

namespace sumset {

std::vector<Element> enumerate_fragment(const GroupRef& g, long long bound, std::uint64_t cap) {
    if (bound < 0) throw Error("fragment bound must be >= 0");
    mpz_class total = 1;
    for (const Factor& f : g->factors())
        total *= f.infinite() ? mpz_class(static_cast<long>(2 * bound + 1)) : mpz_class(static_cast<long>(f.modulus));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw ResourceError("fragment of " + g->str() + " has " + total.get_str() +
                            " elements, above the cap of " + std::to_string(cap));

    std::vector<Element> out;
    out.reserve(total.get_ui());
    std::vector<long long> coords(static_cast<size_t>(g->size()), 0);
    // start every coordinate at its least value
    for (int i = 0; i < g->size(); ++i)
        if (g->factors()[i].infinite()) coords[static_cast<size_t>(i)] = -bound;
    while (true) {
        out.push_back(Element::make(g, coords));
        int i = g->size() - 1;
        for (; i >= 0; --i) {
            const Factor& f = g->factors()[static_cast<size_t>(i)];
            long long hi = f.infinite() ? bound : f.modulus - 1;
            if (coords[static_cast<size_t>(i)] < hi) {
                ++coords[static_cast<size_t>(i)];
                break;
            }
            coords[static_cast<size_t>(i)] = f.infinite() ? -bound : 0;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> two_torsion(const GroupRef& g, long long bound, std::uint64_t cap) {
    std::vector<Element> out;
    for (const Element& e : enumerate_fragment(g, bound, cap))
        if (e.doubled().is_zero()) out.push_back(e);
    return out;
}

std::vector<Element> double_image(const GroupRef& g, long long bound, std::uint64_t cap) {
    std::vector<Element> out;
    for (const Element& e : enumerate_fragment(g, bound, cap)) out.push_back(e.doubled());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Element> quadruple_kernel(const GroupRef& g, long long bound, std::uint64_t cap) {
    std::vector<Element> out;
    for (const Element& e : enumerate_fragment(g, bound, cap))
        if (e.times(4).is_zero()) out.push_back(e);
    return out;
}

std::vector<Element> solve_double(const Element& c, const std::vector<Element>& domain) {
    std::vector<Element> out;
    for (const Element& x : domain)
        if (x.doubled() == c) out.push_back(x);
    return out;
}

std::vector<Element> solve_quadruple(const Element& d, const std::vector<Element>& domain) {
    std::vector<Element> out;
    for (const Element& y : domain)
        if (y.times(4) == d) out.push_back(y);
    return out;
}

std::vector<Element> sumset_of(const std::vector<Element>& xs) {
    std::vector<Element> out;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i; j < xs.size(); ++j) out.push_back(xs[i] + xs[j]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(n, n, cur, out);
    return out;
}

} // namespace

std::vector<GroupSpec> all_abelian_specs(long long max_order) {
    std::vector<GroupSpec> out;
    for (long long n = 1; n <= max_order; ++n) {
        // factor n
        std::vector<std::pair<long long, int>> primes;
        long long m = n;
        for (long long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) m /= p, ++e;
                primes.emplace_back(p, e);
            }
        if (m > 1) primes.emplace_back(m, 1);

        std::vector<std::vector<Factor>> combos{{}};
        for (const auto& [p, e] : primes) {
            std::vector<std::vector<Factor>> next;
            for (const auto& lambda : partitions(e))
                for (const auto& base : combos) {
                    std::vector<Factor> fs = base;
                    for (int part : lambda) {
                        long long q = 1;
                        for (int i = 0; i < part; ++i) q *= p;
                        fs.push_back(Factor{q});
                    }
                    next.push_back(std::move(fs));
                }
            combos = std::move(next);
        }
        for (auto& fs : combos) out.emplace_back(std::move(fs));
    }
    return out;
}

} // namespace sumset
