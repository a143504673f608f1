#include "sumset/construct.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "sumset/enumerate.hpp"
#include "sumset/errors.hpp"

namespace sumset {

namespace {

constexpr long long kCoeffs[3] = {1, 2, 4};

// closure of `base` together with `extra` under the group operation
std::set<Element> extend_subgroup(const std::set<Element>& base, const Element& extra) {
    std::set<Element> out = base;
    std::vector<Element> frontier;
    if (out.insert(extra).second) frontier.push_back(extra);
    while (!frontier.empty()) {
        Element e = frontier.back();
        frontier.pop_back();
        std::vector<Element> next;
        for (const Element& h : out) next.push_back(e + h);
        next.push_back(-e);
        for (const Element& h : next)
            if (out.insert(h).second) frontier.push_back(h);
    }
    return out;
}

Element first_infinite_order_generator(const GroupRef& g) {
    for (int i = 0; i < g->size(); ++i)
        if (g->factors()[static_cast<size_t>(i)].infinite()) return Element::unit(g, i);
    throw Error("no infinite-order generator");
}

} // namespace

Independent124Sequence build_independent_124(const GroupRef& g, long long bound, int length,
                                             std::uint64_t cap) {
    if (length < 1) throw Error("sequence length must be >= 1");
    Independent124Sequence seq;

    if (g->has_infinite_factor()) {
        Element a = first_infinite_order_generator(g);
        if (static_cast<long long>(length) > bound)
            throw ConstructionError("independent-sequence",
                                    "multiples of the generator leave the fragment after " +
                                        std::to_string(bound) + " terms",
                                    static_cast<int>(std::max<long long>(bound, 0)));
        seq.log.push_back("infinite-order generator " + a.str() + "; terms are its multiples");
        for (int k = 1; k <= length; ++k) seq.terms.push_back(a.times(k));
        return seq;
    }

    std::vector<Element> frag = enumerate_fragment(g, bound, cap);

    // depth-first over candidate picks, greedy-first in fragment order
    std::vector<std::set<Element>> subgroups{{Element::zero(g)}};
    std::vector<size_t> pick_from{0};
    int deepest = 0;
    while (true) {
        int depth = static_cast<int>(seq.terms.size());
        if (depth == length) return seq;
        const std::set<Element>& H = subgroups.back();
        bool picked = false;
        for (size_t k = pick_from.back(); k < frag.size(); ++k) {
            const Element& cand = frag[k];
            bool ok;
            if (depth == 0) {
                // first term needs order outside {1,2,4}
                ok = !cand.is_zero() && !cand.doubled().is_zero() && !cand.times(4).is_zero();
            } else {
                ok = !H.count(cand) && !H.count(cand.doubled()) && !H.count(cand.times(4));
            }
            if (!ok) {
                if (seq.log.size() < 200)
                    seq.log.push_back("level " + std::to_string(depth) + ": reject " + cand.str());
                continue;
            }
            seq.terms.push_back(cand);
            seq.log.push_back("level " + std::to_string(depth) + ": pick " + cand.str());
            subgroups.push_back(extend_subgroup(H, cand));
            pick_from.back() = k + 1;
            pick_from.push_back(0);
            picked = true;
            break;
        }
        if (picked) {
            deepest = std::max(deepest, static_cast<int>(seq.terms.size()));
            continue;
        }
        // dead end: backtrack
        if (seq.terms.empty())
            throw ConstructionError("independent-sequence",
                                    "fragment exhausted; reached length " + std::to_string(deepest),
                                    deepest);
        seq.log.push_back("level " + std::to_string(seq.terms.size() - 1) + ": backtrack from " +
                          seq.terms.back().str());
        seq.terms.pop_back();
        subgroups.pop_back();
        pick_from.pop_back();
    }
}

IndependenceReport verify_independence_124(const std::vector<Element>& terms, int prefix_len) {
    if (prefix_len > 6) throw Error("independence check is exhaustive only up to prefix 6");
    if (prefix_len > static_cast<int>(terms.size()))
        throw Error("prefix longer than the sequence");
    IndependenceReport rep;
    if (prefix_len == 0) return rep;
    const GroupRef& g = terms.front().group();
    const int p = prefix_len;

    // all index subsets of {0..p-1} as sorted vectors
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < p; ++i)
            if (mask & (1u << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }

    auto combo_value = [&](const std::vector<int>& idx, const std::vector<int>& coeff_codes) {
        Element v = Element::zero(g);
        for (size_t i = 0; i < idx.size(); ++i)
            v = v + terms[static_cast<size_t>(idx[i])].times(kCoeffs[coeff_codes[i]]);
        return v;
    };

    auto coeff_str = [&](const std::vector<int>& codes) {
        std::string s = "(";
        for (size_t i = 0; i < codes.size(); ++i)
            s += (i ? "," : "") + std::to_string(kCoeffs[codes[i]]);
        return s + ")";
    };
    auto idx_str = [](const std::vector<int>& idx) {
        std::string s = "{";
        for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
        return s + "}";
    };

    // (a) nonvanishing, and collect values keyed by (size, coeff vector)
    std::map<std::pair<size_t, std::vector<int>>, std::vector<std::pair<std::vector<int>, Element>>>
        by_coeff;
    for (const auto& idx : subsets) {
        std::vector<int> codes(idx.size(), 0);
        while (true) {
            Element v = combo_value(idx, codes);
            if (v.is_zero())
                rep.violations.push_back("combination " + coeff_str(codes) + " over " +
                                         idx_str(idx) + " vanishes");
            by_coeff[{idx.size(), codes}].emplace_back(idx, v);
            int i = static_cast<int>(codes.size()) - 1;
            while (i >= 0 && codes[static_cast<size_t>(i)] == 2) codes[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++codes[static_cast<size_t>(i)];
        }
    }

    // (b) equal coefficient vectors on order-separated index blocks
    for (const auto& [key, entries] : by_coeff) {
        for (size_t a = 0; a < entries.size(); ++a)
            for (size_t b = 0; b < entries.size(); ++b) {
                if (a == b) continue;
                const auto& [ka, va] = entries[a];
                const auto& [kb, vb] = entries[b];
                if (ka.back() >= kb.front()) continue; // not separated
                if (va == vb)
                    rep.violations.push_back("pattern " + coeff_str(key.second) + " collides on " +
                                             idx_str(ka) + " and " + idx_str(kb));
            }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

Order2Basis build_order2_basis(const GroupRef& g, long long bound, int length, std::uint64_t cap) {
    if (length < 1) throw Error("sequence length must be >= 1");
    Order2Basis basis;
    std::set<Element> span{Element::zero(g)};
    for (const Element& z : enumerate_fragment(g, bound, cap)) {
        Element d = z.doubled();
        if (d.is_zero() || !d.doubled().is_zero()) continue; // need order exactly 2
        if (span.count(d)) {
            if (basis.log.size() < 200)
                basis.log.push_back("reject " + z.str() + ": double already generated");
            continue;
        }
        basis.roots.push_back(z);
        basis.doubles.push_back(d);
        basis.log.push_back("pick z=" + z.str() + " with 2z=" + d.str());
        span = extend_subgroup(span, d);
        if (static_cast<int>(basis.roots.size()) == length) return basis;
    }
    throw ConstructionError("order2-basis",
                            "order-2 supply exhausted; reached length " +
                                std::to_string(basis.roots.size()),
                            static_cast<int>(basis.roots.size()));
}

bool verify_epsilon_delta(const std::vector<Element>& roots, int n) {
    if (n > 3) throw Error("epsilon/delta check is exhaustive only up to n = 3");
    if (n == 0) return true; // vacuously
    const int L = static_cast<int>(roots.size());
    if (2 * n > L) throw Error("need 2n distinct roots");
    const GroupRef& g = roots.front().group();
    constexpr long long eps[2] = {3, 1};
    constexpr long long del[2] = {0, 2};

    auto value = [&](const std::vector<int>& iv, const std::vector<int>& jv, unsigned f) {
        Element v = Element::zero(g);
        for (int k = 0; k < n; ++k) {
            int b = (f >> k) & 1;
            v = v + roots[static_cast<size_t>(iv[static_cast<size_t>(k)])].times(eps[b]) +
                roots[static_cast<size_t>(jv[static_cast<size_t>(k)])].times(del[b]);
        }
        return v;
    };

    // all ordered selections of 2n distinct indices
    std::vector<int> sel;
    std::vector<bool> used(static_cast<size_t>(L), false);
    bool ok = true;
    std::function<void()> rec = [&]() {
        if (!ok) return;
        if (static_cast<int>(sel.size()) == 2 * n) {
            std::vector<int> iv(sel.begin(), sel.begin() + n);
            std::vector<int> jv(sel.begin() + n, sel.end());
            std::vector<Element> vals;
            for (unsigned f = 0; f < (1u << n); ++f) vals.push_back(value(iv, jv, f));
            for (unsigned f = 0; f + 1 < (1u << n) && ok; ++f)
                for (unsigned h = f + 1; h < (1u << n); ++h)
                    if (vals[f] == vals[h]) {
                        ok = false;
                        break;
                    }
            return;
        }
        for (int i = 0; i < L && ok; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            used[static_cast<size_t>(i)] = true;
            sel.push_back(i);
            rec();
            sel.pop_back();
            used[static_cast<size_t>(i)] = false;
        }
    };
    rec();
    return ok;
}

RamseyResult ramsey_monochromatic_subset(
    const TupleColoring& d, int target, const SearchLimits& limits,
    const std::function<bool(const std::vector<int>&)>& accept) {
    if (target < d.arity()) throw Error("target below the coloring's arity");
    RamseyResult res;
    const int D = d.domain_size();
    const int k = d.arity();
    if (target > D) {
        res.status = RamseyResult::Status::Exhausted;
        return res;
    }

    std::uint64_t nodes = 0;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(limits.time_cap_seconds));
    bool capped = false;
    auto tick = [&]() {
        if (++nodes > limits.node_cap) return !(capped = true);
        if ((nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline)
            return !(capped = true);
        return true;
    };

    std::vector<int> ys;
    std::vector<int> found_subset;
    std::optional<Color> common;
    bool found = false;

    // all new arity-tuples (containing the freshly added index) must match
    std::function<bool(int)> consistent = [&](int fresh) {
        const int m = static_cast<int>(ys.size());
        if (m < k) return true;
        std::vector<int> pickable(ys.begin(), ys.end() - 1); // older members
        std::vector<int> combo(static_cast<size_t>(k - 1));
        std::function<bool(int, int)> rec = [&](int from, int depth) {
            if (depth == k - 1) {
                std::vector<int> tuple(combo.begin(), combo.end());
                tuple.push_back(fresh);
                Color col = d.at(tuple);
                if (!common) {
                    common = col;
                    return true;
                }
                return col == *common;
            }
            for (int i = from; i <= static_cast<int>(pickable.size()) - (k - 1 - depth); ++i) {
                combo[static_cast<size_t>(depth)] = pickable[static_cast<size_t>(i)];
                if (!rec(i + 1, depth + 1)) return false;
            }
            return true;
        };
        return rec(0, 0);
    };

    std::function<void(int)> dfs = [&](int from) {
        if (found || capped) return;
        if (static_cast<int>(ys.size()) == target) {
            if (!accept || accept(ys)) {
                found = true;
                found_subset = ys;
            }
            return;
        }
        for (int v = from; v < D; ++v) {
            if (found || capped) return;
            if (D - v < target - static_cast<int>(ys.size())) break;
            if (!tick()) return;
            ys.push_back(v);
            std::optional<Color> saved = common;
            if (consistent(v)) dfs(v + 1);
            common = saved;
            ys.pop_back();
        }
    };
    dfs(0);

    res.nodes = nodes;
    if (found) {
        res.status = RamseyResult::Status::Found;
        res.subset = std::move(found_subset);
    } else {
        res.status = capped ? RamseyResult::Status::Capped : RamseyResult::Status::Exhausted;
    }
    return res;
}

namespace {

void throw_ramsey_failure(const RamseyResult& r, const std::string& what) {
    if (r.status == RamseyResult::Status::Capped)
        throw ResourceError("monochromatic-subset stage capped while " + what + " (" +
                            std::to_string(r.nodes) + " nodes)");
    throw ConstructionError("ramsey", "no monochromatic index set while " + what +
                                          " (exhaustive, " + std::to_string(r.nodes) + " nodes)");
}

} // namespace

PatternWitness construct_via_patterns(const Coloring& c, int r, int n,
                                      const Independent124Sequence& seq,
                                      const SearchLimits& limits) {
    if (r < 1 || n < 1) throw Error("need r >= 1 and n >= 1");
    if (2 * r + (n - 1) > static_cast<int>(seq.terms.size()))
        throw Error("sequence too short: need at least " + std::to_string(2 * r + (n - 1)) +
                    " terms");
    TupleColoring d = induced_pattern_coloring(c, seq.terms, r);
    PatternWitness out;

    auto tuple_color_parts = [&](const std::vector<int>& ys) {
        std::vector<int> first(ys.begin(), ys.begin() + 2 * r);
        return d.at(first).tuple_parts(); // r+1 base colors, one per pattern
    };

    auto matched_pair = [&](const std::vector<Color>& parts) {
        // smallest gap first, then smallest i
        for (int gap = 1; gap <= r; ++gap)
            for (int i = 0; i + gap <= r; ++i)
                if (parts[static_cast<size_t>(i)] == parts[static_cast<size_t>(i + gap)])
                    return std::pair<int, int>{i, i + gap};
        return std::pair<int, int>{-1, -1};
    };

    RamseyResult last;
    for (int gap = r; gap >= 1; --gap) {
        int target = 2 * r + (n - 1) * gap;
        if (target > static_cast<int>(seq.terms.size())) continue;
        auto accept = [&](const std::vector<int>& ys) {
            auto [i, j] = matched_pair(tuple_color_parts(ys));
            if (i < 0) return false;
            return 2 * r + (n - 1) * (j - i) <= static_cast<int>(ys.size());
        };
        last = ramsey_monochromatic_subset(d, target, limits, accept);
        if (last.status == RamseyResult::Status::Capped) throw_ramsey_failure(last, "matching patterns");
        if (last.status != RamseyResult::Status::Found) continue;

        const std::vector<int>& ys = last.subset;
        auto parts = tuple_color_parts(ys);
        auto [i, j] = matched_pair(parts);
        out.i = i;
        out.j = j;
        out.homogeneous = ys;
        out.log.push_back("monochromatic index set of size " + std::to_string(ys.size()));
        out.log.push_back("patterns " + std::to_string(i) + " and " + std::to_string(j) +
                          " share a color");

        // block layout inside the homogeneous set: a's, then the n b-blocks,
        // then the c's; the remaining r-i indices only pad the evaluations
        const int a_count = r - j, b_each = j - i, c_count = 2 * i;
        size_t pos = 0;
        std::vector<int> a_idx(ys.begin(), ys.begin() + a_count);
        pos += static_cast<size_t>(a_count);
        std::vector<std::vector<int>> b_blocks;
        for (int k = 0; k < n; ++k) {
            b_blocks.emplace_back(ys.begin() + static_cast<long>(pos),
                                  ys.begin() + static_cast<long>(pos) + b_each);
            pos += static_cast<size_t>(b_each);
        }
        std::vector<int> c_idx(ys.begin() + static_cast<long>(pos),
                               ys.begin() + static_cast<long>(pos) + c_count);

        const GroupRef& g = seq.terms.front().group();
        std::vector<Element> xs;
        for (int k = 0; k < n; ++k) {
            Element x = Element::zero(g);
            for (int ai : a_idx) x = x + seq.terms[static_cast<size_t>(ai)].doubled();
            for (int bi : b_blocks[static_cast<size_t>(k)])
                x = x + seq.terms[static_cast<size_t>(bi)].doubled();
            for (int ci : c_idx) x = x + seq.terms[static_cast<size_t>(ci)];
            out.log.push_back("x_" + std::to_string(k + 1) + " = " + x.str());
            xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());
        if (std::unique(xs.begin(), xs.end()) != xs.end())
            throw ConstructionError("assembly", "assembled elements are not pairwise distinct");
        auto [mono, color] = verify_witness(xs, c);
        if (!mono) throw ConstructionError("assembly", "assembled sumset is not monochromatic");
        out.witness = Witness{std::move(xs), *color};
        return out;
    }
    throw_ramsey_failure(last, "matching patterns");
    return out; // unreachable
}

Order2Witness construct_via_order2(const Coloring& c, int n, const Order2Basis& basis,
                                   const SearchLimits& limits) {
    if (n < 1) throw Error("need n >= 1");
    const int L = static_cast<int>(basis.roots.size());
    if (L < 2 * n) throw Error("basis too short: need 2n roots");
    const GroupRef& g = basis.roots.front().group();

    TupleColoring d(n, L, [&, g](const TupleColoring::Tuple& t) {
        Element sum = Element::zero(g);
        for (int idx : t) sum = sum + basis.doubles[static_cast<size_t>(idx)];
        return c.at(sum);
    });

    RamseyResult rr = ramsey_monochromatic_subset(d, 2 * n, limits);
    if (rr.status != RamseyResult::Status::Found)
        throw_ramsey_failure(rr, "coloring sums of doubled roots");

    Order2Witness out;
    out.i_block.assign(rr.subset.begin(), rr.subset.begin() + n);
    out.j_block.assign(rr.subset.begin() + n, rr.subset.end());
    out.log.push_back("monochromatic index set of size " + std::to_string(rr.subset.size()));

    constexpr long long eps[2] = {3, 1};
    constexpr long long del[2] = {0, 2};
    std::vector<Element> xs;
    for (unsigned f = 0; f < (1u << n); ++f) {
        Element x = Element::zero(g);
        std::vector<int> fmap;
        for (int k = 0; k < n; ++k) {
            int b = (f >> k) & 1;
            fmap.push_back(b);
            x = x + basis.roots[static_cast<size_t>(out.i_block[static_cast<size_t>(k)])].times(eps[b]) +
                basis.roots[static_cast<size_t>(out.j_block[static_cast<size_t>(k)])].times(del[b]);
        }
        out.assignments.emplace_back(fmap, x);
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    if (std::unique(xs.begin(), xs.end()) != xs.end())
        throw ConstructionError("assembly", "sign maps did not give distinct elements");
    auto [mono, color] = verify_witness(xs, c);
    if (!mono) throw ConstructionError("assembly", "assembled sumset is not monochromatic");
    out.witness = Witness{std::move(xs), *color};
    return out;
}

Z4BasisWitness construct_via_z4_basis(const Coloring& c, const GroupRef& g, int n,
                                      const SearchLimits& limits) {
    if (n < 1) throw Error("need n >= 1");
    for (const Factor& f : g->factors())
        if (f.modulus != 4) throw Error("this construction needs a direct sum of Z/4 factors");
    if (g->size() < 2 * n)
        throw Error("need at least 2n = " + std::to_string(2 * n) + " factors");

    TupleColoring d = induced_basis_sum_coloring(c, g, n);
    RamseyResult rr = ramsey_monochromatic_subset(d, 2 * n, limits);
    if (rr.status != RamseyResult::Status::Found)
        throw_ramsey_failure(rr, "coloring doubled basis sums");

    Z4BasisWitness out;
    out.alphas = rr.subset;
    out.log.push_back("monochromatic index set of size " + std::to_string(rr.subset.size()));

    constexpr long long eps[2] = {1, 3};
    constexpr long long del[2] = {2, 0};
    std::vector<Element> basis;
    for (int a : out.alphas) basis.push_back(Element::unit(g, a));

    std::vector<Element> xs;
    for (unsigned f = 0; f < (1u << n); ++f) {
        std::vector<long long> pattern;
        std::vector<int> fmap;
        for (int k = 0; k < n; ++k) {
            int b = (f >> k) & 1;
            fmap.push_back(b);
            pattern.push_back(eps[b]);
            pattern.push_back(del[b]);
        }
        Element x = pattern_apply(pattern, basis, g);
        out.assignments.emplace_back(fmap, x);
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    if (std::unique(xs.begin(), xs.end()) != xs.end())
        throw ConstructionError("assembly", "sign maps did not give distinct elements");
    auto [mono, color] = verify_witness(xs, c);
    if (!mono) throw ConstructionError("assembly", "assembled sumset is not monochromatic");
    out.witness = Witness{std::move(xs), *color};
    return out;
}

std::vector<Element> doubled_basis_sums(const GroupRef& g, int max_terms) {
    std::vector<Element> out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
        if (!chosen.empty()) {
            Element sum = Element::zero(g);
            for (int i : chosen) sum = sum + Element::unit(g, i).doubled();
            out.push_back(sum);
        }
        if (static_cast<int>(chosen.size()) == max_terms) return;
        for (int i = from; i < g->size(); ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sumset
