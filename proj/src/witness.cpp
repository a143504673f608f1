#include "sumset/witness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "sumset/errors.hpp"

namespace sumset {

std::pair<bool, std::optional<Color>> verify_witness(const std::vector<Element>& xs,
                                                     const Coloring& c) {
    if (xs.empty()) throw Error("verify_witness needs a nonempty set");
    std::vector<Element> sums = sumset_of(xs);
    Color common = c.at(sums.front());
    for (size_t i = 1; i < sums.size(); ++i)
        if (c.at(sums[i]) != common) return {false, std::nullopt};
    return {true, common};
}

namespace {

struct Budget {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> capped{false};
    std::uint64_t node_cap;
    std::chrono::steady_clock::time_point deadline;

    explicit Budget(const SearchLimits& lim)
        : node_cap(lim.node_cap),
          deadline(std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(lim.time_cap_seconds))) {}

    // returns false once the budget is exhausted
    bool tick() {
        std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > node_cap) {
            capped.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((n & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
            capped.store(true, std::memory_order_relaxed);
            return false;
        }
        return !capped.load(std::memory_order_relaxed);
    }
};

// Lexicographically least n-subset of `members` (indices into `domain`,
// increasing) whose pairwise sums all have color `target`.
std::optional<std::vector<int>> class_search(const std::vector<Element>& domain,
                                             const std::vector<int>& members, const Coloring& c,
                                             const Color& target, int n, Budget& budget,
                                             bool& aborted) {
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;

    std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == n) {
            found = chosen;
            return true;
        }
        for (size_t k = from; k < members.size(); ++k) {
            if (!budget.tick()) {
                aborted = true;
                return true;
            }
            // need enough members left
            if (members.size() - k < static_cast<size_t>(n) - chosen.size()) break;
            const Element& cand = domain[static_cast<size_t>(members[k])];
            bool ok = true;
            for (int ci : chosen) {
                auto col = c.try_at(domain[static_cast<size_t>(ci)] + cand);
                if (!col || *col != target) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(members[k]);
            if (dfs(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(0);
    if (aborted) return std::nullopt;
    return found;
}

} // namespace

SearchResult find_witness(const std::vector<Element>& domain, const Coloring& c, int n,
                          const SearchLimits& limits) {
    if (n < 1) throw Error("witness size must be >= 1");
    std::vector<Element> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // partition candidates by the color of 2x; uncolorable doubles drop out
    std::map<Color, std::vector<int>> classes;
    for (size_t i = 0; i < sorted.size(); ++i) {
        auto col = c.try_at(sorted[i].doubled());
        if (col) classes[*col].push_back(static_cast<int>(i));
    }

    struct ClassJob {
        const Color* color;
        const std::vector<int>* members;
        std::optional<std::vector<int>> found;
        bool aborted = false;
    };
    std::vector<ClassJob> jobs;
    jobs.reserve(classes.size());
    for (auto& [col, members] : classes)
        if (static_cast<int>(members.size()) >= n) jobs.push_back({&col, &members, {}, false});

    Budget budget(limits);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            jobs[j].found = class_search(sorted, *jobs[j].members, c, *jobs[j].color, n, budget,
                                         jobs[j].aborted);
        }
    };
    int threads = std::max(1, limits.threads);
    if (threads == 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        size_t count = std::min(static_cast<size_t>(threads), jobs.size());
        for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.nodes = budget.nodes.load();
    if (budget.capped.load()) {
        res.outcome = Outcome::Capped;
        return res;
    }
    std::optional<std::vector<int>> best;
    const Color* best_color = nullptr;
    for (const auto& job : jobs) {
        if (!job.found) continue;
        if (!best || *job.found < *best) {
            best = job.found;
            best_color = job.color;
        }
    }
    if (!best) {
        res.outcome = Outcome::NoneInDomain;
        return res;
    }
    Witness w;
    for (int i : *best) w.elements.push_back(sorted[static_cast<size_t>(i)]);
    w.color = *best_color;
    res.outcome = Outcome::Found;
    res.witness = std::move(w);
    return res;
}

std::vector<Certificate> certify_sweep(const std::vector<FragmentJob>& jobs,
                                       const std::string& coloring_source, int n,
                                       const SearchLimits& limits) {
    std::vector<Certificate> out;
    for (const FragmentJob& job : jobs) {
        std::vector<Element> frag = enumerate_fragment(job.spec, job.bound, limits.fragment_cap);
        Coloring c = Coloring::from_source(coloring_source, job.spec, job.bound, limits.fragment_cap);
        Certificate cert;
        cert.label = job.label;
        cert.n = n;
        cert.domain_size = frag.size();
        cert.result = find_witness(frag, c, n, limits);
        bool stop = cert.result.outcome != Outcome::NoneInDomain;
        out.push_back(std::move(cert));
        if (stop) break; // no claims for larger fragments
    }
    return out;
}

FragmentFamily nat_family(bool exclude_zero) {
    GroupRef z = parse_group("Z");
    FragmentFamily fam;
    fam.name = exclude_zero ? "nat1" : "nat";
    fam.start = exclude_zero ? 1 : 0;
    fam.fragment = [z, exclude_zero](int m) {
        std::vector<Element> out;
        for (long long v = exclude_zero ? 1 : 0; v <= m; ++v)
            out.push_back(Element::make(z, {v}));
        return out;
    };
    fam.label = [exclude_zero](int m) {
        return std::string("{") + (exclude_zero ? "1" : "0") + ".." + std::to_string(m) + "} of Z";
    };
    return fam;
}

namespace {

FragmentFamily power_family(std::string name, long long modulus, std::string note) {
    FragmentFamily fam;
    fam.name = std::move(name);
    fam.start = 1;
    fam.fragment = [modulus](int k) {
        GroupRef g = make_group(GroupSpec::cyclic_power(modulus, k));
        return enumerate_fragment(g, 0);
    };
    fam.label = [modulus](int k) {
        return "(Z/" + std::to_string(modulus) + ")^" + std::to_string(k);
    };
    fam.divergence_note = std::move(note);
    return fam;
}

} // namespace

FragmentFamily z4sum_family() { return power_family("z4sum", 4, ""); }

FragmentFamily z2sum_family() {
    return power_family("z2sum", 2,
                        "2G = {0} at every power, so the two-color rule coloring (0 vs the rest) "
                        "avoids monochromatic sumsets at every size; no finite answer exists");
}

namespace {

struct WitnessPattern {
    std::vector<int> sum_positions; // deduplicated positions of the sumset
    int trigger;                    // max of sum_positions
};

// n-subsets of the fragment whose full sumset stays inside the fragment,
// recorded as sumset position lists grouped by their last-colored position.
std::vector<std::vector<std::vector<int>>> witness_patterns(const std::vector<Element>& frag,
                                                            int n) {
    std::vector<std::vector<std::vector<int>>> by_trigger(frag.size());
    auto position_of = [&](const Element& e) -> int {
        auto it = std::lower_bound(frag.begin(), frag.end(), e);
        if (it == frag.end() || !(*it == e)) return -1;
        return static_cast<int>(it - frag.begin());
    };

    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(chosen.size()) == n) {
            std::vector<int> sums;
            for (size_t i = 0; i < chosen.size(); ++i)
                for (size_t j = i; j < chosen.size(); ++j) {
                    int p = position_of(frag[static_cast<size_t>(chosen[i])] +
                                        frag[static_cast<size_t>(chosen[j])]);
                    if (p < 0) return; // sumset escapes the fragment
                    sums.push_back(p);
                }
            std::sort(sums.begin(), sums.end());
            sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
            by_trigger[static_cast<size_t>(sums.back())].push_back(std::move(sums));
            return;
        }
        for (int k = from; k < static_cast<int>(frag.size()); ++k) {
            chosen.push_back(k);
            rec(k + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return by_trigger;
}

// Backtracking search for an r-coloring of the fragment with no witness
// pattern monochromatic. The first position's color is pinned to 0.
std::optional<std::vector<int>> find_avoiding_coloring(
    const std::vector<std::vector<std::vector<int>>>& by_trigger, size_t size, int r,
    Budget& budget, bool& aborted) {
    std::vector<int> colors(size, -1);
    std::function<bool(size_t)> dfs = [&](size_t p) -> bool {
        if (p == size) return true;
        int hi = (p == 0) ? 1 : r; // symmetry: relabeling colors
        for (int col = 0; col < hi; ++col) {
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            colors[p] = col;
            bool mono = false;
            for (const auto& sums : by_trigger[p]) {
                bool all_same = true;
                for (int pos : sums)
                    if (colors[static_cast<size_t>(pos)] != colors[sums.front()]) {
                        all_same = false;
                        break;
                    }
                if (all_same) {
                    mono = true;
                    break;
                }
            }
            if (!mono && dfs(p + 1)) return true;
            if (aborted) return false;
        }
        colors[p] = -1;
        return false;
    };
    if (dfs(0) && !aborted) return colors;
    return std::nullopt;
}

} // namespace

MinimalResult minimal_fragment_number(const FragmentFamily& family, int r, int n, int max_m,
                                      const SearchLimits& limits) {
    if (r < 1) throw Error("need at least one color");
    if (n < 1) throw Error("witness size must be >= 1");
    MinimalResult res;
    Budget budget(limits);
    for (int m = family.start; m <= max_m; ++m) {
        std::vector<Element> frag = family.fragment(m);
        std::sort(frag.begin(), frag.end());
        if (frag.size() > limits.fragment_cap)
            throw ResourceError("fragment at " + family.label(m) + " exceeds the cap of " +
                                std::to_string(limits.fragment_cap));
        auto by_trigger = witness_patterns(frag, n);
        bool aborted = false;
        auto avoiding = find_avoiding_coloring(by_trigger, frag.size(), r, budget, aborted);
        res.nodes = budget.nodes.load();
        if (aborted) {
            res.status = MinimalResult::Status::Capped;
            res.note = "search capped at " + family.label(m);
            return res;
        }
        if (!avoiding) {
            res.status = MinimalResult::Status::Determined;
            res.M = m;
            return res;
        }
        res.avoiding_M = m;
        res.avoiding_fragment = std::move(frag);
        res.avoiding_colors = std::move(*avoiding);
    }
    res.status = MinimalResult::Status::ExhaustedMax;
    res.note = family.divergence_note;
    return res;
}

} // namespace sumset
