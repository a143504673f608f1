#include "sumset/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sumset/errors.hpp"

namespace sumset {

std::string Color::str() const {
    switch (v_.index()) {
        case 0:
            return std::to_string(std::get<0>(v_));
        case 1: {
            std::string out = "[";
            const auto& vals = std::get<1>(v_);
            for (size_t i = 0; i < vals.size(); ++i) {
                if (i) out += ',';
                out += vals[i].str();
            }
            return out + "]";
        }
        default: {
            std::string out = "(";
            const auto& parts = std::get<2>(v_);
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out += ';';
                out += parts[i].str();
            }
            return out + ")";
        }
    }
}

Coloring Coloring::support(GroupRef g) { return Coloring(Rule::Support, std::move(g)); }

Coloring Coloring::finite_2g(GroupRef g, long long bound, std::uint64_t cap) {
    Coloring c(Rule::Finite2G, g);
    c.bound_ = bound;
    c.list_ = double_image(g, bound, cap);
    return c;
}

Coloring Coloring::injective(GroupRef g, long long bound, std::uint64_t cap) {
    Coloring c(Rule::Injective, g);
    c.bound_ = bound;
    c.list_ = enumerate_fragment(g, bound, cap);
    return c;
}

Coloring Coloring::injective_over(GroupRef g, std::vector<Element> domain) {
    Coloring c(Rule::Injective, std::move(g));
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    c.list_ = std::move(domain);
    return c;
}

Coloring Coloring::table(GroupRef g, std::map<Element, Color> entries) {
    Coloring c(Rule::Table, std::move(g));
    c.table_ = std::move(entries);
    return c;
}

Coloring Coloring::random_rule(GroupRef g, long long colors, std::uint64_t seed) {
    if (colors < 1) throw Error("random coloring needs >= 1 color");
    Coloring c(Rule::Random, std::move(g));
    c.colors_ = colors;
    c.seed_ = seed;
    return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::optional<Color> Coloring::try_at(const Element& g) const {
    switch (rule_) {
        case Rule::Support: {
            std::vector<CircleValue> vals;
            for (auto& [idx, v] : g.canonical_values()) vals.push_back(v);
            return Color::seq(std::move(vals));
        }
        case Rule::Finite2G: {
            auto it = std::lower_bound(list_.begin(), list_.end(), g);
            if (it != list_.end() && *it == g)
                return Color::small(static_cast<long long>(it - list_.begin()));
            return Color::small(static_cast<long long>(list_.size()));
        }
        case Rule::Injective: {
            auto it = std::lower_bound(list_.begin(), list_.end(), g);
            if (it != list_.end() && *it == g)
                return Color::small(static_cast<long long>(it - list_.begin()));
            return std::nullopt;
        }
        case Rule::Table: {
            auto it = table_.find(g);
            if (it == table_.end()) return std::nullopt;
            return it->second;
        }
        case Rule::Random: {
            std::uint64_t h = splitmix64(seed_ ^ 0x5851f42d4c957f2dull);
            for (const auto& [idx, c] : g.coords()) {
                h = splitmix64(h ^ static_cast<std::uint64_t>(idx));
                h = splitmix64(h ^ static_cast<std::uint64_t>(c));
            }
            return Color::small(static_cast<long long>(h % static_cast<std::uint64_t>(colors_)));
        }
    }
    return std::nullopt;
}

Color Coloring::at(const Element& g) const {
    auto c = try_at(g);
    if (!c) throw DomainError("element " + g.str() + " is outside the coloring's domain");
    return *c;
}

std::string Coloring::save() const {
    switch (rule_) {
        case Rule::Support:
            return "support\n";
        case Rule::Finite2G:
            return "finite2g\nbound " + std::to_string(bound_) + "\n";
        case Rule::Injective:
            return "injective\nbound " + std::to_string(bound_) + "\n";
        case Rule::Random:
            return "random " + std::to_string(colors_) + " " + std::to_string(seed_) + "\n";
        case Rule::Table: {
            std::string out = "table\n";
            for (const auto& [e, col] : table_) {
                if (!col.is_small())
                    throw Error("only integer-colored tables can be serialized");
                out += e.str() + " -> " + std::to_string(col.small_value()) + "\n";
            }
            return out;
        }
    }
    throw Error("unreachable");
}

Coloring Coloring::load(const std::string& text, GroupRef g, long long bound, std::uint64_t cap) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    // first non-empty line names the rule
    std::string rule;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rule = line;
        break;
    }
    if (rule.empty()) throw ParseError("coloring text is empty");
    while (!rule.empty() && (rule.back() == '\r' || rule.back() == ' ')) rule.pop_back();

    std::istringstream head(rule);
    std::string name;
    head >> name;

    auto read_bound = [&](long long fallback) {
        long long b = fallback;
        std::string extra;
        while (std::getline(in, extra)) {
            ++lineno;
            std::istringstream ls(extra);
            std::string key;
            if (!(ls >> key)) continue;
            if (key != "bound")
                throw ParseError("line " + std::to_string(lineno) + ": unexpected line '" + extra + "'");
            if (!(ls >> b)) throw ParseError("line " + std::to_string(lineno) + ": bad bound");
        }
        return b;
    };

    if (name == "support") return support(std::move(g));
    if (name == "finite2g") return finite_2g(std::move(g), read_bound(bound), cap);
    if (name == "injective") return injective(std::move(g), read_bound(bound), cap);
    if (name == "random") {
        long long colors = 0;
        std::uint64_t seed = 0;
        if (!(head >> colors >> seed))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'random <colors> <seed>'");
        return random_rule(std::move(g), colors, seed);
    }
    if (name == "table") {
        std::map<Element, Color> entries;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected '<coords> -> <color>'");
            std::string coords = line.substr(0, arrow);
            std::string colstr = line.substr(arrow + 2);
            Element e = [&] {
                try {
                    return Element::parse(g, coords);
                } catch (const ParseError& pe) {
                    throw ParseError("line " + std::to_string(lineno) + ": " + pe.what());
                }
            }();
            long long col = 0;
            try {
                col = std::stoll(colstr);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad color id '" + colstr + "'");
            }
            entries[e] = Color::small(col);
        }
        return table(std::move(g), std::move(entries));
    }
    throw ParseError("unknown coloring rule '" + name + "'");
}

Coloring Coloring::from_source(const std::string& source, GroupRef g, long long bound,
                               std::uint64_t cap) {
    if (source == "support" || source == "finite2g" || source == "injective")
        return load(source + "\n", std::move(g), bound, cap);
    if (source.rfind("random:", 0) == 0) {
        auto rest = source.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected random:<colors>:<seed>, got '" + source + "'");
        try {
            long long colors = std::stoll(rest.substr(0, colon));
            std::uint64_t seed = std::stoull(rest.substr(colon + 1));
            return random_rule(std::move(g), colors, seed);
        } catch (const std::exception&) {
            throw ParseError("expected random:<colors>:<seed>, got '" + source + "'");
        }
    }
    std::ifstream f(source);
    if (!f) throw ParseError("cannot open coloring file '" + source + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return load(buf.str(), std::move(g), bound, cap);
}

TupleColoring::TupleColoring(int arity, int domain_size, std::function<Color(const Tuple&)> fn)
    : arity_(arity), domain_size_(domain_size), fn_(std::move(fn)) {
    if (arity_ < 1) throw Error("tuple coloring arity must be >= 1");
}

Color TupleColoring::at(const Tuple& t) const {
    if (static_cast<int>(t.size()) != arity_)
        throw Error("tuple has arity " + std::to_string(t.size()) + ", expected " +
                    std::to_string(arity_));
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= domain_size_) throw Error("tuple index out of range");
        if (i > 0 && t[i - 1] >= t[i]) throw Error("tuple indices must be strictly increasing");
    }
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    Color c = fn_(t);
    cache_.emplace(t, c);
    return c;
}

TupleColoring induced_basis_sum_coloring(const Coloring& base, GroupRef g, int arity) {
    if (arity > g->size())
        throw DomainError("base group has " + std::to_string(g->size()) +
                          " factors, need at least " + std::to_string(arity));
    return TupleColoring(arity, g->size(), [base, g](const TupleColoring::Tuple& t) {
        Element sum = Element::zero(g);
        for (int idx : t) sum = sum + Element::unit(g, idx).doubled();
        return base.at(sum);
    });
}

std::vector<std::vector<long long>> block_patterns(int r) {
    std::vector<std::vector<long long>> out;
    for (int i = 0; i <= r; ++i) {
        std::vector<long long> p;
        p.insert(p.end(), static_cast<size_t>(r - i), 4);
        p.insert(p.end(), static_cast<size_t>(2 * i), 2);
        out.push_back(std::move(p));
    }
    return out;
}

TupleColoring induced_pattern_coloring(const Coloring& base, const std::vector<Element>& terms,
                                       int r) {
    if (r < 1) throw Error("pattern coloring needs r >= 1");
    if (static_cast<int>(terms.size()) < 2 * r)
        throw DomainError("sequence of length " + std::to_string(terms.size()) +
                          " is too short for 2r = " + std::to_string(2 * r));
    auto patterns = block_patterns(r);
    GroupRef g = terms.front().group();
    return TupleColoring(2 * r, static_cast<int>(terms.size()),
                         [base, terms, patterns, g](const TupleColoring::Tuple& t) {
                             std::vector<Element> picked;
                             picked.reserve(t.size());
                             for (int idx : t) picked.push_back(terms[static_cast<size_t>(idx)]);
                             std::vector<Color> parts;
                             parts.reserve(patterns.size());
                             for (const auto& p : patterns)
                                 parts.push_back(base.at(pattern_apply(p, picked, g)));
                             return Color::tuple(std::move(parts));
                         });
}

} // namespace sumset
