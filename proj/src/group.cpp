#include "sumset/group.hpp"

#include <algorithm>
#include <sstream>

#include "sumset/errors.hpp"

namespace sumset {

namespace {

long long reduce_coord(const Factor& f, long long c) {
    if (f.infinite()) return c;
    long long m = f.modulus;
    long long r = c % m;
    if (r < 0) r += m;
    return r;
}

// k*c mod m without overflow for |k|,|c| within the parser bounds.
long long reduce_mul(const Factor& f, long long k, long long c) {
    if (f.infinite()) return k * c;
    long long m = f.modulus;
    long long kk = k % m;
    if (kk < 0) kk += m;
    long long cc = reduce_coord(f, c);
    return static_cast<long long>((static_cast<unsigned long long>(kk) * static_cast<unsigned long long>(cc)) % static_cast<unsigned long long>(m));
}

} // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
    std::vector<Factor> factors;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "Z") {
            factors.push_back(Factor{0});
        } else if (tok.rfind("Z/", 0) == 0) {
            const std::string num = tok.substr(2);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad group factor '" + tok + "': expected Z or Z/<m>");
            long long m = 0;
            try {
                m = std::stoll(num);
            } catch (const std::exception&) {
                throw ParseError("bad group factor '" + tok + "': modulus out of range");
            }
            if (m < 2) throw ParseError("bad group factor '" + tok + "': modulus must be >= 2");
            if (m > (1ll << 31)) throw ParseError("bad group factor '" + tok + "': modulus too large");
            factors.push_back(Factor{m});
        } else {
            throw ParseError("bad group factor '" + tok + "': expected Z or Z/<m>");
        }
    }
    return GroupSpec(std::move(factors));
}

GroupSpec GroupSpec::cyclic_power(long long modulus, int count) {
    return GroupSpec(std::vector<Factor>(static_cast<size_t>(count), Factor{modulus}));
}

bool GroupSpec::all_torsion() const {
    return std::none_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.infinite(); });
}

bool GroupSpec::has_infinite_factor() const { return !all_torsion(); }

std::string GroupSpec::str() const {
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ' ';
        out += factors_[i].infinite() ? "Z" : "Z/" + std::to_string(factors_[i].modulus);
    }
    return out;
}

Element Element::zero(GroupRef g) {
    Element e;
    e.group_ = std::move(g);
    return e;
}

Element Element::unit(GroupRef g, int index) {
    if (index < 0 || index >= g->size()) throw Error("unit index out of range");
    Element e;
    e.group_ = std::move(g);
    e.coords_.emplace_back(index, 1);
    return e;
}

Element Element::make(GroupRef g, const std::vector<long long>& dense) {
    if (static_cast<int>(dense.size()) != g->size())
        throw ParseError("element has " + std::to_string(dense.size()) + " coordinates, group has " +
                         std::to_string(g->size()));
    Element e;
    e.group_ = g;
    for (int i = 0; i < g->size(); ++i) {
        long long r = reduce_coord(g->factors()[i], dense[i]);
        if (r != 0) e.coords_.emplace_back(i, r);
    }
    return e;
}

Element Element::make_sparse(GroupRef g, Coords coords) {
    Element e;
    e.group_ = g;
    std::sort(coords.begin(), coords.end());
    for (auto& [i, c] : coords) {
        if (i < 0 || i >= g->size()) throw Error("coordinate index out of range");
        long long r = reduce_coord(g->factors()[i], c);
        if (!e.coords_.empty() && e.coords_.back().first == i) throw Error("duplicate coordinate index");
        if (r != 0) e.coords_.emplace_back(i, r);
    }
    return e;
}

Element Element::parse(GroupRef g, const std::string& text) {
    std::vector<long long> dense;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        // trim spaces
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty coordinate in element '" + text + "'");
        tok = tok.substr(a, b - a + 1);
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            dense.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad coordinate '" + tok + "' in element '" + text + "'");
        }
    }
    return make(g, dense);
}

void Element::check_compatible(const Element& o) const {
    if (group_ == o.group_) return;
    if (group_ && o.group_ && *group_ == *o.group_) return;
    throw StructuralError("elements belong to different group specs");
}

Element Element::operator+(const Element& o) const {
    check_compatible(o);
    Element r;
    r.group_ = group_;
    size_t i = 0, j = 0;
    while (i < coords_.size() || j < o.coords_.size()) {
        if (j >= o.coords_.size() || (i < coords_.size() && coords_[i].first < o.coords_[j].first)) {
            r.coords_.push_back(coords_[i++]);
        } else if (i >= coords_.size() || o.coords_[j].first < coords_[i].first) {
            r.coords_.push_back(o.coords_[j++]);
        } else {
            int idx = coords_[i].first;
            long long c = reduce_coord(group_->factors()[idx], coords_[i].second + o.coords_[j].second);
            if (c != 0) r.coords_.emplace_back(idx, c);
            ++i, ++j;
        }
    }
    return r;
}

Element Element::operator-() const { return times(-1); }

Element Element::times(long long k) const {
    Element r;
    r.group_ = group_;
    for (const auto& [idx, c] : coords_) {
        long long v = reduce_mul(group_->factors()[idx], k, c);
        if (v != 0) r.coords_.emplace_back(idx, v);
    }
    return r;
}

long long Element::coord(int index) const {
    for (const auto& [i, c] : coords_)
        if (i == index) return c;
    return 0;
}

std::vector<int> Element::support() const {
    std::vector<int> s;
    s.reserve(coords_.size());
    for (const auto& [i, c] : coords_) s.push_back(i);
    return s;
}

std::optional<mpz_class> Element::order() const {
    mpz_class ord = 1;
    for (const auto& [idx, c] : coords_) {
        const Factor& f = group_->factors()[idx];
        if (f.infinite()) return std::nullopt;
        mpz_class m(static_cast<long>(f.modulus)), r(static_cast<long>(c)), g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), r.get_mpz_t());
        mpz_class co = m / g;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), co.get_mpz_t());
    }
    return ord;
}

std::vector<std::pair<int, CircleValue>> Element::canonical_values() const {
    std::vector<std::pair<int, CircleValue>> out;
    out.reserve(coords_.size());
    for (const auto& [idx, c] : coords_) {
        const Factor& f = group_->factors()[idx];
        out.emplace_back(idx, f.infinite() ? CircleValue::from_integer(c)
                                           : CircleValue::from_cyclic(c, f.modulus));
    }
    return out;
}

Element pattern_apply(const std::vector<long long>& coeffs, const std::vector<Element>& terms,
                      const GroupRef& g) {
    Element acc = Element::zero(g);
    size_t n = std::min(coeffs.size(), terms.size());
    for (size_t i = 0; i < n; ++i) acc = acc + terms[i].times(coeffs[i]);
    return acc;
}

std::string Element::str() const {
    std::string out;
    size_t k = 0;
    for (int i = 0; i < group_->size(); ++i) {
        if (i) out += ',';
        if (k < coords_.size() && coords_[k].first == i)
            out += std::to_string(coords_[k++].second);
        else
            out += '0';
    }
    return out;
}

} // namespace sumset
