#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sumset/coloring.hpp"
#include "sumset/enumerate.hpp"
#include "sumset/errors.hpp"

using namespace sumset;

TEST_CASE("support coloring values") {
    GroupRef g = parse_group("Z/4 Z/4 Z");
    Coloring c = Coloring::support(g);
    Color expected = Color::seq({CircleValue::from_cyclic(1, 2), CircleValue::from_integer(2)});
    CHECK(c.at(Element::parse(g, "2,0,2")) == expected);
    CHECK(c.at(Element::parse(g, "0,2,2")) == expected); // same values, different support
    CHECK(c.at(Element::zero(g)) == Color::seq({}));
}

TEST_CASE("support color invariants") {
    GroupRef g = parse_group("Z/4 Z/6 Z");
    Coloring c = Coloring::support(g);
    auto frag = enumerate_fragment(g, 2);
    for (const Element& a : frag) {
        // equal colors force equal support sizes
        for (const Element& b : frag)
            if (c.at(a) == c.at(b)) CHECK(a.support().size() == b.support().size());
    }
    for (const Element& a : frag)
        CHECK(c.at(a.doubled()).seq_values().size() <= c.at(a).seq_values().size());
}

TEST_CASE("finite-2G coloring") {
    GroupRef z8 = parse_group("Z/8");
    Coloring c = Coloring::finite_2g(z8, 0);
    CHECK(c.at(Element::parse(z8, "4")) == Color::small(2)); // 2G = {0,2,4,6}
    CHECK(c.at(Element::parse(z8, "3")) == Color::small(4)); // outside color k = 4
    CHECK(c.two_g_list().size() == 4);

    // colors used: exactly |2G|+1 when something lies outside 2G
    std::set<Color> used;
    for (const Element& e : enumerate_fragment(z8, 0)) used.insert(c.at(e));
    CHECK(used.size() == 5);

    GroupRef b = parse_group("Z/2 Z/2");
    Coloring cb = Coloring::finite_2g(b, 0);
    CHECK(cb.at(Element::zero(b)) == Color::small(0));
    for (const Element& e : enumerate_fragment(b, 0))
        if (!e.is_zero()) CHECK(cb.at(e) == Color::small(1));
}

TEST_CASE("finite-2G coloring never makes {2x,2y,x+y} monochromatic") {
    for (const GroupSpec& spec : all_abelian_specs(24)) {
        GroupRef g = make_group(spec);
        Coloring c = Coloring::finite_2g(g, 0);
        auto frag = enumerate_fragment(g, 0);
        for (size_t i = 0; i < frag.size(); ++i)
            for (size_t j = i + 1; j < frag.size(); ++j) {
                Color a = c.at(frag[i].doubled());
                Color b = c.at(frag[j].doubled());
                Color s = c.at(frag[i] + frag[j]);
                CHECK(!(a == b && b == s));
            }
    }
}

TEST_CASE("doubling respects support color classes") {
    // the value sequence of 2g is computed from the value sequence of g, so
    // equal support colors stay equal after doubling; this is what lets a
    // monochromatic triple {2g, 2h, g+h} be doubled down to one whose
    // entries have smaller 2-power order
    GroupRef g = parse_group("Z/4 Z/6 Z/2 Z");
    Coloring c = Coloring::support(g);
    auto frag = enumerate_fragment(g, 1);
    for (const Element& a : frag)
        for (const Element& b : frag)
            if (c.at(a) == c.at(b)) CHECK(c.at(a.doubled()) == c.at(b.doubled()));
}

TEST_CASE("doubling is injective without 2-torsion") {
    GroupRef g = parse_group("Z/3 Z/5 Z/9");
    auto frag = enumerate_fragment(g, 0);
    std::set<Element> doubles;
    for (const Element& e : frag) doubles.insert(e.doubled());
    CHECK(doubles.size() == frag.size());
    // and no entry of any element has order 4 in torsion groups free of it
    GroupRef h = make_group(GroupSpec::cyclic_power(6, 3));
    for (const Element& e : enumerate_fragment(h, 0))
        for (auto& [idx, v] : e.canonical_values()) CHECK(v.order().value() != 4);
}

TEST_CASE("injective coloring") {
    GroupRef g = parse_group("Z/5");
    Coloring c = Coloring::injective(g, 0);
    std::set<Color> used;
    for (const Element& e : enumerate_fragment(g, 0)) used.insert(c.at(e));
    CHECK(used.size() == 5);

    GroupRef z = parse_group("Z");
    Coloring cz = Coloring::injective(z, 1);
    CHECK_THROWS_AS(cz.at(Element::parse(z, "2")), DomainError);
    CHECK(!cz.try_at(Element::parse(z, "2")).has_value());
}

TEST_CASE("random rule coloring is a stable function") {
    GroupRef g = parse_group("Z/4 Z/4");
    Coloring a = Coloring::random_rule(g, 3, 42);
    Coloring b = Coloring::random_rule(g, 3, 42);
    Coloring other = Coloring::random_rule(g, 3, 43);
    bool all_equal = true, any_diff_seed = false;
    std::set<long long> used;
    for (const Element& e : enumerate_fragment(g, 0)) {
        all_equal = all_equal && a.at(e) == b.at(e);
        any_diff_seed = any_diff_seed || !(a.at(e) == other.at(e));
        used.insert(a.at(e).small_value());
    }
    CHECK(all_equal);
    CHECK(any_diff_seed);
    for (long long v : used) CHECK((0 <= v && v < 3));
}

TEST_CASE("colors of different kinds never compare equal") {
    CHECK(Color::small(0) != Color::seq({}));
    CHECK(Color::small(1) != Color::seq({CircleValue::from_integer(1)}));
    CHECK(Color::tuple({Color::small(1)}) != Color::small(1));
    CHECK(Color::seq({CircleValue::from_cyclic(1, 2)}) ==
          Color::seq({CircleValue::from_cyclic(2, 4)}));
}

TEST_CASE("induced basis-sum coloring") {
    GroupRef g = make_group(GroupSpec::cyclic_power(4, 6));
    Coloring support = Coloring::support(g);
    TupleColoring d = induced_basis_sum_coloring(support, g, 1);
    Color expected = Color::seq({CircleValue::from_cyclic(1, 2)});
    for (int a = 0; a < 6; ++a) CHECK(d.at({a}) == expected);

    // constant base gives a constant tuple coloring
    Coloring constant = Coloring::random_rule(g, 1, 0);
    TupleColoring dc = induced_basis_sum_coloring(constant, g, 2);
    CHECK(dc.at({0, 1}) == dc.at({3, 5}));

    CHECK_THROWS_AS(d.at({0, 1}), Error);    // wrong arity
    CHECK_THROWS_AS(dc.at({1, 1}), Error);   // not strictly increasing
    CHECK_THROWS_AS(induced_basis_sum_coloring(support, g, 7), DomainError);
}

TEST_CASE("induced pattern coloring at r = 1") {
    GroupRef z = parse_group("Z");
    std::vector<Element> terms;
    for (long long k = 1; k <= 6; ++k) terms.push_back(Element::make(z, {k}));
    Coloring c = Coloring::random_rule(z, 2, 9);
    TupleColoring d = induced_pattern_coloring(c, terms, 1);
    // the two patterns are (4) and (2,2)
    Color got = d.at({0, 1});
    Color want = Color::tuple({c.at(terms[0].times(4)), c.at(terms[0].doubled() + terms[1].doubled())});
    CHECK(got == want);
}

TEST_CASE("coloring serialization round-trips") {
    GroupRef g = parse_group("Z/4 Z/4 Z");
    std::map<Element, Color> entries;
    entries[Element::parse(g, "1,0,1")] = Color::small(3);
    entries[Element::parse(g, "0,2,-1")] = Color::small(0);
    Coloring t = Coloring::table(g, entries);
    Coloring t2 = Coloring::load(t.save(), g, 0);
    CHECK(t2.save() == t.save());
    for (auto& [e, col] : entries) CHECK(t2.at(e) == col);
    CHECK(!t2.try_at(Element::zero(g)).has_value());

    Coloring s = Coloring::load("support\n", g, 0);
    CHECK(s.rule() == Coloring::Rule::Support);
    CHECK(s.save() == "support\n");

    Coloring f = Coloring::load("finite2g\nbound 1\n", g, 0);
    CHECK(f.save() == "finite2g\nbound 1\n");

    Coloring r = Coloring::from_source("random:3:42", g, 0);
    CHECK(r.save() == "random 3 42\n");
    Coloring r2 = Coloring::load(r.save(), g, 0);
    CHECK(r2.at(Element::parse(g, "1,0,1")) == r.at(Element::parse(g, "1,0,1")));

    CHECK_THROWS_AS(Coloring::load("table\n1,0 -> 2\n", g, 0), ParseError);  // bad coords
    CHECK_THROWS_AS(Coloring::load("table\n1,0,1 2\n", g, 0), ParseError);   // missing arrow
    CHECK_THROWS_AS(Coloring::load("nosuch\n", g, 0), ParseError);
}
