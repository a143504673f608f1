#include "sumset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <thread>

#include "sumset/construct.hpp"
#include "sumset/enumerate.hpp"
#include "sumset/errors.hpp"
#include "sumset/witness.hpp"

namespace sumset {

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitCapped = 2;
constexpr int kExitInput = 3;

struct Common {
    bool machine = false;
    int threads = 0; // 0 = all available
    std::uint64_t node_cap = 10'000'000;
    double time_cap = 60.0;
    std::uint64_t fragment_cap = kDefaultFragmentCap;
    std::string dump_config;

    SearchLimits limits() const {
        SearchLimits l;
        l.node_cap = node_cap;
        l.time_cap_seconds = time_cap;
        l.fragment_cap = fragment_cap;
        l.threads = threads > 0 ? threads
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        return l;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--machine", c.machine, "line-oriented key=value output");
    sub->add_option("--threads", c.threads, "worker threads for the search (0 = all available)");
    sub->add_option("--node-cap", c.node_cap, "node budget per search stage");
    sub->add_option("--time-cap", c.time_cap, "time budget per search stage, seconds");
    sub->add_option("--fragment-cap", c.fragment_cap, "largest fragment that will be enumerated");
    sub->add_option("--dump-config", c.dump_config, "write the run configuration to a file");
}

void dump_config(const CLI::App* sub, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write config file '" + path + "'");
    f << "command=" << sub->get_name() << "\n";
    for (const CLI::Option* opt : sub->get_options()) {
        std::string name = opt->get_name();
        if (name.rfind("--", 0) != 0 || name == "--dump-config") continue;
        for (const std::string& v : opt->results()) f << name.substr(2) << "=" << v << "\n";
    }
}

std::vector<std::string> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read config file '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "command") {
            args.insert(args.begin(), val);
        } else if (val == "true") {
            args.push_back("--" + key);
        } else {
            args.push_back("--" + key);
            args.push_back(val);
        }
    }
    if (args.empty()) throw ParseError("config file '" + path + "' names no command");
    return args;
}

const char* outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::NoneInDomain: return "none";
        case Outcome::Capped: return "capped";
    }
    return "?";
}

void print_witness(std::ostream& out, const Witness& w, bool machine) {
    for (const Element& e : w.elements)
        out << (machine ? "element=" : "  element ") << e.str() << "\n";
    out << (machine ? "color=" : "color: ") << w.color.str() << "\n";
}

int finish_search(std::ostream& out, const SearchResult& res, bool machine) {
    out << (machine ? "outcome=" : "outcome: ") << outcome_str(res.outcome) << "\n";
    out << (machine ? "nodes=" : "nodes: ") << res.nodes << "\n";
    if (res.witness) print_witness(out, *res.witness, machine);
    switch (res.outcome) {
        case Outcome::Found: return kExitFound;
        case Outcome::NoneInDomain: return kExitNone;
        case Outcome::Capped: return kExitCapped;
    }
    return kExitInput;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::string group, coloring;
    long long bound = 0;
    int size = 0;
};

int cmd_search(const SearchArgs& a, const Common& com, std::ostream& out) {
    GroupRef g = parse_group(a.group);
    std::vector<Element> domain = enumerate_fragment(g, a.bound, com.fragment_cap);
    Coloring c = Coloring::from_source(a.coloring, g, a.bound, com.fragment_cap);
    if (com.machine)
        out << "command=search\ngroup=" << g->str() << "\nbound=" << a.bound
            << "\ncoloring=" << a.coloring << "\nsize=" << a.size << "\ndomain=" << domain.size()
            << "\n";
    else
        out << "search for X of size " << a.size << " with X+X monochromatic\n"
            << "group: " << g->str() << "  bound: " << a.bound << "  coloring: " << a.coloring
            << "  domain: " << domain.size() << " elements\n";
    SearchResult res = find_witness(domain, c, a.size, com.limits());
    return finish_search(out, res, com.machine);
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
    std::string group, coloring;
    int size = 0;
    long long bound = -1;
    long long bounds = -1;
    int powers = -1;
};

int cmd_certify(const CertifyArgs& a, const Common& com, std::ostream& out) {
    GroupSpec base = GroupSpec::parse(a.group);
    std::vector<FragmentJob> jobs;
    if (a.powers > 0) {
        for (int k = 1; k <= a.powers; ++k) {
            std::vector<Factor> fs;
            for (int rep = 0; rep < k; ++rep)
                fs.insert(fs.end(), base.factors().begin(), base.factors().end());
            GroupRef g = make_group(GroupSpec(std::move(fs)));
            jobs.push_back({"(" + base.str() + ")^" + std::to_string(k), g, 0});
        }
    } else if (a.bounds >= 0) {
        GroupRef g = make_group(base);
        for (long long b = 0; b <= a.bounds; ++b)
            jobs.push_back({base.str() + " B=" + std::to_string(b), g, b});
    } else {
        long long b = a.bound >= 0 ? a.bound : 0;
        jobs.push_back({base.str() + " B=" + std::to_string(b), make_group(base), b});
    }

    if (com.machine)
        out << "command=certify\ngroup=" << base.str() << "\ncoloring=" << a.coloring
            << "\nsize=" << a.size << "\n";
    else
        out << "certify: no X of size " << a.size << " with X+X monochromatic, coloring "
            << a.coloring << "\n";

    std::vector<Certificate> certs = certify_sweep(jobs, a.coloring, a.size, com.limits());
    bool all_none = true;
    bool capped = false;
    for (const Certificate& c : certs) {
        if (com.machine)
            out << "fragment=" << c.label << "\ndomain=" << c.domain_size
                << "\noutcome=" << outcome_str(c.result.outcome) << "\nnodes=" << c.result.nodes
                << "\n";
        else
            out << "  " << c.label << ": domain " << c.domain_size << ", "
                << outcome_str(c.result.outcome) << " (nodes " << c.result.nodes << ")\n";
        if (c.result.witness) print_witness(out, *c.result.witness, com.machine);
        all_none = all_none && c.result.outcome == Outcome::NoneInDomain;
        capped = capped || c.result.outcome == Outcome::Capped;
    }
    out << (com.machine ? "certified=" : "certified: ") << (all_none ? "true" : "false") << "\n";
    if (capped) return kExitCapped;
    return all_none ? kExitFound : kExitNone;
}

// ---------------------------------------------------------------- minimal

struct MinimalArgs {
    std::string family;
    int colors = 0, size = 0, max = 24;
    bool exclude_zero = false;
};

int cmd_minimal(const MinimalArgs& a, const Common& com, std::ostream& out) {
    FragmentFamily fam;
    if (a.family == "nat")
        fam = nat_family(a.exclude_zero);
    else if (a.family == "z4sum")
        fam = z4sum_family();
    else if (a.family == "z2sum")
        fam = z2sum_family();
    else
        throw ParseError("unknown family '" + a.family + "' (expected nat, z4sum or z2sum)");

    if (com.machine)
        out << "command=minimal\nfamily=" << fam.name << "\ncolors=" << a.colors
            << "\nsize=" << a.size << "\nmax=" << a.max << "\n";
    else
        out << "minimal fragment size forcing a witness: family " << fam.name << ", " << a.colors
            << " colors, |X| = " << a.size << ", sweep up to " << a.max << "\n";

    MinimalResult res = minimal_fragment_number(fam, a.colors, a.size, a.max, com.limits());
    const bool machine = com.machine;
    out << (machine ? "nodes=" : "nodes: ") << res.nodes << "\n";
    switch (res.status) {
        case MinimalResult::Status::Determined:
            out << (machine ? "outcome=determined\nM=" : "determined: M = ") << res.M << "\n";
            break;
        case MinimalResult::Status::ExhaustedMax:
            out << (machine ? "outcome=exhausted-max\n" : "no answer up to the sweep maximum\n");
            break;
        case MinimalResult::Status::Capped:
            out << (machine ? "outcome=capped\n" : "search capped before an answer\n");
            break;
    }
    if (!res.note.empty()) out << (machine ? "note=" : "note: ") << res.note << "\n";
    if (res.avoiding_M >= 0) {
        out << (machine ? "avoiding_M=" : "avoiding coloring at M = ") << res.avoiding_M << "\n";
        for (size_t i = 0; i < res.avoiding_fragment.size(); ++i)
            out << (machine ? "avoid=" : "  ") << res.avoiding_fragment[i].str()
                << (machine ? ":" : " -> ") << res.avoiding_colors[i] << "\n";
    }
    switch (res.status) {
        case MinimalResult::Status::Determined: return kExitFound;
        case MinimalResult::Status::ExhaustedMax: return kExitNone;
        case MinimalResult::Status::Capped: return kExitCapped;
    }
    return kExitInput;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string method, group, coloring;
    long long bound = 0;
    int n = 1, r = 0, length = 0;
};

int cmd_construct(const ConstructArgs& a, const Common& com, std::ostream& out) {
    GroupRef g = parse_group(a.group);
    const bool machine = com.machine;
    if (machine)
        out << "command=construct\nmethod=" << a.method << "\ngroup=" << g->str()
            << "\nbound=" << a.bound << "\nn=" << a.n << "\n";
    else
        out << "construct " << a.method << " on " << g->str() << " (n = " << a.n << ")\n";

    auto print_log = [&](const std::vector<std::string>& log) {
        for (const std::string& line : log) out << (machine ? "log=" : "  . ") << line << "\n";
    };
    auto emit_sequence = [&](const std::vector<Element>& terms, const char* key) {
        for (const Element& e : terms) out << (machine ? std::string(key) + "=" : "  term ") << e.str() << "\n";
    };

    if (a.method == "lemma23") {
        int len = a.length > 0 ? a.length : a.n;
        Independent124Sequence seq = build_independent_124(g, a.bound, len, com.fragment_cap);
        emit_sequence(seq.terms, "term");
        int check = std::min<int>(6, static_cast<int>(seq.terms.size()));
        IndependenceReport rep = verify_independence_124(seq.terms, check);
        out << (machine ? "verified_prefix=" : "verified prefix: ") << check << "\n";
        out << (machine ? "independent=" : "independent: ") << (rep.ok ? "true" : "false") << "\n";
        print_log(seq.log);
        return rep.ok ? kExitFound : kExitNone;
    }
    if (a.method == "lemma24") {
        int len = a.length > 0 ? a.length : a.n;
        Order2Basis basis = build_order2_basis(g, a.bound, len, com.fragment_cap);
        for (size_t i = 0; i < basis.roots.size(); ++i)
            out << (machine ? "pair=" : "  pair z=") << basis.roots[i].str()
                << (machine ? ":" : "  2z=") << basis.doubles[i].str() << "\n";
        int check = std::min<int>(3, static_cast<int>(basis.roots.size()) / 2);
        bool ok = check == 0 || verify_epsilon_delta(basis.roots, check);
        out << (machine ? "verified_n=" : "verified n: ") << check << "\n";
        out << (machine ? "distinct=" : "distinct: ") << (ok ? "true" : "false") << "\n";
        print_log(basis.log);
        return ok ? kExitFound : kExitNone;
    }

    Coloring c = Coloring::from_source(a.coloring, g, a.bound, com.fragment_cap);
    if (machine) out << "coloring=" << a.coloring << "\n";

    if (a.method == "leader-russell") {
        if (a.r < 1) throw Error("--r is required for this method");
        int len = a.length > 0 ? a.length : std::max(2 * a.r + (a.n - 1) * a.r + 2, 24);
        Independent124Sequence seq = build_independent_124(g, a.bound, len, com.fragment_cap);
        PatternWitness w = construct_via_patterns(c, a.r, a.n, seq, com.limits());
        out << (machine ? "outcome=found\n" : "witness assembled\n");
        print_log(w.log);
        print_witness(out, w.witness, machine);
        return kExitFound;
    }
    if (a.method == "order2") {
        int len = a.length > 0 ? a.length : 2 * a.n + 8;
        Order2Basis basis = [&] {
            try {
                return build_order2_basis(g, a.bound, len, com.fragment_cap);
            } catch (const ConstructionError& e) {
                // no --length given: settle for the whole supply when it still
                // covers the 2n indices the assembly needs
                if (a.length > 0 || e.achieved < 2 * a.n) throw;
                return build_order2_basis(g, a.bound, e.achieved, com.fragment_cap);
            }
        }();
        Order2Witness w = construct_via_order2(c, a.n, basis, com.limits());
        out << (machine ? "outcome=found\n" : "witness assembled\n");
        print_log(w.log);
        print_witness(out, w.witness, machine);
        return kExitFound;
    }
    if (a.method == "prop42") {
        Z4BasisWitness w = construct_via_z4_basis(c, g, a.n, com.limits());
        out << (machine ? "outcome=found\n" : "witness assembled\n");
        for (int alpha : w.alphas) out << (machine ? "alpha=" : "  alpha ") << alpha << "\n";
        print_log(w.log);
        print_witness(out, w.witness, machine);
        return kExitFound;
    }
    throw ParseError("unknown method '" + a.method + "'");
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string group;
    long long bound = 0;
};

int cmd_analyze(const AnalyzeArgs& a, const Common& com, std::ostream& out) {
    GroupRef g = parse_group(a.group);
    std::vector<Element> frag = enumerate_fragment(g, a.bound, com.fragment_cap);
    std::vector<Element> g2 = two_torsion(g, a.bound, com.fragment_cap);
    std::vector<Element> g4 = quadruple_kernel(g, a.bound, com.fragment_cap);
    std::vector<Element> twog = double_image(g, a.bound, com.fragment_cap);
    bool all_torsion = g->all_torsion();
    bool identity = all_torsion && twog.size() * g2.size() == frag.size();
    bool boolean = all_torsion;
    for (const Factor& f : g->factors()) boolean = boolean && f.modulus == 2;

    const bool machine = com.machine;
    if (machine) {
        out << "command=analyze\ngroup=" << g->str() << "\nbound=" << a.bound << "\n";
        out << "size=" << frag.size() << "\ntwo_torsion=" << g2.size()
            << "\nquadruple_kernel=" << g4.size() << "\ndouble_image=" << twog.size() << "\n";
        if (all_torsion) out << "product_identity=" << (identity ? "true" : "false") << "\n";
        out << "classification=" << (all_torsion ? "2g-finite" : "2g-infinite") << "\n";
        out << "boolean=" << (boolean ? "true" : "false") << "\n";
        for (const Element& e : twog) out << "two_g=" << e.str() << "\n";
    } else {
        out << "group " << g->str() << (all_torsion ? "" : "  (fragment bound " + std::to_string(a.bound) + ")")
            << "\n";
        out << "|G| = " << frag.size() << "  |G2| = " << g2.size() << "  |G4| = " << g4.size()
            << "  |2G| = " << twog.size() << "\n";
        if (all_torsion)
            out << "|2G| * |G2| = |G|: " << (identity ? "yes" : "NO") << "\n";
        out << "2G = {";
        bool wrap = g->size() > 1;
        for (size_t i = 0; i < twog.size(); ++i)
            out << (i ? ", " : "") << (wrap ? "(" : "") << twog[i].str() << (wrap ? ")" : "");
        out << "}\n";
        if (all_torsion)
            out << "classification: the doubling image of the full group is finite; the rule\n"
                   "  coloring with |2G|+1 colors admits no 2-element witness (negative side)\n";
        else
            out << "classification: the doubling image is infinite; every coloring with finitely\n"
                   "  many colors admits witnesses of every finite size (positive side)\n";
        if (boolean)
            out << "boolean group: already the 2-coloring '0 vs the rest' admits no 2-element witness\n";
    }
    return kExitFound;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify_paper(const Common& com, std::ostream& out);

// ---------------------------------------------------------------- driver

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_verify_paper(const Common& com, std::ostream& out) {
    const bool machine = com.machine;
    int failures = 0;
    auto item = [&](const std::string& name, bool pass) {
        if (machine)
            out << "item=" << name << "\nstatus=" << (pass ? "pass" : "fail") << "\n";
        else
            out << "  " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
        if (!pass) ++failures;
    };
    if (!machine) out << "regression suite\n";

    // the (Z/4)^2 x Z pair whose sumset collapses to two elements of one color
    {
        GroupRef g = parse_group("Z/4 Z/4 Z");
        Element x = Element::parse(g, "1,0,1");
        Element y = Element::parse(g, "3,2,1");
        Coloring c = Coloring::support(g);
        auto [mono, color] = verify_witness({x, y}, c);
        Color expected =
            Color::seq({CircleValue::from_cyclic(1, 2), CircleValue::from_integer(2)});
        std::vector<Element> sums = sumset_of({x, y});
        item("pair-witness", mono && color == expected && sums.size() == 2);
        SearchResult found = find_witness(enumerate_fragment(g, 1), c, 2, com.limits());
        item("pair-search", found.outcome == Outcome::Found);
    }
    // the isomorphic presentation admits no pair
    {
        GroupRef g = parse_group("Z Z/2 Z/2");
        SearchResult res =
            find_witness(enumerate_fragment(g, 8), Coloring::support(g), 2, com.limits());
        item("isomorph-certification", res.outcome == Outcome::NoneInDomain);
    }
    // subgroup generated by {(1,0,1),(2,0,0),(0,2,0)}: the pair lies inside,
    // order 2 occurs, order 4 does not
    {
        GroupRef g = parse_group("Z/4 Z/4 Z");
        Element g1 = Element::parse(g, "1,0,1");
        Element g2 = Element::parse(g, "2,0,0");
        Element g3 = Element::parse(g, "0,2,0");
        bool pair_inside = (g1 + g2 + g3) == Element::parse(g, "3,2,1");
        bool has_order2 = false, has_order4 = false;
        for (long long a = -4; a <= 4; ++a)
            for (long long b = 0; b <= 1; ++b)
                for (long long cc = 0; cc <= 1; ++cc) {
                    Element e = g1.times(a) + g2.times(b) + g3.times(cc);
                    auto ord = e.order();
                    if (ord && *ord == 2) has_order2 = true;
                    if (ord && *ord == 4) has_order4 = true;
                }
        item("subgroup-orders", pair_inside && has_order2 && !has_order4);
    }
    // solution-count bounds for 2x=c and 4y=d on every group of order <= 64
    {
        bool ok = true;
        for (const GroupSpec& spec : all_abelian_specs(64)) {
            GroupRef g = make_group(spec);
            std::vector<Element> all = enumerate_fragment(g, 0);
            size_t n2 = two_torsion(g, 0).size();
            for (const Element& c : all) {
                if (solve_double(c, all).size() > n2) ok = false;
                if (solve_quadruple(c, all).size() > n2 * n2) ok = false;
            }
            if (two_torsion(g, 0).size() * double_image(g, 0).size() != all.size()) ok = false;
        }
        item("solution-bounds", ok);
    }
    // boolean negative case
    {
        GroupRef g = parse_group("Z/2 Z/2");
        Coloring c = Coloring::finite_2g(g, 0);
        SearchResult res = find_witness(enumerate_fragment(g, 0), c, 2, com.limits());
        item("boolean-negative", res.outcome == Outcome::NoneInDomain);
    }
    // torsion certifications at small sizes
    {
        GroupRef g3 = make_group(GroupSpec::cyclic_power(3, 4));
        GroupRef g6 = make_group(GroupSpec::cyclic_power(6, 3));
        bool ok = find_witness(enumerate_fragment(g3, 0), Coloring::support(g3), 2, com.limits())
                          .outcome == Outcome::NoneInDomain &&
                  find_witness(enumerate_fragment(g6, 0), Coloring::support(g6), 2, com.limits())
                          .outcome == Outcome::NoneInDomain;
        item("torsion-certification", ok);
    }
    // the Z/4 direct-sum construction at n = 1, with its exact coordinates
    {
        GroupRef g = make_group(GroupSpec::cyclic_power(4, 4));
        Coloring c = Coloring::support(g);
        Z4BasisWitness w = construct_via_z4_basis(c, g, 1, com.limits());
        int a1 = w.alphas[0], a2 = w.alphas[1];
        Element e1 = Element::unit(g, a1), e2 = Element::unit(g, a2);
        const Element& x0 = w.assignments[0].second; // f = (0): e1 + 2 e2
        const Element& x1 = w.assignments[1].second; // f = (1): 3 e1
        bool ok = x0 == e1 + e2.doubled() && x1 == e1.times(3) &&
                  x0.doubled() == e1.doubled() && x1.doubled() == e1.doubled() &&
                  (x0 + x1) == e2.doubled() && w.witness.elements.size() == 2;
        auto [mono, color] = verify_witness(w.witness.elements, c);
        item("z4-basis-construction", ok && mono && color == w.witness.color);
    }

    out << (machine ? "overall=" : "overall: ") << (failures == 0 ? "pass" : "fail") << "\n";
    return failures == 0 ? kExitFound : kExitNone;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monochromatic sumset experiments on finitely generated Abelian groups"};
    app.name("sumset");
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "replay a saved run configuration");

    Common com_search, com_certify, com_minimal, com_construct, com_analyze, com_paper;

    auto* search = app.add_subcommand("search", "find X with X+X monochromatic in a fragment");
    SearchArgs sa;
    search->add_option("--group", sa.group, "group spec, e.g. \"Z/4 Z/4 Z\"")->required();
    search->add_option("--bound", sa.bound, "coordinate bound for Z factors");
    search->add_option("--coloring", sa.coloring, "rule name, random:<k>:<seed>, or file")->required();
    search->add_option("--size", sa.size, "|X|")->required();
    add_common(search, com_search);

    auto* certify = app.add_subcommand("certify", "certify that no witness exists, over a sweep");
    CertifyArgs ca;
    certify->add_option("--group", ca.group)->required();
    certify->add_option("--coloring", ca.coloring)->required();
    certify->add_option("--size", ca.size)->required();
    certify->add_option("--bound", ca.bound, "single fragment bound");
    certify->add_option("--bounds", ca.bounds, "sweep bounds 0..B");
    certify->add_option("--powers", ca.powers, "sweep direct powers 1..K");
    add_common(certify, com_certify);

    auto* minimal = app.add_subcommand("minimal", "least fragment size forcing a witness");
    MinimalArgs ma;
    minimal->add_option("--family", ma.family, "nat, z4sum or z2sum")->required();
    minimal->add_option("--colors", ma.colors)->required();
    minimal->add_option("--size", ma.size)->required();
    minimal->add_option("--max", ma.max, "sweep limit");
    minimal->add_flag("--exclude-zero", ma.exclude_zero, "natural numbers without 0");
    add_common(minimal, com_minimal);

    auto* construct = app.add_subcommand("construct", "run a constructive procedure");
    ConstructArgs na;
    construct->add_option("--method", na.method, "lemma23|lemma24|leader-russell|order2|prop42")
        ->required();
    construct->add_option("--group", na.group)->required();
    construct->add_option("--bound", na.bound);
    construct->add_option("--coloring", na.coloring);
    construct->add_option("--n", na.n)->required();
    construct->add_option("--r", na.r, "color count for leader-russell");
    construct->add_option("--length", na.length, "sequence length override");
    add_common(construct, com_construct);

    auto* analyze = app.add_subcommand("analyze", "structure report for a group fragment");
    AnalyzeArgs aa;
    analyze->add_option("--group", aa.group)->required();
    analyze->add_option("--bound", aa.bound);
    add_common(analyze, com_analyze);

    auto* paper = app.add_subcommand("verify-paper", "run the built-in regression suite");
    add_common(paper, com_paper);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitFound;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (!config_path.empty()) return dispatch(load_config(config_path), out, err);
        if (search->parsed()) {
            if (!com_search.dump_config.empty()) dump_config(search, com_search.dump_config);
            return cmd_search(sa, com_search, out);
        }
        if (certify->parsed()) {
            if (!com_certify.dump_config.empty()) dump_config(certify, com_certify.dump_config);
            return cmd_certify(ca, com_certify, out);
        }
        if (minimal->parsed()) {
            if (!com_minimal.dump_config.empty()) dump_config(minimal, com_minimal.dump_config);
            return cmd_minimal(ma, com_minimal, out);
        }
        if (construct->parsed()) {
            if (!com_construct.dump_config.empty()) dump_config(construct, com_construct.dump_config);
            return cmd_construct(na, com_construct, out);
        }
        if (analyze->parsed()) {
            if (!com_analyze.dump_config.empty()) dump_config(analyze, com_analyze.dump_config);
            return cmd_analyze(aa, com_analyze, out);
        }
        if (paper->parsed()) {
            if (!com_paper.dump_config.empty()) dump_config(paper, com_paper.dump_config);
            return cmd_verify_paper(com_paper, out);
        }
        out << app.help();
        return kExitInput;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitCapped;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitNone;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return dispatch(args, out, err);
}

} // namespace sumset
