// olhgen: build, expand, stack, search for and verify orthogonal Latin
// hypercubes.
//
// Exit codes: 0 ok, 1 predicate or condition failure, 2 no OLH can exist,
// 64 parse or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "olhgen/olhgen.hpp"

namespace {

using namespace olhgen;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kNoOlh = 2;
constexpr int kUsage = 64;

struct OutputOptions {
    std::string format = "csv";
    std::string units = "doubled";
    std::string out;
    bool header = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--units", o.units, "doubled (integers) or half (true levels)")
        ->check(CLI::IsMember({"doubled", "half"}));
    cmd->add_option("--out", o.out, "write the design here instead of stdout");
    cmd->add_flag("--header", o.header, "label CSV columns f1..fm");
}

/// Summaries go to stdout when the data goes to a file.
std::ostream& summary_stream(const OutputOptions& o) { return o.out.empty() ? std::cerr : std::cout; }

std::string shape(const DesignMatrix& d) {
    return "(" + std::to_string(d.runs()) + ", " + std::to_string(d.factors()) + ")";
}

void emit(const DesignMatrix& d, const OutputOptions& o) {
    const Format format = o.format == "json" ? Format::json : Format::csv;
    const Units units = o.units == "half" ? Units::half : Units::doubled;
    if (o.out.empty()) {
        write_design(std::cout, d, format, units, o.header);
        std::cout.flush();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) fail(Errc::invalid_argument, "cannot write " + o.out);
        write_design(file, d, format, units, o.header);
        if (!file.flush()) fail(Errc::invalid_argument, "cannot write " + o.out);
    }
    auto& s = summary_stream(o);
    s << (is_olh(d) ? "OLH" : "LH") << shape(d);
    if (d.recipe()) s << " via " << d.recipe()->summary();
    s << '\n';
}

int exit_code(const Error& e) {
    switch (e.code()) {
        case Errc::no_olh_exists: return kNoOlh;
        case Errc::parse_error: return kUsage;
        default: return kFailure;
    }
}

std::string describe(const Error& e) {
    std::string s = "olhgen: ";
    s += to_string(e.code());
    if (!e.clause().empty()) s += " (clause " + e.clause() + ")";
    return s + ": " + e.what();
}

/// Seed plan for an expansion to n runs.
RecipePtr seed_plan(std::size_t n0) {
    if (auto p = pinned_recipe(n0)) return *p;
    return plan_widest(n0);
}

bool method_matches(const std::string& method, const RecipePtr& r) {
    if (method == "theorem1") return r->kind == RecipeKind::kronecker;
    if (method == "prop1") return r->kind == RecipeKind::prop1_pair;
    if (method == "prop2") return r->kind == RecipeKind::stack && r->name == "second";
    if (method == "stack") return r->kind == RecipeKind::stack;
    return false;
}

struct ConstructArgs {
    std::size_t n = 0;
    std::string method = "auto";
    std::size_t factor = 0;
    bool plus_one = false;
    OutputOptions out;
};

int cmd_construct(const ConstructArgs& a) {
    require_olh_size(a.n);
    if (a.method == "auto") {
        emit(construct_best(a.n), a.out);
        return kOk;
    }
    if (a.method == "theorem3") {
        if (a.factor == 0) fail(Errc::invalid_argument, "--method theorem3 needs --factor");
        const std::size_t base = a.n - (a.plus_one ? 1 : 0);
        if (base % a.factor != 0)
            fail(Errc::invalid_argument, std::to_string(a.n) + " runs is not " + std::to_string(a.factor) + " x n0" +
                                             (a.plus_one ? " + 1" : ""));
        emit(build(recipes::theorem3(seed_plan(base / a.factor), a.factor, a.plus_one)), a.out);
        return kOk;
    }
    for (const auto& r : plan_candidates(a.n))
        if (method_matches(a.method, r)) {
            emit(build(r), a.out);
            return kOk;
        }
    fail(Errc::invalid_argument, "no " + a.method + " construction applies to n = " + std::to_string(a.n));
}

struct ExpandArgs {
    std::string file;
    std::size_t factor = 2;
    bool plus_one = false;
    OutputOptions out;
};

int cmd_expand(const ExpandArgs& a) {
    emit(theorem3_expand(read_design_file(a.file), a.factor, a.plus_one), a.out);
    return kOk;
}

struct StackArgs {
    std::string a, b;
    std::string method = "auto";
    OutputOptions out;
};

int cmd_stack(const StackArgs& s) {
    const DesignMatrix a = read_design_file(s.a), b = read_design_file(s.b);
    const std::size_t gap = a.runs() > b.runs() ? a.runs() - b.runs() : b.runs() - a.runs();
    const bool first = s.method == "first" || (s.method == "auto" && gap == 1);
    emit(first ? first_stacking(a, b) : second_stacking(a, b), s.out);
    return kOk;
}

struct SearchArgs {
    std::size_t n = 0, m = 0;
    SearchConfig config;
    bool cache = false;
    OutputOptions out;
};

int cmd_search(const SearchArgs& s) {
    const auto result = search_olh(s.n, s.m, s.config);
    emit(result.design, s.out);
    auto& log = summary_stream(s.out);
    if (!result.success) {
        log << "search: best restart reached " << result.design.factors() << " of " << s.m << " columns\n";
        return kFailure;
    }
    log << "search: restart " << result.restart << " succeeded\n";
    if (s.cache) {
        CatalogEntry e{s.n, s.m, result.design, CatalogSource::search};
        log << "cached " << Catalog::save(Catalog::cache_directory(), e, s.config.seed).string() << '\n';
    }
    return kOk;
}

void print_report(const DesignMatrix& d) {
    const auto c = classify(d);
    std::cout << "runs " << d.runs() << ", factors " << d.factors() << '\n'
              << "latin hypercube: " << (c.latin_hypercube ? "yes" : "no") << '\n'
              << "orthogonal: " << (c.orthogonal ? "yes" : "no") << '\n';
    try {
        const auto rep = correlation(d);
        std::cout << "rho_max " << rep.rho_max << '\n' << "rho_sq " << rep.rho_sq << '\n';
    } catch (const Error& e) {
        std::cout << "correlation undefined: " << e.what() << '\n';
    }
}

int cmd_verify(const std::string& file, const std::string& expect) {
    const DesignMatrix d = read_design_file(file);
    print_report(d);
    bool ok = false;
    if (expect == "olh") ok = is_olh(d);
    if (expect == "lh") ok = is_latin_hypercube(d);
    if (expect == "orth") ok = is_orthogonal(d);
    std::cout << expect << ": " << (ok ? "pass" : "fail") << '\n';
    return ok ? kOk : kFailure;
}

int cmd_metrics(const std::string& file) {
    print_report(read_design_file(file));
    return kOk;
}

int cmd_bound(std::size_t n) {
    if (!olh_exists(n)) {
        std::cout << "m* = 1 (no two orthogonal columns exist for n = " << n << ")\n";
        return kOk;
    }
    std::cout << "m* ≥ " << lower_bound_m(n) << '\n';
    auto pinned = pinned_recipe(n);
    const RecipePtr r = pinned ? *pinned : plan_widest(n);
    std::cout << "construct_best: OLH(" << n << ", " << recipes::width_of(r) << ") via " << r->summary() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal Latin hypercube construction and verification"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "widest OLH for n runs, or one built by a chosen method");
    c->add_option("--n", construct.n, "run count")->required()->check(CLI::PositiveNumber);
    c->add_option("--method", construct.method)
        ->check(CLI::IsMember({"auto", "theorem1", "prop1", "prop2", "stack", "theorem3"}));
    c->add_option("--factor", construct.factor, "expansion factor for --method theorem3")
        ->check(CLI::IsMember({2, 4, 8, 16}));
    c->add_flag("--plus-one", construct.plus_one, "expansion to factor * n0 + 1 runs");
    add_output_options(c, construct.out);

    ExpandArgs expand;
    auto* e = app.add_subcommand("expand", "expand an OLH(n, m) by a factor of 2, 4, 8 or 16");
    e->add_option("file", expand.file, "seed design (CSV or JSON)")->required();
    e->add_option("--factor", expand.factor)->required()->check(CLI::IsMember({2, 4, 8, 16}));
    e->add_flag("--plus-one", expand.plus_one, "add a centre run");
    add_output_options(e, expand.out);

    StackArgs stack_args;
    auto* s = app.add_subcommand("stack", "stack two designs on complementary level sets");
    s->add_option("a", stack_args.a, "first design")->required();
    s->add_option("b", stack_args.b, "second design; for the second method, the shifted outer block")->required();
    s->add_option("--method", stack_args.method)->check(CLI::IsMember({"auto", "first", "second"}));
    add_output_options(s, stack_args.out);

    SearchArgs search;
    auto* q = app.add_subcommand("search", "columnwise search for an OLH(n, m)");
    q->add_option("--n", search.n)->required();
    q->add_option("--m", search.m)->required();
    q->add_option("--t1", search.config.t1, "exchanges per added column");
    q->add_option("--t2", search.config.t2, "restarts");
    q->add_option("--seed", search.config.seed);
    q->add_option("--threads", search.config.threads);
    q->add_flag("--cache", search.cache, "save a successful design to the cache directory");
    add_output_options(q, search.out);

    std::string verify_file, expect = "olh";
    auto* v = app.add_subcommand("verify", "check a design exactly");
    v->add_option("file", verify_file)->required();
    v->add_option("--expect", expect)->check(CLI::IsMember({"olh", "lh", "orth"}));

    std::string metrics_file;
    auto* mt = app.add_subcommand("metrics", "correlation summary of a design");
    mt->add_option("file", metrics_file)->required();

    std::size_t bound_n = 0;
    auto* b = app.add_subcommand("bound", "guaranteed number of orthogonal columns for n runs");
    b->add_option("--n", bound_n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::Error& ex) {
        app.exit(ex);
        return kUsage;
    }

    try {
        if (*c) return cmd_construct(construct);
        if (*e) return cmd_expand(expand);
        if (*s) return cmd_stack(stack_args);
        if (*q) return cmd_search(search);
        if (*v) return cmd_verify(verify_file, expect);
        if (*mt) return cmd_metrics(metrics_file);
        if (*b) return cmd_bound(bound_n);
    } catch (const Error& ex) {
        std::cerr << describe(ex) << '\n';
        return exit_code(ex);
    } catch (const std::exception& ex) {
        std::cerr << "olhgen: " << ex.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
