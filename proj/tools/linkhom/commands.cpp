#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "linkhom/generator.hpp"
#include "linkhom/io.hpp"
#include "report.hpp"

namespace linkhom::cli {

namespace {

struct Globals {
    std::string format = "text";
    bool timestamps = false;
};

// Raised for failures that indicate a bug rather than bad input.
struct InternalAssertion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Report header(const std::string& command, const Globals& g) {
    Report r;
    r["format_version"] = kFormatVersion;
    r["command"] = command;
    if (g.timestamps) r["generated_at"] = utc_now();
    return r;
}

void emit(std::ostream& out, const Report& r, const Globals& g) {
    out << render(r, g.format == "json" ? Format::Json : Format::Text);
}

FiberPoint parse_point(const std::string& text) {
    if (text == "generic") return FiberPoint::generic();
    return FiberPoint::at(Rational::parse(text));
}

std::string solve_summary(const SolveReport& rep) {
    std::ostringstream os;
    for (const auto& [x, d] : rep.fiber_dims)
        if (!x.is_generic()) os << "fiber dim at " << x.to_string() << ": " << d << ", ";
    os << "generic dim: " << rep.generic_dim << ", rm: " << rep.rm << ", ";
    if (rep.is_vector_bundle)
        os << "VECTOR BUNDLE";
    else if (rep.flatness_failure)
        os << "NOT FLAT";
    else
        os << "NOT A VECTOR BUNDLE OF RANK rm";
    return os.str();
}

struct CheckOutcome {
    Report conditions = Report::array();
    Report skipped = Report::array();
    std::vector<std::string> failed;
};

CheckOutcome run_checks(const LinkedChain& chain, const std::vector<FiberPoint>& requested, Report& report) {
    CheckOutcome o;
    auto record = [&](const ConditionReport& rep) {
        if (!rep.passed)
            o.failed.push_back(condition_name(rep.condition) + " at " + (rep.point ? rep.point->to_string() : "global"));
        o.conditions.push_back(condition_json(rep));
    };
    record(check_condition_I(chain));

    SpecialPoints sp = special_points(chain);
    std::vector<FiberPoint> pts = points_to_check(sp);
    for (const auto& x : requested) {
        if (x.vanishes(chain.s()))
            pts.push_back(x);
        else
            o.skipped.push_back(x.to_string());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& x : pts) {
        record(check_condition_II(chain, x));
        record(check_condition_III(chain, x));
    }

    Report spj = Report::array();
    for (const auto& a : sp.roots) spj.push_back(a.to_string());
    report["special_points"] = std::move(spj);
    report["s_is_zero"] = sp.s_is_zero;
    report["warnings"] = sp.warnings;
    return o;
}

int cmd_check(const std::string& path, const std::vector<std::string>& point_args, const Globals& g,
              std::ostream& out) {
    ChainFile cf = parse_chain_file(path);
    std::vector<FiberPoint> requested;
    for (const auto& p : point_args) requested.push_back(parse_point(p));
    for (const auto& a : cf.extra_points) requested.push_back(FiberPoint::at(a));

    Report r = header("check", g);
    r["summary"] = "";
    r["chain"] = chain_summary(cf.chain);
    CheckOutcome o = run_checks(cf.chain, requested, r);
    r["conditions"] = std::move(o.conditions);
    r["skipped_points"] = std::move(o.skipped);
    r["all_passed"] = o.failed.empty();
    std::string summary = "conditions I, II, III: ";
    if (o.failed.empty()) {
        summary += "all hold";
    } else {
        summary += "failed ";
        for (std::size_t k = 0; k < o.failed.size(); ++k) summary += (k ? ", " : "") + o.failed[k];
    }
    r["summary"] = summary;
    emit(out, r, g);
    return o.failed.empty() ? kOk : kConditionFailure;
}

int cmd_solve(const std::string& path, bool basis, bool expect_failure, const Globals& g, std::ostream& out) {
    ChainFile cf = parse_chain_file(path);
    SolveOptions opts;
    opts.extra_points = cf.extra_points;
    opts.want_basis = basis;
    SolveReport rep = vector_bundle_check(cf.chain, opts);

    Report r = header("solve", g);
    r["summary"] = solve_summary(rep);
    r["chain"] = chain_summary(cf.chain);
    r["expect_failure"] = expect_failure;
    r.update(solve_json(rep));
    emit(out, r, g);
    const bool success = rep.is_vector_bundle != expect_failure;
    return success ? kOk : kNotVectorBundle;
}

int cmd_structure(const std::string& path, const std::string& point, const Globals& g, std::ostream& out) {
    ChainFile cf = parse_chain_file(path);
    const FiberPoint x = parse_point(point);
    Report r = header("structure", g);
    r["summary"] = "";
    r["chain"] = chain_summary(cf.chain);
    auto fail = [&](const std::string& kind, const std::string& reason) {
        r["summary"] = "no splitting at " + x.to_string() + ": " + reason;
        r["ok"] = false;
        r["failure"] = kind;
        r["reason"] = reason;
        emit(out, r, g);
        return kConditionFailure;
    };
    try {
        StructureDecomposition d = structure_decomposition(cf.chain, x);
        r["summary"] = "splitting at " + x.to_string() + ": rank G' = " + std::to_string(d.ell) +
                       ", rank G'' = " + std::to_string(d.m2()) + (d.trivial ? " (s is a unit here)" : "");
        r["ok"] = true;
        r.update(structure_json(cf.chain, d));
        emit(out, r, g);
        return kOk;
    } catch (const ComplementarityFailure& e) {
        return fail("complementarity", e.what());
    } catch (const FullRankFailure& e) {
        return fail("full_rank", e.what());
    } catch (const PoleAtPoint& e) {
        return fail("pole", e.what());
    }
}

struct GenArgs {
    long r = 1, m = 1, m1 = 0, n = 2;
    std::string s;
    std::uint64_t seed = 0;
    std::string out;
    std::string target;
    long entry_bound = 3;
    bool no_conjugate = false;
};

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
    GenParams p;
    p.r = a.r;
    p.m = a.m;
    p.m1 = a.m1;
    p.n = a.n;
    p.s = parse_poly_argument(a.s);
    p.seed = a.seed;
    p.entry_bound = a.entry_bound;
    p.conjugate = !a.no_conjugate;

    LinkedChain chain = [&] {
        if (a.target.empty()) return gen_valid_chain(p);
        const Condition c = a.target == "I" ? Condition::I : a.target == "II" ? Condition::II : Condition::III;
        return gen_broken_chain(p, c);
    }();
    {
        std::ofstream f(a.out);
        if (!f) throw ParseError("cannot write " + a.out);
        f << chain_to_text(chain);
        if (!f) throw ParseError("error writing " + a.out);
    }

    Report r = header("gen", g);
    const std::string kind = a.target.empty() ? "valid" : "broken " + a.target;
    r["summary"] = "wrote " + kind + " chain to " + a.out;
    r["out"] = a.out;
    r["kind"] = kind;
    r["chain"] = chain_summary(chain);
    r["m1"] = a.m1;
    r["seed"] = a.seed;
    r["conjugated"] = p.conjugate;
    emit(out, r, g);
    return kOk;
}

int cmd_demo(const Globals& g, std::ostream& out) {
    const LinkedChain chain = counterexample_chain();
    Report r = header("demo", g);
    r["summary"] = "";
    r["name"] = "counterexample";
    r["chain"] = chain_summary(chain);
    CheckOutcome o = run_checks(chain, {}, r);
    r["conditions"] = std::move(o.conditions);

    SolveReport rep = vector_bundle_check(chain);
    const auto d0 = rep.dim_at(FiberPoint::at(Rational(0)));
    if (!d0 || *d0 != 4 || rep.generic_dim != 3 || rep.rm != 3 || !rep.flatness_failure)
        throw InternalAssertion("counterexample fiber dimensions differ from 4 (t=0) and 3 (generic)");
    r["summary"] = solve_summary(rep);
    r["solve"] = solve_json(rep);
    emit(out, r, g);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linked-chain Hom module checks over Q[t]", "linkhom"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timestamps", g.timestamps, "Add a generation timestamp to reports");
    app.fallthrough();

    std::string file, point;
    std::vector<std::string> points;
    bool basis = false, expect_failure = false;
    GenArgs ga;
    std::string demo_name;

    auto* check = app.add_subcommand("check", "Check conditions (I), (II), (III); exit 1 on failure");
    check->add_option("file", file, "Chain spec (JSON)")->required();
    check->add_option("--point", points, "Additional point t=a to check (repeatable)");

    auto* solve = app.add_subcommand("solve", "Fiber dimensions and vector-bundle verdict; exit 2 if not");
    solve->add_option("file", file, "Chain spec (JSON)")->required();
    solve->add_flag("--basis", basis, "Include a free Q[t]-basis of the solution module");
    solve->add_flag("--expect-failure", expect_failure, "Exit 0 iff the chain is NOT a vector bundle");

    auto* structure = app.add_subcommand("structure", "Local splitting at a point; exit 1 if none");
    structure->add_option("file", file, "Chain spec (JSON)")->required();
    structure->add_option("--point", point, "Rational point, or 'generic'")->required();

    auto* gen = app.add_subcommand("gen", "Write a generated chain spec");
    gen->add_option("--r", ga.r, "Rank of the F chain")->required();
    gen->add_option("--m", ga.m, "Rank of the G chain")->required();
    gen->add_option("--m1", ga.m1, "Rank of the forward-invertible block")->required();
    gen->add_option("--n", ga.n, "Chain length")->required();
    gen->add_option("--s", ga.s, "s as ascending coefficients, e.g. 0,0,1 or [\"0\",\"0\",\"1\"]")->required();
    gen->add_option("--seed", ga.seed, "PRNG seed")->required();
    gen->add_option("--out", ga.out, "Output path")->required();
    gen->add_option("--break", ga.target, "Violate one condition")->check(CLI::IsMember({"I", "II", "III"}));
    gen->add_option("--entry-bound", ga.entry_bound, "Bound on random entries")->capture_default_str();
    gen->add_flag("--no-conjugate", ga.no_conjugate, "Emit the block model without a change of basis");

    auto* demo = app.add_subcommand("demo", "Built-in examples");
    demo->add_option("name", demo_name, "Example name")->required()->check(CLI::IsMember({"counterexample"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmd_check(file, points, g, out);
        if (*solve) return cmd_solve(file, basis, expect_failure, g, out);
        if (*structure) return cmd_structure(file, point, g, out);
        if (*gen) return cmd_gen(ga, g, out);
        if (*demo) return cmd_demo(g, out);
    } catch (const ParseError& e) {
        err << "linkhom: " << e.what() << "\n";
        return kInputError;
    } catch (const ShapeMismatch& e) {
        err << "linkhom: " << e.what() << "\n";
        return kInputError;
    } catch (const ZeroDenominator& e) {
        err << "linkhom: " << e.what() << "\n";
        return kInputError;
    } catch (const Infeasible& e) {
        err << "linkhom: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalAssertion& e) {
        err << "linkhom: internal assertion failed: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "linkhom: internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "linkhom: no command\n";
    return kInputError;
}

}  // namespace linkhom::cli
