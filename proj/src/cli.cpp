#include "sumprod/cli.hpp"

#include "sumprod/elliptic.hpp"
#include "sumprod/family.hpp"
#include "sumprod/search.hpp"
#include "sumprod/transforms.hpp"

#include <CLI11.hpp>

#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace sumprod::cli {

namespace {

// Thrown for malformed numeric input after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<BigInt> parse_int_list(const std::vector<std::string>& items) {
    std::vector<BigInt> out;
    out.reserve(items.size());
    for (const auto& s : items) {
        try {
            out.push_back(parse_bigint(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items) {
    std::vector<Rat> out;
    out.reserve(items.size());
    for (const auto& s : items) {
        try {
            out.push_back(Rat::parse(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

Format parse_format(const std::string& s) { return s == "tsv" ? Format::Tsv : Format::Jsonl; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    int s = 0;
    std::vector<std::string> parts;
    std::string format = "jsonl";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const auto parts = parse_int_list(args.parts);
    std::optional<DioSolution> sol;
    try {
        sol = DioSolution::from_parts(args.s, parts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!sol) {
        BigInt value = std::accumulate(parts.begin(), parts.end(), BigInt(0));
        for (const auto& a : parts) value *= a;
        err << "not a solution: product * sum = " << value.get_str() << " is not a perfect " << args.s
            << "-th power\n";
        return kMathFailure;
    }
    write_record(out, {*sol, "verify"}, parse_format(args.format));
    return kOk;
}

// --- gen4 --------------------------------------------------------------------

struct Gen4Args {
    long count = 0;
    long max_multiple = 25;
    bool primitive = false;
    std::string from_point;
    std::string format = "jsonl";
};

DioSolution solution_from_s4_point(const CurvePoint& p, bool primitive) {
    DioSolution sol = clear_denominators(s4_inverse(p));
    return primitive ? primitive_reduce(sol) : sol;
}

int cmd_gen4(const Gen4Args& args, std::ostream& out, std::ostream& err) {
    const Format fmt = parse_format(args.format);
    const WeierstrassCurve curve = s4_curve();

    if (!args.from_point.empty()) {
        CurvePoint p;
        try {
            p = parse_point(args.from_point);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!on_curve(curve, p)) {
            err << "point " << p << " is not on " << curve << "\n";
            return kMathFailure;
        }
        if (!s4_in_positive_region(p)) {
            err << "point " << p << " is outside the positive region (x < 243, |y| < 6369 - 27x)";
            if (p.x() != Rat(243)) {
                const BVector b = s4_inverse(p);
                err << "; b = (" << b.entries[0] << ", " << b.entries[1] << ", " << b.entries[2] << ")";
            }
            err << "\n";
            return kMathFailure;
        }
        const DioSolution sol = solution_from_s4_point(p, args.primitive);
        if (!sol.verify()) throw std::logic_error("gen4: emitted record failed verification");
        write_record(out, {sol, "gen4"}, fmt);
        return kOk;
    }

    if (args.count < 1) throw UsageError("--count must be >= 1");
    if (args.max_multiple < 1) throw UsageError("--max-multiple must be >= 1");

    std::set<std::vector<BigInt>> seen;
    long emitted = 0;
    const CurvePoint base = s4_base_point();
    CurvePoint multiple;
    for (long k = 1; k <= args.max_multiple && emitted < args.count; ++k) {
        multiple = add(curve, multiple, base);
        if (multiple.is_infinity()) continue;
        for (const CurvePoint& q : {multiple, neg(multiple)}) {
            if (emitted >= args.count || !s4_in_positive_region(q)) continue;
            DioSolution sol = solution_from_s4_point(q, args.primitive);
            if (!sol.verify()) throw std::logic_error("gen4: emitted record failed verification");
            if (!seen.insert(sol.parts()).second) continue;
            write_record(out, {sol, "gen4"}, fmt);
            ++emitted;
        }
    }
    if (emitted < args.count) {
        err << "only " << emitted << " of " << args.count << " solutions found within " << args.max_multiple
            << " multiples of " << base << "\n";
        return kBudget;
    }
    return kOk;
}

// --- family ------------------------------------------------------------------

struct FamilyArgs {
    int s = 0;
    std::vector<std::string> tail;
    std::string t0;
    std::string t1;
    std::string t2;
    bool primitive = false;
    std::string format = "jsonl";
};

int cmd_family(const FamilyArgs& args, std::ostream& out, std::ostream& err) {
    const bool closed_form = !args.t1.empty() || !args.t2.empty();
    std::optional<DioSolution> sol;
    try {
        if (closed_form) {
            if (args.t1.empty() || args.t2.empty()) throw UsageError("--t1 and --t2 go together");
            if (args.s != 5) throw UsageError("--t1/--t2 select the s = 5 closed form; use --s 5");
            if (!args.tail.empty() || !args.t0.empty()) throw UsageError("--t1/--t2 exclude --tail/--t0");
            const auto t = parse_int_list({args.t1, args.t2});
            sol = s5_polynomial_family({t[0], t[1]});
        } else {
            if (args.tail.empty() || args.t0.empty()) throw UsageError("need --tail and --t0 (or --t1 and --t2)");
            const auto tail = parse_rat_list(args.tail);
            const auto t0 = parse_rat_list({args.t0});
            sol = general_solution(args.s, tail, t0[0]);
        }
    } catch (const PositivityError& e) {
        err << e.what() << "\n" << "D = " << e.quadratic_value() << "\n";
        return kMathFailure;
    } catch (const DegenerateError& e) {
        err << e.what() << "\n";
        return kMathFailure;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    DioSolution result = args.primitive ? primitive_reduce(*sol) : *sol;
    if (!result.verify()) throw std::logic_error("family: emitted record failed verification");
    write_record(out, {result, "family"}, parse_format(args.format));
    return kOk;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
    int s = 0;
    std::uint64_t max_n = 0;
    std::uint64_t max_part = 0;
    unsigned jobs = 1;
    std::string format = "tsv";
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream&) {
    SearchSpec spec{args.s, args.max_n, args.max_part, args.jobs};
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Format fmt = parse_format(args.format);
    for (const auto& sol : enumerate_solutions(spec)) write_record(out, {sol, "search"}, fmt);
    return kOk;
}

// --- s3-analyze --------------------------------------------------------------

struct S3Args {
    std::uint64_t brute_max = 10000;
    unsigned jobs = 1;
};

int cmd_s3_analyze(const S3Args& args, std::ostream& out, std::ostream&) {
    if (args.brute_max < 2) throw UsageError("--brute-max must be >= 2");
    bool consistent = true;
    const WeierstrassCurve curve = s3_curve();
    out << "chart: u = b1/b2, v = 1/b2 gives u^2 + u = v^3\n";
    out << "map: y = 8u + 4, x = 4v\n";
    out << "curve: " << curve << "\n";
    out << "discriminant: " << discriminant(curve) << "\n";

    const auto candidates = nagell_lutz_candidates(curve);
    out << "nagell-lutz candidates:";
    for (const auto& p : candidates) out << ' ' << p;
    out << "\n";

    std::size_t positive = 0;
    for (const auto& p : candidates) {
        out << "trace-back " << p << ": ";
        const auto b = s3_trace_back(p);
        if (!b) {
            out << "degenerate (v = 0)\n";
            continue;
        }
        const bool pos = b->first.sign() > 0 && b->second.sign() > 0;
        out << "(b1, b2) = (" << b->first << ", " << b->second << ")" << (pos ? " positive" : " not positive") << "\n";
        positive += pos ? 1 : 0;
    }
    out << "positive trace-backs: " << positive << "\n";
    consistent = consistent && positive == 0;

    const auto brute = enumerate_solutions({3, args.brute_max, 0, args.jobs});
    out << "brute force a1 <= a2, a1 + a2 <= " << args.brute_max << ": " << brute.size() << " solutions\n";
    for (const auto& sol : brute) write_record(out, {sol, "s3"}, Format::Jsonl);
    consistent = consistent && brute.empty();

    // y = 16u + 8 sends u^2 + u = v^3 to y^2 = 256 v^3 + 64, which is not
    // x^3 + 64 for x = 4v; the listed points are still checked on that curve.
    const WeierstrassCurve alt(Rat(0), Rat(0), Rat(64));
    out << "note: y = 16u + 8, x = 4v gives y^2 - x^3 - 64 = 192 v^3, so it does not map onto " << alt << "\n";
    out << "points on " << alt << ":";
    for (const CurvePoint& p : {CurvePoint(Rat(8), Rat(24)), CurvePoint(Rat(8), Rat(-24)), CurvePoint(Rat(0), Rat(8)),
                                CurvePoint(Rat(0), Rat(-8)), CurvePoint(Rat(-4), Rat(0))}) {
        const bool on = on_curve(alt, p);
        out << ' ' << p << '=' << yes_no(on);
        consistent = consistent && on;
    }
    out << "\n";
    out << "rank 0 of both curves is an external input, not re-derived here\n";
    out << "result: " << (consistent ? "no positive solutions for s = 3" : "INCONSISTENT") << "\n";
    return consistent ? kOk : kMathFailure;
}

}  // namespace

std::string to_jsonl(const OutputRecord& rec) {
    std::ostringstream os;
    os << "{\"s\":" << rec.solution.s() << ",\"parts\":[";
    for (std::size_t i = 0; i < rec.solution.parts().size(); ++i) {
        if (i) os << ',';
        os << rec.solution.parts()[i].get_str();
    }
    os << "],\"n\":" << rec.solution.n().get_str() << ",\"b\":" << rec.solution.b().get_str() << ",\"source\":\""
       << rec.source << "\"}";
    return os.str();
}

std::string to_tsv(const OutputRecord& rec) {
    std::ostringstream os;
    for (const auto& a : rec.solution.parts()) os << a.get_str() << '\t';
    os << rec.solution.b().get_str() << '\t' << rec.solution.n().get_str();
    return os.str();
}

void write_record(std::ostream& out, const OutputRecord& rec, Format fmt) {
    out << (fmt == Format::Tsv ? to_tsv(rec) : to_jsonl(rec)) << '\n';
}

CurvePoint parse_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("point must be written x,y");
    return {Rat::parse(text.substr(0, comma)), Rat::parse(text.substr(comma + 1))};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solutions of n = a_1 + ... + a_{s-1}, a_1 ... a_{s-1} n = b^s", "sumprod"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"jsonl", "tsv"};

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate solution and report b");
    verify_cmd->add_option("--s", verify.s, "Exponent s >= 3")->required()->check(CLI::Range(3, 1 << 20));
    verify_cmd->add_option("--parts", verify.parts, "a_1,...,a_{s-1}")->required()->delimiter(',');
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember(formats));

    Gen4Args gen4;
    auto* gen4_cmd = app.add_subcommand("gen4", "Generate s = 4 solutions from multiples of (235, 8)");
    gen4_cmd->add_option("--count", gen4.count, "Number of distinct solutions");
    gen4_cmd->add_option("--max-multiple", gen4.max_multiple, "Largest k in [k](235, 8)");
    gen4_cmd->add_flag("--primitive", gen4.primitive, "Divide out gcd(parts, b)");
    gen4_cmd->add_option("--from-point", gen4.from_point, "Map one point x,y (rationals p/q)");
    gen4_cmd->add_option("--format", gen4.format)->check(CLI::IsMember(formats));

    FamilyArgs family;
    auto* family_cmd = app.add_subcommand("family", "Instantiate the s >= 5 parametric family");
    family_cmd->add_option("--s", family.s, "Exponent s >= 5")->required()->check(CLI::Range(5, 1 << 20));
    family_cmd->add_option("--tail", family.tail, "b_4,...,b_{s-1} as rationals")->delimiter(',');
    family_cmd->add_option("--t0", family.t0, "Positive rational t0");
    family_cmd->add_option("--t1", family.t1, "s = 5 closed form: t1");
    family_cmd->add_option("--t2", family.t2, "s = 5 closed form: t2");
    family_cmd->add_flag("--primitive", family.primitive, "Divide out gcd(parts, b)");
    family_cmd->add_option("--format", family.format)->check(CLI::IsMember(formats));

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Enumerate all solutions with n <= max-n");
    search_cmd->add_option("--s", search.s, "Exponent s >= 3")->required()->check(CLI::Range(3, 64));
    search_cmd->add_option("--max-n", search.max_n, "Largest n")->required();
    search_cmd->add_option("--max-part", search.max_part, "Largest a_i (default max-n)");
    search_cmd->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--format", search.format)->check(CLI::IsMember(formats));

    S3Args s3;
    auto* s3_cmd = app.add_subcommand("s3-analyze", "Show that s = 3 has no positive solutions");
    s3_cmd->add_option("--brute-max", s3.brute_max, "Brute-force bound on a1 + a2");
    s3_cmd->add_option("--jobs", s3.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*gen4_cmd) return cmd_gen4(gen4, out, err);
        if (*family_cmd) return cmd_family(family, out, err);
        if (*search_cmd) return cmd_search(search, out, err);
        if (*s3_cmd) return cmd_s3_analyze(s3, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"sumprod"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sumprod::cli
