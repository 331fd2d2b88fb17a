#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "u3cyclic/codespec.hpp"
#include "u3cyclic/formulas.hpp"
#include "u3cyclic/gf2m.hpp"
#include "u3cyclic/oracle.hpp"
#include "u3cyclic/polyring.hpp"

namespace u3c::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_capacity_error(const std::exception& e) {
    return std::string_view(e.what()).starts_with("capacity:");
}

// Positional spec argument: inline JSON ("{...}"), "-" for stdin, or a path.
std::string slurp_spec_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open spec file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string unit_cell(const UnitPoly& z) {
    if (z.is_zero()) return "zero";
    std::string s;
    for (size_t i = 0; i < z.coeffs.size(); ++i) {
        if (i) s += ';';
        s += bits_to_hex(z.coeffs[i]);
    }
    return s;
}

std::string coverage_name(Coverage c) {
    switch (c) {
        case Coverage::Exact: return "exact";
        case Coverage::Bounds: return "bounds";
        default: return "not_covered";
    }
}

// One sweep/distance evaluation. Oracle fields are empty after a capacity
// refusal; `verdict` then reads CAPACITY and `note` carries the message.
struct Row {
    CodeSpec spec;
    DerivedParams derived;
    DistanceResult lee;
    DistanceResult ham;
    DistanceResult sandwich;
    bool has_oracle = false;
    OracleReport rep{};
    std::string verdict;
    std::string note;
    long ms = 0;
};

std::string judge(const Row& r) {
    if (!r.has_oracle) return "CAPACITY";
    switch (r.lee.kind) {
        case Coverage::Exact:
            return r.lee.value == long(r.rep.d_lee) ? "MATCH" : "MISMATCH";
        case Coverage::Bounds:
            return (r.lee.lo <= long(r.rep.d_lee) &&
                    long(r.rep.d_lee) <= r.lee.hi)
                       ? "WITHIN_BOUNDS"
                       : "MISMATCH";
        default:
            return "NOT_COVERED";
    }
}

Row eval_row(const CodeSpec& s, const TraceOrthogonalBasis& B,
             unsigned budget) {
    const auto t0 = std::chrono::steady_clock::now();
    Row r;
    r.spec = s;
    r.derived = smallest_params_formula(s);
    r.lee = lee_distance(s);
    r.ham = hamming_distance(s);
    r.sandwich = lee_bounds_sandwich(s);
    try {
        const BinarySpan span = build_span(s, B, budget);
        r.rep = min_weights(span, B);
        r.has_oracle = true;
    } catch (const std::runtime_error& e) {
        if (!is_capacity_error(e)) throw;
        r.note = e.what();
    }
    r.verdict = judge(r);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count();
    return r;
}

// Fixed sweep columns. `lo`/`hi` carry the theorem interval on bounds rows
// and the sandwich envelope on not_covered rows; `ms` stays empty so
// re-runs are byte-identical.
const char* kCsvHeader =
    "type,sigma,m,which,ell,t,mu,alpha,beta,omega,T1,T2,T3,"
    "z,z1,z2,z3,L,U,V,W,L1,formula_kind,formula_value,lo,hi,source,"
    "oracle_dlee,oracle_dham,verdict,ms";

std::vector<std::string> row_cells(const Row& r) {
    const CodeSpec& s = r.spec;
    auto num = [](long v) { return std::to_string(v); };
    auto opt = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
    std::vector<std::string> c;
    c.push_back(num(s.type));
    c.push_back(num(s.sigma));
    c.push_back(num(s.m));
    c.push_back(num(s.which));
    c.push_back(num(s.ell));
    c.push_back(num(s.t));
    c.push_back(num(s.mu));
    c.push_back(num(s.alpha));
    c.push_back(num(s.beta));
    c.push_back(num(s.omega));
    c.push_back(num(s.T1));
    c.push_back(num(s.T2));
    c.push_back(num(s.T3));
    c.push_back(unit_cell(s.z));
    c.push_back(unit_cell(s.z1));
    c.push_back(unit_cell(s.z2));
    c.push_back(unit_cell(s.z3));
    c.push_back(opt(r.derived.L));
    c.push_back(opt(r.derived.U));
    c.push_back(opt(r.derived.V));
    c.push_back(opt(r.derived.W));
    c.push_back(opt(r.derived.L1));
    c.push_back(coverage_name(r.lee.kind));
    c.push_back(r.lee.kind == Coverage::Exact ? num(r.lee.value)
                                              : std::string());
    switch (r.lee.kind) {
        case Coverage::Exact:
            c.push_back("");
            c.push_back("");
            break;
        case Coverage::Bounds:
            c.push_back(num(r.lee.lo));
            c.push_back(num(r.lee.hi));
            break;
        default:
            c.push_back(num(r.sandwich.lo));
            c.push_back(num(r.sandwich.hi));
            break;
    }
    c.push_back(r.lee.source);
    c.push_back(r.has_oracle ? num(r.rep.d_lee) : std::string());
    c.push_back(r.has_oracle ? num(r.rep.d_hamming) : std::string());
    c.push_back(r.verdict);
    c.push_back("");  // ms: kept empty for determinism
    return c;
}

std::string csv_line(const Row& r) {
    std::string line;
    const auto cells = row_cells(r);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

ordered_json row_json(const Row& r) {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> ks;
        std::stringstream ss(kCsvHeader);
        std::string k;
        while (std::getline(ss, k, ',')) ks.push_back(k);
        return ks;
    }();
    const auto cells = row_cells(r);
    ordered_json j = ordered_json::object();
    for (size_t i = 0; i < keys.size(); ++i) j[keys[i]] = cells[i];
    return j;
}

ordered_json distance_result_json(const DistanceResult& d) {
    ordered_json j = ordered_json::object();
    j["kind"] = coverage_name(d.kind);
    if (d.kind == Coverage::Exact) j["value"] = d.value;
    if (d.kind == Coverage::Bounds) {
        j["lo"] = d.lo;
        j["hi"] = d.hi;
    }
    j["source"] = d.source;
    if (d.gamma >= 0) j["gamma"] = d.gamma;
    return j;
}

ordered_json derived_json(const DerivedParams& d) {
    auto opt = [](int v) {
        return v < 0 ? ordered_json(nullptr) : ordered_json(v);
    };
    ordered_json j = ordered_json::object();
    j["L"] = opt(d.L);
    j["U"] = opt(d.U);
    j["V"] = opt(d.V);
    j["W"] = opt(d.W);
    j["L1"] = opt(d.L1);
    return j;
}

int cmd_tob(unsigned m, std::ostream& out) {
    const FieldCtx ctx = FieldCtx::make(m);
    const TraceOrthogonalBasis B = find_tob(ctx);
    out << "m=" << m << " modulus=" << modulus_bit_string(ctx) << "\n";
    out << "TOB: {";
    for (size_t i = 0; i < B.elems.size(); ++i)
        out << (i ? ", " : "") << to_hex(B.elems[i]);
    out << "}\n";
    out << "Gram:\n";
    for (size_t i = 0; i < B.elems.size(); ++i) {
        for (size_t j = 0; j < B.elems.size(); ++j)
            out << (j ? " " : "")
                << trace(mul(B.elems[i], B.elems[j])).bits;
        out << "\n";
    }
    return kExitOk;
}

int cmd_validate(const std::string& spec_arg, std::ostream& out,
                 std::ostream& err) {
    const CodeSpec s = spec_from_json(slurp_spec_text(spec_arg));
    const auto violations = validate(s);
    if (violations.empty()) {
        out << "OK " << spec_to_json(s) << "\n";
        return kExitOk;
    }
    for (const auto& v : violations) err << "violation: " << v << "\n";
    return kExitUsage;
}

int cmd_construct(const std::string& spec_arg, std::ostream& out) {
    const CodeSpec s = spec_from_json(slurp_spec_text(spec_arg));
    validate_or_throw(s);
    const FieldCtx ctx = FieldCtx::make(s.m);
    ordered_json j = ordered_json::object();
    j["spec"] = ordered_json::parse(spec_to_json(s));
    ordered_json gens = ordered_json::array();
    for (const PolyS& g : generators(s, ctx)) gens.push_back(to_string(g));
    j["generators"] = gens;
    j["derived"] = derived_json(smallest_params_formula(s));
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_span_dump(const std::string& spec_arg, unsigned budget,
                  const std::string& out_path, std::ostream& out) {
    const CodeSpec s = spec_from_json(slurp_spec_text(spec_arg));
    validate_or_throw(s);
    const FieldCtx ctx = FieldCtx::make(s.m);
    const TraceOrthogonalBasis B = find_tob(ctx);
    const std::string text = span_to_text(build_span(s, B, budget));
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open --out file: " +
                                            out_path);
        f << text;
    }
    return kExitOk;
}

int cmd_distance(const std::string& spec_arg, const std::string& mode,
                 unsigned budget, std::ostream& out) {
    const CodeSpec s = spec_from_json(slurp_spec_text(spec_arg));
    validate_or_throw(s);
    if (mode == "formula") {
        ordered_json j = ordered_json::object();
        j["mode"] = "formula";
        j["spec"] = ordered_json::parse(spec_to_json(s));
        j["theorem"] = lee_theorem(s);
        j["lee"] = distance_result_json(lee_distance(s));
        j["hamming"] = distance_result_json(hamming_distance(s));
        j["sandwich"] = distance_result_json(lee_bounds_sandwich(s));
        j["derived"] = derived_json(smallest_params_formula(s));
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    const FieldCtx ctx = FieldCtx::make(s.m);
    const TraceOrthogonalBasis B = find_tob(ctx);
    if (mode == "oracle") {
        const BinarySpan span = build_span(s, B, budget);
        const OracleReport rep = min_weights(span, B);
        out << report_to_json(rep) << "\n";
        return kExitOk;
    }
    // both
    const Row r = eval_row(s, B, budget);
    ordered_json j = ordered_json::object();
    j["mode"] = "both";
    j["spec"] = ordered_json::parse(spec_to_json(s));
    j["theorem"] = lee_theorem(s);
    j["lee"] = distance_result_json(r.lee);
    j["hamming"] = distance_result_json(r.ham);
    j["sandwich"] = distance_result_json(r.sandwich);
    j["derived"] = derived_json(r.derived);
    if (r.has_oracle)
        j["oracle"] = ordered_json::parse(report_to_json(r.rep));
    else
        j["oracle"] = r.note;
    j["verdict"] = r.verdict;
    j["ms"] = r.ms;
    out << j.dump(2) << "\n";
    if (r.verdict == "MISMATCH") return kExitMismatch;
    if (r.verdict == "CAPACITY") return kExitCapacity;
    return kExitOk;
}

int cmd_sweep(unsigned sigma, unsigned m, std::vector<int> types,
              long sample_budget, uint64_t seed, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    if (types.empty()) types = {1, 2, 3, 4, 5, 6, 7, 8};
    const uint64_t cap =
        sample_budget >= 0 ? uint64_t(sample_budget) : (sigma >= 3 ? 4 : 0);
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CodeSpec> specs =
        enumerate_specs(sigma, m, types, cap, seed);
    const FieldCtx ctx = FieldCtx::make(m);
    const TraceOrthogonalBasis B = find_tob(ctx);

    std::vector<Row> rows(specs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            rows[i] = eval_row(specs[i], B, kOracleBudget);
        }
    };
    const unsigned nw = std::max(
        1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nw; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    // Row output: --out file by extension, else CSV on stdout.
    std::string fmt = "csv";
    if (!out_path.empty()) {
        if (out_path.ends_with(".json")) fmt = "json";
        else if (out_path.ends_with(".csv")) fmt = "csv";
        else throw std::invalid_argument(
                 "--out must end with .csv or .json: " + out_path);
    }
    std::ostringstream body;
    if (fmt == "csv") {
        body << kCsvHeader << "\n";
        for (const Row& r : rows) body << csv_line(r) << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) arr.push_back(row_json(r));
        body << arr.dump(2) << "\n";
    }
    if (out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open --out file: " +
                                            out_path);
        f << body.str();
    }

    // Deterministic summary: verdict totals, then per-clause counts.
    std::map<std::string, int> verdicts;
    std::map<std::string, std::pair<int, int>> clauses;  // rows, mismatches
    for (const Row& r : rows) {
        ++verdicts[r.verdict];
        auto& c = clauses[r.lee.source];
        ++c.first;
        if (r.verdict == "MISMATCH") ++c.second;
    }
    std::ostringstream sum;
    sum << "sweep sigma=" << sigma << " m=" << m << " types=";
    for (size_t i = 0; i < types.size(); ++i)
        sum << (i ? "," : "") << types[i];
    sum << " samples=" << cap << " seed=" << seed
        << " specs=" << specs.size() << "\n";
    sum << "verdicts:";
    for (const char* v :
         {"MATCH", "WITHIN_BOUNDS", "NOT_COVERED", "MISMATCH", "CAPACITY"})
        sum << " " << v << "=" << (verdicts.count(v) ? verdicts[v] : 0);
    sum << "\n";
    for (const auto& [src, c] : clauses)
        sum << "clause " << src << ": rows=" << c.first
            << " mismatch=" << c.second << "\n";
    // Summary travels with stdout when rows went to a file, otherwise to
    // stderr so piped row output stays clean.
    (out_path.empty() ? err : out) << sum.str();
    err << "elapsed_ms="
        << std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count()
        << "\n";
    return verdicts["MISMATCH"] ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "cyclic codes of length 2^sigma over F_2^m[u]/(u^3): closed-form "
        "distance tables cross-checked against an exhaustive Gray-image "
        "search"};
    app.name("u3cyclic");
    app.require_subcommand(1);

    unsigned m = 1;
    unsigned sigma = 2;
    unsigned budget = kOracleBudget;
    long sample_budget = -1;  // sweep: -1 = auto (0 for sigma<=2, 4 above)
    uint64_t seed = 1;
    std::string mode = "both";
    std::string out_path;
    std::string spec_arg;
    std::vector<int> types;

    auto* tob = app.add_subcommand("tob", "trace-orthogonal basis + Gram");
    tob->add_option("--m", m, "field degree m >= 1")
        ->required()
        ->check(CLI::Range(1u, 16u));

    auto* validate_cmd =
        app.add_subcommand("validate", "check a spec (JSON) against the "
                                       "classification constraints");
    validate_cmd->add_option("spec", spec_arg, "file, '-', or inline JSON")
        ->required();

    auto* construct = app.add_subcommand(
        "construct", "print generators and derived parameters of a spec");
    construct->add_option("spec", spec_arg, "file, '-', or inline JSON")
        ->required();

    auto* distance = app.add_subcommand(
        "distance", "evaluate formula and/or search oracle for one spec");
    distance->add_option("spec", spec_arg, "file, '-', or inline JSON")
        ->required();
    distance->add_option("--mode", mode, "formula|oracle|both (default both)")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    distance->add_option("--budget", budget, "max span dimension k (<= 26)")
        ->check(CLI::Range(1u, unsigned(kOracleBudget)));

    auto* sweep = app.add_subcommand(
        "sweep", "enumerate specs, evaluate both sides, cross-check");
    sweep->add_option("--sigma", sigma, "length exponent (2..5)")
        ->required()
        ->check(CLI::Range(2u, 5u));
    sweep->add_option("--m", m, "field degree")->check(CLI::Range(1u, 8u));
    sweep->add_option("--type", types, "code families, e.g. --type 2,3")
        ->delimiter(',')
        ->check(CLI::Range(1, 8));
    sweep->add_option("--budget", sample_budget,
                      "unit-poly samples per slot (0 = exhaustive; default "
                      "0 for sigma<=2, 4 above)");
    sweep->add_option("--seed", seed, "sampling seed");
    sweep->add_option("--out", out_path, "row file (.csv or .json)");

    auto* span_dump = app.add_subcommand(
        "span-dump", "serialize the RREF basis of a spec's Gray image");
    span_dump->add_option("spec", spec_arg, "file, '-', or inline JSON")
        ->required();
    span_dump->add_option("--budget", budget, "max span dimension k (<= 26)")
        ->check(CLI::Range(1u, unsigned(kOracleBudget)));
    span_dump->add_option("--out", out_path, "write to file instead of "
                                             "stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (tob->parsed()) return cmd_tob(m, out);
        if (validate_cmd->parsed()) return cmd_validate(spec_arg, out, err);
        if (construct->parsed()) return cmd_construct(spec_arg, out);
        if (distance->parsed()) return cmd_distance(spec_arg, mode, budget,
                                                    out);
        if (sweep->parsed())
            return cmd_sweep(sigma, m, types, sample_budget, seed, out_path,
                             out, err);
        if (span_dump->parsed())
            return cmd_span_dump(spec_arg, budget, out_path, out);
    } catch (const std::runtime_error& e) {
        if (is_capacity_error(e)) {
            err << e.what() << "\n";
            return kExitCapacity;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace u3c::cli
