#pragma once

// Command-line front end: every command prints one JSON document to `out`
// and diagnostics to `err`. Exit codes: 0 ok, 1 internal invariant breach,
// 2 usage, 3 resource cap, 4 fit failure.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/syt.hpp"

namespace syt::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

enum ExitCode : int { ok = 0, internal = 1, usage = 2, resource = 3, fit_failure = 4 };

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline json cell_json(Cell c) { return json::array({c.row, c.col}); }
inline json shape_json(const Partition& p) { return json(p.parts()); }
inline json rows_json(const std::vector<std::vector<int>>& rows) { return json(rows); }

inline json distribution_json(const DiscreteDistribution& d)
{
    json out = json::object();
    for (std::size_t t = 0; t < d.size(); ++t) out[std::to_string(d.support()[t])] = to_string(d.probs()[t]);
    return out;
}

inline std::string distribution_csv(const DiscreteDistribution& d)
{
    std::string out = "value,probability\n";
    for (std::size_t t = 0; t < d.size(); ++t) out += std::to_string(d.support()[t]) + "," + to_string(d.probs()[t]) + "\n";
    return out;
}

inline json moments_json(const Moments& m)
{
    json out = {{"mean", to_string(m.mean)},
                {"variance", to_string(m.variance)},
                {"mean_float", to_double(m.mean)},
                {"variance_float", to_double(m.variance)}};
    if (m.scaled)
        out["scaled_moments_float"] = *m.scaled;
    else
        out["scaled_moments_float"] = nullptr;
    return out;
}

inline json pair_json(Cell a, Cell b) { return json::array({cell_json(a), cell_json(b)}); }

// Everything parsed from the command line, as strings until the command runs.
struct Args {
    std::string shape;
    std::string cell, c1, c2;
    std::optional<int> r;
    bool pgf = false;
    bool csv = false;
    bool direct = false;
    std::optional<std::size_t> limit;
    std::optional<int> max_cells;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    unsigned workers = 1;
    int rows = 0;
    std::string target;
    int j = 0;
    int order = 3;
    int max_deg = default_max_degree;
    int max_col = 0;
    int kmax = 6;
};

class Document {
public:
    explicit Document(std::string command) { doc_ = {{"schema_version", schema_version}, {"command", std::move(command)}}; }

    json& inputs() { return doc_["inputs"]; }
    json& result() { return doc_["result"]; }
    void warn(std::string w) { warnings_.push_back(std::move(w)); }

    json finish()
    {
        if (!doc_.contains("inputs")) doc_["inputs"] = json::object();
        if (!doc_.contains("result")) doc_["result"] = nullptr;
        doc_["warnings"] = warnings_;
        return doc_;
    }

private:
    json doc_;
    std::vector<std::string> warnings_;
};

inline int enumeration_cap(const Args& a) { return a.max_cells ? *a.max_cells : enumeration_cap_from_env(); }

inline void cmd_count(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    doc.inputs() = {{"shape", shape_json(lambda)}};
    const BigInteger yf = count_syt_yf(lambda);
    const BigInteger hook = count_syt_hook(lambda);
    doc.result() = {{"yf", to_string(yf)}, {"hook", to_string(hook)}, {"agree", yf == hook}};
    if (yf != hook) throw InternalError("Young-Frobenius and hook length counts disagree");
}

inline void cmd_enumerate(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    doc.inputs() = {{"shape", shape_json(lambda)}};
    if (a.limit) doc.inputs()["limit"] = *a.limit;
    json tableaux = json::array();
    SytStream stream(lambda, enumeration_cap(a));
    while (!a.limit || tableaux.size() < *a.limit) {
        std::optional<Tableau> t = stream.next();
        if (!t) break;
        tableaux.push_back(rows_json(t->rows));
    }
    doc.result() = {{"total", to_string(count_syt_yf(lambda))}, {"returned", tableaux.size()}, {"tableaux", tableaux}};
}

inline void cmd_sample(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    doc.inputs() = {{"shape", shape_json(lambda)}, {"count", a.count}, {"seed", a.seed}};
    if (lambda.size() < 1) throw std::invalid_argument("sample needs a nonempty shape");
    if (a.count < 1) throw std::invalid_argument("--count must be >= 1");
    json tableaux = json::array();
    Generator gen;
    for (std::uint64_t s = 0; s < a.count; ++s) {
        if (s % samples_per_block == 0) gen.seed(derive_seed(RngSeed{a.seed}, s / samples_per_block));
        Tableau t = gnw_sample(lambda, gen);
        if (!is_standard(t)) throw InternalError("sampler produced an invalid tableau");
        tableaux.push_back(rows_json(t.rows));
    }
    doc.result() = {{"tableaux", tableaux}};
}

// Returns CSV text when --csv was requested for a PGF.
inline std::optional<std::string> cmd_occ(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    const Cell c = parse_cell(a.cell);
    doc.inputs() = {{"shape", shape_json(lambda)}, {"cell", cell_json(c)}};
    if (a.r.has_value() == a.pgf) throw std::invalid_argument("occ needs exactly one of --r or --pgf");
    const OccupantRange range = occupant_range(lambda, c);
    if (a.r) {
        doc.inputs()["r"] = *a.r;
        const BigRational p = occupancy_prob(lambda, c, *a.r);
        doc.result() = {{"probability", to_string(p)}, {"probability_float", to_double(p)}};
        return std::nullopt;
    }
    doc.inputs()["pgf"] = true;
    const DiscreteDistribution d = occupancy_pgf(lambda, c);
    if (a.csv) return distribution_csv(d);
    doc.result() = {{"range", {range.lo, range.hi}}, {"distribution", distribution_json(d)}};
    return std::nullopt;
}

inline void cmd_sortprob(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    const Cell c1 = parse_cell(a.c1);
    const Cell c2 = parse_cell(a.c2);
    doc.inputs() = {{"shape", shape_json(lambda)}, {"c1", cell_json(c1)}, {"c2", cell_json(c2)}};
    const BigRational sp = sort_prob(lambda, c1, c2);
    doc.result() = {{"sort_prob", to_string(sp)}, {"sort_prob_float", to_double(sp)}, {"related", related(c1, c2)}};
}

inline void cmd_minsp(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    doc.inputs() = {{"shape", shape_json(lambda)}};
    const MinSortResult best = min_sort_prob(lambda);
    json champions = json::array();
    for (const auto& [x, y] : best.champions) champions.push_back(pair_json(x, y));
    doc.result() = {{"minimum", to_string(best.minimum)}, {"minimum_float", to_double(best.minimum)}, {"champions", champions}};
    if (best.champions.empty()) doc.warn("shape has no unrelated cell pair");
}

inline json function_json(const RationalFunction& f, int order)
{
    json out = {{"rational_function", to_string(f)},
                {"numerator", to_string(f.numerator())},
                {"denominator", to_string(f.denominator())},
                {"limit", to_string(limit_at_infinity(f))}};
    if (f.numerator().degree() <= f.denominator().degree()) {
        InverseSeries s = series_in_inverse_n(f, order);
        json coeffs = json::array();
        for (const auto& c : s.coefficients) coeffs.push_back(to_string(c));
        out["series"] = {{"constant", to_string(s.constant)}, {"coefficients", coeffs}};
    } else {
        out["series"] = nullptr;
    }
    return out;
}

inline void cmd_fit(const Args& a, Document& doc)
{
    const RectFamily fam(a.rows);
    doc.inputs() = {{"rows", a.rows}, {"target", a.target}, {"order", a.order}, {"max_deg", a.max_deg}};
    if (a.target == "occ") {
        const Cell c = parse_cell(a.cell);
        if (!a.r) throw std::invalid_argument("--target occ needs --cell and --r");
        doc.inputs()["cell"] = cell_json(c);
        doc.inputs()["r"] = *a.r;
        const RationalFunction f = occupancy_prob_symbolic(fam, c, *a.r, a.max_deg);
        doc.result() = function_json(f, a.order);
        if (c.row == 1 && !denominator_divides_rectangle_product(f, fam.k, c.col))
            doc.warn("denominator does not divide prod (k n - s), s = 1..k(j-1)");
    } else if (a.target == "sortprob") {
        const Cell c2 = parse_cell(a.c2);
        if (a.j < 1) throw std::invalid_argument("--target sortprob needs --j and --c2");
        doc.inputs()["j"] = a.j;
        doc.inputs()["c2"] = cell_json(c2);
        doc.result() = function_json(sort_prob_symbolic(fam, a.j, c2, a.max_deg), a.order);
    } else {
        throw std::invalid_argument("--target must be occ or sortprob");
    }
}

inline void cmd_findzero(const Args& a, Document& doc)
{
    const RectFamily fam(a.rows);
    doc.inputs() = {{"rows", a.rows}, {"max", a.max_col}};
    FindZeroResult found = find_zero_pairs(fam, a.max_col);
    json pairs = json::array();
    for (const CellPair& p : found.pairs) pairs.push_back(pair_json(p.first, p.second));
    doc.result() = {{"pairs", pairs}};
    for (auto& w : found.warnings) doc.warn(std::move(w));
}

inline std::optional<std::string> cmd_limitdist(const Args& a, Document& doc)
{
    const RectFamily fam(a.rows);
    doc.inputs() = {{"rows", a.rows}, {"j", a.j}, {"moments", a.kmax}, {"method", a.direct ? "direct" : "fit"}};
    if (a.j < 1) throw std::invalid_argument("--j must be >= 1");
    const DiscreteDistribution d = a.direct ? limiting_occupancy_direct(fam, a.j) : limiting_occupancy(fam, a.j);
    if (a.csv) return distribution_csv(d);
    doc.result() = {{"distribution", distribution_json(d)}, {"moments", moments_json(moments(d, a.kmax))}};
    return std::nullopt;
}

inline void cmd_compare(const Args& a, Document& doc)
{
    const Partition lambda = parse_partition(a.shape);
    const Cell c = parse_cell(a.cell);
    doc.inputs() = {{"shape", shape_json(lambda)}, {"cell", cell_json(c)}, {"samples", a.samples}, {"seed", a.seed}};
    const DiscreteDistribution exact = occupancy_pgf(lambda, c);
    const OccupancyCounts emp = empirical_occupancy(lambda, c, a.samples, RngSeed{a.seed}, a.workers);

    BigRational tv = 0;
    json empirical = json::object();
    std::vector<int> support = exact.support();
    for (const auto& [r, n] : emp.counts) {
        empirical[std::to_string(r)] = to_string(emp.frequency(r));
        support.push_back(r);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int r : support) tv += abs(BigRational(emp.frequency(r) - exact.probability(r)));
    tv /= 2;
    for (const auto& [r, n] : emp.counts)
        if (exact.probability(r) == 0) doc.warn("sampled value " + std::to_string(r) + " has exact probability 0");
    doc.result() = {{"exact", distribution_json(exact)},
                    {"empirical", empirical},
                    {"tv_distance", to_string(tv)},
                    {"tv_distance_float", to_double(tv)}};
}

} // namespace detail

// argv-style entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    detail::Args a;
    CLI::App app{"Exact computations on standard Young tableaux", "syt"};
    app.require_subcommand(1);

    auto shape_opt = [&](CLI::App* sub) { sub->add_option("shape", a.shape, "shape, e.g. 4,3,2")->required(); };

    auto* count = app.add_subcommand("count", "number of SYT by Young-Frobenius and hook length");
    shape_opt(count);

    auto* enumerate = app.add_subcommand("enumerate", "list the SYT of a shape");
    shape_opt(enumerate);
    enumerate->add_option("--limit", a.limit, "return at most this many tableaux");
    enumerate->add_option("--max-cells", a.max_cells, "enumeration cap (default SYT_MAX_CELLS or 18)");

    auto* sample = app.add_subcommand("sample", "uniform random SYT by the hook walk");
    shape_opt(sample);
    sample->add_option("--count", a.count, "number of tableaux")->check(CLI::PositiveNumber);
    sample->add_option("--seed", a.seed, "generator seed");

    auto* occ = app.add_subcommand("occ", "exact occupancy probability or distribution of a cell");
    shape_opt(occ);
    occ->add_option("--cell", a.cell, "cell i,j")->required();
    occ->add_option("--r", a.r, "occupant value");
    occ->add_flag("--pgf", a.pgf, "full distribution");
    occ->add_flag("--csv", a.csv, "emit the distribution as CSV");

    auto* sortprob = app.add_subcommand("sortprob", "exact sorting probability of two cells");
    shape_opt(sortprob);
    sortprob->add_option("--c1", a.c1, "first cell i,j")->required();
    sortprob->add_option("--c2", a.c2, "second cell i,j")->required();

    auto* minsp = app.add_subcommand("minsp", "minimal |sorting probability| over unrelated pairs");
    shape_opt(minsp);

    auto* fit = app.add_subcommand("fit", "closed form in n for the k-row rectangle (n,...,n)");
    fit->add_option("--rows", a.rows, "number of rows k")->required()->check(CLI::PositiveNumber);
    fit->add_option("--target", a.target, "occ or sortprob")->required()->check(CLI::IsMember({"occ", "sortprob"}));
    fit->add_option("--cell", a.cell, "cell i,j (occ)");
    fit->add_option("--r", a.r, "occupant value (occ)");
    fit->add_option("--j", a.j, "first-row column j (sortprob)");
    fit->add_option("--c2", a.c2, "second cell (sortprob)");
    fit->add_option("--order", a.order, "number of 1/n series coefficients");
    fit->add_option("--max-deg", a.max_deg, "largest degree tried");

    auto* findzero = app.add_subcommand("findzero", "first-row pairs whose sorting probability tends to 0");
    findzero->add_option("--rows", a.rows, "number of rows k")->required()->check(CLI::PositiveNumber);
    findzero->add_option("--max", a.max_col, "largest column K")->required();

    auto* limitdist = app.add_subcommand("limitdist", "n -> infinity law of the occupant of [1,j]");
    limitdist->add_option("--rows", a.rows, "number of rows k")->required()->check(CLI::PositiveNumber);
    limitdist->add_option("--j", a.j, "column j")->required();
    limitdist->add_option("--moments", a.kmax, "highest scaled moment");
    limitdist->add_flag("--direct", a.direct, "use the dimension-formula limit instead of fitting");
    limitdist->add_flag("--csv", a.csv, "emit the distribution as CSV");

    auto* compare = app.add_subcommand("compare", "hook-walk frequencies against the exact distribution");
    shape_opt(compare);
    compare->add_option("--cell", a.cell, "cell i,j")->required();
    compare->add_option("--samples", a.samples, "number of samples")->check(CLI::PositiveNumber);
    compare->add_option("--seed", a.seed, "generator seed");
    compare->add_option("--workers", a.workers, "sampling threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "syt: " << e.what() << "\n";
        std::string name = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
        detail::Document doc(name);
        json d = doc.finish();
        d["error"] = {{"type", "usage"}, {"message", e.what()}};
        out << d.dump(2) << "\n";
        return usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    detail::Document doc(sub->get_name());
    auto fail = [&](int code, const char* type, const std::string& message) {
        err << "syt " << sub->get_name() << ": " << message << "\n";
        json d = doc.finish();
        d["error"] = {{"type", type}, {"message", message}};
        out << d.dump(2) << "\n";
        return code;
    };

    try {
        std::optional<std::string> text;
        const std::string& name = sub->get_name();
        if (name == "count")
            detail::cmd_count(a, doc);
        else if (name == "enumerate")
            detail::cmd_enumerate(a, doc);
        else if (name == "sample")
            detail::cmd_sample(a, doc);
        else if (name == "occ")
            text = detail::cmd_occ(a, doc);
        else if (name == "sortprob")
            detail::cmd_sortprob(a, doc);
        else if (name == "minsp")
            detail::cmd_minsp(a, doc);
        else if (name == "fit")
            detail::cmd_fit(a, doc);
        else if (name == "findzero")
            detail::cmd_findzero(a, doc);
        else if (name == "limitdist")
            text = detail::cmd_limitdist(a, doc);
        else if (name == "compare")
            detail::cmd_compare(a, doc);
        if (text) {
            out << *text;
            return ok;
        }
    } catch (const InternalError& e) {
        return fail(internal, "internal", e.what());
    } catch (const ShapeTooLarge& e) {
        return fail(resource, "shape_too_large", e.what());
    } catch (const FitFailed& e) {
        return fail(fit_failure, "fit_failed", e.what());
    } catch (const Error& e) {
        return fail(usage, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(usage, "usage", e.what());
    } catch (const std::exception& e) {
        return fail(internal, "internal", e.what());
    }
    out << doc.finish().dump(2) << "\n";
    return ok;
}

} // namespace syt::cli
