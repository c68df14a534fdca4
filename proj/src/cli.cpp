#include "partdist/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "partdist/distribution.hpp"
#include "partdist/mgf.hpp"
#include "partdist/partitions.hpp"
#include "partdist/sampler.hpp"
#include "partdist/serialize.hpp"
#include "partdist/xmoments.hpp"

namespace partdist::cli {

namespace {

using nlohmann::json;

enum class Format { pretty, json, csv };

/// Thrown for invalid parameters detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int exact_cap()
{
    int cap = kExactMaxN;
    if (const char* env = std::getenv("PARTDIST_MAX_N")) {
        int value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
            throw UsageError("PARTDIST_MAX_N must be a non-negative integer");
        }
        cap = std::min(cap, value);
    }
    return cap;
}

void check_range(const char* name, long value, long lo, long hi)
{
    if (value < lo || value > hi) {
        throw UsageError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(value));
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows)
{
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            out << (k > 0 ? "," : "") << csv_field(cells[k]);
        }
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) {
        line(row);
    }
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            text += cells[c];
            if (c + 1 < cells.size()) {
                text += std::string(width[c] - cells[c].size() + 2, ' ');
            }
        }
        out << text << '\n';
    };
    line(header);
    for (const auto& row : rows) {
        line(row);
    }
}

void write_json(std::ostream& out, const json& doc)
{
    out << doc.dump(2) << '\n';
}

std::string vector_string(const std::vector<Rational>& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k > 0 ? ", " : "") + v[k].to_string();
    }
    return out + ")'";
}

json mismatches_json(const std::vector<OracleMismatch>& mismatches)
{
    json out = json::array();
    for (const auto& m : mismatches) {
        out.push_back({{"quantity", m.quantity},
                       {"i", m.i},
                       {"j", m.j},
                       {"closed_form", to_json(m.closed_form)},
                       {"oracle", to_json(m.oracle)}});
    }
    return out;
}

void append_matrix_csv(std::vector<std::vector<std::string>>& rows, const std::string& name, const RationalMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rows.push_back({name, std::to_string(r + 1), std::to_string(c + 1), m(r, c).to_string()});
        }
    }
}

// enumerate ------------------------------------------------------------------

int cmd_enumerate(int n, Format format, std::ostream& out)
{
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    for (const Partition& p : enumerate_partitions(n)) {
        const auto m = to_multiplicity(p).counts();
        const auto lambda = to_partition_vector(p).entries();
        rows.push_back({p.to_string(), column_string(m), column_string(lambda)});
        doc.push_back({{"partition", to_json(p)}, {"multiplicity", m}, {"vector", lambda}});
    }
    switch (format) {
    case Format::pretty:
        write_table(out, {"lambda", "m(lambda)", "Lambda(lambda)"}, rows);
        break;
    case Format::csv:
        write_csv(out, {"partition", "multiplicity", "vector"}, rows);
        break;
    case Format::json:
        write_json(out, {{"n", n}, {"count", doc.size()}, {"partitions", doc}});
        break;
    }
    return kExitOk;
}

// pmf ------------------------------------------------------------------------

int cmd_pmf(int n, Format format, std::ostream& out)
{
    const Pmf pmf = pmf_table(n);
    std::vector<std::vector<std::string>> rows;
    json entries = json::array();
    for (const auto& e : pmf.entries) {
        const auto m = to_multiplicity(e.partition).counts();
        const auto lambda = to_partition_vector(e.partition).entries();
        rows.push_back({e.partition.to_string(), column_string(m), column_string(lambda),
                        e.probability.to_string()});
        entries.push_back({{"partition", to_json(e.partition)},
                           {"multiplicity", m},
                           {"vector", lambda},
                           {"probability", to_json(e.probability)}});
    }
    switch (format) {
    case Format::pretty:
        write_table(out, {"lambda", "m(lambda)", "Lambda(lambda)", "P"}, rows);
        out << "total  " << pmf.total() << '\n';
        break;
    case Format::csv:
        write_csv(out, {"partition", "multiplicity", "vector", "probability"}, rows);
        break;
    case Format::json:
        write_json(out, {{"n", n}, {"pmf", entries}, {"total", to_json(pmf.total())}});
        break;
    }
    return kExitOk;
}

// ymoments / cov -------------------------------------------------------------

int cmd_ymoments(int n, bool verify, Format format, std::ostream& out)
{
    const MomentReport report = moment_report(n);
    std::optional<std::vector<OracleMismatch>> mismatches;
    if (verify) {
        mismatches = verify_moments_against_oracle(n);
    }
    switch (format) {
    case Format::pretty:
        out << "n = " << n << '\n';
        out << "E(Y) = " << vector_string(report.expectation) << '\n';
        out << "E(YY') = A + B\n" << pretty_matrix(report.second_moment);
        out << "A\n" << pretty_matrix(report.a_matrix);
        out << "B\n" << pretty_matrix(report.b_matrix);
        break;
    case Format::csv: {
        std::vector<std::vector<std::string>> rows;
        for (int i = 1; i <= n; ++i) {
            rows.push_back({"E(Y)", std::to_string(i), "", report.expectation[static_cast<std::size_t>(i - 1)].to_string()});
        }
        append_matrix_csv(rows, "E(YY')", report.second_moment);
        append_matrix_csv(rows, "A", report.a_matrix);
        append_matrix_csv(rows, "B", report.b_matrix);
        write_csv(out, {"quantity", "i", "j", "value"}, rows);
        break;
    }
    case Format::json: {
        json doc = {{"n", n},
                    {"expectation", to_json(report.expectation)},
                    {"second_moment", to_json(report.second_moment)},
                    {"a_matrix", to_json(report.a_matrix)},
                    {"b_matrix", to_json(report.b_matrix)}};
        if (mismatches) {
            doc["oracle"] = {{"ok", mismatches->empty()}, {"mismatches", mismatches_json(*mismatches)}};
        }
        write_json(out, doc);
        break;
    }
    }
    if (mismatches && format != Format::json) {
        out << "oracle: " << (mismatches->empty() ? "ok" : "MISMATCH") << '\n';
    }
    return mismatches && !mismatches->empty() ? kExitMismatch : kExitOk;
}

int cmd_cov(int n, bool verify, Format format, std::ostream& out)
{
    const RationalMatrix cov = covariance_y(n);
    std::optional<std::vector<OracleMismatch>> mismatches;
    if (verify) {
        const RationalMatrix oracle = covariance_oracle(n);
        mismatches.emplace();
        for (std::size_t r = 0; r < cov.rows(); ++r) {
            for (std::size_t c = 0; c < cov.cols(); ++c) {
                if (cov(r, c) != oracle(r, c)) {
                    mismatches->push_back({"Sigma", static_cast<int>(r + 1), static_cast<int>(c + 1), cov(r, c),
                                           oracle(r, c)});
                }
            }
        }
    }
    switch (format) {
    case Format::pretty:
        out << "n = " << n << "\nSigma\n" << pretty_matrix(cov);
        break;
    case Format::csv: {
        std::vector<std::vector<std::string>> rows;
        append_matrix_csv(rows, "Sigma", cov);
        write_csv(out, {"quantity", "i", "j", "value"}, rows);
        break;
    }
    case Format::json: {
        json doc = {{"n", n}, {"covariance", to_json(cov)}};
        if (mismatches) {
            doc["oracle"] = {{"ok", mismatches->empty()}, {"mismatches", mismatches_json(*mismatches)}};
        }
        write_json(out, doc);
        break;
    }
    }
    if (mismatches && format != Format::json) {
        out << "oracle: " << (mismatches->empty() ? "ok" : "MISMATCH") << '\n';
    }
    return mismatches && !mismatches->empty() ? kExitMismatch : kExitOk;
}

// verify-fine / verify-mgf ---------------------------------------------------

int cmd_verify_fine(int max_n, Format format, std::ostream& out)
{
    bool all = true;
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    for (int n = 0; n <= max_n; ++n) {
        const auto check = verify_fine_identity(n);
        all = all && check.holds;
        rows.push_back({std::to_string(n), check.sum.to_string(), check.holds ? "true" : "false"});
        doc.push_back({{"n", n}, {"sum", to_json(check.sum)}, {"ok", check.holds}});
    }
    switch (format) {
    case Format::pretty:
        write_table(out, {"n", "sum", "ok"}, rows);
        break;
    case Format::csv:
        write_csv(out, {"n", "sum", "ok"}, rows);
        break;
    case Format::json:
        write_json(out, {{"ok", all}, {"results", doc}});
        break;
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_verify_mgf(int max_n, Format format, std::ostream& out)
{
    bool all = true;
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    for (int n = 1; n <= max_n; ++n) {
        for (int i = 1; i <= n; ++i) {
            const auto report = verify_theorem1(n, i);
            all = all && report.ok;
            json mismatches = json::array();
            for (const auto& m : report.mismatches) {
                mismatches.push_back(
                    {{"exponent", m.exponent}, {"left", to_json(m.left)}, {"right", to_json(m.right)}});
            }
            rows.push_back({std::to_string(n), std::to_string(i), report.ok ? "true" : "false",
                            std::to_string(report.mismatches.size())});
            doc.push_back({{"n", n}, {"i", i}, {"ok", report.ok}, {"mismatches", mismatches}});
        }
    }
    switch (format) {
    case Format::pretty:
        write_table(out, {"n", "i", "ok", "mismatches"}, rows);
        break;
    case Format::csv:
        write_csv(out, {"n", "i", "ok", "mismatches"}, rows);
        break;
    case Format::json:
        write_json(out, doc);
        break;
    }
    return all ? kExitOk : kExitMismatch;
}

// xseq -----------------------------------------------------------------------

int cmd_xseq(std::optional<int> component, std::optional<int> offset, int max_n, Format format, std::ostream& out)
{
    bool all = true;
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    const int first = component ? std::max(*component, 1) : *offset + 1;
    for (int n = first; n <= max_n; ++n) {
        const int j = component ? *component : n - *offset;
        const int k = n - j;
        const BigInt scaled = x_expectations(n).scaled_value(j);
        std::string conjecture;
        std::string match = "outside-range";
        json entry = {{"n", n}, {"component", j}, {"scaled_value", to_json(scaled)}};
        if (conjecture_applies(n, k)) {
            const BigInt value = conjecture_closed_form(n, k);
            conjecture = value.get_str();
            const bool ok = value == scaled;
            all = all && ok;
            match = ok ? "true" : "false";
            entry["conjecture_value"] = to_json(value);
            entry["match"] = ok;
        } else {
            entry["conjecture_value"] = nullptr;
            entry["match"] = nullptr;
        }
        const bool printed = (j == 1 && n <= kPrintedX1MaxN) || (j == 2 && n <= kPrintedX2MaxN);
        const std::string provenance = printed ? "printed" : "computed";
        entry["provenance"] = provenance;
        rows.push_back({std::to_string(n), scaled.get_str(), conjecture, match, provenance});
        doc.push_back(std::move(entry));
    }
    const std::vector<std::string> header = {"n", "scaled_value", "conjecture_value", "match", "provenance"};
    switch (format) {
    case Format::pretty:
        write_table(out, header, rows);
        break;
    case Format::csv:
        write_csv(out, header, rows);
        break;
    case Format::json:
        write_json(out, doc);
        break;
    }
    return all ? kExitOk : kExitMismatch;
}

// fit ------------------------------------------------------------------------

int cmd_fit(int j, const std::vector<int>& samples, const std::vector<int>& holdout, Format format, std::ostream& out)
{
    const BinomialFit fit =
        fit_binomial_basis(j, samples, holdout.empty() ? std::nullopt : std::optional<std::vector<int>>(holdout));
    const AsymptoticsReport asym = leading_asymptotics_check(fit);
    const bool ok = fit.all_positive_integers && fit.holdout_ok && fit.claims_ok();

    json coefficients = json::object();
    for (const auto& [i, a] : fit.coefficients) {
        coefficients[std::to_string(i)] = to_json(a);
    }
    json claims = json::array();
    for (const auto& c : fit.claims) {
        claims.push_back({{"name", c.name},
                          {"index", c.index},
                          {"expected", to_json(c.expected)},
                          {"actual", to_json(c.actual)},
                          {"applicable", c.applicable},
                          {"matches", c.matches}});
    }
    json holdout_doc = json::array();
    for (const auto& h : fit.holdout) {
        holdout_doc.push_back(
            {{"n", h.n}, {"predicted", to_json(h.predicted)}, {"actual", to_json(h.actual)}, {"ok", h.ok}});
    }
    json asymptotics = {{"degree", asym.degree},
                        {"leading", to_json(asym.leading)},
                        {"expected_leading", to_json(asym.expected_leading)},
                        {"leading_matches", asym.leading_matches},
                        {"next", to_json(asym.next)},
                        {"claimed_next", to_json(asym.claimed_next)},
                        {"next_matches", asym.next_matches},
                        {"next_matches_magnitude", asym.next_matches_magnitude}};

    switch (format) {
    case Format::json:
        write_json(out, {{"j", j},
                         {"solve_ns", fit.solve_ns},
                         {"coefficients", coefficients},
                         {"all_positive_integers", fit.all_positive_integers},
                         {"claims", claims},
                         {"holdout", holdout_doc},
                         {"asymptotics", asymptotics},
                         {"ok", ok}});
        break;
    case Format::pretty: {
        out << "j = " << j << "\n1";
        for (const auto& [i, a] : fit.coefficients) {
            out << " + " << a << "*C(n," << i << ")";
        }
        out << '\n';
        for (const auto& c : fit.claims) {
            out << c.name << " (a_" << c.index << "): expected " << c.expected << ", got " << c.actual << ", "
                << (c.applicable ? (c.matches ? "ok" : "MISMATCH") : "not applicable") << '\n';
        }
        for (const auto& h : fit.holdout) {
            out << "holdout n=" << h.n << ": predicted " << h.predicted << ", actual " << h.actual << ", "
                << (h.ok ? "ok" : "MISMATCH") << '\n';
        }
        out << "leading coefficient " << asym.leading << " (expected " << asym.expected_leading << ")\n";
        out << "n^" << 2 * j - 1 << " coefficient " << asym.next << " (claimed " << asym.claimed_next << ")\n";
        break;
    }
    case Format::csv: {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [i, a] : fit.coefficients) {
            rows.push_back({std::to_string(i), a.to_string()});
        }
        write_csv(out, {"i", "a_i"}, rows);
        break;
    }
    }
    return ok ? kExitOk : kExitMismatch;
}

// sample ---------------------------------------------------------------------

json moment_json(const MomentEstimate& e)
{
    return {{"quantity", e.quantity + "_" + std::to_string(e.index)},
            {"mean", decimal_json(e.mean)},
            {"standard_error", decimal_json(e.standard_error)},
            {"exact", e.exact ? to_json(*e.exact) : json(nullptr)},
            {"z", e.z ? decimal_json(*e.z) : json(nullptr)}};
}

int cmd_sample(const SampleConfig& cfg, Format format, std::ostream& out)
{
    const SampleRun run = empirical_moments(cfg);
    const ChiSquareReport chi = chi_square_report(run);
    const auto cells = run.pmf_cells();

    // Y_i for every i, X_1 always; remaining X_j only when an exact value exists.
    std::vector<const MomentEstimate*> moments;
    for (const auto& e : run.mean_y) {
        moments.push_back(&e);
    }
    for (const auto& e : run.mean_x) {
        if (e.index == 1 || e.exact) {
            moments.push_back(&e);
        }
    }

    if (format == Format::json) {
        json pmf = json::array();
        for (const auto& c : cells) {
            pmf.push_back({{"partition", to_json(c.partition)},
                           {"count", c.count},
                           {"frequency", decimal_json(static_cast<double>(c.count) / static_cast<double>(run.trials))},
                           {"exact", to_json(c.exact)},
                           {"z", decimal_json(c.z)}});
        }
        json moments_doc = json::array();
        json z_scores = json::array();
        for (const auto* e : moments) {
            moments_doc.push_back(moment_json(*e));
            if (e->z) {
                z_scores.push_back({{"quantity", e->quantity + "_" + std::to_string(e->index)}, {"z", decimal_json(*e->z)}});
            }
        }
        json chi_doc = {{"status", to_string(chi.status)}};
        if (chi.status == ChiSquareReport::Status::ok) {
            chi_doc["statistic"] = decimal_json(chi.statistic);
            chi_doc["dof"] = chi.dof;
            chi_doc["cells"] = chi.cells;
            chi_doc["critical_value_999"] = decimal_json(chi.critical_value);
            chi_doc["critical_from_table"] = chi.critical_from_table;
            chi_doc["below_critical"] = chi.below_critical;
        } else {
            chi_doc["notice"] = chi.notice;
        }
        write_json(out, {{"n", run.n},
                         {"trials", run.trials},
                         {"seed", run.seed},
                         {"pmf", pmf},
                         {"moments", moments_doc},
                         {"z_scores", z_scores},
                         {"max_abs_moment_z", decimal_json(run.max_abs_moment_z())},
                         {"chi_square", chi_doc}});
        return kExitOk;
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto* e : moments) {
        rows.push_back({e->quantity + "_" + std::to_string(e->index), decimal_string(e->mean),
                        decimal_string(e->standard_error), e->exact ? e->exact->to_string() : "",
                        e->z ? decimal_string(*e->z) : ""});
    }
    if (format == Format::csv) {
        write_csv(out, {"quantity", "mean", "standard_error", "exact", "z"}, rows);
        return kExitOk;
    }
    out << "n = " << run.n << ", trials = " << run.trials << ", seed = " << run.seed << '\n';
    write_table(out, {"quantity", "mean", "se", "exact", "z"}, rows);
    out << "max |z| = " << decimal_string(run.max_abs_moment_z()) << '\n';
    if (chi.status == ChiSquareReport::Status::ok) {
        out << "chi-square = " << decimal_string(chi.statistic) << " on " << chi.dof << " dof, 99.9% quantile "
            << decimal_string(chi.critical_value) << (chi.below_critical ? " (pass)" : " (FAIL)") << '\n';
    } else {
        out << "chi-square " << to_string(chi.status) << ": " << chi.notice << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact distributions of permutation cycle types over integer partitions", "partdist"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats = {
        {"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
    std::optional<Format> format;
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: pretty, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    int n = 0;
    int max_n = 0;
    bool verify = false;

    auto* enumerate = app.add_subcommand("enumerate", "List the partitions of n with m(lambda) and Lambda(lambda)");
    enumerate->add_option("--n", n, "Size")->required();
    add_format(enumerate);

    auto* pmf = app.add_subcommand("pmf", "Probability of each cycle type");
    pmf->add_option("--n", n, "Size")->required();
    add_format(pmf);

    auto* ymoments = app.add_subcommand("ymoments", "E(Y) and E(YY') = A + B");
    ymoments->add_option("--n", n, "Size")->required();
    ymoments->add_flag("--verify", verify, "Check closed forms against enumeration");
    add_format(ymoments);

    auto* cov = app.add_subcommand("cov", "Covariance matrix of Y");
    cov->add_option("--n", n, "Size")->required();
    cov->add_flag("--verify", verify, "Check closed form against enumeration");
    add_format(cov);

    auto* fine = app.add_subcommand("verify-fine", "Check that the pmf sums to 1 for n = 0..max-n");
    fine->add_option("--max-n", max_n, "Largest n")->required();
    add_format(fine);

    auto* mgf = app.add_subcommand("verify-mgf", "Check the MGF derivative recursion for 1 <= i <= n <= max-n");
    mgf->add_option("--max-n", max_n, "Largest n")->required();
    add_format(mgf);

    std::optional<int> component;
    std::optional<int> offset;
    auto* xseq = app.add_subcommand("xseq", "n! E(X_j) for a fixed component j, or for j = n - offset");
    auto* component_opt = xseq->add_option("--component", component, "Component j (1-based)");
    auto* offset_opt = xseq->add_option("--offset", offset, "Use X_{n-offset}");
    component_opt->excludes(offset_opt);
    xseq->add_option("--max-n", max_n, "Largest n")->required();
    add_format(xseq);

    int fit_j = 0;
    std::vector<int> samples;
    std::vector<int> holdout;
    auto* fit = app.add_subcommand("fit", "Fit n! E(X_{n-j}) = 1 + sum a_i C(n,i) exactly");
    fit->add_option("--j", fit_j, "Offset j")->required();
    fit->add_option("--samples", samples, "n values used to solve")->delimiter(',')->required();
    fit->add_option("--holdout", holdout, "n values checked against the fit")->delimiter(',');
    add_format(fit);

    SampleConfig cfg;
    long long sample_n = 0;
    auto* sample = app.add_subcommand("sample", "Monte Carlo check against exact values");
    sample->add_option("--n", sample_n, "Size")->required();
    sample->add_option("--trials", cfg.trials, "Number of random permutations")->required();
    sample->add_option("--seed", cfg.seed, "64-bit seed")->required();
    sample->add_option("--workers", cfg.workers, "Worker threads; output does not depend on it");
    add_format(sample);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "partdist: error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto fmt = [&](Format fallback) { return format.value_or(fallback); };
    try {
        const int cap = exact_cap();
        if (enumerate->parsed()) {
            check_range("--n", n, 0, cap);
            return cmd_enumerate(n, fmt(Format::pretty), out);
        }
        if (pmf->parsed()) {
            check_range("--n", n, 0, cap);
            return cmd_pmf(n, fmt(Format::pretty), out);
        }
        if (ymoments->parsed()) {
            check_range("--n", n, 1, cap);
            return cmd_ymoments(n, verify, fmt(Format::pretty), out);
        }
        if (cov->parsed()) {
            check_range("--n", n, 1, cap);
            return cmd_cov(n, verify, fmt(Format::pretty), out);
        }
        if (fine->parsed()) {
            check_range("--max-n", max_n, 0, cap);
            return cmd_verify_fine(max_n, fmt(Format::pretty), out);
        }
        if (mgf->parsed()) {
            check_range("--max-n", max_n, 0, cap);
            return cmd_verify_mgf(max_n, fmt(Format::pretty), out);
        }
        if (xseq->parsed()) {
            if (!component && !offset) {
                throw UsageError("xseq needs --component or --offset");
            }
            check_range("--max-n", max_n, 1, cap);
            if (component) {
                check_range("--component", *component, 1, cap);
            } else {
                check_range("--offset", *offset, 0, cap - 1);
            }
            return cmd_xseq(component, offset, max_n, fmt(Format::pretty), out);
        }
        if (fit->parsed()) {
            check_range("--j", fit_j, 1, cap);
            for (int s : samples) {
                check_range("--samples", s, 2 * fit_j + 1, cap);
            }
            const int top = *std::max_element(samples.begin(), samples.end());
            for (int h : holdout) {
                check_range("--holdout", h, 2 * fit_j + 1, cap);
            }
            if (holdout.empty() && top + 2 > cap) {
                throw UsageError("default holdout values exceed the n cap; pass --holdout");
            }
            return cmd_fit(fit_j, samples, holdout, fmt(Format::pretty), out);
        }
        if (sample->parsed()) {
            check_range("--n", static_cast<long>(sample_n), 1, kSamplerMaxN);
            if (cfg.trials < 1) {
                throw UsageError("--trials must be positive");
            }
            check_range("--workers", cfg.workers, 1, 1024);
            cfg.n = static_cast<int>(sample_n);
            return cmd_sample(cfg, fmt(Format::pretty), out);
        }
    } catch (const UsageError& e) {
        err << "partdist: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "partdist: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularSystemError& e) {
        err << "partdist: error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "partdist: error: no command\n";
    return kExitUsage;
}

} // namespace partdist::cli
