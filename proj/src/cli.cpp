#include "hookcontent/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookcontent/ballots.hpp"
#include "hookcontent/counting.hpp"
#include "hookcontent/json_io.hpp"
#include "hookcontent/polyid.hpp"
#include "hookcontent/probability.hpp"
#include "hookcontent/shapes.hpp"

namespace hcf::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct RunConfig {
    Format format = Format::text;
    std::string out_file;
    std::uint64_t budget = 10'000'000;

    std::string shape;
    int letters = 0;
    std::string counts;
    int steps = 0;
    bool multi = false;
    bool single = false;
    bool oracle = false;

    int max_cells = 6;
    int max_steps = 4;
    int max_parts = 4;
    int n_max = 4;
    int random_n_max = -1;
    int points = 50;
    std::uint64_t seed = 1;
    int extra_letters = 3;
    int set_cells = 7;
    int set_letters = 5;
    int max_letters = 3;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

EnumerationBudget budget_of(const RunConfig& cfg)
{
    return {cfg.budget};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

// Accumulates pass/fail lines for the verify family.
class CheckLog {
public:
    explicit CheckLog(std::string name) : name_(std::move(name)) {}

    void record(bool ok, const std::string& what, json detail = nullptr)
    {
        ++checks_;
        if (!ok) {
            ++failures_;
            failed_.push_back(what);
        }
        lines_.push_back((ok ? "PASS " : "FAIL ") + what);
        if (!detail.is_null())
            details_.push_back(std::move(detail));
    }

    bool passed() const { return failures_ == 0; }

    void write(std::ostream& os, Format format, bool verbose) const
    {
        switch (format) {
        case Format::json: {
            json out;
            out["command"] = "verify " + name_;
            out["checks"] = std::to_string(checks_);
            out["failures"] = std::to_string(failures_);
            out["failed"] = failed_;
            out["pass"] = passed();
            out["reports"] = details_;
            os << out.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "check,result\n";
            for (const auto& line : lines_)
                os << csv_field(line.substr(5)) << ',' << line.substr(0, 4) << '\n';
            break;
        case Format::text:
            for (const auto& line : lines_)
                if (verbose || line.front() == 'F')
                    os << line << '\n';
            os << name_ << ": " << (checks_ - failures_) << '/' << checks_ << " checks passed\n";
            break;
        }
    }

private:
    std::string name_;
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> lines_;
    std::vector<std::string> failed_;
    std::vector<json> details_;
};

void write_count(std::ostream& os, Format format, const std::vector<std::pair<std::string, std::string>>& fields,
                 const BigInt& value, const BigInt* oracle)
{
    switch (format) {
    case Format::json: {
        json out;
        for (const auto& [k, v] : fields)
            out[k] = v;
        out["value"] = value.get_str();
        if (oracle) {
            out["oracle"] = oracle->get_str();
            out["agree"] = *oracle == value;
        }
        os << out.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        std::string header;
        std::string row;
        for (const auto& [k, v] : fields) {
            header += k + ",";
            row += csv_field(v) + ",";
        }
        header += "value";
        row += value.get_str();
        if (oracle) {
            header += ",oracle,agree";
            row += "," + oracle->get_str() + (*oracle == value ? ",true" : ",false");
        }
        os << header << '\n' << row << '\n';
        break;
    }
    case Format::text:
        os << value.get_str() << '\n';
        if (oracle)
            os << "oracle " << oracle->get_str() << (*oracle == value ? " agree" : " MISMATCH") << '\n';
        break;
    }
}

int finish_count(std::ostream& os, const RunConfig& cfg, const std::vector<std::pair<std::string, std::string>>& fields,
                 const BigInt& value, const std::function<BigInt()>& oracle)
{
    if (!cfg.oracle) {
        write_count(os, cfg.format, fields, value, nullptr);
        return kOk;
    }
    const BigInt check = oracle();
    write_count(os, cfg.format, fields, value, &check);
    return check == value ? kOk : kOracleMismatch;
}

Partition parse_shape(const std::string& text)
{
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--shape: ") + e.what());
    }
}

void require_nonnegative(int value, const char* flag)
{
    if (value < 0)
        throw UsageError(std::string(flag) + " must be nonnegative");
}

int cmd_count_ssyt(std::ostream& os, const RunConfig& cfg)
{
    const Partition p = parse_shape(cfg.shape);
    require_nonnegative(cfg.letters, "--letters");
    return finish_count(os, cfg, {{"shape", p.to_string()}, {"N", std::to_string(cfg.letters)}},
                        hcf_count(cfg.letters, p), [&] { return enumerate_ssyt(cfg.letters, p, budget_of(cfg)); });
}

int cmd_count_syt(std::ostream& os, const RunConfig& cfg)
{
    const Partition p = parse_shape(cfg.shape);
    return finish_count(os, cfg, {{"shape", p.to_string()}}, hlf_count(p),
                        [&] { return enumerate_syt(p, budget_of(cfg)); });
}

int cmd_count_ballots(std::ostream& os, const RunConfig& cfg)
{
    if (cfg.multi == cfg.single)
        throw UsageError("count ballots needs exactly one of --multi or --single");
    require_nonnegative(cfg.steps, "--steps");
    ColumnCounts n;
    try {
        n = ColumnCounts::parse(cfg.counts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--n: ") + e.what());
    }

    const std::vector<std::pair<std::string, std::string>> fields{
        {"kind", cfg.multi ? "multi" : "single"}, {"n", n.to_string()}, {"steps", std::to_string(cfg.steps)}};
    if (cfg.multi) {
        const CountInstance inst{cfg.steps, n};
        const BigInt value = dagger(inst) ? to_integer(formula_F(inst), "F") : BigInt(0);
        return finish_count(os, cfg, fields, value, [&] { return count_multivote(cfg.steps, n, budget_of(cfg)); });
    }
    const bool counted = n.weakly_decreasing() && n.total() == cfg.steps;
    const BigInt value = counted ? to_integer(formula_Fstar(cfg.steps, n), "F*") : BigInt(0);
    return finish_count(os, cfg, fields, value, [&] { return count_singlevote(cfg.steps, n, budget_of(cfg)); });
}

// All count vectors of length 1..max_parts with entry sum <= max_cells.
std::vector<ColumnCounts> count_vectors(int max_parts, int max_cells)
{
    std::vector<ColumnCounts> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int length, int budget) -> void {
        if (static_cast<int>(current.size()) == length) {
            out.emplace_back(current);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            current.push_back(v);
            self(self, length, budget - v);
            current.pop_back();
        }
    };
    for (int length = 1; length <= max_parts; ++length)
        recurse(recurse, length, max_cells);
    return out;
}

int cmd_verify_theorem1(std::ostream& os, const RunConfig& cfg)
{
    require_nonnegative(cfg.max_cells, "--max-cells");
    require_nonnegative(cfg.max_steps, "--max-steps");
    CheckLog log("theorem1");
    for (const auto& n : count_vectors(cfg.max_parts, cfg.max_cells)) {
        for (int steps = 0; steps <= cfg.max_steps; ++steps) {
            const auto r = theorem1_check({steps, n}, budget_of(cfg));
            log.record(r.pass, "N=" + std::to_string(steps) + " n=(" + n.to_string() + ") dagger=" +
                                   std::to_string(r.dagger) + " C=" + r.oracle.get_str() + " F=" + to_string(r.formula));
        }
    }
    log.write(os, cfg.format, false);
    return log.passed() ? kOk : kCheckFailed;
}

int cmd_verify_lemma2(std::ostream& os, const RunConfig& cfg)
{
    if (cfg.n_max < 0 || cfg.n_max > poly::kMaxSymbolicSize)
        throw UsageError("--n-max must lie in [0, " + std::to_string(poly::kMaxSymbolicSize) + "]");
    const int random_max = cfg.random_n_max < 0 ? cfg.n_max + 2 : cfg.random_n_max;
    if (random_max > 20)
        throw UsageError("--random-n-max must be at most 20");

    CheckLog log("lemma2");
    for (int n = 0; n <= cfg.n_max; ++n) {
        const poly::MultiPoly g = poly::build_G(n);
        const auto report = poly::compare(n, g, poly::falling_product(n) * poly::vandermonde_x(n));
        log.record(report.equal, "n=" + std::to_string(n) + " G expands to prod(X-rt)V", to_json(report));
        for (int k = 0; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                log.record(poly::antisymmetric_under(g, k, l),
                           "n=" + std::to_string(n) + " antisymmetric under x_" + std::to_string(k) + "<->x_" +
                               std::to_string(l));
        log.record(poly::homogeneous_in_x(g, static_cast<unsigned>(n * (n + 1) / 2)),
                   "n=" + std::to_string(n) + " homogeneous of degree " + std::to_string(n * (n + 1) / 2));
        log.record(poly::staircase_coefficient(g) == poly::falling_product(n),
                   "n=" + std::to_string(n) + " staircase coefficient is prod(X-rt)");
    }
    for (int n = cfg.n_max + 1; n <= random_max; ++n) {
        const auto spot = poly::spot_check_alg(n, cfg.points, cfg.seed);
        log.record(spot.pass(), "n=" + std::to_string(n) + " " + std::to_string(spot.points) +
                                    " random points, mismatches=" + std::to_string(spot.mismatches));
    }
    log.write(os, cfg.format, true);
    return log.passed() ? kOk : kCheckFailed;
}

int cmd_verify_hlf_identity(std::ostream& os, const RunConfig& cfg)
{
    if (cfg.n_max < 0 || cfg.n_max > poly::kMaxSymbolicSize)
        throw UsageError("--n-max must lie in [0, " + std::to_string(poly::kMaxSymbolicSize) + "]");
    CheckLog log("hlf-identity");
    for (int n = 0; n <= cfg.n_max; ++n) {
        const auto report = poly::hlf_identity_check(n);
        log.record(report.equal, "n=" + std::to_string(n) + " sum x_i V(..x_i-t..) = [sum(x_i-it)]V", to_json(report));
        const auto slice = poly::hlf_slice_check(n);
        log.record(slice.pass(), "n=" + std::to_string(n) + " identity is the X^n slice of the G identity");
    }
    log.write(os, cfg.format, true);
    return log.passed() ? kOk : kCheckFailed;
}

int cmd_verify_theorem2(std::ostream& os, const RunConfig& cfg)
{
    require_nonnegative(cfg.max_cells, "--max-cells");
    require_nonnegative(cfg.extra_letters, "--extra-letters");
    CheckLog log("theorem2");
    const auto budget = budget_of(cfg);
    for (const auto& mu : partitions_up_to(cfg.max_cells)) {
        const std::string tag = "mu=(" + mu.to_string() + ")";
        const int n0 = mu.rows();
        for (int N = n0; N <= n0 + cfg.extra_letters; ++N) {
            const auto report = theorem2_check(N, mu);
            log.record(report.consistent, tag + " N=" + std::to_string(N) + " P=" + to_string(report.p_value),
                       to_json(report));
        }
        const Exact w = W_mu(mu);
        const Exact r = R_mu(mu);
        log.record(w / r == P_mu(mu), tag + " W/R = P");
    }
    const int set_cells = std::min(cfg.set_cells, cfg.max_cells);
    for (const auto& mu : partitions_up_to(set_cells)) {
        const std::string tag = "mu=(" + mu.to_string() + ")";
        for (int N = 0; N <= cfg.set_letters; ++N) {
            const auto ix = intersection_check(N, mu, budget);
            log.record(ix.pass, tag + " N=" + std::to_string(N) + " ST = ST^C cap ST^R (" + std::to_string(ix.ssyt) +
                                    " = " + std::to_string(ix.intersection) + ")");
            if (N < mu.rows())
                continue;
            const auto t = T_family(N, mu);
            log.record(t.colstrict == enumerate_colstrict(N, mu, budget), tag + " N=" + std::to_string(N) + " T^C");
        }
        const Partition lambda = conjugate(mu);
        const auto t = T_family(mu.rows(), mu);
        log.record(t.rowweak_min == enumerate_rowweak(lambda.rows(), lambda, budget), tag + " T^R_0(mu')");
        log.record(t.labelings == enumerate_colincreasing_labelings(mu, budget), tag + " column-increasing labelings");
    }
    log.write(os, cfg.format, false);
    return log.passed() ? kOk : kCheckFailed;
}

int cmd_verify_hooks(std::ostream& os, const RunConfig& cfg)
{
    require_nonnegative(cfg.max_cells, "--max-cells");
    CheckLog log("hooks");
    for (const auto& lambda : partitions_up_to(cfg.max_cells)) {
        for (int row = 0; row < lambda.rows(); ++row) {
            const std::string tag = "lambda=(" + lambda.to_string() + ") row " + std::to_string(row);
            log.record(row_hook_sets(lambda, row).disjoint_union(), tag + " H and K partition M");
            log.record(row_hook_identity(lambda, row).holds(), tag + " row hook product");
        }
        log.record(hook_product(lambda) == hook_product(conjugate(lambda)),
                   "lambda=(" + lambda.to_string() + ") hook product invariant under conjugation");
    }
    log.write(os, cfg.format, false);
    return log.passed() ? kOk : kCheckFailed;
}

int cmd_table(std::ostream& os, const RunConfig& cfg)
{
    require_nonnegative(cfg.max_cells, "--max-cells");
    require_nonnegative(cfg.max_letters, "--max-letters");
    struct Row {
        std::string shape;
        int letters;
        BigInt ssyt;
        BigInt syt;
    };
    std::vector<Row> rows;
    bool mismatch = false;
    for (int size = 1; size <= cfg.max_cells; ++size) {
        for (const auto& mu : partitions_of(size)) {
            const BigInt syt = hlf_count(mu);
            if (cfg.oracle && syt != enumerate_syt(mu, budget_of(cfg)))
                mismatch = true;
            for (int N = 1; N <= cfg.max_letters; ++N) {
                const BigInt ssyt = hcf_count(N, mu);
                if (cfg.oracle && ssyt != enumerate_ssyt(N, mu, budget_of(cfg)))
                    mismatch = true;
                rows.push_back({mu.to_string(), N, ssyt, syt});
            }
        }
    }

    switch (cfg.format) {
    case Format::json: {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"shape", r.shape}, {"N", std::to_string(r.letters)}, {"ssyt", r.ssyt.get_str()},
                           {"syt", r.syt.get_str()}});
        os << out.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "shape,N,ssyt,syt\n";
        for (const auto& r : rows)
            os << csv_field(r.shape) << ',' << r.letters << ',' << r.ssyt.get_str() << ',' << r.syt.get_str() << '\n';
        break;
    case Format::text:
        os << "shape\tN\tssyt\tsyt\n";
        for (const auto& r : rows)
            os << r.shape << '\t' << r.letters << '\t' << r.ssyt.get_str() << '\t' << r.syt.get_str() << '\n';
        break;
    }
    return mismatch ? kOracleMismatch : kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact counting and verification for Young tableaux, ballot sequences and hook formulas", "hookc"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", cfg.out_file, "Write data to FILE instead of stdout");
    app.add_option("--budget", cfg.budget, "Maximum enumeration states per oracle call")
        ->check(CLI::PositiveNumber);

    std::function<int(std::ostream&, const RunConfig&)> action;
    auto bind = [&](CLI::App* sub, int (*fn)(std::ostream&, const RunConfig&)) {
        sub->callback([&action, fn] { action = fn; });
    };

    auto* count = app.add_subcommand("count", "Evaluate a closed-form count");
    count->require_subcommand(1);
    auto* ssyt = count->add_subcommand("ssyt", "Semistandard tableaux of a shape");
    ssyt->add_option("--shape", cfg.shape, "Shape as comma-separated parts, e.g. 3,2,1")->required();
    ssyt->add_option("--letters", cfg.letters, "Largest entry N")->required();
    ssyt->add_flag("--oracle", cfg.oracle, "Also run the brute-force enumerator");
    bind(ssyt, cmd_count_ssyt);

    auto* syt = count->add_subcommand("syt", "Standard tableaux of a shape");
    syt->add_option("--shape", cfg.shape, "Shape as comma-separated parts")->required();
    syt->add_flag("--oracle", cfg.oracle, "Also run the brute-force enumerator");
    bind(syt, cmd_count_syt);

    auto* ballots = count->add_subcommand("ballots", "Ballot sequences with a given final tally");
    ballots->add_flag("--multi", cfg.multi, "Ballots may mark any number of candidates");
    ballots->add_flag("--single", cfg.single, "Ballots mark exactly one candidate");
    ballots->add_option("--n", cfg.counts, "Final tally n_0,...,n_d (need not be monotone)")->required();
    ballots->add_option("--steps", cfg.steps, "Number of ballots N")->required();
    ballots->add_flag("--oracle", cfg.oracle, "Also run the brute-force enumerator");
    bind(ballots, cmd_count_ballots);

    auto* verify = app.add_subcommand("verify", "Exhaustive identity checks");
    verify->require_subcommand(1);
    auto* t1 = verify->add_subcommand("theorem1", "Ballot counts against the closed form and its recursion");
    t1->add_option("--max-cells", cfg.max_cells, "Largest tally sum")->capture_default_str();
    t1->add_option("--max-steps", cfg.max_steps, "Largest ballot count N")->capture_default_str();
    t1->add_option("--max-parts", cfg.max_parts, "Longest tally vector")->capture_default_str();
    bind(t1, cmd_verify_theorem1);

    auto* lemma = verify->add_subcommand("lemma2", "Symbolic G identity, its structural claims and random points");
    lemma->add_option("--n-max", cfg.n_max, "Largest symbolic size")->capture_default_str();
    lemma->add_option("--random-n-max", cfg.random_n_max, "Largest size for random points (default n-max + 2)");
    lemma->add_option("--points", cfg.points, "Random points per size")->capture_default_str();
    lemma->add_option("--seed", cfg.seed, "Random point seed")->capture_default_str();
    bind(lemma, cmd_verify_lemma2);

    auto* hlf = verify->add_subcommand("hlf-identity", "Single-step Vandermonde identity");
    hlf->add_option("--n-max", cfg.n_max, "Largest symbolic size")->capture_default_str();
    bind(hlf, cmd_verify_hlf_identity);

    auto* t2 = verify->add_subcommand("theorem2", "Probability ratios and set-wise filling checks");
    t2->add_option("--max-cells", cfg.max_cells, "Largest shape size")->capture_default_str();
    t2->add_option("--extra-letters", cfg.extra_letters, "Check N in [n_0, n_0 + this]")->capture_default_str();
    t2->add_option("--set-cells", cfg.set_cells, "Largest shape for set-wise checks")->capture_default_str();
    t2->add_option("--set-letters", cfg.set_letters, "Largest N for set-wise checks")->capture_default_str();
    bind(t2, cmd_verify_theorem2);

    auto* hooks = verify->add_subcommand("hooks", "Row hook products and hook/gap set partition");
    hooks->add_option("--max-cells", cfg.max_cells, "Largest shape size")->capture_default_str();
    bind(hooks, cmd_verify_hooks);

    auto* table = app.add_subcommand("table", "SSYT and SYT counts over a shape/N grid");
    table->add_option("--max-cells", cfg.max_cells, "Largest shape size (0 gives an empty table)")
        ->capture_default_str();
    table->add_option("--max-letters", cfg.max_letters, "Largest N")->capture_default_str();
    table->add_flag("--oracle", cfg.oracle, "Cross-check every entry by enumeration");
    bind(table, cmd_table);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    std::ofstream file;
    if (!cfg.out_file.empty()) {
        file.open(cfg.out_file);
        if (!file) {
            err << "cannot open " << cfg.out_file << " for writing\n";
            return kParseError;
        }
    }
    std::ostream& data = cfg.out_file.empty() ? out : file;

    try {
        return action(data, cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

} // namespace hcf::cli
