#include "commands.hpp"

#include "hypercount/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace hypercount;
using namespace hypercount::cli;

namespace {

// Raw text of options whose values map onto library enums.
struct CommonText {
    std::string backend = "exact";
    std::string format;
};

void add_common(CLI::App* cmd, RunConfig& config, CommonText& text, std::optional<std::uint64_t>& budget_flag)
{
    cmd->add_option("--backend", text.backend, "Value ring: exact (residues mod an auxiliary prime) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tolerance", config.tolerance, "Float backend rounding tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", text.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--seed", config.seed, "Seed for sampled curve coefficients");
    cmd->add_option("--table-budget", budget_flag,
                    "Largest field size to tabulate (default 2^20, or HYPERCOUNT_TABLE_BUDGET)");
}

std::vector<int> parse_degrees(const std::string& list)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const int d = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(d);
        } catch (const std::exception&) {
            throw UsageError("bad degree list '" + list + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

OutputFormat parse_format(const std::string& s, OutputFormat fallback)
{
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "text")
        return OutputFormat::Text;
    return fallback;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Point counts of y^2 = x^d + a x + b and y^2 = x^d + a x^(d-1) + b over finite fields via "
                 "Gaussian hypergeometric series, with brute-force and identity checks"};
    app.require_subcommand(1);

    RunConfig config;
    CommonText text;
    std::optional<std::uint64_t> budget_flag;

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count points on one curve");
    count->add_option("--q", count_args.q, "Field size, an odd prime power")->required();
    std::string count_family = "A";
    count->add_option("--family", count_family, "A: x^d + a x + b, B: x^d + a x^(d-1) + b")
        ->check(CLI::IsMember({"A", "B"}));
    count->add_option("--d", count_args.d, "Degree d >= 2")->required();
    count->add_option("--a", count_args.a, "Coefficient a: element code in [0, q), or a negative integer");
    count->add_option("--b", count_args.b, "Coefficient b: element code in [0, q), or a negative integer");
    count->add_flag("--check", count_args.check, "Compare against the brute-force count");
    count->add_flag("--brute", count_args.brute, "Count by enumeration only");
    add_common(count, config, text, budget_flag);

    SweepArgs sweep_args;
    std::string degree_list = "3,4,5";
    std::string family_choice = "both";
    auto* sweep = app.add_subcommand("sweep", "Compare closed-form and brute-force counts over many fields");
    sweep->add_option("--q-min", sweep_args.q_min, "Smallest field size");
    sweep->add_option("--q-max", sweep_args.q_max, "Largest field size");
    sweep->add_option("--d", degree_list, "Comma-separated degrees");
    sweep->add_option("--family", family_choice, "A, B or both")->check(CLI::IsMember({"A", "B", "both"}));
    sweep->add_option("--samples", sweep_args.samples, "Sampled (a, b) pairs per field, degree and family")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--timing", sweep_args.timing, "Fill the elapsed_us column (otherwise 0)");
    add_common(sweep, config, text, budget_flag);

    VerifyArgs verify_args;
    std::optional<std::uint64_t> verify_q;
    auto* verify = app.add_subcommand("verify", "Check character-sum identities and the theta-sum decomposition");
    auto* q_opt = verify->add_option("--q", verify_q, "Single field size");
    verify->add_option("--q-min", verify_args.q_min, "Smallest field size")->excludes(q_opt);
    verify->add_option("--q-max", verify_args.q_max, "Largest field size")->excludes(q_opt);
    verify->add_option("--samples", verify_args.samples, "Curves per family and degree in the decomposition check")
        ->check(CLI::NonNegativeNumber);
    add_common(verify, config, text, budget_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (auto env = table_budget_from_env())
            config.table_budget = *env;
        if (budget_flag)
            config.table_budget = *budget_flag;
        if (config.table_budget > kDefaultTableBudget)
            throw UsageError("table budget may not exceed 2^20 = " + std::to_string(kDefaultTableBudget));

        config.backend = text.backend == "float" ? Backend::Float : Backend::Exact;

        if (count->parsed()) {
            count_args.family = count_family == "B" ? Family::B : Family::A;
            config.format = parse_format(text.format, OutputFormat::Text);
            return run_count(config, count_args, std::cout);
        }

        if (sweep->parsed()) {
            sweep_args.degrees = parse_degrees(degree_list);
            if (family_choice == "A")
                sweep_args.families = {Family::A};
            else if (family_choice == "B")
                sweep_args.families = {Family::B};
            config.format = parse_format(text.format, OutputFormat::Csv);
            return run_sweep(config, sweep_args, std::cout, std::cerr);
        }

        if (verify_q) {
            verify_args.q_min = verify_args.q_max = *verify_q;
        } else if (verify_args.q_max == 0) {
            throw UsageError("verify needs --q or --q-max");
        }
        config.format = parse_format(text.format, OutputFormat::Text);
        return run_verify(config, verify_args, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
