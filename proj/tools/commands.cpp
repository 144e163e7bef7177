#include "commands.hpp"
#include "report.hpp"

#include "hypercount/errors.hpp"
#include "hypercount/numtheory.hpp"
#include "hypercount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace hypercount::cli {

namespace {

FieldPtr make_field(std::uint64_t q, const RunConfig& config)
{
    auto pp = nt::as_prime_power(q);
    if (!pp || pp->p == 2)
        throw UsageError(std::to_string(q) + " is not an odd prime power");
    return build_field_of_order(q, config.table_budget);
}

FieldElem parse_element(const FieldCtx& field, std::int64_t v, const char* name)
{
    if (v < 0)
        return field.from_int(v);
    if (static_cast<std::uint64_t>(v) >= field.q())
        throw UsageError(std::string(name) + "=" + std::to_string(v) + " is not an element code below q=" +
                         std::to_string(field.q()));
    return field.element(static_cast<std::uint32_t>(v));
}

template <class Ring>
Ring make_ring(const FieldCtx& field, const RunConfig& config, int max_degree);

template <>
FloatRing make_ring<FloatRing>(const FieldCtx& field, const RunConfig& config, int)
{
    return FloatRing(field, config.tolerance);
}

template <>
ExactRing make_ring<ExactRing>(const FieldCtx& field, const RunConfig&, int max_degree)
{
    return ExactRing(field, max_degree);
}

/// Backend details for report headers.
template <class Ring>
void describe_ring(Json& j, const Ring& ring)
{
    j["backend"] = std::string(to_string(Ring::backend));
    if constexpr (Ring::backend == Backend::Exact)
        j["aux_prime"] = ring.modulus();
    else
        j["tolerance"] = ring.tolerance();
}

template <class Fn>
decltype(auto) with_backend(const RunConfig& config, Fn&& fn)
{
    if (config.backend == Backend::Exact)
        return fn(static_cast<ExactRing*>(nullptr));
    return fn(static_cast<FloatRing*>(nullptr));
}

std::string cell_text(const Json& value)
{
    if (value.is_null())
        return "";
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_object() && value.contains("re"))
        return char_value_text(std::complex<double>(value["re"].get<double>(), value["im"].get<double>()));
    if (value.is_object() && value.contains("residue"))
        return char_value_text(Residue{value["residue"].get<std::uint64_t>(), value["modulus"].get<std::uint64_t>()});
    return value.dump();
}

void write_text(std::ostream& out, const Json& j)
{
    for (const auto& [key, value] : j.items())
        out << key << ": " << (value.is_null() ? "-" : cell_text(value)) << '\n';
}

// ---------------------------------------------------------------- count

template <class Ring>
int count_with(const RunConfig& config, const CountArgs& args, std::ostream& out)
{
    auto field = make_field(args.q, config);
    const FieldElem a = parse_element(*field, args.a, "a");
    const FieldElem b = parse_element(*field, args.b, "b");
    const CurveParams curve{args.family, args.d, a, b};
    if (args.d < 2)
        throw UsageError("degree must be at least 2");

    std::optional<CountResult> result;
    std::optional<CharacterSums<Ring>> sums;
    if (args.brute) {
        result = CountResult{brute_count(*field, curve), CountMethod::BruteForce, std::nullopt, FieldElem{}};
    } else {
        const CountMethod method = theorem_for(args.family, args.d);
        check_degree(method, args.d);
        check_congruence(*field, method, args.d);
        sums.emplace(field, make_ring<Ring>(*field, config, args.d));
    }

    Json j;
    j["command"] = "count";
    j["q"] = field->q();
    j["p"] = field->p();
    j["e"] = field->e();
    j["family"] = std::string(to_string(args.family));
    j["d"] = args.d;
    j["a"] = a.code;
    j["b"] = b.code;
    if (sums)
        describe_ring(j, sums->ring());
    else
        j["backend"] = "none";

    std::string error;
    if (sums) {
        try {
            result = count_theorem(*sums, curve);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonIntegerResult)
                throw;
            error = e.what();
        }
    }
    j["method"] = std::string(to_string(result ? result->method : theorem_for(args.family, args.d)));
    j["argument"] = result && result->method != CountMethod::BruteForce ? Json(result->argument.code) : Json();
    j["hgf_value"] = result && result->hgf_value ? char_value_json(*result->hgf_value) : Json();
    j["n_points"] = result ? Json(result->n_points) : Json();

    bool ok = result.has_value();
    if (args.check) {
        const auto oracle = brute_count(*field, curve);
        const bool match = result && result->n_points == oracle;
        j["n_oracle"] = oracle;
        j["match"] = match;
        ok = ok && match;
    } else {
        j["n_oracle"] = Json();
        j["match"] = Json();
    }
    if (!error.empty())
        j["error"] = error;

    switch (config.format) {
    case OutputFormat::Json: out << j.dump(2) << '\n'; break;
    case OutputFormat::Text: write_text(out, j); break;
    case OutputFormat::Csv: {
        std::string header, row;
        for (const auto& [key, value] : j.items()) {
            header += (header.empty() ? "" : ",") + key;
            const std::string cell = cell_text(value);
            row += (row.empty() ? "" : ",") + csv_field(cell);
        }
        out << header << '\n' << row << '\n';
        break;
    }
    }
    return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- sweep

struct SweepRow {
    std::uint64_t q = 0;
    int d = 0;
    Family family = Family::A;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::optional<std::int64_t> n_thm;
    std::int64_t n_oracle = 0;
    bool match = false;
    std::optional<CharValue> hgf_value;
    std::int64_t elapsed_us = 0;
    std::string error;
};

bool admissible(std::uint64_t q, Family family, int d)
{
    return (q - 1) % required_modulus(theorem_for(family, d), d) == 0;
}

template <class Ring>
std::vector<SweepRow> sweep_field(std::uint64_t q, const RunConfig& config, const SweepArgs& args, int max_degree)
{
    std::vector<SweepRow> rows;
    auto field = make_field(q, config);
    std::optional<CharacterSums<Ring>> sums;
    for (int d : args.degrees) {
        for (Family family : args.families) {
            if (!admissible(q, family, d))
                continue;
            if (!sums)
                sums.emplace(field, make_ring<Ring>(*field, config, max_degree));
            const CountMethod method = theorem_for(family, d);
            TheoremCounter<Ring> counter(*sums, method, d);
            std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                              static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(d),
                              static_cast<std::uint32_t>(family)};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<std::uint32_t> u(1, field->q() - 1);
            for (int s = 0; s < args.samples; ++s) {
                SweepRow row;
                row.q = q;
                row.d = d;
                row.family = family;
                row.a = u(rng);
                row.b = u(rng);
                const CurveParams curve{family, d, FieldElem{row.a}, FieldElem{row.b}};
                const auto start = std::chrono::steady_clock::now();
                try {
                    const auto r = counter.count(curve.a, curve.b);
                    row.n_thm = r.n_points;
                    row.hgf_value = r.hgf_value;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NonIntegerResult)
                        throw;
                    row.error = e.what();
                }
                if (args.timing)
                    row.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
                row.n_oracle = brute_count(*field, curve);
                row.match = row.n_thm && *row.n_thm == row.n_oracle;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

template <class Ring>
int sweep_with(const RunConfig& config, const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.q_min > args.q_max)
        throw UsageError("--q-min exceeds --q-max");
    if (args.q_max > config.table_budget)
        throw UsageError("--q-max " + std::to_string(args.q_max) + " exceeds the table budget " +
                         std::to_string(config.table_budget));
    if (args.samples < 0)
        throw UsageError("--samples must be nonnegative");
    for (int d : args.degrees)
        for (Family family : args.families)
            check_degree(theorem_for(family, d), d);
    const int max_degree = *std::max_element(args.degrees.begin(), args.degrees.end());

    std::vector<std::uint64_t> fields;
    for (auto q : odd_prime_powers(args.q_min, args.q_max)) {
        bool any = false;
        for (int d : args.degrees)
            for (Family family : args.families)
                any = any || admissible(q, family, d);
        if (any)
            fields.push_back(q);
    }

    // Each field is one task; rows are gathered per task and emitted in
    // field order, so the output does not depend on scheduling.
    std::vector<std::vector<SweepRow>> results(fields.size());
    std::vector<std::string> failures(fields.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < fields.size(); i = next++) {
            try {
                results[i] = sweep_field<Ring>(fields[i], config, args, max_degree);
            } catch (const std::exception& e) {
                failures[i] = "q=" + std::to_string(fields[i]) + ": " + e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(args.jobs, static_cast<unsigned>(fields.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& f : failures)
        if (!f.empty())
            throw UsageError(f);

    std::size_t cases = 0, mismatches = 0;
    for (const auto& rows : results)
        for (const auto& r : rows) {
            ++cases;
            mismatches += r.match ? 0 : 1;
        }

    switch (config.format) {
    case OutputFormat::Csv:
        out << "q,d,family,a,b,n_thm,n_oracle,match,elapsed_us\n";
        for (const auto& rows : results)
            for (const auto& r : rows)
                out << r.q << ',' << r.d << ',' << to_string(r.family) << ',' << r.a << ',' << r.b << ','
                    << (r.n_thm ? std::to_string(*r.n_thm) : "") << ',' << r.n_oracle << ','
                    << (r.match ? "true" : "false") << ',' << r.elapsed_us << '\n';
        err << "cases=" << cases << " mismatches=" << mismatches << '\n';
        break;
    case OutputFormat::Json: {
        Json j;
        j["command"] = "sweep";
        j["backend"] = std::string(to_string(config.backend));
        j["seed"] = config.seed;
        j["q_min"] = args.q_min;
        j["q_max"] = args.q_max;
        Json rows = Json::array();
        for (const auto& rs : results)
            for (const auto& r : rs) {
                Json row;
                row["q"] = r.q;
                row["d"] = r.d;
                row["family"] = std::string(to_string(r.family));
                row["a"] = r.a;
                row["b"] = r.b;
                row["n_thm"] = r.n_thm ? Json(*r.n_thm) : Json();
                row["n_oracle"] = r.n_oracle;
                row["match"] = r.match;
                row["hgf_value"] = r.hgf_value ? char_value_json(*r.hgf_value) : Json();
                row["elapsed_us"] = r.elapsed_us;
                if (!r.error.empty())
                    row["error"] = r.error;
                rows.push_back(std::move(row));
            }
        j["rows"] = std::move(rows);
        j["summary"] = Json{{"cases", cases}, {"mismatches", mismatches}};
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Text:
        out << std::setw(6) << "q" << std::setw(4) << "d" << std::setw(4) << "fam" << std::setw(8) << "a"
            << std::setw(8) << "b" << std::setw(8) << "n_thm" << std::setw(9) << "n_oracle" << "  match  series\n";
        for (const auto& rs : results)
            for (const auto& r : rs)
                out << std::setw(6) << r.q << std::setw(4) << r.d << std::setw(4) << to_string(r.family)
                    << std::setw(8) << r.a << std::setw(8) << r.b << std::setw(8)
                    << (r.n_thm ? std::to_string(*r.n_thm) : "-") << std::setw(9) << r.n_oracle << "  "
                    << (r.match ? "yes  " : "NO   ") << "  " << (r.hgf_value ? char_value_text(*r.hgf_value) : r.error)
                    << '\n';
        out << "cases=" << cases << " mismatches=" << mismatches << '\n';
        break;
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- verify

Json check_json(const IdentityCheck& c)
{
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed();
    j["cases"] = c.cases;
    j["skipped"] = c.skipped;
    j["mismatches"] = c.mismatches;
    j["max_residual"] = c.max_residual;
    j["failures"] = c.failures;
    return j;
}

template <class Ring>
IdentityCheck decomposition_check(const CharacterSums<Ring>& sums, Family family, int d, int samples,
                                  std::uint64_t seed)
{
    const FieldCtx& field = sums.field();
    const Ring& ring = sums.ring();
    IdentityCheck check("decomposition_" + std::string(to_string(family)) + "_d" + std::to_string(d));
    if (d % static_cast<int>(field.p()) == 0 || (d - 1) % static_cast<int>(field.p()) == 0) {
        check.skipped = 1;
        return check;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), field.q(),
                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(family)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint32_t> u(1, field.q() - 1);
    ThetaDecomposer<Ring> decomposer(sums, family, d);
    const auto q = static_cast<std::int64_t>(field.q());
    for (int s = 0; s < samples; ++s) {
        const CurveParams curve{family, d, FieldElem{u(rng)}, FieldElem{u(rng)}};
        const std::string where = "a=" + std::to_string(curve.a.code) + ",b=" + std::to_string(curve.b.code);
        try {
            const auto r = decomposer.decompose(curve.a, curve.b);
            const std::int64_t n = brute_count(field, curve);
            const std::int64_t phi_b = field.is_square(curve.b) ? 1 : -1;
            const auto target = ring.from_int(q * n - q * q - q * phi_b);
            const bool ok = ring.equal(r.a_term, ring.from_int(-1)) &&
                            ring.equal(r.b_term, ring.from_int(1 + q * phi_b)) &&
                            ring.equal(ring.add(r.c_term, r.d_term), r.d_half) && ring.equal(r.d_half, target) &&
                            r.n_reconstructed == n;
            check.record(ok, ring.residual(r.d_half, target), where);
        } catch (const Error& e) {
            check.record(false, 1.0, where + ": " + e.what());
        }
    }
    return check;
}

template <class Ring>
Json verify_field(std::uint64_t q, const RunConfig& config, const VerifyArgs& args)
{
    auto field = make_field(q, config);
    CharacterSums<Ring> sums(field, make_ring<Ring>(*field, config, 5));
    Json j;
    j["q"] = field->q();
    j["p"] = field->p();
    j["e"] = field->e();
    j["generator"] = field->generator().code;
    describe_ring(j, sums.ring());

    std::vector<IdentityCheck> checks;
    for (auto& c : verify_lemmas(sums).checks)
        checks.push_back(std::move(c));
    const auto dh = verify_davenport_hasse_all(sums);
    checks.push_back(dh.relation);
    for (std::uint64_t d = 2; d <= 6; ++d) {
        if (field->group_order() % d != 0)
            continue;
        auto c = verify_product_formula(sums, d);
        c.name += "_d" + std::to_string(d);
        checks.push_back(std::move(c));
    }
    for (Family family : {Family::A, Family::B})
        for (int d = 2; d <= 5; ++d)
            checks.push_back(decomposition_check(sums, family, d, args.samples, config.seed));

    bool passed = true;
    Json list = Json::array();
    for (const auto& c : checks) {
        passed = passed && c.passed();
        list.push_back(check_json(c));
    }
    j["checks"] = std::move(list);
    j["passed"] = passed;
    return j;
}

template <class Ring>
int verify_with(const RunConfig& config, const VerifyArgs& args, std::ostream& out)
{
    if (args.q_min > args.q_max)
        throw UsageError("--q-min exceeds --q-max");
    auto qs = odd_prime_powers(args.q_min, args.q_max);
    if (args.q_min == args.q_max && qs.empty())
        throw UsageError(std::to_string(args.q_min) + " is not an odd prime power");

    Json fields = Json::array();
    bool passed = true;
    for (auto q : qs) {
        Json f = verify_field<Ring>(q, config, args);
        passed = passed && f["passed"].get<bool>();
        fields.push_back(std::move(f));
    }

    switch (config.format) {
    case OutputFormat::Json: {
        Json j;
        j["command"] = "verify";
        j["backend"] = std::string(to_string(config.backend));
        j["fields"] = std::move(fields);
        j["passed"] = passed;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "q,backend,aux_prime,check,passed,cases,skipped,mismatches,max_residual\n";
        for (const auto& f : fields)
            for (const auto& c : f["checks"])
                out << f["q"].get<std::uint64_t>() << ',' << f["backend"].get<std::string>() << ','
                    << (f.contains("aux_prime") ? f["aux_prime"].dump() : "") << ',' << c["name"].get<std::string>()
                    << ',' << (c["passed"].get<bool>() ? "true" : "false") << ',' << c["cases"].dump() << ','
                    << c["skipped"].dump() << ',' << c["mismatches"].dump() << ',' << c["max_residual"].dump()
                    << '\n';
        break;
    case OutputFormat::Text:
        for (const auto& f : fields) {
            out << "field q=" << f["q"].dump() << " p=" << f["p"].dump() << " e=" << f["e"].dump()
                << " generator=" << f["generator"].dump() << " backend=" << f["backend"].get<std::string>();
            if (f.contains("aux_prime"))
                out << " aux_prime=" << f["aux_prime"].dump();
            else
                out << " tolerance=" << f["tolerance"].dump();
            out << '\n';
            for (const auto& c : f["checks"]) {
                out << "  " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << ' ' << c["name"].get<std::string>()
                    << " cases=" << c["cases"].dump() << " skipped=" << c["skipped"].dump()
                    << " mismatches=" << c["mismatches"].dump() << " max_residual=" << c["max_residual"].dump()
                    << '\n';
                for (const auto& w : c["failures"])
                    out << "      at " << w.get<std::string>() << '\n';
            }
        }
        out << (passed ? "all identities pass" : "identity failures present") << '\n';
        break;
    }
    return passed ? kExitOk : kExitMismatch;
}

} // namespace

std::optional<std::uint64_t> table_budget_from_env()
{
    const char* raw = std::getenv("HYPERCOUNT_TABLE_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    std::istringstream in(raw);
    std::uint64_t v = 0;
    if (!(in >> v) || !in.eof())
        throw UsageError(std::string("HYPERCOUNT_TABLE_BUDGET is not an integer: ") + raw);
    return v;
}

std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = std::max<std::uint64_t>(lo, 3); q <= hi; ++q) {
        auto pp = nt::as_prime_power(q);
        if (pp && pp->p != 2)
            out.push_back(q);
    }
    return out;
}

int run_count(const RunConfig& config, const CountArgs& args, std::ostream& out)
{
    return with_backend(config, [&](auto* tag) {
        using Ring = std::remove_pointer_t<decltype(tag)>;
        return count_with<Ring>(config, args, out);
    });
}

int run_sweep(const RunConfig& config, const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    return with_backend(config, [&](auto* tag) {
        using Ring = std::remove_pointer_t<decltype(tag)>;
        return sweep_with<Ring>(config, args, out, err);
    });
}

int run_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out)
{
    return with_backend(config, [&](auto* tag) {
        using Ring = std::remove_pointer_t<decltype(tag)>;
        return verify_with<Ring>(config, args, out);
    });
}

} // namespace hypercount::cli
