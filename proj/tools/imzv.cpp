#include "imzv/imzv.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <regex>
#include <string>

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// "2,1,3", "[2,1,3]" or "(2,1,3)"; the empty index is "" or "[]".
imzv::Index parse_index(std::string s)
{
    std::erase_if(s, [](char c) { return c == ' ' || c == '[' || c == ']' || c == '(' || c == ')'; });
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("bad index \"" + s + "\"");
        }
        if (used != tok.size())
            throw UsageError("bad index \"" + s + "\"");
        parts.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    try {
        return imzv::Index(parts);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& s)
{
    static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("--primes expects a..b");
    return {std::stoull(m[1]), std::stoull(m[2])};
}

imzv::Rat parse_t(const std::string& s)
{
    try {
        return imzv::parse_rat(s);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

void print_terms(const imzv::IndexSum& s)
{
    for (const auto& [k, c] : s)
        std::cout << imzv::term_json(k, c).dump() << '\n';
}

struct Options
{
    std::string index;
    int m = 0;
    std::uint64_t p = 0;
    std::optional<int> max_weight;
    std::optional<int> max_m;
    std::optional<int> k_max;
    std::string primes = "11..47";
    std::int64_t trunc = 1000000;
    double tol = 1e-2;
    std::vector<std::string> t;
    std::string format = "json";
    bool stable = false;
    int jobs = 1;
};

int run_check(const std::string& suite, const Options& o)
{
    imzv::SuiteParams params;
    params.max_weight = o.max_weight;
    params.max_m = o.max_m;
    params.k_max = o.k_max;
    std::tie(params.prime_lo, params.prime_hi) = parse_prime_range(o.primes);
    params.trunc = o.trunc;
    params.tol = o.tol;
    for (const auto& t : o.t)
        params.t_values.push_back(parse_t(t));
    params.jobs = std::max(o.jobs, 1);

    std::vector<imzv::Instance> instances;
    try {
        instances = imzv::build_suite(suite, params);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }

    const bool csv = o.format == "csv";
    if (csv)
        std::cout << imzv::csv_header(o.stable) << '\n';
    std::size_t failed = 0;
    std::size_t total = 0;
    const bool ok = imzv::run_instances(instances, params.jobs, [&](const imzv::CheckReport& r) {
        ++total;
        failed += r.pass ? 0 : 1;
        if (csv)
            std::cout << imzv::report_csv(r, o.stable) << '\n';
        else
            std::cout << imzv::report_json(r, o.stable).dump() << '\n';
    });
    std::cout.flush();
    std::cerr << suite << ": " << total - failed << "/" << total << " checks passed\n";
    return ok ? 0 : exit_fail;
}

int run_eval(const std::string& what, const Options& o)
{
    const imzv::Index k = parse_index(o.index);
    if (o.m < 0)
        throw UsageError("--m must be >= 0");
    if (what == "g") {
        print_terms(imzv::g_poly(o.m, k));
    } else if (what == "G") {
        print_terms(imzv::G_poly(o.m, k));
    } else if (what == "h") {
        if (k.empty())
            throw UsageError("h needs a non-empty index");
        print_terms(imzv::h_poly(o.m, k));
    } else if (what == "It") {
        print_terms(imzv::interpolate(k));
    } else if (what == "dual") {
        if (!k.admissible())
            throw UsageError("dual needs an admissible index");
        std::cout << imzv::Json{{"index", imzv::to_json(imzv::dual(k))}}.dump() << '\n';
    } else if (what == "hoffman-dual") {
        if (k.empty())
            throw UsageError("hoffman-dual needs a non-empty index");
        std::cout << imzv::Json{{"index", imzv::to_json(imzv::hoffman_dual(k))}}.dump() << '\n';
    } else if (what == "zeta") {
        if (k.empty() || !k.admissible())
            throw UsageError("zeta needs a non-empty admissible index");
        if (o.trunc < 10)
            throw UsageError("--trunc must be >= 10");
        const imzv::Rat t = o.t.empty() ? imzv::Rat(0) : parse_t(o.t.front());
        const auto v = imzv::eval_indexsum_numeric(imzv::interpolate(k), t, o.trunc);
        imzv::Json j{{"index", imzv::to_json(k)}, {"t", imzv::to_string(t)}, {"N", o.trunc}};
        j["value"] = static_cast<double>(v.value);
        j["err"] = static_cast<double>(v.err);
        std::cout << j.dump(-1, ' ', false, imzv::Json::error_handler_t::strict) << '\n';
    } else if (what == "zetaA") {
        if (!imzv::is_prime(o.p) || o.p < 3)
            throw UsageError("zetaA needs --p an odd prime");
        imzv::Json j{{"index", imzv::to_json(k)}};
        j["value"] = imzv::to_json(imzv::zeta_A_t(k, o.p));
        std::cout << j.dump() << '\n';
    } else {
        throw UsageError("unknown eval target \"" + what + "\"");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and numeric verification of interpolated multiple zeta value identities"};
    app.require_subcommand(1);
    Options o;

    std::string suite;
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(imzv::suite_names()));

    std::string target;
    auto* eval = app.add_subcommand("eval", "evaluate one object");
    eval->add_option("what", target, "g|h|G|It|dual|hoffman-dual|zeta|zetaA")
        ->required()
        ->check(CLI::IsMember({"g", "h", "G", "It", "dual", "hoffman-dual", "zeta", "zetaA"}));
    eval->add_option("--index", o.index, "index, e.g. 2,1,3")->required();
    eval->add_option("--m", o.m, "shift weight");
    eval->add_option("--p", o.p, "prime for zetaA");

    for (auto* sub : {check, eval}) {
        sub->add_option("--trunc", o.trunc, "truncation N for real MZVs");
        sub->add_option("--t", o.t, "t value(s) as exact rationals, e.g. 1/2");
    }
    check->add_option("--max-weight", o.max_weight, "largest index weight");
    check->add_option("--max-m", o.max_m, "largest shift m (or series order U)");
    check->add_option("--k-max", o.k_max, "largest weight for sum-formula suites");
    check->add_option("--primes", o.primes, "prime range a..b");
    check->add_option("--tol", o.tol, "absolute numeric tolerance");
    check->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    check->add_flag("--stable", o.stable, "omit timing fields");
    check->add_option("--jobs", o.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*check)
            return run_check(suite, o);
        return run_eval(target, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
}
