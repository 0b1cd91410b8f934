// jetlct: jet schemes and log canonical thresholds from the command line.

#include "jetlct/jetlct.hpp"
#include "jetlct/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace jetlct;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNotMonomial = 3, kBudget = 4, kViolations = 5 };

struct InputOptions {
    std::string ideal;
    std::string file;
    std::string vars;
    std::string format = "text";
    bool json = false;
};

void add_input_options(CLI::App* sub, InputOptions& in)
{
    auto* inline_opt = sub->add_option("--ideal", in.ideal, "ideal as text, generators separated by ';' or newlines");
    auto* file_opt = sub->add_option("--file,file", in.file, "file holding the ideal")->check(CLI::ExistingFile);
    inline_opt->excludes(file_opt);
    sub->add_option("--vars", in.vars, "comma-separated variable order");
    sub->add_option("--format", in.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->final_callback([&in] { in.json = in.format == "json"; });
}

Ideal read_ideal(const InputOptions& in)
{
    std::string text = in.ideal;
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else if (in.ideal.empty()) {
        throw CLI::ValidationError("--ideal/--file", "an ideal is required");
    }
    std::optional<std::vector<std::string>> declared;
    if (!in.vars.empty()) {
        declared.emplace();
        std::stringstream ss(in.vars);
        std::string name;
        while (std::getline(ss, name, ',')) {
            name.erase(0, name.find_first_not_of(' '));
            name.erase(name.find_last_not_of(' ') + 1);
            declared->push_back(name);
        }
    }
    return parse_ideal(text, declared);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_jet_ideal(const InputOptions& in, std::size_t level, const std::string& convention)
{
    Ideal ideal = read_ideal(in);
    auto conv = convention == "coefficient" ? JetConvention::Coefficient : JetConvention::Derivation;
    JetSystem sys = build_jet_system(ideal, level, conv);
    if (in.json) {
        print_json(to_json(sys));
    } else {
        for (const auto& g : sys.generators) {
            std::cout << render(g, sys) << '\n';
        }
    }
    return kOk;
}

int run_lct(const InputOptions& in, bool via_jets, std::size_t m_max)
{
    Ideal ideal = read_ideal(in);
    MonomialIdeal mi = as_monomial_ideal(ideal);
    if (mi.is_unit()) {
        if (in.json) {
            print_json(Json{{"lct", "inf"}, {"vertex", Json::array()}, {"tight_generators", Json::array()}});
        } else {
            std::cout << "lct: inf\n";
        }
        return kOk;
    }
    LctCertificate cert = lct_monomial(mi);
    Json out = to_json(cert);
    std::string jet_line;
    if (via_jets) {
        JetLctResult jets = lct_via_jets(mi, m_max);
        if (jets.lct != cert.lct || !jets.bound_violations.empty()) {
            std::cerr << "error: jet-dimension cross-check disagrees with the polar program\n";
            return kViolations;
        }
        out["via_jets"] = Json{{"certificate_level", jets.certificate_level},
                               {"dim", dimension_json(jets.certificate.dim)},
                               {"levels_checked", m_max}};
        jet_line = "certified by jets at m = " + std::to_string(jets.certificate_level) +
                   " (dim " + jets.certificate.dim.str() + ")";
    }
    if (in.json) {
        print_json(out);
    } else {
        std::cout << "lct: " << to_string(cert.lct) << '\n' << "vertex:";
        for (const auto& x : cert.vertex) {
            std::cout << ' ' << to_string(x);
        }
        std::cout << "\ntight generators:";
        for (auto j : cert.tight_rows) {
            std::cout << ' ' << j;
        }
        std::cout << '\n';
        if (!jet_line.empty()) {
            std::cout << jet_line << '\n';
        }
    }
    return kOk;
}

void print_dim_text(const JetDimReport& rep)
{
    std::cout << "m = " << rep.level << ": dim " << rep.dim.str();
    if (rep.normalized) {
        std::cout << ", dim/(m+1) = " << to_string(*rep.normalized) << ", orders (";
        for (std::size_t i = 0; i < rep.argmin.size(); ++i) {
            std::cout << (i ? "," : "") << rep.argmin[i];
        }
        std::cout << ')';
    }
    std::cout << '\n';
}

int run_jet_dim(const InputOptions& in, std::optional<std::size_t> level, std::optional<std::size_t> sweep, bool fiber)
{
    MonomialIdeal mi = as_monomial_ideal(read_ideal(in));
    std::vector<JetDimReport> reps;
    if (sweep) {
        for (std::size_t m = 0; m <= *sweep; ++m) {
            reps.push_back(jet_dim_monomial(mi, m, fiber));
        }
    } else {
        reps.push_back(jet_dim_monomial(mi, level.value_or(0), fiber));
    }
    if (in.json) {
        if (sweep) {
            Json arr = Json::array();
            for (const auto& r : reps) {
                arr.push_back(to_json(r));
            }
            print_json(arr);
        } else {
            print_json(to_json(reps.front()));
        }
    } else {
        for (const auto& r : reps) {
            print_dim_text(r);
        }
    }
    return kOk;
}

int run_estimate(const InputOptions& in, std::vector<std::uint32_t> primes, std::size_t levels, bool fiber,
                 std::optional<std::uint64_t> budget)
{
    Ideal ideal = read_ideal(in);
    CountOptions opts;
    if (const char* env = std::getenv("JETLCT_BUDGET")) {
        opts.budget = std::stoull(env);
    }
    if (budget) {
        opts.budget = *budget;
    }
    if (primes.empty()) {
        primes = {5, 7};
    }
    LctEstimate est = estimate_lct(ideal, primes, levels, fiber, opts);
    if (in.json) {
        print_json(to_json(est));
        return kOk;
    }
    for (const auto& rep : est.reports) {
        std::cout << "p = " << rep.prime << '\n';
        for (const auto& lc : rep.levels) {
            std::cout << "  m = " << lc.level << ": count " << lc.count.get_str() << ", est_dim "
                      << (lc.est_dim ? std::to_string(*lc.est_dim) : std::string("-inf")) << '\n';
        }
    }
    if (!est.disagreeing_levels.empty()) {
        std::cout << "levels excluded (primes disagree):";
        for (auto m : est.disagreeing_levels) {
            std::cout << ' ' << m;
        }
        std::cout << '\n';
    }
    std::cout << "estimated lct (levels <= " << est.m_max << "): " << est.estimate.str();
    if (!est.estimate.is_infinite()) {
        std::cout << " ~ " << est.approx;
    }
    if (est.best_level) {
        std::cout << " at m = " << *est.best_level;
    }
    std::cout << '\n';
    if (est.ratio_estimate && !(*est.ratio_estimate == est.estimate)) {
        std::cout << "two-prime fit gives " << est.ratio_estimate->str() << "; the per-prime rounding may count many "
                  << "top-dimensional components as extra dimension\n";
    }
    return kOk;
}

int run_check(const std::string& property, const TrialConfig& cfg, bool json)
{
    std::vector<ViolationReport> violations;
    if (property == "all") {
        violations = check_all(cfg);
    } else {
        violations = check_property(*property_from_string(property), cfg);
    }
    if (json) {
        Json arr = Json::array();
        for (const auto& v : violations) {
            arr.push_back(to_json(v));
        }
        print_json(Json{{"property", property}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"violations", arr}});
    } else if (violations.empty()) {
        std::cout << property << ": " << cfg.trials << " trial(s), no violations\n";
    } else {
        for (const auto& v : violations) {
            std::cout << v.property << " violated (trial " << v.trial << ", seed " << v.seed << "): " << v.relation
                      << "; inputs";
            for (const auto& s : v.inputs) {
                std::cout << ' ' << s;
            }
            std::cout << "; values";
            for (const auto& s : v.values) {
                std::cout << ' ' << s;
            }
            std::cout << '\n';
        }
    }
    return violations.empty() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jet schemes and log canonical thresholds"};
    app.require_subcommand(1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads for parallel phases")->check(CLI::PositiveNumber);

    InputOptions jet_in, lct_in, dim_in, est_in;

    auto* jet_cmd = app.add_subcommand("jet-ideal", "equations of the m-th jet scheme");
    add_input_options(jet_cmd, jet_in);
    std::size_t jet_level = 1;
    std::string convention = "derivation";
    jet_cmd->add_option("--level,-m", jet_level, "jet level m");
    jet_cmd->add_option("--convention", convention, "derivation or coefficient")
        ->check(CLI::IsMember({"derivation", "coefficient"}));

    auto* lct_cmd = app.add_subcommand("lct", "exact LCT of a monomial ideal");
    add_input_options(lct_cmd, lct_in);
    bool via_jets = false;
    std::size_t lct_mmax = 60;
    lct_cmd->add_flag("--via-jets", via_jets, "cross-check against jet dimensions");
    lct_cmd->add_option("--m-max", lct_mmax, "level cap for --via-jets");

    auto* dim_cmd = app.add_subcommand("jet-dim", "exact jet-scheme dimensions of a monomial ideal");
    add_input_options(dim_cmd, dim_in);
    std::optional<std::size_t> dim_level, dim_sweep;
    bool dim_fiber = false;
    auto* lvl = dim_cmd->add_option("--level,-m", dim_level, "single level m");
    auto* swp = dim_cmd->add_option("--sweep", dim_sweep, "all levels 0..m_max");
    lvl->excludes(swp);
    dim_cmd->add_flag("--fiber-origin", dim_fiber, "restrict to jets over the origin");

    auto* est_cmd = app.add_subcommand("estimate", "LCT estimate from F_p jet point counts");
    add_input_options(est_cmd, est_in);
    std::vector<std::uint32_t> primes;
    std::size_t est_levels = 6;
    bool est_fiber = false;
    std::optional<std::uint64_t> budget;
    est_cmd->add_option("--prime,-p", primes, "prime (repeatable; default 5 and 7)");
    est_cmd->add_option("--levels", est_levels, "highest level m_max");
    est_cmd->add_flag("--fiber-origin", est_fiber, "count jets over the origin only");
    est_cmd->add_option("--budget", budget, "cap on search nodes (also JETLCT_BUDGET)");

    auto* check_cmd = app.add_subcommand("check", "randomized property checks");
    std::string property = "all";
    TrialConfig cfg;
    std::string check_format = "text";
    check_cmd->add_option("--property", property)
        ->check(CLI::IsMember({"product", "intersection", "bounds", "monotonic", "restriction", "all"}));
    check_cmd->add_option("--seed", cfg.seed);
    check_cmd->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-dim", cfg.n_range.hi, "largest ambient dimension")->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-degree", cfg.degree_range.hi, "largest exponent")->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-generators", cfg.generator_count_range.hi)->check(CLI::PositiveNumber);
    check_cmd->add_option("--format", check_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*jet_cmd) {
            return run_jet_ideal(jet_in, jet_level, convention);
        }
        if (*lct_cmd) {
            return run_lct(lct_in, via_jets, lct_mmax);
        }
        if (*dim_cmd) {
            return run_jet_dim(dim_in, dim_level, dim_sweep, dim_fiber);
        }
        if (*est_cmd) {
            return run_estimate(est_in, primes, est_levels, est_fiber, budget);
        }
        if (*check_cmd) {
            cfg.threads = threads;
            return run_check(property, cfg, check_format == "json");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const NotMonomial& e) {
        std::cerr << "error: " << e.what() << "; exact paths need a monomial ideal, try `estimate`\n";
        return kNotMonomial;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const CertificateLevelTooLarge& e) {
        std::cerr << "error: " << e.what() << "; raise --m-max\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
