// Command-line front end: order tables, the verification suite, minimal
// polynomials, and factor-cache management for Artin-Schreier towers.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 resource/budget limitation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "astower/astower.hpp"

namespace {

using nlohmann::json;
using namespace astower;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    unsigned p = 2;
    std::optional<int> max_level;
    std::string cache_path;
    std::string format = "tsv";
    std::uint64_t budget_seconds = 30;
    std::uint64_t seed = 1;

    int effective_max_level() const {
        if (max_level)
            return *max_level;
        switch (p) {
            case 2: return 5;
            case 3: return 2;
            default: return 1;
        }
    }

    FactorBudget factor_budget() const {
        FactorBudget b;
        b.time_limit = std::chrono::seconds{budget_seconds};
        b.seed = seed;
        return b;
    }
};

int validate_config(const RunConfig& cfg) {
    if (!is_prime(Natural{cfg.p}) || cfg.p > 7) {
        std::cerr << "error: p must be a prime <= 7, got " << cfg.p << "\n";
        return kExitUsage;
    }
    if (cfg.effective_max_level() < -1) {
        std::cerr << "error: max level must be >= -1\n";
        return kExitUsage;
    }
    if (cfg.format != "tsv" && cfg.format != "json") {
        std::cerr << "error: format must be tsv or json\n";
        return kExitUsage;
    }
    return kExitOk;
}

// Loads the cache file when configured; strict = reject-errors-are-fatal.
int load_cache(const RunConfig& cfg, FactorCache& cache) {
    if (cfg.cache_path.empty())
        return kExitOk;
    CacheLoadResult loaded;
    try {
        loaded = load_factor_cache_file(cfg.cache_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    for (const CacheLineError& err : loaded.rejected)
        std::cerr << "warning: " << cfg.cache_path << ":" << err.line << ": " << err.message << "\n";
    if (!loaded.rejected.empty())
        return kExitUsage;
    cache = std::move(loaded.cache);
    return kExitOk;
}

std::string factorization_text(const PartialFactorization& pf) {
    if (pf.complete())
        return pf.factors.str();
    if (pf.factors.empty())
        return nat_str(pf.cofactor) + "?";
    return pf.factors.str() + " * " + nat_str(pf.cofactor) + "?";
}

std::string bound_text(const OrderBound& b) { return b.exact() ? nat_str(b.value()) : "?"; }

json bound_json(const OrderBound& b) {
    json j;
    j["exact"] = b.exact();
    j["divides"] = nat_str(b.divides);
    j["multiple_of"] = nat_str(b.multiple_of);
    if (b.exact())
        j["value"] = nat_str(b.value());
    return j;
}

json config_json(const RunConfig& cfg) {
    json j;
    j["p"] = cfg.p;
    j["max_level"] = cfg.effective_max_level();
    j["format"] = cfg.format;
    j["budget_seconds"] = cfg.budget_seconds;
    j["seed"] = cfg.seed;
    j["cache"] = cfg.cache_path;
    return j;
}

json report_json(const OrderReport& rep) {
    json j;
    j["level"] = rep.level;
    j["n"] = nat_str(rep.n);
    j["n_factorization"] = factorization_text(rep.n_factorization);
    j["n_factorization_complete"] = rep.n_factorization.complete();
    j["m"] = bound_json(rep.m);
    j["order_c"] = bound_json(rep.order_c);
    j["order_a"] = bound_json(rep.order_a);
    if (rep.m_equals_n)
        j["m_equals_n"] = *rep.m_equals_n;
    else
        j["m_equals_n"] = nullptr;
    j["order_equality_exception"] = rep.order_equality_exception;
    j["certainty"] = certainty_name(rep.certainty);
    return j;
}

int cmd_table(const RunConfig& cfg) {
    if (int rc = validate_config(cfg); rc != kExitOk)
        return rc;
    FactorCache cache;
    if (int rc = load_cache(cfg, cache); rc != kExitOk)
        return rc;
    TowerOptions opts;
    opts.factor_budget = cfg.factor_budget();
    opts.cache = cfg.cache_path.empty() ? nullptr : &cache;
    const int max_level = cfg.effective_max_level();
    TowerContext ctx(cfg.p, max_level, opts);
    const std::vector<OrderReport> table = order_table(ctx, max_level);

    bool gaps = false;
    for (const OrderReport& rep : table)
        gaps = gaps || !rep.exact();

    if (cfg.format == "json") {
        json out;
        out["config"] = config_json(cfg);
        out["rows"] = json::array();
        for (const OrderReport& rep : table)
            out["rows"].push_back(report_json(rep));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "i\tN\tfactorization\tM\tO_c\tO_a\tM_eq_N\tcertainty\n";
        for (const OrderReport& rep : table) {
            std::cout << rep.level << "\t" << nat_str(rep.n) << "\t"
                      << factorization_text(rep.n_factorization) << "\t" << bound_text(rep.m) << "\t"
                      << bound_text(rep.order_c) << "\t" << bound_text(rep.order_a) << "\t"
                      << (rep.m_equals_n ? (*rep.m_equals_n ? "yes" : "no") : "?") << "\t"
                      << certainty_name(rep.certainty) << "\n";
        }
    }
    return gaps ? kExitBudget : kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    if (int rc = validate_config(cfg); rc != kExitOk)
        return rc;
    FactorCache cache;
    if (int rc = load_cache(cfg, cache); rc != kExitOk)
        return rc;
    TowerOptions opts;
    opts.factor_budget = cfg.factor_budget();
    opts.cache = cfg.cache_path.empty() ? nullptr : &cache;
    const int max_level = cfg.effective_max_level();
    TowerContext ctx(cfg.p, max_level, opts);
    VerifyOptions vopt;
    vopt.seed = cfg.seed;
    const std::vector<CheckResult> checks = run_verification(ctx, vopt);

    bool all_pass = true;
    if (cfg.format == "json") {
        json out;
        out["config"] = config_json(cfg);
        out["rows"] = json::array();
        for (const OrderReport& rep : order_table(ctx, max_level))
            out["rows"].push_back(report_json(rep));
        out["checks"] = json::array();
        for (const CheckResult& c : checks) {
            json jc;
            jc["name"] = c.name;
            jc["paper_ref"] = c.reference;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["detail"] = c.detail;
            out["checks"].push_back(jc);
            all_pass = all_pass && c.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& c : checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.reference << "]";
            if (!c.pass)
                std::cout << "  " << c.detail;
            std::cout << "\n";
            all_pass = all_pass && c.pass;
        }
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " (p=" << cfg.p
                  << ", levels 0.." << max_level << ")\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int cmd_minpoly(const RunConfig& cfg, const std::string& target, int level) {
    if (int rc = validate_config(cfg); rc != kExitOk)
        return rc;
    if (target != "c" && target != "a") {
        std::cerr << "error: target must be 'c' or 'a'\n";
        return kExitUsage;
    }
    if (level < 0) {
        std::cerr << "error: level must be >= 0\n";
        return kExitUsage;
    }
    constexpr unsigned kDegreeBudget = 128;
    Natural degree{1};
    for (int k = 0; k <= level; ++k)
        degree *= cfg.p;
    if (degree > kDegreeBudget) {
        std::cerr << "error: degree p^" << (level + 1) << " exceeds the budget of " << kDegreeBudget
                  << "\n";
        return kExitBudget;
    }
    TowerOptions opts;
    opts.factor_budget = cfg.factor_budget();
    opts.factor_n_values = false;  // factorizations play no role here
    TowerContext ctx(cfg.p, level, opts);
    const TowerElement x = target == "c" ? ctx.canonical_generator(level) : ctx.a_const(level);
    DensePoly f(-1);
    try {
        f = minimal_polynomial(ctx, x, kDegreeBudget);
    } catch (const DegreeBudgetExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBudget;
    }
    if (cfg.format == "json") {
        json out;
        out["config"] = config_json(cfg);
        out["target"] = target + "_" + std::to_string(level);
        out["minimal_polynomial"] = poly_str(f);
        out["degree"] = f.degree();
        if (target == "c" && level == 1) {
            const DensePoly closed = c1_minimal_polynomial_closed_form(ctx);
            out["closed_form"] = poly_str(closed);
            out["closed_form_equal"] = (f == closed);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << poly_str(f) << "\n";
        if (target == "c" && level == 1) {
            const DensePoly closed = c1_minimal_polynomial_closed_form(ctx);
            std::cout << "closed form: " << poly_str(closed) << "\n"
                      << (f == closed ? "EQUAL" : "UNEQUAL") << "\n";
        }
    }
    return kExitOk;
}

int cmd_factors(const RunConfig& cfg, const std::string& action, const std::string& file) {
    if (int rc = validate_config(cfg); rc != kExitOk)
        return rc;
    if (action == "show") {
        if (cfg.cache_path.empty()) {
            std::cerr << "error: factors show needs --cache\n";
            return kExitUsage;
        }
        CacheLoadResult loaded;
        try {
            loaded = load_factor_cache_file(cfg.cache_path);
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitUsage;
        }
        for (const CacheLineError& err : loaded.rejected)
            std::cerr << "error: " << cfg.cache_path << ":" << err.line << ": " << err.message << "\n";
        save_factor_cache(std::cout, loaded.cache);
        return loaded.rejected.empty() ? kExitOk : kExitUsage;
    }
    if (action == "export") {
        FactorCache cache;
        if (int rc = load_cache(cfg, cache); rc != kExitOk)
            return rc;
        TowerOptions opts;
        opts.factor_budget = cfg.factor_budget();
        opts.cache = &cache;
        const int max_level = cfg.effective_max_level();
        TowerContext ctx(cfg.p, max_level, opts);
        FactorCache out;
        bool gaps = false;
        for (int i = 0; i <= max_level; ++i) {
            const PartialFactorization& pf = ctx.n_factorization(i);
            if (pf.complete())
                out.insert(ctx.n_value(i), pf.factors);
            else
                gaps = true;
        }
        if (file.empty() || file == "-") {
            save_factor_cache(std::cout, out);
        } else {
            try {
                save_factor_cache_file(file, out);
            } catch (const std::exception& ex) {
                std::cerr << "error: " << ex.what() << "\n";
                return kExitUsage;
            }
        }
        if (gaps)
            std::cerr << "warning: some levels exceeded the factorization budget\n";
        return gaps ? kExitBudget : kExitOk;
    }
    if (action == "import") {
        if (cfg.cache_path.empty() || file.empty()) {
            std::cerr << "error: factors import needs --cache and --file\n";
            return kExitUsage;
        }
        CacheLoadResult incoming;
        try {
            incoming = load_factor_cache_file(file);
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitUsage;
        }
        if (!incoming.rejected.empty()) {
            for (const CacheLineError& err : incoming.rejected)
                std::cerr << "error: " << file << ":" << err.line << ": " << err.message << "\n";
            return kExitUsage;
        }
        FactorCache merged;
        std::ifstream existing(cfg.cache_path);
        if (existing) {
            CacheLoadResult current = load_factor_cache(existing);
            for (const CacheLineError& err : current.rejected)
                std::cerr << "warning: " << cfg.cache_path << ":" << err.line << ": " << err.message
                          << "\n";
            merged = std::move(current.cache);
        }
        for (const auto& [n, f] : incoming.cache)
            merged.insert(n, f);
        try {
            save_factor_cache_file(cfg.cache_path, merged);
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitUsage;
        }
        return kExitOk;
    }
    std::cerr << "error: unknown factors action '" << action << "'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin-Schreier tower calculator: exact tower-field arithmetic, "
                 "generator orders, and theorem verification over F_p"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    int max_level_arg = 0;
    app.add_option("--p", cfg.p, "tower characteristic (prime <= 7)");
    auto* ml = app.add_option("--max-level", max_level_arg, "highest tower level to construct");
    app.add_option("--cache", cfg.cache_path, "factor cache file");
    app.add_option("--format", cfg.format, "output format: tsv or json");
    app.add_option("--budget-seconds", cfg.budget_seconds, "factorization time budget");
    app.add_option("--seed", cfg.seed, "seed for all randomized search and checks");

    CLI::App* table = app.add_subcommand("table", "per-level table of N_i, M_i, O(c_i), O(a_i)");
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");

    std::string minpoly_target;
    int minpoly_level = 0;
    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial of c_i or a_i over F_p");
    minpoly->add_option("target", minpoly_target, "c or a")->required();
    minpoly->add_option("level", minpoly_level, "tower level i")->required();

    std::string factors_action, factors_file;
    CLI::App* factors = app.add_subcommand("factors", "show/import/export the factor cache");
    factors->add_option("action", factors_action, "show, import, or export")->required();
    factors->add_option("--file", factors_file, "file to import from / export to");

    CLI11_PARSE(app, argc, argv);
    if (ml->count() > 0)
        cfg.max_level = max_level_arg;

    try {
        if (table->parsed())
            return cmd_table(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (minpoly->parsed())
            return cmd_minpoly(cfg, minpoly_target, minpoly_level);
        if (factors->parsed())
            return cmd_factors(cfg, factors_action, factors_file);
    } catch (const OrderUncomputable& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const IncompleteFactorization& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
