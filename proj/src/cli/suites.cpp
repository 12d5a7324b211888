#include "qeuclid/suites.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "checks.hpp"

namespace qe {

namespace {

const std::vector<std::string> kModuleSuites = {"qarith", "ncalgebra", "starcalc", "qcalculus", "qexp", "schrodinger"};

std::vector<checks::Check> checks_for(const std::string& suite) {
    if (suite == "qarith") return checks::qarith();
    if (suite == "ncalgebra") return checks::ncalgebra();
    if (suite == "starcalc") return checks::starcalc();
    if (suite == "qcalculus") return checks::qcalculus();
    if (suite == "qexp") return checks::qexp();
    if (suite == "schrodinger") return checks::schrodinger();
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string repro_command(const std::string& suite, const std::string& check, int index, const SuiteConfig& c) {
    return "qeuclid verify --suite " + suite + " --check " + check + " --case " + std::to_string(index) +
           " --seed " + std::to_string(c.seed) + " --q " + c.q_text + " --N " + std::to_string(c.N) + " --K " +
           std::to_string(c.K);
}

CheckResult run_check(const std::string& suite, const checks::Check& check, const SuiteConfig& config) {
    CheckResult r;
    r.suite = suite;
    r.name = check.name;
    if (check.needs_lattice && !(config.q0 > 1.0)) {
        r.skipped = true;
        r.skip_reason = config.classical() ? "lattice is degenerate at q = 1" : "lattice checks need q > 1";
        return r;
    }
    // Checks with fewer than ten cases enumerate fixed families or are costly
    // lattice runs; only the random-sampling checks take the override.
    const int count = config.cases > 0 && check.default_cases >= 10 ? config.cases : check.default_cases;
    int first = 0, last = count;
    if (config.only_case) {
        if (*config.only_case < 0) throw std::invalid_argument("case index must be non-negative");
        first = *config.only_case;
        last = first + 1;
    }
    for (int i = first; i < last; ++i) {
        Rng rng(case_seed(config.seed, suite + "." + check.name, i));
        checks::Context cx{rng, config, i};
        checks::Outcome o;
        try {
            o = check.run(cx);
        } catch (const std::exception& e) {
            o = checks::fail(o.input, std::string("exception: ") + e.what());
        }
        ++r.cases;
        if (!o.ok) r.failures.push_back({i, o.input, o.detail, repro_command(suite, check.name, i, config)});
    }
    return r;
}

Json heine_section(const SuiteConfig& config) {
    const GaussRat z = GaussRat::ratio(1, 3);
    Json rows = Json::array();
    for (const HeineRow& row : heine_diagnostic(std::max(config.K, 1), z, config.q0)) {
        rows.push_back({{"k", row.k},
                        {"double_sum_is_star_power", row.double_sum_is_star_power},
                        {"product_defect", row.product_defect.to_string()},
                        {"finite_sum", row.finite_sum},
                        {"reciprocal_product", row.reciprocal},
                        {"relative_gap", row.relative_gap}});
    }
    return {{"z", "1/3"}, {"q", config.q_text}, {"rows", rows}};
}

}  // namespace

void SuiteConfig::validate() const {
    if (!(q0 > 0.0) || !std::isfinite(q0)) throw std::invalid_argument("q must be a positive number");
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    if (K < 0) throw std::invalid_argument("K must be non-negative");
    if (cases < 0) throw std::invalid_argument("cases must be non-negative");
}

double parse_q(const std::string& text) {
    const size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const mpq_class r = rational_from_string(text);
            return r.get_d();
        }
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot read q value '" + text + "'");
    }
}

int SuiteReport::case_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.cases;
    return n;
}

int SuiteReport::failure_count() const {
    int n = 0;
    for (const auto& c : checks) n += static_cast<int>(c.failures.size());
    return n;
}

Json SuiteReport::to_json(bool include_timing) const {
    Json list = Json::array();
    for (const auto& c : checks) {
        Json failures = Json::array();
        for (const auto& f : c.failures)
            failures.push_back({{"case", f.case_index}, {"input", f.input}, {"detail", f.detail}, {"repro", f.repro}});
        Json j = {{"suite", c.suite}, {"name", c.name}, {"cases", c.cases}, {"failures", failures}};
        if (c.skipped) j["skipped"] = c.skip_reason;
        list.push_back(j);
    }
    Json j = {{"suite", suite},
              {"q", config.q_text},
              {"q_numeric", config.q0},
              {"N", config.N},
              {"K", config.K},
              {"seed", config.seed},
              {"classical_limit", config.classical()},
              {"case_count", case_count()},
              {"failure_count", failure_count()},
              {"checks", list}};
    if (!heine.is_null()) j["heine_diagnostic"] = heine;
    if (include_timing) j["wall_seconds"] = wall_seconds;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = kModuleSuites;
        v.push_back("all");
        return v;
    }();
    return names;
}

std::vector<std::string> check_names(const std::string& suite) {
    std::vector<std::string> out;
    for (const std::string& s : suite == "all" ? kModuleSuites : std::vector<std::string>{suite})
        for (const auto& c : checks_for(s)) out.push_back(suite == "all" ? s + "." + c.name : c.name);
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.config = config;
    const std::vector<std::string> suites = name == "all" ? kModuleSuites : std::vector<std::string>{name};
    bool matched = !config.only_check.has_value();
    for (const std::string& s : suites) {
        for (const auto& check : checks_for(s)) {
            if (config.only_check && *config.only_check != check.name && *config.only_check != s + "." + check.name)
                continue;
            matched = true;
            report.checks.push_back(run_check(s, check, config));
        }
        if (s == "schrodinger" && !config.only_check) report.heine = heine_section(config);
    }
    if (!matched) throw std::invalid_argument("suite '" + name + "' has no check '" + *config.only_check + "'");
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qe
