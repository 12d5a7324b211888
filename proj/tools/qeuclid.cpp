// qeuclid: command-line front end.
//
// Exit status: 0 success, 1 a verification found failures, 2 bad usage or
// rejected input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qeuclid/dsl.hpp"
#include "qeuclid/schrodinger.hpp"
#include "qeuclid/suites.hpp"

namespace {

using namespace qe;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string q = "11/10";
    int N = 3;
    int K = 3;
    std::uint64_t seed = 1;
    bool json = false;
    bool csv = false;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt(cplx v) {
    if (v.imag() == 0.0) return fmt(v.real());
    return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

Json complex_json(cplx v) { return Json::array({v.real(), v.imag()}); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

double q_value(const Globals& g) {
    try {
        const double q0 = parse_q(g.q);
        if (!(q0 > 0.0)) throw std::invalid_argument("q must be positive");
        return q0;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void no_csv(const Globals& g, const char* command) {
    if (g.csv) throw UsageError(std::string("--csv is not available for ") + command);
}

Convention convention_option(const std::string& s) {
    try {
        return parse_convention(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Expr parse_or_report(const std::string& src) {
    try {
        return parse_expression(src);
    } catch (const ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n  " + src + "\n  " + std::string(e.offset(), ' ') + "^");
    }
}

Value evaluate_or_report(const Expr& e, Convention c) {
    try {
        return evaluate(e, EvalOptions{c});
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("cannot evaluate: ") + ex.what());
    }
}

std::string exp_text(const Exp4& e, Sector s) {
    static const char* x[] = {"x+", "x3", "x-", "t"};
    static const char* p[] = {"p-", "p3", "p+", ""};
    std::string out;
    for (size_t k = 0; k < 4; ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += s == Sector::X ? x[k] : p[k];
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- parse / expand

int cmd_parse(const Globals& g, const std::string& src) {
    no_csv(g, "parse");
    const Expr e = parse_or_report(src);
    if (g.json)
        std::cout << Json{{"canonical", print_expression(e)}, {"ast", expression_to_json(e)}}.dump(2) << "\n";
    else
        std::cout << print_expression(e) << "\n";
    return kOk;
}

int cmd_expand(const Globals& g, const std::string& src, const std::string& conv) {
    no_csv(g, "expand");
    const Value v = evaluate_or_report(parse_or_report(src), convention_option(conv));
    if (g.json)
        std::cout << value_to_json(v).dump(2) << "\n";
    else
        std::cout << value_to_string(v) << "\n";
    return kOk;
}

// ---------------------------------------------------------------- eval

struct Point {
    double x[4] = {0, 0, 0, 0};  // position storage order, t last
    double p[3] = {0, 0, 0};     // momentum storage order
    bool any = false;
};

Point parse_point(const std::vector<std::string>& items) {
    static const std::map<std::string, std::pair<char, int>> slots = {
        {"x+", {'x', 0}}, {"x3", {'x', 1}}, {"x-", {'x', 2}}, {"t", {'x', 3}},
        {"p-", {'p', 0}}, {"p3", {'p', 1}}, {"p+", {'p', 2}}};
    Point pt;
    for (const std::string& item : items) {
        const size_t eq = item.find('=');
        const auto it = eq == std::string::npos ? slots.end() : slots.find(item.substr(0, eq));
        if (it == slots.end()) throw UsageError("--at expects name=value with a coordinate name, got '" + item + "'");
        double v;
        try {
            size_t used = 0;
            v = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw UsageError("cannot read a number in '" + item + "'");
        }
        (it->second.first == 'x' ? pt.x : pt.p)[it->second.second] = v;
        pt.any = true;
    }
    return pt;
}

double monomial_value(const Exp4& e, const double* y, int slots) {
    double r = 1.0;
    for (int k = 0; k < slots; ++k) r *= std::pow(y[k], e[static_cast<size_t>(k)]);
    return r;
}

const double* sector_point(const Point& pt, Sector s) { return s == Sector::X ? pt.x : pt.p; }
int sector_slots(Sector s) { return s == Sector::X ? 4 : 3; }

int cmd_eval(const Globals& g, const std::string& src, const std::string& conv, const std::vector<std::string>& at) {
    if (g.json && g.csv) throw UsageError("--json and --csv are exclusive");
    const cplx q0(q_value(g), 0.0);
    const Point pt = parse_point(at);
    const Value v = evaluate_or_report(parse_or_report(src), convention_option(conv));

    // Numeric terms: (label, value) rows, plus the point value when requested.
    std::vector<std::pair<std::string, cplx>> rows;
    cplx total = 0.0;
    if (auto s = std::get_if<QRatio>(&v)) {
        rows.emplace_back("1", s->eval(q0));
        total = rows.back().second;
    } else if (auto f = std::get_if<CoordPoly>(&v)) {
        for (const auto& [e, c] : f->terms()) {
            rows.emplace_back(exp_text(e, f->sector()), c.eval(q0));
            total += rows.back().second * monomial_value(e, sector_point(pt, f->sector()), sector_slots(f->sector()));
        }
    } else {
        const auto& ps = std::get<PhaseSpacePoly>(v);
        for (const auto& [key, c] : ps.terms()) {
            rows.emplace_back(exp_text(key.first, ps.first().sector) + " (x) " + exp_text(key.second, ps.second().sector),
                              c.eval(q0));
            if (ps.first().sector == ps.second().sector && pt.any)
                throw UsageError("--at cannot evaluate a series whose two factors share a sector");
            total += rows.back().second *
                     monomial_value(key.first, sector_point(pt, ps.first().sector), sector_slots(ps.first().sector)) *
                     monomial_value(key.second, sector_point(pt, ps.second().sector), sector_slots(ps.second().sector));
        }
    }

    if (g.json) {
        Json terms = Json::array();
        for (const auto& [label, c] : rows) terms.push_back({{"monomial", label}, {"value", complex_json(c)}});
        Json out = {{"q", g.q}, {"terms", terms}};
        if (pt.any) out["value_at_point"] = complex_json(total);
        std::cout << out.dump(2) << "\n";
    } else if (g.csv) {
        std::cout << "monomial,re,im\n";
        for (const auto& [label, c] : rows) std::cout << csv_field(label) << "," << fmt(c.real()) << "," << fmt(c.imag()) << "\n";
        if (pt.any) std::cout << "value_at_point," << fmt(total.real()) << "," << fmt(total.imag()) << "\n";
    } else if (pt.any) {
        std::cout << fmt(total) << "\n";
    } else {
        for (const auto& [label, c] : rows) std::cout << "(" << fmt(c) << ") " << label << "\n";
        if (rows.empty()) std::cout << "0\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    std::string check;
    int case_index = -1;
    int cases = 0;
    bool timing = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    if (g.json && g.csv) throw UsageError("--json and --csv are exclusive");
    SuiteConfig c;
    c.q_text = g.q;
    c.q0 = q_value(g);
    c.N = g.N;
    c.K = g.K;
    c.seed = g.seed;
    c.cases = a.cases;
    if (!a.check.empty()) c.only_check = a.check;
    if (a.case_index >= 0) {
        if (a.check.empty()) throw UsageError("--case needs --check");
        c.only_case = a.case_index;
    }
    SuiteReport r;
    try {
        r = run_suite(a.suite, c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (g.json) {
        std::cout << r.to_json(a.timing).dump(2) << "\n";
    } else if (g.csv) {
        std::cout << "suite,check,cases,failures,skipped\n";
        for (const auto& ch : r.checks)
            std::cout << ch.suite << "," << ch.name << "," << ch.cases << "," << ch.failures.size() << ","
                      << csv_field(ch.skip_reason) << "\n";
    } else {
        for (const auto& ch : r.checks) {
            const char* status = ch.skipped ? "SKIP" : ch.failures.empty() ? "ok  " : "FAIL";
            std::cout << status << " " << ch.suite << "." << ch.name << " (" << ch.cases << (ch.cases == 1 ? " case)" : " cases)");
            if (ch.skipped) std::cout << ": " << ch.skip_reason;
            std::cout << "\n";
            for (const auto& f : ch.failures) {
                std::cout << "     case " << f.case_index << ": " << f.detail << "\n";
                if (!f.input.empty()) std::cout << "     input: " << f.input << "\n";
                std::cout << "     repro: " << f.repro << "\n";
            }
        }
        if (!r.heine.is_null()) {
            std::cout << "heine diagnostic (z = 1/3, q = " << g.q << "):\n";
            for (const auto& row : r.heine["rows"])
                std::cout << "  k=" << row["k"].get<int>() << " star power match "
                          << (row["double_sum_is_star_power"].get<bool>() ? "yes" : "no") << ", finite sum "
                          << fmt(row["finite_sum"].get<double>()) << " vs 1/(z;q^4)_k "
                          << fmt(row["reciprocal_product"].get<double>()) << ", relative gap "
                          << fmt(row["relative_gap"].get<double>()) << "\n";
        }
        std::cout << r.suite << ": " << r.case_count() << " cases, " << r.failure_count() << " failures";
        if (a.timing) std::cout << ", " << fmt(r.wall_seconds) << " s";
        std::cout << "\n";
    }
    return r.ok() ? kOk : kFailure;
}

// ---------------------------------------------------------------- propagator

struct PropagatorArgs {
    std::string family = "KR";
    std::string branch = "retarded";
    int order = -1;  // defaults to --K
    std::string mass = "1";
};

int cmd_propagator(const Globals& g, const PropagatorArgs& a) {
    if (g.json && g.csv) throw UsageError("--json and --csv are exclusive");
    PropagatorFamily fam;
    Branch br;
    GaussRat mass;
    try {
        fam = parse_propagator_family(a.family);
        br = parse_branch(a.branch);
        mass = GaussRat(rational_from_string(a.mass), mpq_class(0));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (sgn(mass.re) <= 0) throw UsageError("mass must be positive");
    const int order = a.order >= 0 ? a.order : g.K;
    const cplx q0(q_value(g), 0.0);
    const MomentumPropagator k = propagator_momentum(fam, br, order, mass);
    const bool holds = propagator_identity_holds(k);

    if (g.json) {
        Json terms = Json::array();
        for (int j = 0; j <= order; ++j) {
            const CoordPoly& coeff = k.series.at(-(j + 1));
            terms.push_back({{"k", j},
                             {"s_power", -(j + 1)},
                             {"scalar", k.scalars[static_cast<size_t>(j)].to_string()},
                             {"scalar_at_q", complex_json(k.scalars[static_cast<size_t>(j)].eval(q0))},
                             {"coefficient", to_json(coeff)}});
        }
        std::cout << Json{{"family", propagator_family_name(fam)},
                          {"branch", branch_name(br)},
                          {"order", order},
                          {"mass", a.mass},
                          {"q", g.q},
                          {"identity_holds", holds},
                          {"terms", terms}}
                         .dump(2)
                  << "\n";
    } else if (g.csv) {
        std::cout << "k,s_power,scalar,scalar_re,scalar_im,coefficient\n";
        for (int j = 0; j <= order; ++j) {
            const cplx v = k.scalars[static_cast<size_t>(j)].eval(q0);
            std::cout << j << "," << -(j + 1) << "," << csv_field(k.scalars[static_cast<size_t>(j)].to_string()) << ","
                      << fmt(v.real()) << "," << fmt(v.imag()) << "," << csv_field(k.series.at(-(j + 1)).to_string())
                      << "\n";
        }
    } else {
        std::cout << propagator_family_name(fam) << " " << branch_name(br) << ", order " << order << ", mass " << a.mass
                  << " (S = E " << (br == Branch::Retarded ? "+" : "-") << " i eps)\n";
        for (int j = 0; j <= order; ++j)
            std::cout << "  S^" << -(j + 1) << ": " << k.series.at(-(j + 1)).to_string() << "\n";
        const bool right_family = fam == PropagatorFamily::KR || fam == PropagatorFamily::KRStar;
        std::cout << "identity (S " << (right_family ? "-" : "+") << " p^2/2m) * K = " << (br == Branch::Retarded ? "+i" : "-i") << " below the shell: "
                  << (holds ? "holds" : "FAILS") << "\n";
    }
    return holds ? kOk : kFailure;
}

// ---------------------------------------------------------------- expectation

std::array<double, 3> triple(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_array() || v.size() != 3) throw std::invalid_argument(std::string(key) + " must be an array of 3 numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

LatticeFn samples_from_json(const QLattice& lat, const Json& arr, const char* key) {
    LatticeFn f(lat, Sector::P, Convention::W);
    if (!arr.is_array() || arr.size() != f.values().size())
        throw std::invalid_argument(std::string(key) + " must hold " + std::to_string(f.values().size()) +
                                    " [re, im] pairs (per_axis^3, axis order: negative branch then positive)");
    for (size_t k = 0; k < arr.size(); ++k) {
        const Json& v = arr[k];
        if (!v.is_array() || v.size() != 2) throw std::invalid_argument(std::string(key) + " entries must be [re, im]");
        f.values()[k] = cplx(v[0].get<double>(), v[1].get<double>());
    }
    return f;
}

WavePacket packet_from_json(const Json& j, bool normalize) {
    const Json& l = j.at("lattice");
    QLattice lat{l.value("q0", 1.5), l.value("j_min", -14), l.value("j_max", 14)};
    lat.validate();
    const double mass = j.value("mass", 1.0);
    WavePacket wp;
    if (j.contains("gaussian")) {
        const Json& gs = j.at("gaussian");
        wp = WavePacket::gaussian(lat, mass, triple(gs, "center"), gs.at("width").get<double>(), triple(gs, "wave_vector"),
                                  gs.value("support", 6));
        normalize = true;
    } else if (j.contains("samples")) {
        const Json& s = j.at("samples");
        wp.c_lower = samples_from_json(lat, s.at("c_lower"), "c_lower");
        if (s.contains("c_star_lower")) {
            wp.c_star_lower = samples_from_json(lat, s.at("c_star_lower"), "c_star_lower");
        } else {
            wp.c_star_lower = wp.c_lower;
            for (cplx& v : wp.c_star_lower.values()) v = std::conj(v);
        }
        wp.mass = mass;
    } else {
        throw std::invalid_argument("packet needs a \"gaussian\" or a \"samples\" section");
    }
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    return normalize ? wp.normalized() : wp;
}

int cmd_expectation(const Globals& g, const std::string& path, double t, bool normalize) {
    if (g.json && g.csv) throw UsageError("--json and --csv are exclusive");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open packet file '" + path + "'");
    WavePacket wp;
    try {
        wp = packet_from_json(Json::parse(in), normalize).at_time(t);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("bad packet JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad packet: ") + e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("packet rejected: ") + e.what());
    }
    struct Row {
        std::string quantity;
        cplx value;
    };
    std::vector<Row> rows;
    try {
        for (Index a : kSpatialIndices) {
            rows.push_back({"P^" + index_name(a), expectation_momentum(wp, a, true)});
            rows.push_back({"P_" + index_name(a), expectation_momentum(wp, a, false)});
        }
        for (Index a : kSpatialIndices) {
            rows.push_back({"X^" + index_name(a), expectation_position(wp, a, true)});
            rows.push_back({"X_" + index_name(a), expectation_position(wp, a, false)});
        }
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("packet rejected: ") + e.what());
    }
    const double norm_err = norm_check(wp);
    if (g.json) {
        Json ex = Json::object();
        for (const Row& r : rows) ex[r.quantity] = complex_json(r.value);
        std::cout << Json{{"t", t}, {"norm_error", norm_err}, {"expectations", ex}}.dump(2) << "\n";
    } else if (g.csv) {
        std::cout << "quantity,re,im\n";
        for (const Row& r : rows) std::cout << r.quantity << "," << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "\n";
        std::cout << "norm_error," << fmt(norm_err) << ",0\n";
    } else {
        std::cout << "t = " << fmt(t) << ", norm error " << fmt(norm_err) << "\n";
        for (const Row& r : rows) std::cout << "  <" << r.quantity << "> = " << fmt(r.value) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus on the q-deformed Euclidean space"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--q", g.q, "deformation parameter, rational (11/10) or decimal (1.1)")->capture_default_str();
    app.add_option("--N", g.N, "position truncation order")->capture_default_str();
    app.add_option("--K", g.K, "time / propagator truncation order")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for random property cases")->capture_default_str();
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--csv", g.csv, "CSV output where tabular");

    std::string expr, conv = "W";
    std::vector<std::string> at;

    auto* parse = app.add_subcommand("parse", "parse an expression and print its canonical form");
    parse->add_option("expression", expr, "expression text")->required();

    auto* eval = app.add_subcommand("eval", "evaluate an expression numerically at --q");
    eval->add_option("expression", expr, "expression text")->required();
    eval->add_option("--convention", conv, "ordering for coordinate literals: W or Wt")->capture_default_str();
    eval->add_option("--at", at, "point, e.g. --at x+=1 --at x3=0.5");

    auto* expand = app.add_subcommand("expand", "exact normal-ordered expansion of an expression");
    expand->add_option("expression", expr, "expression text")->required();
    expand->add_option("--convention", conv, "ordering for coordinate literals: W or Wt")->capture_default_str();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", va.suite, "qarith | ncalgebra | starcalc | qcalculus | qexp | schrodinger | all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--check", va.check, "run one check of the suite");
    verify->add_option("--case", va.case_index, "run one case of --check")->check(CLI::NonNegativeNumber);
    verify->add_option("--cases", va.cases, "cases per random check (0 keeps the defaults)")->check(CLI::NonNegativeNumber);
    verify->add_flag("--timing", va.timing, "report wall time (omitted by default to keep reports reproducible)");

    PropagatorArgs pa;
    auto* prop = app.add_subcommand("propagator", "momentum-space propagator series");
    prop->add_option("--family", pa.family, "KR | KL | KR* | KL*")->capture_default_str();
    prop->add_option("--branch", pa.branch, "retarded | advanced")->capture_default_str();
    prop->add_option("--order", pa.order, "highest power of p^2 (defaults to --K)")->check(CLI::NonNegativeNumber);
    prop->add_option("--mass", pa.mass, "positive rational mass")->capture_default_str();

    std::string packet;
    double t = 0.0;
    bool normalize = false;
    auto* expect = app.add_subcommand("expectation", "expectation values of a wave packet");
    expect->add_option("--packet", packet, "packet JSON file")->required();
    expect->add_option("--t", t, "time")->capture_default_str();
    expect->add_flag("--normalize", normalize, "rescale sampled packets to unit norm before use");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*parse) return cmd_parse(g, expr);
        if (*eval) return cmd_eval(g, expr, conv, at);
        if (*expand) return cmd_expand(g, expr, conv);
        if (*verify) return cmd_verify(g, va);
        if (*prop) return cmd_propagator(g, pa);
        if (*expect) return cmd_expectation(g, packet, t, normalize);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
