// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qeuclid/generators.hpp"
#include "qeuclid/ncalgebra.hpp"
#include "qeuclid/schrodinger.hpp"
#include "qeuclid/suites.hpp"

using namespace qe;

namespace {

// Pinned tolerances and runtime budgets.
constexpr double kLatticeTolerance = 1e-9;
constexpr double kExpectationTolerance = 1e-10;
constexpr double kClassicalTolerance = 1e-12;
constexpr double kOracleSeconds = 10.0;
constexpr double kEigenSeconds = 30.0;
constexpr double kLatticeSeconds = 20.0;
constexpr int kLatticeHalfWidth = 20;
constexpr int kSupport = 6;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 means no runtime bound
    std::function<Verdict()> run;
};

CoordPoly var(Sector s, Convention c, int i) { return CoordPoly::variable(s, c, i); }
CoordPoly unit(Sector s, Convention c) { return CoordPoly::constant(s, c, QRatio(1)); }

Verdict star_oracle() {
    Verdict v;
    Rng rng(kSeed);
    for (int i = 0; i < 200; ++i) {
        const Convention c = i % 2 == 0 ? Convention::W : Convention::Wt;
        const CoordPoly f = random_poly(rng, Sector::X, c, 4, 4, 2);
        const CoordPoly g = random_poly(rng, Sector::X, c, 4, 4, 2);
        v.require(star_product(f, g) == star_product_oracle(f, g), "pair " + std::to_string(i));
    }
    v.detail = v.ok ? "200 pairs, degree <= 4, variables x+ x3 x- t" : v.detail;
    return v;
}

Verdict defining_relations() {
    Verdict v;
    for (Convention c : {Convention::W, Convention::Wt}) {
        const CoordPoly xp = var(Sector::X, c, 0), x3 = var(Sector::X, c, 1), xm = var(Sector::X, c, 2);
        const CoordPoly zero(Sector::X, c);
        v.require(star_product(x3, xp) - star_product(xp, x3) * QRatio(QScalar::q_pow(2)) == zero, "x3 x+");
        v.require(star_product(x3, xm) - star_product(xm, x3) * QRatio(QScalar::q_pow(-2)) == zero, "x3 x-");
        v.require(star_product(xm, xp) - star_product(xp, xm) - star_power(x3, 2) * QRatio(lambda()) == zero,
                  "x- x+");
    }
    v.detail = v.ok ? "three relations in both orderings" : v.detail;
    return v;
}

Verdict associativity_and_conjugation() {
    Verdict v;
    Rng rng(kSeed + 1);
    for (int i = 0; i < 100; ++i) {
        const Convention c = i % 2 == 0 ? Convention::W : Convention::Wt;
        const CoordPoly f = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly g = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly h = random_poly(rng, Sector::X, c, 3, 3, 1);
        v.require(star_product(star_product(f, g), h) == star_product(f, star_product(g, h)),
                  "associativity, triple " + std::to_string(i));
        v.require(conjugate(star_product(f, g)) == star_product(conjugate(g), conjugate(f)),
                  "conjugation, pair " + std::to_string(i));
    }
    v.detail = v.ok ? "100 triples and 100 pairs" : v.detail;
    return v;
}

Verdict eigen_residuals() {
    Verdict v;
    for (ExpVariant var : kAllVariants) {
        const QExponential e = build_exponential(var, 4);
        for (Index a : kSpatialIndices)
            v.require(vanishes_below_shell(eigen_residual(e, a), 4), variant_name(var) + " index " + index_name(a));
    }
    v.detail = v.ok ? "N = 4, six exponentials, three indices" : v.detail;
    return v;
}

Verdict psq_combinatorics() {
    Verdict v;
    for (int k = 1; k <= 12; ++k)
        for (int l = 0; l <= k; ++l) {
            QScalar rhs;
            if (l < k) rhs += -lambda_plus() * QScalar::q_pow(4 * l) * cq_coefficient(k - 1, l);
            if (l > 0) rhs += QScalar::q_pow(-2) * cq_coefficient(k - 1, l - 1);
            v.require(cq_coefficient(k, l) == rhs, "recurrence at k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    const CoordPoly p2 = psq_power(1);
    for (unsigned k = 0; k <= 4; ++k)
        v.require(psq_power(static_cast<int>(k)) == star_power(p2, k), "star power " + std::to_string(k));
    v.require(p2 == momentum_square(Convention::W), "p^2 against the metric contraction");
    v.detail = v.ok ? "recurrence k <= 12, star powers k <= 4" : v.detail;
    return v;
}

Verdict plane_waves() {
    Verdict v;
    const GaussRat mass = GaussRat::ratio(3, 2);
    for (int N = 0; N <= 3; ++N)
        for (int K = 0; K <= 3; ++K) {
            const std::string at = " N=" + std::to_string(N) + " K=" + std::to_string(K);
            v.require(build_plane_wave(WaveFamily::Lower, N, K, mass).body == closed_form_plane_wave(N, K, mass),
                      "coefficients" + at);
            for (WaveFamily f : kAllFamilies) {
                const PlaneWave w = build_plane_wave(f, N, K, mass);
                v.require(vanishes_below_shell(w, schrodinger_residual(w)), family_name(f) + " Schrodinger" + at);
                v.require(vanishes_below_shell(w, energy_residual(w)), family_name(f) + " energy" + at);
                for (Index a : kSpatialIndices)
                    v.require(vanishes_below_shell(w, momentum_residual(w, a)), family_name(f) + " momentum" + at);
            }
        }
    v.detail = v.ok ? "N, K <= 3, four families" : v.detail;
    return v;
}

Verdict propagators() {
    Verdict v;
    for (PropagatorFamily f : {PropagatorFamily::KR, PropagatorFamily::KL, PropagatorFamily::KRStar,
                               PropagatorFamily::KLStar})
        for (Branch b : {Branch::Retarded, Branch::Advanced})
            for (int K = 0; K <= 6; ++K)
                v.require(propagator_identity_holds(propagator_momentum(f, b, K, GaussRat(1))),
                          propagator_family_name(f) + " " + branch_name(b) + " K=" + std::to_string(K));
    v.detail = v.ok ? "K <= 6, four families, both branches" : v.detail;
    return v;
}

Verdict hopf_laws() {
    Verdict v;
    Rng rng(kSeed + 2);
    for (int i = 0; i < 40; ++i) {
        const Translation t = i % 2 == 0 ? Translation::Plus : Translation::PlusBar;
        const Convention c = t == Translation::Plus ? Convention::Wt : Convention::W;
        const CoordPoly f = random_poly(rng, Sector::X, c, 4, 4);
        const PhaseSpacePoly delta = q_translate(f, t);
        const std::string at = " case " + std::to_string(i);
        v.require(set_second_zero(delta) == f && set_first_zero(delta) == f, "counit law" + at);
        v.require(antipode_left(delta, t) == counit(f) && antipode_right(delta, t) == counit(f), "antipode law" + at);
        if (t == Translation::Plus)
            v.require(delta == q_translate_by_exponential(f, t), "translation routes" + at);
    }
    v.require(addition_lhs(4) == addition_rhs(4), "addition theorem at N = 4");
    v.require(inverse_exponential_product(4).truncated_first(4) ==
                  PhaseSpacePoly::tensor(unit(Sector::X, Convention::W), unit(Sector::P, Convention::W)),
              "exponential times its inverse");
    v.detail = v.ok ? "40 polynomials of degree <= 4, addition theorem N = 4" : v.detail;
    return v;
}

LatticeFn noise(Rng& rng, const QLattice& lat, Convention c) {
    LatticeFn g(lat, Sector::X, c);
    const int n = lat.per_axis();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                if (std::abs(lat.exponent_of(a)) > kSupport || std::abs(lat.exponent_of(b)) > kSupport ||
                    std::abs(lat.exponent_of(d)) > kSupport)
                    continue;
                const double x = lat.coordinate(a), y = lat.coordinate(b), z = lat.coordinate(d);
                g.at(a, b, d) = cplx(rng.real(-1, 1), rng.real(-1, 1)) * std::exp(-(x * x + y * y + z * z));
            }
    return g;
}

double gap(const IntegralResult& a, const IntegralResult& b) {
    return std::abs(a.value - b.value) / (a.total_mass + b.total_mass);
}

Verdict lattice_theorems() {
    Verdict v;
    double worst = 0.0;
    Rng rng(kSeed + 3);
    for (double q0 : {1.1, 1.5}) {
        const QLattice lat{q0, -kLatticeHalfWidth, kLatticeHalfWidth};
        const LatticeFn g = noise(rng, lat, Convention::W);
        const LatticeFn gt = noise(rng, lat, Convention::Wt);
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 2, 4);
        const CoordPoly ft = random_poly(rng, Sector::X, Convention::Wt, 2, 4);
        for (Index a : kSpatialIndices)
            for (bool up : {false, true}) {
                for (const DerivativeLabel& l : {d_left(a, up), d_rightbar(a, up)}) {
                    const IntegralResult r = integral_all_space(apply_derivative(l, g));
                    worst = std::max(worst, std::abs(r.value) / r.total_mass);
                }
                const IntegralResult lhs =
                    integral_all_space(star_product(NumPoly::from(f, q0), apply_derivative(d_left(a, up), g)));
                const CoordPoly fd = convert_convention(
                    apply_derivative(DerivativeLabel{a, DerivVariant::Plain, ActionSide::Right, up},
                                     convert_convention(f, Convention::Wt)),
                    Convention::W);
                worst = std::max(worst, gap(lhs, integral_all_space(star_product(NumPoly::from(fd, q0), g))));
                const IntegralResult lhs2 =
                    integral_all_space(star_product(NumPoly::from(ft, q0), apply_derivative(dhat_leftbar(a, up), gt)));
                const CoordPoly fd2 = convert_convention(
                    apply_derivative(DerivativeLabel{a, DerivVariant::Hat, ActionSide::RightBar, up},
                                     convert_convention(ft, Convention::W)),
                    Convention::Wt);
                worst = std::max(worst, gap(lhs2, integral_all_space(star_product(NumPoly::from(fd2, q0), gt))));
            }
    }
    v.require(worst <= kLatticeTolerance, "worst relative residual " + std::to_string(worst));
    std::ostringstream os;
    os << "q0 in {1.1, 1.5}, j in [-20, 20], worst relative residual " << std::scientific << std::setprecision(2)
       << worst;
    if (v.ok) v.detail = os.str();
    return v;
}

Verdict expectations() {
    Verdict v;
    double worst = 0.0;
    for (double q0 : {1.1, 1.5}) {
        const QLattice lat{q0, -14, 14};
        const WavePacket wp = WavePacket::gaussian(lat, 1.0, {0.4, -0.3, 0.6}, 0.7, {0.5, 0.2, -0.4}, kSupport).normalized();
        worst = std::max(worst, norm_check(wp));
        for (double t : {0.0, 1.0}) {
            const WavePacket w = wp.at_time(t);
            worst = std::max(worst, norm_check(w));
            for (Index a : kSpatialIndices) {
                worst = std::max(worst, std::abs(expectation_momentum(w, a) - expectation_momentum(wp, a)));
                worst = std::max(worst, std::abs(std::conj(expectation_momentum(w, a, true)) -
                                                 expectation_momentum(w, a, false)));
                worst = std::max(worst, std::abs(std::conj(expectation_position(w, a, true)) -
                                                 expectation_position(w, a, false)));
            }
        }
    }
    v.require(worst <= kExpectationTolerance, "worst deviation " + std::to_string(worst));
    std::ostringstream os;
    os << "time independence, conjugation, norm; worst deviation " << std::scientific << std::setprecision(2) << worst;
    if (v.ok) v.detail = os.str();
    return v;
}

// Largest |coefficient| of f - g after evaluating at q = 1.
double classical_distance(const CoordPoly& f, const std::map<Exp4, cplx>& g) {
    std::map<Exp4, cplx> diff = g;
    for (const auto& [e, c] : f.terms()) diff[e] -= c.eval(1.0);
    double worst = 0.0;
    for (const auto& [e, c] : diff) worst = std::max(worst, std::abs(c));
    return worst;
}

Verdict classical_limit() {
    Verdict v;
    double worst = 0.0;
    Rng rng(kSeed + 4);
    for (int i = 0; i < 50; ++i) {
        const Convention c = i % 2 == 0 ? Convention::W : Convention::Wt;
        const CoordPoly f = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly g = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly fg = f.commutative_product(g);
        std::map<Exp4, cplx> commutative;
        for (const auto& [e, coeff] : fg.terms()) commutative[e] += coeff.eval(1.0);
        worst = std::max(worst, classical_distance(star_product(f, g), commutative));
    }
    for (int n = 0; n <= 10; ++n)
        for (int b : {1, 2, 4}) worst = std::max(worst, std::abs(eval_numeric(q_number(n, b), 1.0) - double(n)));
    worst = std::max(worst, classical_distance(psq_power(1), {{{1, 0, 1, 0}, -2.0}, {{0, 2, 0, 0}, 1.0}}));
    v.require(worst <= kClassicalTolerance, "direct comparisons, worst " + std::to_string(worst));

    // Every module's classical-limit check, plus all symbolic checks re-run at q = 1.
    SuiteConfig config;
    config.q_text = "1";
    config.q0 = 1.0;
    config.seed = kSeed;
    const SuiteReport report = run_suite("all", config);
    v.require(report.failure_count() == 0, std::to_string(report.failure_count()) + " suite failures at q = 1");
    if (v.ok) v.detail = std::to_string(report.case_count()) + " suite cases at q = 1 plus direct comparisons";
    return v;
}

Verdict heine_report() {
    Verdict v;
    SuiteConfig config;
    config.N = 3;
    config.K = 3;
    config.cases = 1;
    config.only_check = "cq_recurrence";
    const auto rows = heine_diagnostic(config.K, GaussRat::ratio(1, 3), config.q0);
    v.require(rows.size() >= static_cast<size_t>(config.K), "too few diagnostic rows");
    for (const HeineRow& row : rows) v.require(row.double_sum_is_star_power, "row " + std::to_string(row.k));

    config.only_check.reset();
    const SuiteReport report = run_suite("schrodinger", config);
    v.require(report.to_json().contains("heine_diagnostic"), "suite report has no diagnostic section");

    // Construction check: the resummed product appears only in the arithmetic
    // layer and in the diagnostic itself.
    namespace fs = std::filesystem;
    const fs::path root(QEUCLID_SOURCE_DIR);
    for (const auto& entry : fs::recursive_directory_iterator(root / "src")) {
        if (!entry.is_regular_file()) continue;
        const std::string rel = fs::relative(entry.path(), root).generic_string();
        if (rel.rfind("src/qarith/", 0) == 0 || rel == "src/schrodinger/heine.cpp") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        v.require(ss.str().find("q_pochhammer") == std::string::npos, rel + " uses the resummed form");
    }
    if (v.ok) v.detail = std::to_string(rows.size()) + " rows; pipeline free of the resummed form";
    return v;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "star product equals the normal-ordering oracle", kOracleSeconds, star_oracle},
        {2, "defining relations of the coordinate algebra", 0, defining_relations},
        {3, "associativity and antimultiplicative conjugation", 0, associativity_and_conjugation},
        {4, "exponential eigen-residuals vanish below the shell", kEigenSeconds, eigen_residuals},
        {5, "p^2 power coefficients and star powers", 0, psq_combinatorics},
        {6, "plane-wave coefficients and residuals", 0, plane_waves},
        {7, "momentum-space propagator identity", 0, propagators},
        {8, "translation, antipode and addition laws", 0, hopf_laws},
        {9, "lattice Stokes theorem and integration by parts", kLatticeSeconds, lattice_theorems},
        {10, "wave-packet expectation values", 0, expectations},
        {11, "classical limit at q = 1", 0, classical_limit},
        {12, "Heine diagnostic report", 0, heine_report},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            v.ok = false;
            v.detail = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        failed += v.ok ? 0 : 1;
        std::cout << (v.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  (" << v.detail
                  << "; " << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
