#include <cmath>

#include "checks.hpp"

namespace qe::checks {

namespace {

constexpr double kExpectationTolerance = 1e-10;

GaussRat random_mass(Rng& rng) { return GaussRat::ratio(rng.uniform(1, 4), rng.uniform(1, 3)); }

std::string mass_text(const GaussRat& m) { return "mass " + rational_to_string(m.re); }

WavePacket random_packet(Rng& rng, double q0) {
    const QLattice lat{q0, -14, 14};
    const std::array<double, 3> center{rng.real(-1, 1), rng.real(-1, 1), rng.real(-1, 1)};
    const std::array<double, 3> wave{rng.real(-0.5, 0.5), rng.real(-0.5, 0.5), rng.real(-0.5, 0.5)};
    return WavePacket::gaussian(lat, rng.real(0.5, 2.0), center, rng.real(0.5, 1.0), wave, 6).normalized();
}

std::string packet_text(const WavePacket& wp) { return "random Gaussian packet, mass " + std::to_string(wp.mass); }

// Classical images at q = 1: p^2 = p3^2 - 2 p- p+.
std::map<Exp4, cplx> classical_psq_power(int k) {
    std::map<Exp4, cplx> r{{{0, 0, 0, 0}, 1.0}};
    const std::map<Exp4, cplx> p2{{{1, 0, 1, 0}, -2.0}, {{0, 2, 0, 0}, 1.0}};
    for (int j = 0; j < k; ++j) {
        std::map<Exp4, cplx> next;
        for (const auto& [a, ca] : r)
            for (const auto& [b, cb] : p2) next[{a[0] + b[0], a[1] + b[1], a[2] + b[2], 0}] += ca * cb;
        r = std::move(next);
    }
    return r;
}

// exp(i x.p) exp(-i t p^2 / 2m) expanded at q = 1 through position degree N and time degree K.
double classical_plane_wave_gap(const PhaseSpacePoly& body, int N, int K, double mass) {
    std::map<PhaseSpacePoly::Key, cplx> expected;
    double fact_k = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact_k *= k;
        const cplx step = std::pow(cplx(0.0, -1.0 / (2.0 * mass)), k) / fact_k;
        for (const auto& [pe, pc] : classical_psq_power(k))
            for (int a = 0; a <= N; ++a)
                for (int b = 0; a + b <= N; ++b)
                    for (int c = 0; a + b + c <= N; ++c) {
                        cplx v = std::pow(cplx(0.0, 1.0), a + b + c) * pc * step;
                        for (int j = 2; j <= a; ++j) v /= j;
                        for (int j = 2; j <= b; ++j) v /= j;
                        for (int j = 2; j <= c; ++j) v /= j;
                        expected[{Exp4{a, b, c, k}, Exp4{pe[0] + c, pe[1] + b, pe[2] + a, 0}}] += v;
                    }
    }
    for (const auto& [key, coeff] : body.terms()) expected[key] -= coeff.eval(1.0);
    double worst = 0.0;
    for (const auto& [key, v] : expected) worst = std::max(worst, std::abs(v));
    return worst;
}

}  // namespace

std::vector<Check> schrodinger() {
    std::vector<Check> out;
    out.push_back({"cq_recurrence", 1, false, [](Context&) {
                       Collector c("k <= 12");
                       for (int k = 1; k <= 12; ++k)
                           for (int l = 0; l <= k; ++l) {
                               QScalar rhs;
                               if (l <= k - 1) rhs += -lambda_plus() * cq_coefficient(k - 1, l).shifted(4 * l);
                               if (l >= 1) rhs += cq_coefficient(k - 1, l - 1).shifted(-2);
                               c.require(rhs == cq_coefficient(k, l),
                                         "recurrence fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
                           }
                       return c.result();
                   }});
    out.push_back({"psq_power_star_power", 1, false, [](Context&) {
                       Collector c("k <= 4, W and W~");
                       for (Convention conv : {Convention::W, Convention::Wt}) {
                           const CoordPoly p2 = momentum_square(conv);
                           for (int k = 0; k <= 4; ++k)
                               c.add(equal(psq_power(k, conv), star_power(p2, static_cast<unsigned>(k)),
                                           "k=" + std::to_string(k) + " " + convention_name(conv)));
                       }
                       return c.result();
                   }});
    out.push_back({"reordering_rule", 1, false, [](Context&) {
                       Collector c("k <= 3, exponents <= 3");
                       for (int k = 0; k <= 3; ++k)
                           for (int a = 0; a <= 3; ++a)
                               for (int b = 0; b <= 3; ++b)
                                   for (int d = 0; d <= 3; ++d) {
                                       const CoordPoly m = CoordPoly::monomial(Sector::P, Convention::W, {a, b, d, 0});
                                       c.add(equal(star_product(psq_power(k), m), reordered_psq_product(k, a, b, d),
                                                   "k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                                                       std::to_string(b) + "," + std::to_string(d) + ")"));
                                   }
                       return c.result();
                   }});
    out.push_back({"hamiltonian_central", 30, false, [](Context& cx) {
                       const Hamiltonian h(random_mass(cx.rng));
                       const CoordPoly f = random_poly(cx.rng, Sector::X, Convention::W, 5, 4);
                       Collector c(f.to_string() + " " + mass_text(h.mass()));
                       for (Index a : kSpatialIndices) {
                           const DerivativeLabel d = d_left(a, true);
                           c.add(equal(h.apply(apply_derivative(d, f), ActionSide::Left),
                                       apply_derivative(d, h.apply(f, ActionSide::Left)), "d^" + index_name(a)));
                       }
                       c.add(equal(conjugate(h.apply(conjugate(f), ActionSide::Left)), h.apply(f, ActionSide::RightBar),
                                   "conjugate action"));
                       return c.result();
                   }});
    out.push_back({"plane_wave_closed_form", 1, false, [](Context& cx) {
                       const int n = std::min(cx.config.N, 3), k = std::min(cx.config.K, 3);
                       const GaussRat m(1);
                       Collector c("N=" + std::to_string(n) + " K=" + std::to_string(k));
                       c.add(equal(build_plane_wave(WaveFamily::Lower, n, k, m).body, closed_form_plane_wave(n, k, m),
                                   "u_p"));
                       c.add(equal(build_plane_wave(WaveFamily::Lower, n, k, m).body.truncated_first(n, 0),
                                   build_exponential(ExpVariant::XP, n).body, "t = 0 slice"));
                       return c.result();
                   }});
    out.push_back({"plane_wave_residuals", 4, false, [](Context& cx) {
                       const WaveFamily fam = kAllFamilies[cx.index % 4];
                       const GaussRat m = random_mass(cx.rng);
                       const PlaneWave w = build_plane_wave(fam, cx.config.N, cx.config.K, m);
                       Collector c(family_name(fam) + " N=" + std::to_string(w.N) + " K=" + std::to_string(w.K) + " " +
                                   mass_text(m));
                       c.require(vanishes_below_shell(w, schrodinger_residual(w)), "Schrodinger residual");
                       c.require(vanishes_below_shell(w, energy_residual(w)), "energy residual");
                       for (Index a : kSpatialIndices)
                           c.require(vanishes_below_shell(w, momentum_residual(w, a)), "momentum residual " + index_name(a));
                       return c.result();
                   }});
    out.push_back({"time_evolution_group_law", 10, false, [](Context& cx) {
                       const GaussRat m = random_mass(cx.rng);
                       const GaussRat t1 = GaussRat::ratio(cx.rng.uniform(-5, 5), cx.rng.uniform(1, 6));
                       const GaussRat t2 = GaussRat::ratio(cx.rng.uniform(-5, 5), cx.rng.uniform(1, 6));
                       const Convention conv = cx.rng.coin() ? Convention::W : Convention::Wt;
                       const PhaseSign s = cx.rng.coin() ? PhaseSign::Plus : PhaseSign::Minus;
                       const int K = std::max(cx.config.K, 1);
                       const CoordPoly lhs = star_product(phase_factor_at(s, K, m, t1, conv), phase_factor_at(s, K, m, t2, conv));
                       return equal(lhs.truncated(2 * K), phase_factor_at(s, K, m, t1 + t2, conv).truncated(2 * K),
                                    "t1=" + rational_to_string(t1.re) + " t2=" + rational_to_string(t2.re) + " " +
                                        mass_text(m) + " K=" + std::to_string(K));
                   }});
    out.push_back({"propagator_identity", 8, false, [](Context& cx) {
                       static const PropagatorFamily fams[] = {PropagatorFamily::KR, PropagatorFamily::KL,
                                                               PropagatorFamily::KRStar, PropagatorFamily::KLStar};
                       const PropagatorFamily f = fams[cx.index % 4];
                       const Branch b = (cx.index / 4) % 2 ? Branch::Advanced : Branch::Retarded;
                       const GaussRat m = random_mass(cx.rng);
                       Collector c(propagator_family_name(f) + " " + branch_name(b) + " " + mass_text(m));
                       for (int order = 0; order <= cx.config.K; ++order)
                           c.require(propagator_identity_holds(propagator_momentum(f, b, order, m)),
                                     "identity fails at order " + std::to_string(order));
                       return c.result();
                   }});
    out.push_back({"wave_packet_norm", 2, true, [](Context& cx) {
                       const WavePacket wp = random_packet(cx.rng, cx.config.q0);
                       const double t = cx.rng.real(0.5, 2.0);
                       Collector c(packet_text(wp));
                       c.add(within(norm_check(wp), kExpectationTolerance, "t = 0", "norm"));
                       c.add(within(norm_check(wp.at_time(t)), kExpectationTolerance, "evolved", "norm"));
                       return c.result();
                   }});
    out.push_back({"momentum_time_independence", 2, true, [](Context& cx) {
                       const WavePacket wp = random_packet(cx.rng, cx.config.q0);
                       const WavePacket later = wp.at_time(cx.rng.real(0.5, 2.0));
                       Collector c(packet_text(wp));
                       for (Index a : kSpatialIndices)
                           c.add(within(std::abs(expectation_momentum(later, a) - expectation_momentum(wp, a)),
                                        kExpectationTolerance, "<P^" + index_name(a) + ">", "drift"));
                       return c.result();
                   }});
    out.push_back({"expectation_conjugation", 2, true, [](Context& cx) {
                       const WavePacket wp = random_packet(cx.rng, cx.config.q0).at_time(cx.rng.real(0.0, 1.0));
                       Collector c(packet_text(wp));
                       for (Index a : kSpatialIndices) {
                           c.add(within(std::abs(std::conj(expectation_momentum(wp, a, true)) -
                                                 expectation_momentum(wp, a, false)),
                                        kExpectationTolerance, "<P^" + index_name(a) + ">", "conjugation"));
                           c.add(within(std::abs(std::conj(expectation_position(wp, a, true)) -
                                                 expectation_position(wp, a, false)),
                                        kExpectationTolerance, "<X^" + index_name(a) + ">", "conjugation"));
                       }
                       return c.result();
                   }});
    out.push_back({"plane_wave_orthogonality", 1, true, [](Context& cx) {
                       // Two packets concentrated on opposite p3 half-axes.
                       const QLattice lat{cx.config.q0, -14, 14};
                       WavePacket a = WavePacket::gaussian(lat, 1.0, {0, 0.8, 0}, 0.3, {0, 0, 0}, 6);
                       WavePacket b = WavePacket::gaussian(lat, 1.0, {0, -0.8, 0}, 0.3, {0, 0, 0}, 6);
                       const int n = lat.per_axis();
                       for (int i = 0; i < n; ++i)
                           for (int j = 0; j < n; ++j)
                               for (int k = 0; k < n; ++k) {
                                   (lat.branch_of(j) > 0 ? b : a).c_lower.at(i, j, k) = 0.0;
                                   (lat.branch_of(j) > 0 ? b : a).c_star_lower.at(i, j, k) = 0.0;
                               }
                       a = a.normalized();
                       b = b.normalized();
                       const double overlap =
                           std::abs(integral_all_space(a.c_star_lower.pointwise(b.c_lower)).value);
                       return within(overlap, 1e-8, "packets on p3 > 0 and p3 < 0", "overlap");
                   }});
    out.push_back({"classical_limit", 1, false, [](Context& cx) {
                       Collector c("p^2 powers and plane wave at q = 1");
                       for (int k = 0; k <= 4; ++k)
                           c.add(within(classical_gap(psq_power(k), classical_psq_power(k)), 1e-12,
                                        "p^2k k=" + std::to_string(k), "q = 1"));
                       const int n = std::min(cx.config.N, 3), kk = std::min(cx.config.K, 3);
                       c.add(within(classical_plane_wave_gap(build_plane_wave(WaveFamily::Lower, n, kk, GaussRat(2)).body,
                                                             n, kk, 2.0),
                                    1e-12, "u_p", "q = 1"));
                       return c.result();
                   }});
    return out;
}

}  // namespace qe::checks
