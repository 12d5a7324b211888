#include <cmath>

#include "checks.hpp"

namespace qe::checks {

namespace {

constexpr int kLatticeHalfWidth = 14;
// Star products with a polynomial dilate the support, so integration by parts
// needs more room before the boundary layers.
constexpr int kWideHalfWidth = 20;
constexpr int kSupport = 6;

Index mirror(Index a) {
    if (a == Index::Plus) return Index::Minus;
    if (a == Index::Minus) return Index::Plus;
    return a;
}

Index pick_index(Rng& rng, bool with_time) { return static_cast<Index>(rng.uniform(0, with_time ? 3 : 2)); }

std::string label_text(const DerivativeLabel& l) { return l.to_string(); }

// Complex Gaussian-weighted noise, restricted to |j| <= kSupport on every axis.
LatticeFn random_lattice_fn(Rng& rng, const QLattice& lat, Convention c) {
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

QLattice test_lattice(double q0, int half_width = kLatticeHalfWidth) { return QLattice{q0, -half_width, half_width}; }

double relative(cplx a, cplx b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

// Exact q = 1 image of a truncated exponential: (sign i)^n / (n0! n1! n2!)
// on x-monomials paired with the mirrored momentum monomial.
double exponential_classical_gap(const PhaseSpacePoly& body, int order, int sign) {
    double worst = 0.0;
    std::map<PhaseSpacePoly::Key, cplx> expected;
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b)
            for (int c = 0; a + b + c <= order; ++c) {
                cplx v(1.0, 0.0);
                for (int k = 0; k < a + b + c; ++k) v *= cplx(0.0, sign);
                for (int k = 2; k <= a; ++k) v /= k;
                for (int k = 2; k <= b; ++k) v /= k;
                for (int k = 2; k <= c; ++k) v /= k;
                expected[{Exp4{a, b, c, 0}, Exp4{c, b, a, 0}}] = v;
            }
    for (const auto& [key, coeff] : body.terms()) expected[key] -= coeff.eval(1.0);
    for (const auto& [key, v] : expected) worst = std::max(worst, std::abs(v));
    return worst;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Translation pick_translation(Rng& rng) { return rng.coin() ? Translation::Plus : Translation::PlusBar; }
Convention operand_convention(Translation t) { return t == Translation::Plus ? Convention::Wt : Convention::W; }

}  // namespace

std::vector<Check> qcalculus() {
    std::vector<Check> out;
    out.push_back({"coordinate_derivatives", 1, false, [](Context&) {
                       Collector c("d_A |> x^B and dhat_A |>bar x^B");
                       for (Index a : {Index::Plus, Index::Three, Index::Minus, Index::Zero})
                           for (Index b : {Index::Plus, Index::Three, Index::Minus, Index::Zero}) {
                               const QRatio delta(a == b ? 1 : 0);
                               c.add(equal(apply_derivative(d_left(a), coordinate(Sector::X, Convention::W, b, true)),
                                           CoordPoly::constant(Sector::X, Convention::W, delta),
                                           "d_" + index_name(a) + " x^" + index_name(b)));
                               c.add(equal(apply_derivative(dhat_leftbar(a), coordinate(Sector::X, Convention::Wt, b, true)),
                                           CoordPoly::constant(Sector::X, Convention::Wt, delta),
                                           "dhat_" + index_name(a) + " x^" + index_name(b)));
                           }
                       return c.result();
                   }});
    out.push_back({"hat_family_mirror", 60, false, [](Context& cx) {
                       const CoordPoly f = random_poly(cx.rng, Sector::X, Convention::W, 3, 3, 1);
                       const Index a = pick_index(cx.rng, false);
                       const bool up = cx.rng.coin();
                       Collector c(f.to_string() + " index " + index_name(a) + (up ? " upper" : " lower"));
                       c.add(equal(apply_derivative(dhat_leftbar(mirror(a), up), substitute_bar(f)),
                                   substitute_bar(apply_derivative(d_left(a, up), f)), "left"));
                       c.add(equal(apply_derivative(dhat_right(mirror(a), up), substitute_bar(f)),
                                   substitute_bar(apply_derivative(d_rightbar(a, up), f)), "right"));
                       return c.result();
                   }});
    out.push_back({"inverse_partial", 60, false, [](Context& cx) {
                       const bool hat = cx.rng.coin();
                       const CoordPoly f =
                           random_poly(cx.rng, Sector::X, hat ? Convention::Wt : Convention::W, 3, 3, 1);
                       const Index a = pick_index(cx.rng, true);
                       const bool up = cx.rng.coin();
                       const DerivativeLabel l = hat ? dhat_leftbar(a, up) : d_left(a, up);
                       return equal(apply_derivative(l, inverse_partial(l, f)), f, label_text(l) + " on " + f.to_string());
                   }});
    out.push_back({"lattice_stokes", 3, true, [](Context& cx) {
                       const QLattice lat = test_lattice(cx.config.q0);
                       const LatticeFn g = random_lattice_fn(cx.rng, lat, Convention::W);
                       Collector c("Gaussian noise, support |j| <= 6");
                       for (Index a : kSpatialIndices)
                           for (bool up : {false, true})
                               for (const DerivativeLabel& l : {d_left(a, up), d_rightbar(a, up)}) {
                                   const IntegralResult r = integral_all_space(apply_derivative(l, g));
                                   c.add(within(std::abs(r.value) / r.total_mass, 1e-9, label_text(l), "relative"));
                               }
                       return c.result();
                   }});
    out.push_back({"lattice_integration_by_parts", 3, true, [](Context& cx) {
                       const double q0 = cx.config.q0;
                       const QLattice lat = test_lattice(q0, kWideHalfWidth);
                       const LatticeFn g = random_lattice_fn(cx.rng, lat, Convention::W);
                       const LatticeFn gt = random_lattice_fn(cx.rng, lat, Convention::Wt);
                       const CoordPoly f = random_poly(cx.rng, Sector::X, Convention::W, 2, 4);
                       const CoordPoly ft = random_poly(cx.rng, Sector::X, Convention::Wt, 2, 4);
                       Collector c(f.to_string() + " ; " + ft.to_string());
                       for (Index a : kSpatialIndices)
                           for (bool up : {false, true}) {
                               // f * (d |> g) against (f <| d) * g, the right action taken in W~.
                               const IntegralResult lhs =
                                   integral_all_space(star_product(NumPoly::from(f, q0), apply_derivative(d_left(a, up), g)));
                               const CoordPoly fd = convert_convention(
                                   apply_derivative(DerivativeLabel{a, DerivVariant::Plain, ActionSide::Right, up},
                                                    convert_convention(f, Convention::Wt)),
                                   Convention::W);
                               const IntegralResult rhs = integral_all_space(star_product(NumPoly::from(fd, q0), g));
                               c.add(within(relative(lhs.value, rhs.value, lhs.total_mass + rhs.total_mass), 1e-9,
                                            "d_" + index_name(a), "relative"));
                               // The barred rule with hatted derivatives, the right action taken in W.
                               const IntegralResult lhs2 = integral_all_space(
                                   star_product(NumPoly::from(ft, q0), apply_derivative(dhat_leftbar(a, up), gt)));
                               const CoordPoly fd2 = convert_convention(
                                   apply_derivative(DerivativeLabel{a, DerivVariant::Hat, ActionSide::RightBar, up},
                                                    convert_convention(ft, Convention::W)),
                                   Convention::Wt);
                               const IntegralResult rhs2 = integral_all_space(star_product(NumPoly::from(fd2, q0), gt));
                               c.add(within(relative(lhs2.value, rhs2.value, lhs2.total_mass + rhs2.total_mass), 1e-9,
                                            "dhat_" + index_name(a), "relative"));
                           }
                       return c.result();
                   }});
    out.push_back({"integral_conjugation", 3, true, [](Context& cx) {
                       const LatticeFn g = random_lattice_fn(cx.rng, test_lattice(cx.config.q0), Convention::W);
                       const IntegralResult a = integral_all_space(g), b = integral_all_space(conjugate(g));
                       return within(relative(std::conj(a.value), b.value, a.total_mass), 1e-10,
                                     "Gaussian noise, support |j| <= 6", "relative");
                   }});
    out.push_back({"classical_limit", 40, false, [](Context& cx) {
                       const bool hat = cx.rng.coin();
                       const Convention conv = hat ? Convention::Wt : Convention::W;
                       const CoordPoly f = random_poly(cx.rng, Sector::X, conv, 4, 4, 1);
                       Collector c(f.to_string());
                       for (Index a : {Index::Plus, Index::Three, Index::Minus, Index::Zero}) {
                           const int var = natural_variable(Sector::X, a);
                           std::map<Exp4, cplx> plain;
                           for (const auto& [e, v] : at_q_one(f)) {
                               if (e[static_cast<size_t>(var)] == 0) continue;
                               Exp4 d = e;
                               --d[static_cast<size_t>(var)];
                               plain[d] += v * double(e[static_cast<size_t>(var)]);
                           }
                           const CoordPoly df = apply_derivative(hat ? dhat_leftbar(a) : d_left(a), f);
                           c.add(within(classical_gap(df, plain), 1e-12, "index " + index_name(a), "q = 1"));
                       }
                       return c.result();
                   }});
    return out;
}

std::vector<Check> qexp() {
    std::vector<Check> out;
    out.push_back({"eigen_equations", 6, false, [](Context& cx) {
                       const ExpVariant v = kAllVariants[cx.index % 6];
                       const QExponential e = build_exponential(v, cx.config.N);
                       Collector c(variant_name(v) + " order " + std::to_string(cx.config.N));
                       for (Index a : kSpatialIndices)
                           c.require(vanishes_below_shell(eigen_residual(e, a), e.order),
                                     "residual below the shell for index " + index_name(a));
                       return c.result();
                   }});
    out.push_back({"normalization", 1, false, [](Context& cx) {
                       Collector c("all variants");
                       for (ExpVariant v : kAllVariants) {
                           const QExponential e = build_exponential(v, cx.config.N);
                           c.add(equal(exponential_at_zero_position(e),
                                       CoordPoly::constant(e.body.second().sector, e.body.second().convention, QRatio(1)),
                                       variant_name(v) + " at x = 0"));
                           c.add(equal(exponential_at_zero_momentum(e),
                                       CoordPoly::constant(e.body.first().sector, e.body.first().convention, QRatio(1)),
                                       variant_name(v) + " at p = 0"));
                       }
                       return c.result();
                   }});
    out.push_back({"counit_laws", 40, false, [](Context& cx) {
                       const Translation t = pick_translation(cx.rng);
                       const CoordPoly f = random_poly(cx.rng, Sector::X, operand_convention(t), 4, 3);
                       const PhaseSpacePoly delta = q_translate(f, t);
                       Collector c(f.to_string());
                       c.add(equal(set_first_zero(delta), f, "x = 0"));
                       c.add(equal(set_second_zero(delta), f, "y = 0"));
                       return c.result();
                   }});
    out.push_back({"antipode_laws", 40, false, [](Context& cx) {
                       const Translation t = pick_translation(cx.rng);
                       const CoordPoly f = random_poly(cx.rng, Sector::X, operand_convention(t), 4, 3);
                       const PhaseSpacePoly delta = q_translate(f, t);
                       Collector c(f.to_string() + (t == Translation::Plus ? " (+)" : " (+)bar"));
                       c.add(equal(antipode_left(delta, t), counit(f), "S on the left"));
                       c.add(equal(antipode_right(delta, t), counit(f), "S on the right"));
                       return c.result();
                   }});
    out.push_back({"translation_routes", 20, false, [](Context& cx) {
                       const CoordPoly f = random_poly(cx.rng, Sector::X, Convention::Wt, 4, 3);
                       const CoordPoly fw = random_poly(cx.rng, Sector::X, Convention::W, 4, 3);
                       Collector c(f.to_string() + " ; " + fw.to_string());
                       c.add(equal(q_translate(f), q_translate_by_exponential(f, Translation::Plus), "explicit vs exponential"));
                       c.add(equal(substitute_bar(q_translate(substitute_bar(fw))), q_translate(fw, Translation::PlusBar),
                                   "mirror"));
                       c.add(equal(u_operator(fw), convert_convention(fw, Convention::Wt), "U"));
                       c.add(equal(u_inverse_operator(f), convert_convention(f, Convention::W), "U^-1"));
                       return c.result();
                   }});
    out.push_back({"conjugation_table", 1, false, [](Context& cx) {
                       const int n = cx.config.N;
                       Collector c("order " + std::to_string(n));
                       const std::pair<ExpVariant, ExpVariant> pairs[] = {{ExpVariant::XP, ExpVariant::PX},
                                                                          {ExpVariant::XPBar, ExpVariant::PXBar},
                                                                          {ExpVariant::StarPX, ExpVariant::StarXP}};
                       for (const auto& [a, b] : pairs) {
                           c.add(equal(conjugate(build_exponential(a, n).body), build_exponential(b, n).body,
                                       "conj " + variant_name(a)));
                           c.add(equal(conjugate(build_exponential(b, n).body), build_exponential(a, n).body,
                                       "conj " + variant_name(b)));
                       }
                       return c.result();
                   }});
    out.push_back({"addition_theorem", 1, false, [](Context& cx) {
                       const int n = std::min(cx.config.N, 4);
                       Collector c("order " + std::to_string(n));
                       c.require(addition_lhs(n) == addition_rhs(n), "the two sides differ below the shell");
                       return c.result();
                   }});
    out.push_back({"inverse_exponential", 1, false, [](Context& cx) {
                       const int n = cx.config.N;
                       const PhaseSpacePoly p = inverse_exponential_product(n);
                       PhaseSpacePoly one(p.first(), p.second());
                       one.add_term({0, 0, 0, 0}, {0, 0, 0, 0}, QRatio(1));
                       return equal(p.truncated_first(n), one, "order " + std::to_string(n));
                   }});
    out.push_back({"classical_limit", 20, false, [](Context& cx) {
                       Collector c("exponentials, translation and inversion at q = 1");
                       if (cx.index == 0) {
                           for (ExpVariant v : kAllVariants) {
                               const bool plus = v == ExpVariant::XP || v == ExpVariant::XPBar || v == ExpVariant::StarXP;
                               c.add(within(exponential_classical_gap(build_exponential(v, cx.config.N).body, cx.config.N,
                                                                      plus ? 1 : -1),
                                            1e-12, variant_name(v), "q = 1"));
                           }
                       }
                       const Translation t = pick_translation(cx.rng);
                       const CoordPoly f = random_poly(cx.rng, Sector::X, operand_convention(t), 4, 3);
                       std::map<PhaseSpacePoly::Key, cplx> expected;
                       std::map<Exp4, cplx> inverted;
                       for (const auto& [e, v] : at_q_one(f)) {
                           inverted[e] += (e[0] + e[1] + e[2]) % 2 ? -v : v;
                           for (int a = 0; a <= e[0]; ++a)
                               for (int b = 0; b <= e[1]; ++b)
                                   for (int d = 0; d <= e[2]; ++d)
                                       expected[{Exp4{a, b, d, 0}, Exp4{e[0] - a, e[1] - b, e[2] - d, 0}}] +=
                                           v * binomial(e[0], a) * binomial(e[1], b) * binomial(e[2], d);
                       }
                       const PhaseSpacePoly translated = q_translate(f, t);
                       for (const auto& [key, v] : translated.terms()) expected[key] -= v.eval(1.0);
                       double worst = 0.0;
                       for (const auto& [key, v] : expected) worst = std::max(worst, std::abs(v));
                       c.add(within(worst, 1e-12, "translate " + f.to_string(), "q = 1"));
                       c.add(within(classical_gap(q_invert(f, t), inverted), 1e-12, "invert " + f.to_string(), "q = 1"));
                       return c.result();
                   }});
    return out;
}

}  // namespace qe::checks
