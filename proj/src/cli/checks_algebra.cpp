#include <algorithm>
#include <cmath>

#include "checks.hpp"

namespace qe::checks {

std::map<Exp4, cplx> at_q_one(const CoordPoly& f) {
    std::map<Exp4, cplx> r;
    for (const auto& [e, c] : f.terms()) r[e] = c.eval(1.0);
    return r;
}

double classical_gap(const CoordPoly& f, const std::map<Exp4, cplx>& expected) {
    std::map<Exp4, cplx> diff = at_q_one(f);
    for (const auto& [e, c] : expected) diff[e] -= c;
    double worst = 0.0;
    for (const auto& [e, c] : diff) worst = std::max(worst, std::abs(c));
    return worst;
}

namespace {

Sector pick_sector(Rng& rng) { return rng.coin() ? Sector::X : Sector::P; }
Convention pick_convention(Rng& rng) { return rng.coin() ? Convention::W : Convention::Wt; }

// Random polynomial for star-product checks: all four variables in the
// position sector, three in the momentum sector.
CoordPoly star_operand(Rng& rng, Sector s, Convention c, int degree, int terms) {
    return random_poly(rng, s, c, degree, terms, s == Sector::X ? 2 : 0);
}

std::string describe(std::initializer_list<const CoordPoly*> polys) {
    std::string s;
    for (const CoordPoly* p : polys) s += (s.empty() ? "" : " ; ") + clip(p->to_string(), 160);
    return s;
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace

std::vector<Check> qarith() {
    std::vector<Check> out;
    out.push_back({"q_number_additivity", 60, false, [](Context& cx) {
                       const int a = cx.rng.uniform(0, 12), b = cx.rng.uniform(0, 12);
                       static const int bases[] = {1, 2, 4, -2};
                       const int base = bases[cx.rng.uniform(0, 3)];
                       const QScalar want = q_number(a, base) + QScalar::q_pow(base * a) * q_number(b, base);
                       return equal(q_number(a + b, base), want,
                                    "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                        " base=" + std::to_string(base));
                   }});
    out.push_back({"q_binomial_pascal", 1, false, [](Context&) {
                       Collector c("n<=10, bases 1 2 4");
                       for (int base : {1, 2, 4})
                           for (int n = 1; n <= 10; ++n)
                               for (int k = 1; k < n; ++k) {
                                   const QScalar rhs =
                                       q_binomial(n - 1, k - 1, base) + QScalar::q_pow(base * k) * q_binomial(n - 1, k, base);
                                   c.require(q_binomial(n, k, base) == rhs, "Pascal rule fails at n=" + std::to_string(n) +
                                                                                " k=" + std::to_string(k) +
                                                                                " base=" + std::to_string(base));
                               }
                       return c.result();
                   }});
    out.push_back({"inverse_substitution_involution", 60, false, [](Context& cx) {
                       const QScalar s = random_qscalar(cx.rng, 8, 6);
                       return equal(s.substitute_inverse().substitute_inverse(), s, s.to_string());
                   }});
    out.push_back({"eval_homomorphism", 60, false, [](Context& cx) {
                       const QScalar a = random_qscalar(cx.rng, 8, 5), b = random_qscalar(cx.rng, 8, 5);
                       const cplx q0(cx.config.q0, 0.0);
                       const cplx ea = eval_numeric(a, q0), eb = eval_numeric(b, q0);
                       const double scale = std::max({1.0, std::abs(ea) * std::abs(eb), std::abs(ea) + std::abs(eb)});
                       const double err = std::max(std::abs(eval_numeric(a * b, q0) - ea * eb),
                                                   std::abs(eval_numeric(a + b, q0) - (ea + eb))) /
                                          scale;
                       return within(err, 1e-12, a.to_string() + " ; " + b.to_string(), "relative");
                   }});
    out.push_back({"classical_limit", 1, false, [](Context&) {
                       double worst = std::max({std::abs(eval_numeric(lambda(), 1.0)),
                                                std::abs(eval_numeric(lambda_plus(), 1.0) - 2.0),
                                                std::abs(eval_numeric(kappa(), 1.0) - 1.0)});
                       for (int base : {1, 2, 4})
                           for (int n = 0; n <= 10; ++n) {
                               worst = std::max(worst, std::abs(eval_numeric(q_number(n, base), 1.0) - double(n)));
                               worst = std::max(worst, std::abs(eval_numeric(q_factorial(n, base), 1.0) - factorial(n)) /
                                                           factorial(n));
                               for (int k = 0; k <= n; ++k) {
                                   const double binom = factorial(n) / (factorial(k) * factorial(n - k));
                                   worst = std::max(worst, std::abs(eval_numeric(q_binomial(n, k, base), 1.0) - binom));
                               }
                           }
                       return within(worst, 1e-12, "n<=10, bases 1 2 4", "q = 1");
                   }});
    return out;
}

std::vector<Check> ncalgebra() {
    std::vector<Check> out;
    out.push_back({"confluence", 200, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const NCPoly a = random_ncpoly(cx.rng, s, 3, 2, true), b = random_ncpoly(cx.rng, s, 2, 2, true);
                       const NCPoly prod = nc_multiply(a, b);
                       Collector c(a.to_string() + " ; " + b.to_string());
                       for (Convention conv : {Convention::W, Convention::Wt})
                           c.add(equal(normal_order(prod, conv, RewriteStrategy::Rightmost),
                                       normal_order(prod, conv, RewriteStrategy::Leftmost), convention_name(conv)));
                       return c.result();
                   }});
    out.push_back({"degree_preservation", 100, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       NCPoly w = random_ncpoly(cx.rng, s, 5, 1, true);
                       Collector c(w.to_string() + " in " + convention_name(conv));
                       if (w.is_zero()) return c.result();
                       const size_t length = w.terms().begin()->first.size();
                       const NCPoly ordered = normal_order(w, conv);
                       for (const auto& [word, coeff] : ordered.terms()) {
                           c.require(word.size() == length, "degree changed by rewriting");
                           c.require(is_normal_ordered(word, conv), "result is not normal-ordered");
                       }
                       return c.result();
                   }});
    out.push_back({"homomorphism", 200, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, s, conv, 3, 3), g = star_operand(cx.rng, s, conv, 3, 3);
                       const NCPoly prod = normal_order(nc_multiply(weyl_map(f), weyl_map(g)), conv);
                       return equal(weyl_unmap(prod, conv), star_product(f, g), describe({&f, &g}));
                   }});
    out.push_back({"classical_limit", 60, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       NCWord w(static_cast<size_t>(cx.rng.uniform(1, 5)));
                       const int letters = s == Sector::X ? 4 : 3;
                       for (auto& l : w) l = static_cast<std::uint8_t>(cx.rng.uniform(0, letters - 1));
                       NCWord sorted = w;
                       std::sort(sorted.begin(), sorted.end(), [conv](std::uint8_t x, std::uint8_t y) {
                           return letter_rank(conv, x) < letter_rank(conv, y);
                       });
                       const NCPoly f = NCPoly::word(s, w);
                       double worst = 0.0;
                       bool seen = false;
                       const NCPoly ordered = normal_order(f, conv);
                       for (const auto& [word, coeff] : ordered.terms()) {
                           const cplx want = word == sorted ? 1.0 : 0.0;
                           seen = seen || word == sorted;
                           worst = std::max(worst, std::abs(coeff.eval(1.0) - want));
                       }
                       if (!seen) worst = std::max(worst, 1.0);
                       return within(worst, 1e-12, f.to_string() + " in " + convention_name(conv), "q = 1");
                   }});
    return out;
}

std::vector<Check> starcalc() {
    std::vector<Check> out;
    out.push_back({"oracle_equivalence", 200, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, s, conv, 4, 3), g = star_operand(cx.rng, s, conv, 4, 3);
                       return equal(star_product(f, g), star_product_oracle(f, g), describe({&f, &g}));
                   }});
    out.push_back({"defining_relations", 1, false, [](Context&) {
                       Collector c("position generators, W and W~");
                       for (Convention conv : {Convention::W, Convention::Wt}) {
                           const CoordPoly xp = CoordPoly::variable(Sector::X, conv, 0);
                           const CoordPoly x3 = CoordPoly::variable(Sector::X, conv, 1);
                           const CoordPoly xm = CoordPoly::variable(Sector::X, conv, 2);
                           const CoordPoly zero(Sector::X, conv);
                           c.add(equal(star_product(x3, xp) - star_product(xp, x3) * QRatio(QScalar::q_pow(2)), zero,
                                       "x3 x+ = q^2 x+ x3"));
                           c.add(equal(star_product(x3, xm) - star_product(xm, x3) * QRatio(QScalar::q_pow(-2)), zero,
                                       "x3 x- = q^-2 x- x3"));
                           c.add(equal(star_product(xm, xp) - star_product(xp, xm) - star_product(x3, x3) * QRatio(lambda()),
                                       zero, "x- x+ - x+ x- = lambda x3^2"));
                       }
                       return c.result();
                   }});
    out.push_back({"associativity", 100, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, s, conv, 3, 2), g = star_operand(cx.rng, s, conv, 3, 2),
                                       h = star_operand(cx.rng, s, conv, 3, 2);
                       return equal(star_product(star_product(f, g), h), star_product(f, star_product(g, h)),
                                    describe({&f, &g, &h}));
                   }});
    out.push_back({"conjugation_antimultiplicative", 100, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, s, conv, 3, 3), g = star_operand(cx.rng, s, conv, 3, 3);
                       Collector c(describe({&f, &g}));
                       c.add(equal(conjugate(star_product(f, g)), star_product(conjugate(g), conjugate(f)), "anti"));
                       c.add(equal(conjugate(conjugate(f)), f, "involution"));
                       return c.result();
                   }});
    out.push_back({"time_central", 60, false, [](Context& cx) {
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, Sector::X, conv, 3, 3);
                       const CoordPoly t = CoordPoly::variable(Sector::X, conv, 3);
                       Collector c(f.to_string());
                       c.add(equal(star_product(t, f), t.commutative_product(f), "t * f"));
                       c.add(equal(star_product(f, t), t.commutative_product(f), "f * t"));
                       return c.result();
                   }});
    out.push_back({"classical_limit", 60, false, [](Context& cx) {
                       const Sector s = pick_sector(cx.rng);
                       const Convention conv = pick_convention(cx.rng);
                       const CoordPoly f = star_operand(cx.rng, s, conv, 3, 3), g = star_operand(cx.rng, s, conv, 3, 3);
                       std::map<Exp4, cplx> plain;
                       for (const auto& [ea, ca] : at_q_one(f))
                           for (const auto& [eb, cb] : at_q_one(g)) {
                               Exp4 e;
                               for (size_t k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
                               plain[e] += ca * cb;
                           }
                       return within(classical_gap(star_product(f, g), plain), 1e-12, describe({&f, &g}), "q = 1");
                   }});
    return out;
}

}  // namespace qe::checks
