// Free particle on the q-deformed Euclidean space.
//
// Symbolic part: the free Hamiltonian, time-dependent plane waves as
// truncated phase-space series, the combinatorics of powers of p^2 and the
// momentum-space propagators. Numeric part: wave packets given by lattice
// samples of their momentum coefficients.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qeuclid/lattice.hpp"
#include "qeuclid/qexp.hpp"

namespace qe {

// (C_q)^k_l = q^{-2l} (-lambda_+)^{k-l} [k choose l]_{q^4}; requires 0 <= l <= k.
QScalar cq_coefficient(int k, int l);

// sum_l (C_q)^k_l (p-)^{k-l} (p3)^{2l} (p+)^{k-l}, the W-ordered representative
// of the k-th star power of p^2. For Wt the same element is rewritten.
CoordPoly psq_power(int k, Convention c = Convention::W);

// Right-hand side of the reordering rule
//   p^{2k} * (p-)^a (p3)^b (p+)^c = sum_l q^{2b(k-l)} (C_q)^k_l (p-)^{a+k-l} (p3)^{b+2l} (p+)^{c+k-l}.
CoordPoly reordered_psq_product(int k, int a, int b, int c);

enum class PhaseSign { Plus, Minus };

// sum_{k <= K} (+-i t / 2m)^k / k! p^{2k}. The t^k factor sits in the position
// slot of the first tensor factor, the momentum polynomial in the second.
PhaseSpacePoly phase_factor(PhaseSign s, int K, const GaussRat& mass, Convention c = Convention::W);
// The same sum at a fixed rational time, as a momentum-sector polynomial.
CoordPoly phase_factor_at(PhaseSign s, int K, const GaussRat& mass, const GaussRat& t,
                          Convention c = Convention::W);

class Hamiltonian {
public:
    explicit Hamiltonian(GaussRat mass);  // mass must be a positive rational

    const GaussRat& mass() const { return mass_; }

    // -(2m)^-1 d^A d_A through the derivative action on the given side. Left
    // sides apply d_A first, right sides apply d^A first.
    CoordPoly apply(const CoordPoly& f, ActionSide side) const;
    PhaseSpacePoly apply_first(const PhaseSpacePoly& f, ActionSide side) const;

private:
    GaussRat mass_;
};

enum class WaveFamily {
    Lower,      // u_p    = exp(x|ip) * exp(-i t p^2/2m)
    Upper,      // u^p    = conj(u_p)
    StarLower,  // (u*)_p = exp(i t p^2/2m) * exp*(ip|x)
    StarUpper,  // (u*)^p = conj((u*)_p)
};
std::string family_name(WaveFamily f);  // "u_p", "u^p", "ustar_p", "ustar^p"
WaveFamily parse_family(const std::string& s);
inline constexpr WaveFamily kAllFamilies[4] = {WaveFamily::Lower, WaveFamily::Upper, WaveFamily::StarLower,
                                               WaveFamily::StarUpper};

struct PlaneWave {
    WaveFamily family = WaveFamily::Lower;
    int N = 0;  // position degree
    int K = 0;  // time degree
    GaussRat mass{1};
    PhaseSpacePoly body;
};

PlaneWave build_plane_wave(WaveFamily family, int N, int K, const GaussRat& mass);

// u_p written term by term from the closed coefficient formula.
PhaseSpacePoly closed_form_plane_wave(int N, int K, const GaussRat& mass);

// Residuals of the defining equations, with the action side each family uses:
//   Lower:     i d_0 |> u - H |> u,          i^-1 d_A |> u - u * p_A,       H |> u - u * p^2/2m
//   StarLower: (u <| d_0) i - u <| H,        (u <| d_A) i^-1 - p_A * u,     u <| H - p^2/2m * u
//   Upper:     (u <|bar d_0) i - u <|bar H,  (u <|bar d^A) i^-1 - p^A * u,  u <|bar H - p^2/2m * u
//   StarUpper: i d_0 |>bar u - H |>bar u,    i^-1 d^A |>bar u - u * p^A,    H |>bar u - u * p^2/2m
PhaseSpacePoly schrodinger_residual(const PlaneWave& w);
PhaseSpacePoly momentum_residual(const PlaneWave& w, Index a);
PhaseSpacePoly energy_residual(const PlaneWave& w);
// True when r has no terms of position degree <= N-2 and time degree <= K-1.
bool vanishes_below_shell(const PlaneWave& w, const PhaseSpacePoly& r);

enum class PropagatorFamily { KR, KL, KRStar, KLStar };
enum class Branch { Retarded, Advanced };  // +i0 and -i0
std::string propagator_family_name(PropagatorFamily f);  // "KR", "KL", "KR*", "KL*"
PropagatorFamily parse_propagator_family(const std::string& s);
std::string branch_name(Branch b);  // "retarded", "advanced"
Branch parse_branch(const std::string& s);

// Laurent series in the opaque symbol S = E +- i eps with momentum-polynomial
// coefficients: key n holds the coefficient of S^n.
using SSeries = std::map<int, CoordPoly>;

struct MomentumPropagator {
    PropagatorFamily family = PropagatorFamily::KR;
    Branch branch = Branch::Retarded;
    int order = 0;
    GaussRat mass{1};
    // scalars[k] multiplies (p^2)^k S^{-(k+1)}: +-i (sigma/2m)^k with sigma = +1 for
    // the R families and -1 for the L families.
    std::vector<QScalar> scalars;
    SSeries series;  // scalars[k] psq_power(k) at S^{-(k+1)}
};

MomentumPropagator propagator_momentum(PropagatorFamily f, Branch b, int K, const GaussRat& mass);
// (S - sigma p^2/2m) * K - (+-i), with p^2 multiplied from the left or from the right.
SSeries propagator_identity_residual(const MomentumPropagator& k, bool p2_on_left = true);
// Residual terms of momentum degree <= 2 order must vanish.
bool propagator_identity_holds(const MomentumPropagator& k);

// Comparison of the finite sum sum_{l<=k} [k choose l]_{q^4} z^l, which the
// double-sum expansion of the phase factor reduces to, with 1/(z; q^4)_k.
struct HeineRow {
    int k = 0;
    bool double_sum_is_star_power = false;  // psq_power(k) == k-fold star power of p^2
    QScalar product_defect;                 // finite_sum(z) * (z; q^4)_k - 1, exact in q
    double finite_sum = 0.0;                // numeric values at (q0, z)
    double reciprocal = 0.0;
    double relative_gap = 0.0;
};
std::vector<HeineRow> heine_diagnostic(int max_k, const GaussRat& z, double q0);

// Wave packet given by lattice samples of the momentum coefficients c_p and
// (c*)_p. The upper families are their quantum-space conjugates. Time
// evolution multiplies by exp(-+ i t p^2/2m) with p^2 evaluated pointwise.
struct WavePacket {
    LatticeFn c_lower;       // c_p
    LatticeFn c_star_lower;  // (c*)_p
    double mass = 1.0;
    double time = 0.0;

    // c_p from a Gaussian restricted to |j| <= support on every axis; (c*)_p is
    // its pointwise complex conjugate.
    static WavePacket gaussian(const QLattice& lat, double mass, const std::array<double, 3>& center, double width,
                               const std::array<double, 3>& wave_vector, int support);

    LatticeFn c_upper() const { return conjugate(c_lower); }
    LatticeFn c_star_upper() const { return conjugate(c_star_lower); }

    WavePacket at_time(double t) const;
    // Scales both coefficient functions so that the normalization integral is 1.
    WavePacket normalized() const;
};

// 1/2 int ((c*)_p c_p + c^p (c*)^p) with the lattice Jackson sum.
cplx norm_integral(const WavePacket& wp);
double norm_check(const WavePacket& wp);  // |1 - norm_integral|

// 1/2 int ((c*)_p(t) p^A c_p(t) + c^p(t) p^A (c*)^p(t)).
cplx expectation_momentum(const WavePacket& wp, Index a, bool upper = true);
// 1/2 int ((c*)_p(t) (i d^A |>bar c_p(t)) + (c^p(t) <| d^A i) (c*)^p(t)) with momentum derivatives.
cplx expectation_position(const WavePacket& wp, Index a, bool upper = true);

}  // namespace qe
