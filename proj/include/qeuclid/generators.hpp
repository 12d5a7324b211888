// Seeded random inputs for property checks.
//
// The engine is std::mt19937_64 and all draws reduce its raw output directly,
// so a seed yields the same inputs on every standard library.
#pragma once

#include <cstdint>
#include <random>

#include "qeuclid/ncalgebra.hpp"

namespace qe {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }
    // Uniform double in [lo, hi).
    double real(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

// Seed for case `index` of the check `name` under a base seed.
std::uint64_t case_seed(std::uint64_t base, const std::string& name, int index);

// Nonzero coefficient c q^e with small Gaussian-integer c and |e| <= 2.
QRatio random_coefficient(Rng& rng);
// Up to `terms` Laurent terms with exponents in [-max_exponent, max_exponent].
QScalar random_qscalar(Rng& rng, int max_exponent, int terms);
// Up to `terms` monomials of spatial degree <= max_degree and time degree <= max_time.
CoordPoly random_poly(Rng& rng, Sector s, Convention c, int max_degree, int terms, int max_time = 0);
// Up to `terms` words of length <= max_length; the time letter only if with_time.
NCPoly random_ncpoly(Rng& rng, Sector s, int max_length, int terms, bool with_time);

}  // namespace qe
