#include "qeuclid/generators.hpp"

namespace qe {

std::uint64_t case_seed(std::uint64_t base, const std::string& name, int index) {
    // FNV-1a over the name, then a splitmix64 finalizer over the combination.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (h ^ static_cast<std::uint64_t>(index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

QRatio random_coefficient(Rng& rng) {
    GaussRat c;
    while (c.is_zero()) c = GaussRat(mpq_class(rng.uniform(-3, 3)), mpq_class(rng.uniform(-2, 2)));
    return QRatio(QScalar::monomial(rng.uniform(-2, 2), c));
}

QScalar random_qscalar(Rng& rng, int max_exponent, int terms) {
    QScalar s;
    for (int k = 0; k < terms; ++k)
        s.add_term(rng.uniform(-max_exponent, max_exponent),
                   GaussRat(mpq_class(rng.uniform(-4, 4)), mpq_class(rng.uniform(-4, 4))));
    return s;
}

CoordPoly random_poly(Rng& rng, Sector s, Convention c, int max_degree, int terms, int max_time) {
    CoordPoly f(s, c);
    for (int k = 0; k < terms; ++k) {
        Exp4 e{0, 0, 0, 0};
        const int degree = rng.uniform(0, max_degree);
        for (int d = 0; d < degree; ++d) ++e[static_cast<size_t>(rng.uniform(0, 2))];
        if (s == Sector::X && max_time > 0) e[3] = rng.uniform(0, max_time);
        f.add_term(e, random_coefficient(rng));
    }
    return f;
}

NCPoly random_ncpoly(Rng& rng, Sector s, int max_length, int terms, bool with_time) {
    NCPoly f(s);
    const int letters = with_time && s == Sector::X ? 4 : 3;
    for (int k = 0; k < terms; ++k) {
        NCWord w(static_cast<size_t>(rng.uniform(0, max_length)));
        for (auto& letter : w) letter = static_cast<std::uint8_t>(rng.uniform(0, letters - 1));
        f.add_term(w, random_coefficient(rng));
    }
    return f;
}

}  // namespace qe
