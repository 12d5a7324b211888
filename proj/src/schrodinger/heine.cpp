// Diagnostic for the resummed form of the phase factor.
//
// The double-sum expansion of p^{2k} factors as (-lambda_+ p- p+)^k times the
// finite sum sum_{l<=k} [k choose l]_{q^4} z^l with z = p3^2 / (-q^2 lambda_+ p- p+).
// That finite sum is not the reciprocal of (z; q^4)_k (already for k = 1 the
// product with 1 - z leaves -z^2), so the library only uses the double sum and
// this file reports the size of the discrepancy. Nothing else calls into the
// q-Pochhammer product.
#include <cmath>

#include "qeuclid/schrodinger.hpp"

namespace qe {

std::vector<HeineRow> heine_diagnostic(int max_k, const GaussRat& z, double q0) {
    std::vector<HeineRow> rows;
    const CoordPoly p2 = momentum_square(Convention::W);
    CoordPoly power = CoordPoly::constant(Sector::P, Convention::W, QRatio(1));
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) power = star_product(power, p2);
        HeineRow row;
        row.k = k;
        row.double_sum_is_star_power = psq_power(k) == power;

        QScalar finite;
        QScalar zl(1);
        for (int l = 0; l <= k; ++l) {
            finite += q_binomial(k, l, 4) * zl;
            zl *= z;
        }
        const QScalar pochhammer = q_pochhammer(QScalar(z), k, 4);
        row.product_defect = finite * pochhammer - QScalar(1);
        row.finite_sum = std::real(finite.eval(q0));
        row.reciprocal = 1.0 / std::real(pochhammer.eval(q0));
        row.relative_gap = std::abs(row.finite_sum - row.reciprocal) / std::max(std::abs(row.reciprocal), 1e-300);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qe
