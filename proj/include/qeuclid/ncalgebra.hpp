// Noncommutative words in the generators and PBW normal ordering.
//
// Letters are storage indices of the sector (0, 1, 2 spatial, 3 = time), so
// in the position sector the alphabet is X+, X3, X-, X0 and in the momentum
// sector P-, P3, P+.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qeuclid/coordpoly.hpp"

namespace qe {

using NCWord = std::vector<std::uint8_t>;

enum class RewriteStrategy { Leftmost, Rightmost };

class NCPoly {
public:
    using TermMap = std::map<NCWord, QRatio>;

    NCPoly() = default;
    explicit NCPoly(Sector s) : sector_(s) {}
    static NCPoly word(Sector s, const NCWord& w, const QRatio& c = QRatio(1));

    Sector sector() const { return sector_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const NCWord& w, const QRatio& c);

    NCPoly& operator+=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    Sector sector_ = Sector::X;
    TermMap terms_;
};

std::string letter_name(Sector s, std::uint8_t letter);

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b);

// Rank of a letter in the sorted order of a convention (W: slots then time;
// Wt: time then slots).
int letter_rank(Convention c, std::uint8_t letter);
bool is_normal_ordered(const NCWord& w, Convention c);

// Rewrites every word into sorted form. The strategy picks which out-of-order
// adjacent pair is rewritten first; the result does not depend on it.
// If rewrite_count is non-null, the number of applied rewrites is added to it.
NCPoly normal_order(const NCPoly& f, Convention c, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                    long* rewrite_count = nullptr);

NCPoly weyl_map(const CoordPoly& f);
// Throws std::invalid_argument if F is not normal-ordered in convention c.
CoordPoly weyl_unmap(const NCPoly& F, Convention c);

// Same noncommutative element, expressed in the other ordering convention.
CoordPoly convert_convention(const CoordPoly& f, Convention target);

// Star product computed through the noncommutative algebra: the oracle.
CoordPoly star_product_oracle(const CoordPoly& f, const CoordPoly& g,
                              RewriteStrategy strategy = RewriteStrategy::Leftmost);

}  // namespace qe
