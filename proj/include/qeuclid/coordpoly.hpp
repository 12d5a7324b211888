// Commutative carriers for the star-product calculus.
//
// Exponent tuples are indexed by variable, not by normal-order position:
//   position sector: (x+, x3, x-, t)
//   momentum sector: (p-, p3, p+, 0)
// The convention tag (W or Wt) records which ordering of noncommutative
// generators a commutative monomial stands for.
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qeuclid/qratio.hpp"

namespace qe {

enum class Sector { X, P };
enum class Convention { W, Wt };

using Exp4 = std::array<int, 4>;

std::string sector_name(Sector s);
std::string convention_name(Convention c);
Sector parse_sector(const std::string& s);
Convention parse_convention(const std::string& s);

// The three ordered slots (y1, y2, y3) of a (sector, convention) pair and the
// parameter Q of the relations
//   y2 y1 = Q^2 y1 y2,  y3 y2 = Q^2 y2 y3,  y3 y1 = y1 y3 + (Q - 1/Q) y2^2.
// Slot k holds the variable with storage index var[k]. Q = q^qsign.
struct SlotFrame {
    std::array<int, 3> var;
    int qsign;
};
SlotFrame slot_frame(Convention c);

class CoordPoly {
public:
    using TermMap = std::map<Exp4, QRatio>;

    CoordPoly() = default;
    CoordPoly(Sector s, Convention c) : sector_(s), conv_(c) {}

    static CoordPoly constant(Sector s, Convention c, const QRatio& v);
    static CoordPoly monomial(Sector s, Convention c, const Exp4& e, const QRatio& v = QRatio(1));
    // Single generator by storage index (0, 1, 2, or 3 for t).
    static CoordPoly variable(Sector s, Convention c, int index);

    Sector sector() const { return sector_; }
    Convention convention() const { return conv_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QRatio coeff(const Exp4& e) const;
    int total_degree() const;   // spatial degree (first three slots), -1 for zero
    int time_degree() const;    // exponent of slot 3, -1 for zero

    void add_term(const Exp4& e, const QRatio& c);

    CoordPoly operator-() const;
    CoordPoly& operator+=(const CoordPoly& o);
    CoordPoly& operator-=(const CoordPoly& o);
    CoordPoly& operator*=(const QRatio& c);
    friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
    friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
    friend CoordPoly operator*(CoordPoly a, const QRatio& c) { return a *= c; }
    friend CoordPoly operator*(const QRatio& c, CoordPoly a) { return a *= c; }
    friend bool operator==(const CoordPoly& a, const CoordPoly& b);
    friend bool operator!=(const CoordPoly& a, const CoordPoly& b) { return !(a == b); }

    // Ordinary commutative product (no deformation).
    CoordPoly commutative_product(const CoordPoly& o) const;
    // Keeps only terms with spatial degree <= max_spatial and time degree <= max_time.
    CoordPoly truncated(int max_spatial, int max_time = 1 << 20) const;
    CoordPoly with_convention(Convention c) const;  // relabels the tag only
    CoordPoly map_coefficients(const std::function<QRatio(const QRatio&)>& f) const;
    CoordPoly filtered(const std::function<bool(const Exp4&)>& keep) const;

    std::string to_string() const;

private:
    Sector sector_ = Sector::X;
    Convention conv_ = Convention::W;
    TermMap terms_;
};

// Double-precision evaluation of a CoordPoly at a fixed q0 (and optionally a
// fixed time, which folds the t exponent into the coefficient).
class NumPoly {
public:
    using TermMap = std::map<Exp4, std::complex<double>>;

    NumPoly() = default;
    NumPoly(Sector s, Convention c) : sector_(s), conv_(c) {}
    static NumPoly from(const CoordPoly& f, double q0);
    static NumPoly from_at_time(const CoordPoly& f, double q0, double t);

    Sector sector() const { return sector_; }
    Convention convention() const { return conv_; }
    const TermMap& terms() const { return terms_; }
    void add_term(const Exp4& e, std::complex<double> c);
    std::complex<double> value_at(double y0, double y1, double y2, double t = 0.0) const;

private:
    Sector sector_ = Sector::X;
    Convention conv_ = Convention::W;
    TermMap terms_;
};

// Element of A1 (x) A2 where the two tensor factors commute with each other.
// Used for x (x) p phase-space series and for x (x) y translation results.
struct Factor {
    Sector sector;
    Convention convention;
    friend bool operator==(const Factor& a, const Factor& b) {
        return a.sector == b.sector && a.convention == b.convention;
    }
};

class PhaseSpacePoly {
public:
    using Key = std::pair<Exp4, Exp4>;
    using TermMap = std::map<Key, QRatio>;

    PhaseSpacePoly() = default;
    PhaseSpacePoly(Factor first, Factor second) : first_(first), second_(second) {}

    static PhaseSpacePoly tensor(const CoordPoly& a, const CoordPoly& b);

    const Factor& first() const { return first_; }
    const Factor& second() const { return second_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QRatio coeff(const Exp4& a, const Exp4& b) const;

    void add_term(const Exp4& a, const Exp4& b, const QRatio& c);

    PhaseSpacePoly operator-() const;
    PhaseSpacePoly& operator+=(const PhaseSpacePoly& o);
    PhaseSpacePoly& operator-=(const PhaseSpacePoly& o);
    PhaseSpacePoly& operator*=(const QRatio& c);
    friend PhaseSpacePoly operator+(PhaseSpacePoly a, const PhaseSpacePoly& b) { return a += b; }
    friend PhaseSpacePoly operator-(PhaseSpacePoly a, const PhaseSpacePoly& b) { return a -= b; }
    friend PhaseSpacePoly operator*(PhaseSpacePoly a, const QRatio& c) { return a *= c; }
    friend bool operator==(const PhaseSpacePoly& a, const PhaseSpacePoly& b);
    friend bool operator!=(const PhaseSpacePoly& a, const PhaseSpacePoly& b) { return !(a == b); }

    // Groups terms by first-factor monomial: f = sum_m m (x) g_m.
    std::map<Exp4, CoordPoly> by_first() const;
    std::map<Exp4, CoordPoly> by_second() const;

    // Keep terms whose first factor has spatial degree <= a and time degree <= ta.
    PhaseSpacePoly truncated_first(int a, int ta = 1 << 20) const;
    PhaseSpacePoly filtered(const std::function<bool(const Exp4&, const Exp4&)>& keep) const;

    std::string to_string() const;

private:
    Factor first_{Sector::X, Convention::W};
    Factor second_{Sector::P, Convention::W};
    TermMap terms_;
};

int spatial_degree(const Exp4& e);

}  // namespace qe
