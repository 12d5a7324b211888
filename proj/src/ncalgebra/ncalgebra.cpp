#include "qeuclid/ncalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qe {

NCPoly NCPoly::word(Sector s, const NCWord& w, const QRatio& c) {
    NCPoly p(s);
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const NCWord& w, const QRatio& c) {
    if (c.is_zero()) return;
    for (auto l : w) {
        if (l > 3 || (sector_ == Sector::P && l == 3)) throw std::invalid_argument("letter outside the alphabet");
    }
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) sector_ = o.sector_;
    if (sector_ != o.sector_) throw std::invalid_argument("NCPoly sector mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.sector_ != b.sector_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
        if (ib->first != w || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

std::string letter_name(Sector s, std::uint8_t letter) {
    static const char* xs[] = {"X+", "X3", "X-", "X0"};
    static const char* ps[] = {"P-", "P3", "P+", "P?"};
    if (letter > 3) throw std::invalid_argument("letter out of range");
    return s == Sector::X ? xs[letter] : ps[letter];
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        for (auto l : w) os << " " << letter_name(sector_, l);
    }
    return os.str();
}

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b) {
    if (!a.is_zero() && !b.is_zero() && a.sector() != b.sector())
        throw std::invalid_argument("nc_multiply: sector mismatch");
    NCPoly r(a.is_zero() ? b.sector() : a.sector());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

int letter_rank(Convention c, std::uint8_t letter) {
    if (c == Convention::W) return letter;  // X+ < X3 < X- < X0
    return letter == 3 ? 0 : 3 - letter;    // X0 < X- < X3 < X+
}

bool is_normal_ordered(const NCWord& w, Convention c) {
    for (size_t i = 1; i < w.size(); ++i)
        if (letter_rank(c, w[i - 1]) > letter_rank(c, w[i])) return false;
    return true;
}

namespace {

// Words are processed in rank encoding so that std::map order is the
// lexicographic order used by the termination argument: every rewrite turns a
// word into lexicographically smaller words of the same length.
struct RankCodec {
    Convention conv;
    std::uint8_t encode(std::uint8_t letter) const { return static_cast<std::uint8_t>(letter_rank(conv, letter)); }
    std::uint8_t decode(std::uint8_t rank) const {
        for (std::uint8_t l = 0; l < 4; ++l)
            if (letter_rank(conv, l) == rank) return l;
        throw std::logic_error("bad rank");
    }
    // Slot number (1, 2, 3) of a rank, or 0 for the time letter.
    int slot(std::uint8_t rank) const {
        if (conv == Convention::W) return rank == 3 ? 0 : rank + 1;
        return rank == 0 ? 0 : rank;
    }
};

}  // namespace

NCPoly normal_order(const NCPoly& f, Convention c, RewriteStrategy strategy, long* rewrite_count) {
    const RankCodec codec{c};
    const int qs = slot_frame(c).qsign;
    const QRatio q2 = QRatio(QScalar::q_pow(2 * qs));
    const QRatio lam = QRatio(qs > 0 ? lambda() : -lambda());

    std::map<NCWord, QRatio> pending;
    for (const auto& [w, coef] : f.terms()) {
        NCWord r;
        r.reserve(w.size());
        for (auto l : w) r.push_back(codec.encode(l));
        auto [it, ins] = pending.emplace(r, coef);
        if (!ins) it->second += coef;
    }

    NCPoly out(f.sector());
    auto push = [&pending](NCWord w, const QRatio& coef) {
        auto [it, ins] = pending.emplace(std::move(w), coef);
        if (!ins) {
            it->second += coef;
            if (it->second.is_zero()) pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto last = std::prev(pending.end());
        NCWord w = last->first;
        QRatio coef = last->second;
        pending.erase(last);
        if (coef.is_zero()) continue;

        long pos = -1;
        if (strategy == RewriteStrategy::Leftmost) {
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] > w[i]) {
                    pos = static_cast<long>(i - 1);
                    break;
                }
        } else {
            for (size_t i = w.size(); i-- > 1;)
                if (w[i - 1] > w[i]) {
                    pos = static_cast<long>(i - 1);
                    break;
                }
        }
        if (pos < 0) {
            NCWord dec;
            dec.reserve(w.size());
            for (auto r : w) dec.push_back(codec.decode(r));
            out.add_term(dec, coef);
            continue;
        }
        if (rewrite_count) ++*rewrite_count;
        const auto p = static_cast<size_t>(pos);
        const int a = codec.slot(w[p]);
        const int b = codec.slot(w[p + 1]);
        NCWord swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        if (a == 0 || b == 0) {
            push(std::move(swapped), coef);
        } else if ((a == 2 && b == 1) || (a == 3 && b == 2)) {
            push(std::move(swapped), coef * q2);
        } else if (a == 3 && b == 1) {
            NCWord middle = w;
            middle[p] = middle[p + 1] = w[p + 1] + 1;  // two copies of slot 2
            push(std::move(swapped), coef);
            push(std::move(middle), coef * lam);
        } else {
            throw std::logic_error("normal_order: unexpected letter pair");
        }
    }
    return out;
}

NCPoly weyl_map(const CoordPoly& f) {
    NCPoly out(f.sector());
    const Convention c = f.convention();
    std::array<std::uint8_t, 4> order{};
    for (std::uint8_t l = 0; l < 4; ++l) order[static_cast<size_t>(letter_rank(c, l))] = l;
    for (const auto& [e, coef] : f.terms()) {
        NCWord w;
        for (auto l : order)
            for (int k = 0; k < e[l]; ++k) w.push_back(l);
        out.add_term(w, coef);
    }
    return out;
}

CoordPoly weyl_unmap(const NCPoly& F, Convention c) {
    CoordPoly out(F.sector(), c);
    for (const auto& [w, coef] : F.terms()) {
        if (!is_normal_ordered(w, c))
            throw std::invalid_argument("weyl_unmap: word is not normal-ordered in convention " + convention_name(c));
        Exp4 e{0, 0, 0, 0};
        for (auto l : w) ++e[l];
        out.add_term(e, coef);
    }
    return out;
}

CoordPoly convert_convention(const CoordPoly& f, Convention target) {
    if (f.convention() == target) return f;
    return weyl_unmap(normal_order(weyl_map(f), target), target);
}

CoordPoly star_product_oracle(const CoordPoly& f, const CoordPoly& g, RewriteStrategy strategy) {
    if (f.sector() != g.sector() || f.convention() != g.convention())
        throw std::invalid_argument("star_product_oracle: sector/convention mismatch");
    NCPoly prod = nc_multiply(weyl_map(f), weyl_map(g));
    return weyl_unmap(normal_order(prod, f.convention(), strategy), f.convention());
}

}  // namespace qe
