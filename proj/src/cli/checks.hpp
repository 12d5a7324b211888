// Check tables for the module suites. Each check draws its own inputs from a
// per-case generator, so any single case can be re-run in isolation.
#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qeuclid/generators.hpp"
#include "qeuclid/schrodinger.hpp"
#include "qeuclid/suites.hpp"

namespace qe::checks {

struct Outcome {
    bool ok = true;
    std::string input;
    std::string detail;
};

struct Context {
    Rng& rng;
    const SuiteConfig& config;
    int index;
};

struct Check {
    std::string name;
    int default_cases = 1;
    bool needs_lattice = false;  // skipped in the classical run (q0 = 1)
    std::function<Outcome(Context&)> run;
};

std::vector<Check> qarith();
std::vector<Check> ncalgebra();
std::vector<Check> starcalc();
std::vector<Check> qcalculus();
std::vector<Check> qexp();
std::vector<Check> schrodinger();

// Text clipped for reports.
inline std::string clip(const std::string& s, size_t limit = 240) {
    return s.size() <= limit ? s : s.substr(0, limit) + "...";
}

template <class T>
Outcome equal(const T& got, const T& want, std::string input) {
    Outcome o;
    o.input = std::move(input);
    if (!(got == want)) {
        o.ok = false;
        o.detail = "got " + clip(got.to_string()) + ", expected " + clip(want.to_string());
    }
    return o;
}

inline Outcome within(double err, double tol, std::string input, const std::string& what) {
    Outcome o;
    o.input = std::move(input);
    if (!(err <= tol)) {
        std::ostringstream os;
        os.precision(3);
        os << what << " error " << err << " exceeds " << tol;
        o.ok = false;
        o.detail = os.str();
    }
    return o;
}

inline Outcome fail(std::string input, std::string detail) { return {false, std::move(input), std::move(detail)}; }

// Accumulates several sub-results into one outcome: the first failure wins.
class Collector {
public:
    explicit Collector(std::string input) { out_.input = std::move(input); }
    void add(const Outcome& o) {
        if (out_.ok && !o.ok) {
            out_.ok = false;
            out_.detail = o.input.empty() ? o.detail : o.input + ": " + o.detail;
        }
    }
    void require(bool cond, const std::string& what) {
        if (out_.ok && !cond) {
            out_.ok = false;
            out_.detail = what;
        }
    }
    Outcome result() const { return out_; }

private:
    Outcome out_;
};

// Largest |c(q0=1) - expected| over the union of both term sets.
double classical_gap(const CoordPoly& f, const std::map<Exp4, cplx>& expected);
std::map<Exp4, cplx> at_q_one(const CoordPoly& f);

}  // namespace qe::checks
