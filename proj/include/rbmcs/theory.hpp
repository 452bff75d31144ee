#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rbmcs {

/// Parameters of the binomial-moment identities: n trials, weight base a,
/// selection ratio in (0, 1], and the derived g = ratio * a + 1 - ratio.
struct AgbParams {
    int n = 0;
    double a = 1.0;
    double ratio = 1.0;

    double g() const { return ratio * a + 1.0 - ratio; }
};

enum class AgbMoment { one, r, r_squared };

/// Brute-force sum_{r=0}^{n} C(n,r) a^r m(r) ratio^r (1-ratio)^{n-r} with
/// m(r) in {1, r, r^2}.  Terms are accumulated in log space (n <= 60).
double agb_sum(const AgbParams& params, AgbMoment moment);

/// Closed forms of the same sums:
///   m = r^2 : a q n (g^{n-2} (n-1) a q + g^{n-1})    with q = ratio
///   m = r   : a q n g^{n-1}
///   m = 1   : g^n
double agb_closed(const AgbParams& params, AgbMoment moment);

/// Both sides of the time-change identity
///   sum_r C(n,r) a^r |r tau - t|^2 q^r (1-q)^{n-r}
///     = g^{n-2} (a-1)^2 t^2 (1-q)^2 + a g^{n-2} t tau (1-q)
/// under the constraint t = n q tau.  Returns (lhs, rhs).
std::pair<double, double> rtau_identity(int n, double a, double ratio, double tau, double t);

struct Lemma41Result {
    double lhs = 0.0; // a + (1-a) e^{-x}
    double rhs = 0.0; // exp(-((1-a)/(1+b)) x)
    bool holds = false;
};

/// Checks a + (1-a) e^{-x} <= exp(-((1-a)/(1+b)) x) for 0 <= a <= 1, b > 0,
/// x in [0, b].  A relative slack of 1e-12 absorbs rounding at the x = 0 and
/// a = 1 equality points.
Lemma41Result lemma41_check(double a, double b, double x);

struct TheoryCheck {
    std::string name;
    long cases = 0;
    double max_rel_err = 0.0; // worst relative discrepancy (identities)
    long violations = 0;      // inequality violations
    bool pass = false;
};

/// Runs the full verification grids (moment identities, the time-change
/// identity on randomized parameters, and the decay inequality sweep).
std::vector<TheoryCheck> verify_theory();

} // namespace rbmcs
