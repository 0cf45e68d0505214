#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sc::wz {

// Exact-rational evaluation; a Pole marks a vanishing transcribed
// denominator (an excluded parameter value, not a refutation).
enum class Status { Pass, Fail, Pole };

struct Outcome {
    Status status = Status::Pass;
    long k = -1;  // index of the first Fail or Pole
};

enum class Style { GStyle, RStyle };

// One telescoping certificate: `telescoped` is the function whose partial
// sums collapse, certified either by G (telescoped = G(k+1)-G(k)) or by the
// pair (F, R) with telescoped = F and F(k) = F(k+1)R(k+1) - F(k)R(k).
struct Certificate {
    std::string id;
    Style style;
    // Rationals a excluded by the statement (poles of the fixed coefficients).
    std::function<bool(const mpq_class&)> admissible;
    std::function<mpq_class(const mpq_class&, long)> telescoped;
    std::function<mpq_class(const mpq_class&, long)> g;          // GStyle
    std::function<mpq_class(const mpq_class&, long)> f, r;       // RStyle
    // Boundary value: R(a,0) for RStyle (always 0), G(a,0) for GStyle.
    std::function<mpq_class(const mpq_class&)> boundary;
    // Full finite-sum identity at (a, n): lhs sum and closed-form rhs.
    std::function<mpq_class(const mpq_class&, long)> sum_lhs, sum_rhs;
};

const std::vector<Certificate>& certificates();
const Certificate* find_certificate(const std::string& id);

Outcome verify_telescoping(const Certificate& cert, const mpq_class& a, long k_max);
Outcome verify_boundary(const Certificate& cert, const mpq_class& a);
Outcome verify_sum_identity(const Certificate& cert, const mpq_class& a, long n);

// Exact-rational building blocks shared with tests.
mpq_class binom_q(const mpq_class& a, long k);
mpq_class central_binom_q(long k);
mpq_class s_n_q(const mpq_class& a, long n);
mpq_class term_q(const mpq_class& a, long k);  // C(a,k)C(-1-a,k)C(2k,k)/4^k

} // namespace sc::wz
