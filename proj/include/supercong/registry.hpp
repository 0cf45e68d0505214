#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sc::registry {

enum class Kind { Theorem, Lemma, Corollary, Conjecture, CitedResult };
enum class Status { Pass, Fail, NotApplicable, PrecisionError, Pole };

struct VerificationResult {
    std::string id;
    long p = 0;
    Status status = Status::NotApplicable;
    mpz_class modulus;  // p^e
    mpz_class lhs, rhs;
    std::string branch;
    std::string a_sample;  // empty for non-parametric statements
    long x = 0, y = 0;     // quadratic-form witness when one was used
    double elapsed_ms = 0;
};

struct StatementInfo {
    std::string id;
    Kind kind = Kind::Theorem;
    int mod_exp = 3;
    long floor = 3;  // hypotheses require p > floor
    std::string hypotheses;
    std::string annotation;  // divergence notes, corrections
    bool parametric = false;
};

struct CheckOptions {
    int precision = 0;          // 0 = auto: max(6, e+3) over the selected statements
    int samples_per_class = 2;  // parametric a-samples per parity class of <a>_p
    unsigned long long seed = 0x5eedcafef00dULL;
};

std::vector<StatementInfo> catalog();
bool known_id(const std::string& id);

// Expand glob-style patterns (*, ?) against catalog ids; a plain id also
// matches its sub-congruences ("C13.8" selects C13.8.1..4).  Case-insensitive.
std::vector<std::string> select_ids(const std::vector<std::string>& patterns);

std::vector<VerificationResult> check(const std::string& id, long p, const CheckOptions& opts);

// Parametric statements with caller-supplied a-samples.
std::vector<VerificationResult> check_parametric(const std::string& id, long p,
                                                 const std::vector<mpq_class>& a_samples,
                                                 const CheckOptions& opts);

// Every selected id at every prime in [pmin, pmax], evaluated possibly in
// parallel but reported in deterministic (id, p) order.
std::vector<VerificationResult> check_range(const std::vector<std::string>& ids, long pmin,
                                            long pmax, const CheckOptions& opts, int threads);

std::string status_name(Status s);
std::string kind_name(Kind k);

} // namespace sc::registry
