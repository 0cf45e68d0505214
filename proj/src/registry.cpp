#include "supercong/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <random>
#include <thread>

#include "supercong/errors.hpp"
#include "supercong/primes.hpp"

#include "catalog.hpp"

namespace sc::registry {

const std::vector<Statement>& statements() {
    static const std::vector<Statement> all = [] {
        std::vector<Statement> v;
        register_catalog_head(v);
        register_catalog_mid(v);
        register_catalog_conj(v);
        return v;
    }();
    return all;
}

namespace {

const Statement* find_statement(const std::string& id) {
    for (const auto& s : statements())
        if (s.id == id)
            return &s;
    return nullptr;
}

std::string lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool glob_match(const std::string& pat, const std::string& str) {
    size_t pi = 0, si = 0, star = std::string::npos, mark = 0;
    while (si < str.size()) {
        if (pi < pat.size() && (pat[pi] == '?' || pat[pi] == str[si])) {
            ++pi;
            ++si;
        } else if (pi < pat.size() && pat[pi] == '*') {
            star = pi++;
            mark = si;
        } else if (star != std::string::npos) {
            pi = star + 1;
            si = ++mark;
        } else {
            return false;
        }
    }
    while (pi < pat.size() && pat[pi] == '*')
        ++pi;
    return pi == pat.size();
}

bool applicable_at(const Statement& st, long p) {
    if (p <= st.floor)
        return false;
    if (st.applicable && !st.applicable(p))
        return false;
    return true;
}

int auto_precision(const std::vector<const Statement*>& sts) {
    int e = 2;
    for (const auto* s : sts)
        e = std::max(e, s->mod_exp);
    return std::max(6, e + 3);
}

VerificationResult make_result(const Statement& st, long p, Status status) {
    VerificationResult r;
    r.id = st.id;
    r.p = p;
    r.status = status;
    return r;
}

VerificationResult from_outcome(const Statement& st, long p, const Context& ctx,
                                const Outcome& o, const std::string& a_sample) {
    VerificationResult r;
    r.id = st.id;
    r.p = p;
    r.status = o.status;
    r.modulus = ctx.pe(o.mod_exp);
    r.lhs = o.lhs;
    r.rhs = o.rhs;
    r.branch = o.branch;
    r.a_sample = a_sample;
    r.x = o.x;
    r.y = o.y;
    return r;
}

// Exception-to-status mapping for one evaluation.
template <typename F>
VerificationResult guarded(const Statement& st, long p, const Context& ctx,
                           const std::string& a_sample, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationResult r;
    try {
        r = from_outcome(st, p, ctx, body(), a_sample);
    } catch (const ExactPole& e) {
        r = make_result(st, p, Status::Pole);
        r.branch = e.what();
        r.a_sample = a_sample;
    } catch (const PrecisionExhausted& e) {
        r = make_result(st, p, Status::PrecisionError);
        r.branch = e.what();
        r.a_sample = a_sample;
    } catch (const NegativeValuation& e) {
        r = make_result(st, p, Status::PrecisionError);
        r.branch = e.what();
        r.a_sample = a_sample;
    } catch (const Error& e) {
        r = make_result(st, p, Status::PrecisionError);
        r.branch = std::string("error: ") + e.what();
        r.a_sample = a_sample;
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

bool admissible_a(const Statement& st, const Context& ctx, const Q& a) {
    if (a.get_den() % ctx.p() == 0)
        return false;
    long r = padic::residue_index(ctx, a);
    for (long excl : st.excluded_residues) {
        long er = excl % ctx.p();
        if (er < 0)
            er += ctx.p();
        if (r == er)
            return false;
    }
    if (st.extra_admissible && !st.extra_admissible(ctx, a))
        return false;
    return true;
}

namespace {

// Stratified by the parity of <a>_p: `per_class` samples with even residue,
// `per_class` with odd, drawn from numerators/denominators up to 12.
std::vector<Sample> draw_samples(const Statement& st, const Context& ctx,
                                 const CheckOptions& opts) {
    std::vector<Sample> out;
    if (st.pk == ParamKind::TSample) {
        for (long t : {1L, 2L, 3L}) {
            Sample s;
            s.t = t;
            s.label = "t=" + std::to_string(t);
            out.push_back(s);
        }
        return out;
    }
    if (st.pk == ParamKind::TNSample) {
        long half = (ctx.p() - 1) / 2;
        for (long t : {1L, 2L, 3L}) {
            long last = 0;
            for (long n : {1L, 2L, half}) {
                if (n > half || n == last)
                    continue;
                last = n;
                Sample s;
                s.t = t;
                s.n = n;
                s.label = "t=" + std::to_string(t) + ",n=" + std::to_string(n);
                out.push_back(s);
            }
        }
        return out;
    }
    std::mt19937_64 rng(opts.seed ^ fnv1a(st.id) ^
                        (static_cast<uint64_t>(ctx.p()) * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<long> num(-12, 12), den(1, 12);
    int want = opts.samples_per_class;
    int have_even = 0, have_odd = 0;
    int attempts = 0;
    while ((have_even < want || have_odd < want) && attempts < 4000) {
        ++attempts;
        long r = num(rng);
        if (r == 0)
            continue;
        Q a(r, den(rng));
        a.canonicalize();
        if (!admissible_a(st, ctx, a))
            continue;
        bool even = padic::residue_index(ctx, a) % 2 == 0;
        if (even && have_even >= want)
            continue;
        if (!even && have_odd >= want)
            continue;
        bool dup = false;
        for (const auto& s : out)
            if (s.a == a)
                dup = true;
        if (dup)
            continue;
        (even ? have_even : have_odd)++;
        Sample s;
        s.a = a;
        s.label = a.get_str();
        out.push_back(s);
    }
    // Dedicated edge sample for the second branch of the step lemma.
    if (st.id == "L2.1") {
        Sample s;
        s.a = ctx.p() - 2;
        s.label = s.a.get_str();
        out.push_back(s);
    }
    return out;
}

std::vector<VerificationResult> run_statement(const Statement& st, long p,
                                              const Context& ctx, sums::TermCache& tc,
                                              seq::Cache& sq, const CheckOptions& opts,
                                              const std::vector<Sample>* explicit_samples) {
    std::vector<VerificationResult> out;
    if (!applicable_at(st, p)) {
        out.push_back(make_result(st, p, Status::NotApplicable));
        return out;
    }
    if (st.pk == ParamKind::None) {
        Env env{ctx, tc, sq, p, st.mod_exp};
        out.push_back(guarded(st, p, ctx, "", [&] { return st.run(env); }));
        return out;
    }
    std::vector<Sample> samples =
        explicit_samples ? *explicit_samples : draw_samples(st, ctx, opts);
    for (const auto& smp : samples) {
        if (st.pk == ParamKind::ASample && !admissible_a(st, ctx, smp.a)) {
            VerificationResult r = make_result(st, p, Status::NotApplicable);
            r.a_sample = smp.label.empty() ? smp.a.get_str() : smp.label;
            out.push_back(r);
            continue;
        }
        Env env{ctx, tc, sq, p, st.mod_exp};
        std::string label = smp.label.empty() ? smp.a.get_str() : smp.label;
        out.push_back(guarded(st, p, ctx, label, [&] { return st.run_param(env, smp); }));
    }
    if (out.empty())
        out.push_back(make_result(st, p, Status::NotApplicable));
    return out;
}

} // namespace

std::vector<StatementInfo> catalog() {
    std::vector<StatementInfo> out;
    for (const auto& s : statements()) {
        StatementInfo i;
        i.id = s.id;
        i.kind = s.kind;
        i.mod_exp = s.mod_exp;
        i.floor = s.floor;
        i.hypotheses = s.hypotheses;
        i.annotation = s.annotation;
        i.parametric = s.pk != ParamKind::None;
        out.push_back(std::move(i));
    }
    return out;
}

bool known_id(const std::string& id) { return find_statement(id) != nullptr; }

std::vector<std::string> select_ids(const std::vector<std::string>& patterns) {
    std::vector<std::string> out;
    for (const auto& s : statements()) {
        std::string idl = lower(s.id);
        bool hit = patterns.empty();
        for (const auto& raw : patterns) {
            std::string pat = lower(raw);
            if (glob_match(pat, idl) || idl.rfind(pat + ".", 0) == 0) {
                hit = true;
                break;
            }
        }
        if (hit)
            out.push_back(s.id);
    }
    return out;
}

std::vector<VerificationResult> check(const std::string& id, long p, const CheckOptions& opts) {
    const Statement* st = find_statement(id);
    if (!st)
        throw OutOfRange("unknown statement id: " + id);
    int prec = opts.precision > 0 ? opts.precision : std::max(6, st->mod_exp + 3);
    Context ctx(p, prec);
    sums::TermCache tc(ctx);
    seq::Cache sq;
    return run_statement(*st, p, ctx, tc, sq, opts, nullptr);
}

std::vector<VerificationResult> check_parametric(const std::string& id, long p,
                                                 const std::vector<mpq_class>& a_samples,
                                                 const CheckOptions& opts) {
    const Statement* st = find_statement(id);
    if (!st)
        throw OutOfRange("unknown statement id: " + id);
    if (st->pk != ParamKind::ASample)
        throw OutOfRange("statement is not a-parametric: " + id);
    int prec = opts.precision > 0 ? opts.precision : std::max(6, st->mod_exp + 3);
    Context ctx(p, prec);
    sums::TermCache tc(ctx);
    seq::Cache sq;
    std::vector<Sample> samples;
    for (const auto& a : a_samples) {
        Sample s;
        s.a = a;
        s.label = a.get_str();
        samples.push_back(s);
    }
    return run_statement(*st, p, ctx, tc, sq, opts, &samples);
}

std::vector<VerificationResult> check_range(const std::vector<std::string>& ids, long pmin,
                                            long pmax, const CheckOptions& opts, int threads) {
    std::vector<const Statement*> selected;
    for (const auto& id : ids) {
        const Statement* st = find_statement(id);
        if (!st)
            throw OutOfRange("unknown statement id: " + id);
        selected.push_back(st);
    }
    std::vector<long> ps = primes_in(std::max(pmin, 3L), pmax);
    int prec = opts.precision > 0 ? opts.precision : auto_precision(selected);

    // One slot per prime; workers claim primes, building the per-prime caches
    // once and running every selected statement against them.
    std::vector<std::vector<VerificationResult>> by_prime(ps.size());
    std::atomic<size_t> next{0};
    seq::Cache sq;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= ps.size())
                return;
            long p = ps[i];
            Context ctx(p, prec);
            sums::TermCache tc(ctx);
            std::vector<VerificationResult> local;
            for (const Statement* st : selected) {
                auto rs = run_statement(*st, p, ctx, tc, sq, opts, nullptr);
                local.insert(local.end(), rs.begin(), rs.end());
            }
            by_prime[i] = std::move(local);
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Deterministic (id, p) order, restoring the catalog's id order.
    std::vector<VerificationResult> out;
    for (const Statement* st : selected)
        for (size_t i = 0; i < ps.size(); ++i)
            for (auto& r : by_prime[i])
                if (r.id == st->id)
                    out.push_back(r);
    return out;
}

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::NotApplicable: return "NotApplicable";
    case Status::PrecisionError: return "PrecisionError";
    case Status::Pole: return "Pole";
    }
    return "?";
}

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::Theorem: return "theorem";
    case Kind::Lemma: return "lemma";
    case Kind::Corollary: return "corollary";
    case Kind::Conjecture: return "conjecture";
    case Kind::CitedResult: return "cited-result";
    }
    return "?";
}

} // namespace sc::registry
