// Command-line front end: prime-range verification sweeps, single-sum
// evaluation, telescoping-certificate checks, quadratic-form decomposition.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "supercong/errors.hpp"
#include "supercong/padic.hpp"
#include "supercong/primes.hpp"
#include "supercong/quadform.hpp"
#include "supercong/registry.hpp"
#include "supercong/report.hpp"
#include "supercong/seq.hpp"
#include "supercong/sums.hpp"
#include "supercong/wz.hpp"

namespace {

using sc::Error;
using Q = mpq_class;

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0)
        throw Error("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::pair<long, long> parse_prime_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long p = std::stol(s);
        return {p, p};
    }
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

sc::sums::Weight parse_weight(const std::string& s) {
    if (s.rfind("pow:", 0) == 0)
        return sc::sums::Weight::kpow(std::stoi(s.substr(4)));
    if (s.rfind("inv:", 0) == 0) {
        auto parts = split_list(s.substr(4));
        if (parts.size() != 3)
            throw Error("weight inv wants alpha,beta,j");
        return sc::sums::Weight::inv_linear(parse_rational(parts[0]), parse_rational(parts[1]),
                                            std::stoi(parts[2]));
    }
    throw Error("weight must be pow:j or inv:alpha,beta,j");
}

sc::sums::Upper parse_upper(const std::string& s) {
    if (s == "p-1")
        return sc::sums::Upper::PM1;
    if (s == "p-2")
        return sc::sums::Upper::PM2;
    if (s == "p-3")
        return sc::sums::Upper::PM3;
    if (s == "p-4")
        return sc::sums::Upper::PM4;
    if (s == "half" || s == "(p-1)/2")
        return sc::sums::Upper::Half;
    throw Error("upper must be one of p-1, p-2, p-3, p-4, half");
}

sc::sums::TermFamily parse_family(const std::string& name, const std::string& a_str, long m) {
    using sc::sums::TermFamily;
    if (name == "general") {
        if (a_str.empty())
            throw Error("--family general requires --a");
        return TermFamily::general(parse_rational(a_str));
    }
    if (name == "central-cube")
        return TermFamily::central_cube(m);
    if (name == "central-sq3k")
        return TermFamily::central_sq3k(m);
    if (name == "central-sq4k2k")
        return TermFamily::central_sq4k2k(m);
    if (name == "mixed6k")
        return TermFamily::mixed6k(m);
    throw Error("unknown family: " + name);
}

int cmd_verify(const std::string& ids_csv, const std::string& primes_range,
               const std::string& format_name, const std::string& out_path, int samples,
               unsigned long long seed, int precision, int threads, bool fail_fast,
               bool timings) {
    auto [pmin, pmax] = parse_prime_range(primes_range);
    auto ids = sc::registry::select_ids(split_list(ids_csv));
    if (ids.empty()) {
        std::cerr << "no catalog ids match the filter\n";
        return 2;
    }
    sc::registry::CheckOptions opts;
    opts.samples_per_class = samples;
    opts.seed = seed;
    opts.precision = precision;
    std::vector<sc::registry::VerificationResult> results;
    if (fail_fast) {
        // prime-by-prime so a failure stops further work
        for (long p : sc::primes_in(pmin, pmax)) {
            auto rs = sc::registry::check_range(ids, p, p, opts, threads);
            results.insert(results.end(), rs.begin(), rs.end());
            if (sc::report::tally(rs).fail > 0)
                break;
        }
    } else {
        results = sc::registry::check_range(ids, pmin, pmax, opts, threads);
    }
    auto fmt = sc::report::parse_format(format_name);
    if (out_path.empty()) {
        sc::report::write(std::cout, results, fmt, timings);
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw Error("cannot open " + out_path);
        sc::report::write(f, results, fmt, timings);
    }
    return sc::report::exit_code(sc::report::tally(results));
}

int cmd_sum(const std::string& family, const std::string& a_str, long m,
            const std::string& weight_str, const std::string& upper_str, long p, int mod_exp,
            int precision, bool oracle) {
    auto fam = parse_family(family, a_str, m);
    sc::sums::SumSpec spec{fam, parse_weight(weight_str), parse_upper(upper_str)};
    int prec = precision > 0 ? precision : std::max(6, mod_exp + 3);
    sc::padic::Context ctx(p, prec);
    sc::sums::TermCache tc(ctx);
    sc::padic::Fp value = sc::sums::evaluate(tc, spec);
    mpz_class residue = value.residue(mod_exp);
    std::cout << "residue " << residue.get_str() << " (mod " << ctx.pe(mod_exp).get_str() << ")";
    if (!value.is_zero())
        std::cout << "  valuation " << value.valuation() << "  attained-digits " << value.prec();
    std::cout << "\n";
    if (oracle) {
        if (p > 50)
            throw Error("--oracle is practical only for p <= 50");
        mpq_class exact = sc::sums::exact_oracle(spec, p);
        sc::padic::Fp ex = sc::padic::Fp::from_rational(ctx, exact);
        bool match = ex.residue(mod_exp) == residue;
        std::cout << "oracle " << (match ? "match" : "MISMATCH") << " (exact rational has "
                  << exact.get_num().get_str().size() << "-digit numerator)\n";
        if (!match)
            return 1;
    }
    return 0;
}

int cmd_wz(const std::string& cert_id, const std::string& a_csv, long kmax, long n) {
    const sc::wz::Certificate* cert = sc::wz::find_certificate(cert_id);
    if (!cert) {
        std::cerr << "unknown certificate id: " << cert_id << "\n";
        return 2;
    }
    bool any_fail = false;
    for (const auto& a_str : split_list(a_csv)) {
        Q a = parse_rational(a_str);
        if (!cert->admissible(a)) {
            std::cout << cert_id << " a=" << a_str << ": excluded parameter\n";
            continue;
        }
        auto bd = sc::wz::verify_boundary(*cert, a);
        auto tl = sc::wz::verify_telescoping(*cert, a, kmax);
        std::cout << cert_id << " a=" << a_str << ": boundary ";
        switch (bd.status) {
        case sc::wz::Status::Pass: std::cout << "Pass"; break;
        case sc::wz::Status::Fail: std::cout << "Fail"; any_fail = true; break;
        case sc::wz::Status::Pole: std::cout << "Pole(k=" << bd.k << ")"; break;
        }
        std::cout << ", telescoping[0.." << kmax << "] ";
        switch (tl.status) {
        case sc::wz::Status::Pass: std::cout << "Pass"; break;
        case sc::wz::Status::Fail:
            std::cout << "Fail(k=" << tl.k << ")";
            any_fail = true;
            break;
        case sc::wz::Status::Pole: std::cout << "Pole(k=" << tl.k << ")"; break;
        }
        if (n > 0) {
            auto si = sc::wz::verify_sum_identity(*cert, a, n);
            std::cout << ", sum-identity(n=" << n << ") ";
            switch (si.status) {
            case sc::wz::Status::Pass:
                std::cout << "Pass; both sides "
                          << mpq_class(cert->sum_lhs(a, n)).get_str();
                break;
            case sc::wz::Status::Fail: std::cout << "Fail"; any_fail = true; break;
            case sc::wz::Status::Pole: std::cout << "Pole(k=" << si.k << ")"; break;
            }
        }
        std::cout << "\n";
    }
    return any_fail ? 1 : 0;
}

int cmd_decompose(long p, long d, bool form4p27) {
    std::optional<sc::qf::QuadRep> rep =
        form4p27 ? sc::qf::represent_4p27(p) : sc::qf::represent(p, d);
    if (!rep) {
        std::cerr << "no representation: "
                  << (form4p27 ? "4p = x^2+27y^2" : "p = x^2+" + std::to_string(d) + "y^2")
                  << " for p=" << p << "\n";
        return 1;
    }
    std::cout << "x=" << rep->x << " y=" << rep->y << "\n";
    return 0;
}

int cmd_special(const std::string& name, long p, long n, long b, int precision) {
    sc::padic::Context ctx(p, precision > 0 ? precision : 6);
    sc::seq::Cache cache;
    if (name == "R1" || name == "R2" || name == "R3" || name == "R7") {
        auto which = name == "R1"   ? sc::seq::RAggregate::R1
                     : name == "R2" ? sc::seq::RAggregate::R2
                     : name == "R3" ? sc::seq::RAggregate::R3
                                    : sc::seq::RAggregate::R7;
        auto v = sc::seq::r_aggregate(ctx, which);
        std::cout << name << "(" << p << ") = " << v.residue(ctx.precision()).get_str()
                  << " (mod " << ctx.modulus().get_str() << ")\n";
        return 0;
    }
    if (name == "E") {
        std::cout << "E_" << n << " = " << cache.euler_mod_p(p, n) << " (mod " << p << ")\n";
        return 0;
    }
    if (name == "U") {
        std::cout << "U_" << n << " = " << cache.u_mod_p(p, n) << " (mod " << p << ")\n";
        return 0;
    }
    if (name == "qp") {
        auto v = sc::seq::fermat_quotient(ctx, b);
        std::cout << "q_" << p << "(" << b << ") = " << v.residue(ctx.precision() - 1).get_str()
                  << " (mod " << ctx.pe(ctx.precision() - 1).get_str() << ")\n";
        return 0;
    }
    if (name == "H" || name == "H2") {
        auto v = sc::seq::harmonic(ctx, n, name == "H" ? 1 : 2);
        std::cout << name << "_" << n << " = " << v.residue(ctx.precision()).get_str()
                  << " (mod " << ctx.modulus().get_str() << ")\n";
        return 0;
    }
    std::cerr << "unknown quantity: " << name << " (want R1,R2,R3,R7,E,U,qp,H,H2)\n";
    return 2;
}

int cmd_catalog() {
    for (const auto& s : sc::registry::catalog()) {
        std::cout << s.id << "\t" << sc::registry::kind_name(s.kind) << "\tmod p^" << s.mod_exp
                  << "\t" << (s.parametric ? "parametric\t" : "\t") << s.hypotheses;
        if (!s.annotation.empty())
            std::cout << "  [note: " << s.annotation << "]";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of binomial-sum congruences over prime ranges"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check catalog statements over a prime range");
    std::string ids = "*", primes = "5..499", format = "table", out_path;
    int samples = 2, precision = 0, threads = static_cast<int>(std::thread::hardware_concurrency());
    unsigned long long seed = 0x5eedcafef00dULL;
    bool fail_fast = false, timings = false;
    verify->add_option("--ids", ids, "comma list of ids or globs (default all)");
    verify->add_option("--primes", primes, "prime range lo..hi (or a single prime)");
    verify->add_option("--format", format, "json-lines | csv | table");
    verify->add_option("--out", out_path, "write report to file");
    verify->add_option("--samples", samples, "parametric a-samples per parity class");
    verify->add_option("--seed", seed, "sampler seed");
    verify->add_option("--precision", precision, "override working precision (digits of p)");
    verify->add_option("--threads", threads, "parallelism degree");
    verify->add_flag("--fail-fast", fail_fast, "stop after the first failing prime");
    verify->add_flag("--timings", timings, "emit measured elapsed_ms (breaks byte determinism)");

    // sum
    auto* sum = app.add_subcommand("sum", "evaluate one weighted binomial sum");
    std::string family = "central-cube", a_str, weight = "pow:0", upper = "p-1";
    long m = 64, prime = 7;
    int mod_exp = 3, sprec = 0;
    bool oracle = false;
    sum->add_option("--family", family, "general | central-cube | central-sq3k | central-sq4k2k | mixed6k");
    sum->add_option("--a", a_str, "rational parameter for --family general");
    sum->add_option("--m", m, "power base");
    sum->add_option("--weight", weight, "pow:j or inv:alpha,beta,j");
    sum->add_option("--upper", upper, "p-1 | p-2 | p-3 | p-4 | half");
    sum->add_option("--prime", prime)->required();
    sum->add_option("--mod-exp", mod_exp, "modulus exponent for the printed residue");
    sum->add_option("--precision", sprec, "override working precision");
    sum->add_flag("--oracle", oracle, "cross-check against the exact-rational oracle (p <= 50)");

    // wz
    auto* wz = app.add_subcommand("wz", "verify telescoping certificates over exact rationals");
    std::string cert, a_csv = "1/5";
    long kmax = 30, nsum = 0;
    wz->add_option("--cert", cert, "certificate id (SEC2, L3.1, ...)")->required();
    wz->add_option("--a", a_csv, "comma list of rational parameters");
    wz->add_option("--kmax", kmax, "telescoping range");
    wz->add_option("--n", nsum, "also check the finite-sum identity at this n");

    // decompose
    auto* dec = app.add_subcommand("decompose", "write p as x^2 + d y^2 (or 4p as x^2+27y^2)");
    long dp = 0, dd = 4;
    bool form4p27 = false;
    dec->add_option("p", dp, "prime")->required();
    dec->add_option("--d", dd, "form discriminant: 2, 3, 4 or 7");
    dec->add_flag("--4p27", form4p27, "use the scaled form 4p = x^2 + 27 y^2");

    // special
    auto* spec = app.add_subcommand("special", "print special sequence values");
    std::string sname;
    long sp = 0, sn = 0, sb = 2;
    int spprec = 0;
    spec->add_option("name", sname, "R1 | R2 | R3 | R7 | E | U | qp | H | H2")->required();
    spec->add_option("p", sp, "prime")->required();
    spec->add_option("--n", sn, "sequence index (E, U, H, H2)");
    spec->add_option("--b", sb, "base (qp)");
    spec->add_option("--precision", spprec, "working precision");

    // catalog
    auto* cat = app.add_subcommand("catalog", "list all catalog statements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(ids, primes, format, out_path, samples, seed, precision, threads,
                              fail_fast, timings);
        if (sum->parsed())
            return cmd_sum(family, a_str, m, weight, upper, prime, mod_exp, sprec, oracle);
        if (wz->parsed())
            return cmd_wz(cert, a_csv, kmax, nsum);
        if (dec->parsed())
            return cmd_decompose(dp, dd, form4p27);
        if (spec->parsed())
            return cmd_special(sname, sp, sn, sb, spprec);
        if (cat->parsed())
            return cmd_catalog();
    } catch (const sc::ExactPole& e) {
        std::cerr << "exact pole: " << e.what() << "\n";
        return 3;
    } catch (const sc::PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const sc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
