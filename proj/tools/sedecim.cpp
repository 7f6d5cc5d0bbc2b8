#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sedecim/classgroup.hpp"
#include "sedecim/harness.hpp"
#include "sedecim/ideals.hpp"
#include "sedecim/sixteen.hpp"

namespace {

using namespace sedecim;

int default_jobs() {
    const char* env = std::getenv("SEDECIM_JOBS");
    if (!env) return 1;
    int j = std::atoi(env);
    return j >= 1 ? j : 1;
}

std::vector<int> parse_q(const std::string& s) {
    if (s == "all") return {3, 7, 11, 19, 43, 67, 163};
    int q = std::atoi(s.c_str());
    if (!is_supported_q(q))
        throw CLI::ValidationError("--q", "q must be one of 3, 7, 11, 19, 43, 67, 163 or 'all'");
    return {q};
}

int run_density(const std::string& q_arg, long x_max, const std::string& method,
                long long oracle_cap, int jobs, const std::string& out,
                const std::string& format, const std::string& records_out) {
    RunConfig cfg;
    cfg.qs = parse_q(q_arg);
    cfg.x_max = x_max;
    cfg.method = method == "criterion" ? RunMethod::CRITERION
                 : method == "oracle"  ? RunMethod::ORACLE
                                       : RunMethod::BOTH;
    cfg.oracle_cap = oracle_cap;
    cfg.jobs = jobs;
    cfg.format = format == "json" ? OutputFormat::JSON : OutputFormat::CSV;

    std::vector<EpRecord> records = run_batch(cfg);
    std::vector<DensityReport> reports;
    for (int q : cfg.qs) reports.push_back(density_report(q, cfg.x_max, records));

    std::ofstream ofs;
    if (!out.empty()) {
        ofs.open(out);
        if (!ofs) {
            std::cerr << "error: cannot open " << out << "\n";
            return 1;
        }
    }
    std::ostream& os = out.empty() ? std::cout : ofs;
    if (cfg.format == OutputFormat::JSON)
        write_density_json(os, reports);
    else
        write_density_csv(os, reports);

    if (!records_out.empty()) {
        std::ofstream rfs(records_out);
        if (!rfs) {
            std::cerr << "error: cannot open " << records_out << "\n";
            return 1;
        }
        write_csv(rfs, records);
    }
    return 0;
}

int run_verify(const std::string& q_arg, long x_max, long long oracle_cap, int jobs) {
    RunConfig cfg;
    cfg.qs = parse_q(q_arg);
    cfg.x_max = x_max;
    cfg.method = RunMethod::BOTH;
    cfg.oracle_cap = oracle_cap;
    cfg.jobs = jobs;

    std::vector<EpRecord> records = run_batch(cfg);
    VerifyResult res = verify_records(records);
    for (const Mismatch& m : res.mismatches)
        std::cout << "MISMATCH q=" << m.q << " p=" << m.p.get_str() << " e=" << m.e
                  << " h=" << m.h << "\n";
    std::cout << "verified " << res.checked << " records, " << res.skipped
              << " skipped (no oracle), " << res.mismatches.size() << " mismatches\n";
    return res.mismatches.empty() ? 0 : 2;
}

int run_tables() {
    bool all_ok = true;
    for (int q : kSupportedQ) {
        QContext ctx(q);
        bool units = unit_coeff_check(ctx);
        bool orbits = orbit_structure_check(ctx);
        all_ok = all_ok && units && orbits;
        const QuadElement& e4 = ctx.eta4();
        std::cout << "q=" << q << " eta=(" << ctx.eta().x.get_str() << ","
                  << ctx.eta().y.get_str() << ")"
                  << " 2A=" << bigint(2 * e4.x).get_str()
                  << " 2qB=" << bigint(2 * q * e4.y).get_str()
                  << " units=" << (units ? "ok" : "FAIL")
                  << " orbits=" << (orbits ? "ok" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 2;
}

int run_sequence(const std::string& q_arg, const std::vector<long>& ps) {
    int q = std::atoi(q_arg.c_str());
    if (!is_supported_q(q))
        throw CLI::ValidationError("--q", "q must be one of 3, 7, 11, 19, 43, 67, 163");
    QContext ctx(q);
    for (long p : ps) {
        bigint bp(p);
        if (bp == q || bp % 4 != 1 || !is_probable_prime(bp)) {
            std::cerr << "error: p=" << p << " is not a prime = 1 mod 4 distinct from q\n";
            return 1;
        }
        std::vector<PrimeIdeal> primes = primes_above(ctx, bp);
        const PrimeIdeal& P = primes.front();
        MqElement w = find_generator(ctx, P);
        HalfComplex a = a_ideal(ctx, w);
        std::cout << "q=" << q << " p=" << p << " f=" << P.f << " a=" << a.str()
                  << " e=" << e_p(ctx, bp) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"16-rank criterion batch runner for h(-qp)"};
    app.require_subcommand(1);

    std::string q_arg = "all";
    long x_max = 10000;
    std::string method = "both";
    long long oracle_cap = 30000000;
    int jobs = default_jobs();
    std::string out, format = "csv", records_out;

    CLI::App* density = app.add_subcommand("density", "divisibility densities and e_p sums");
    density->add_option("--q", q_arg, "one of 3,7,11,19,43,67,163 or 'all'");
    density->add_option("--x-max", x_max, "upper bound for p");
    density->add_option("--method", method)->check(CLI::IsMember({"criterion", "oracle", "both"}));
    density->add_option("--oracle-cap", oracle_cap, "run the oracle when q*p <= cap");
    density->add_option("--jobs", jobs, "worker threads");
    density->add_option("--out", out, "output path (default stdout)");
    density->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    density->add_option("--records", records_out, "also write the per-(q,p) record CSV here");

    CLI::App* verify = app.add_subcommand("verify", "criterion vs class-number oracle");
    verify->add_option("--q", q_arg, "one of 3,7,11,19,43,67,163 or 'all'");
    verify->add_option("--x-max", x_max, "upper bound for p");
    verify->add_option("--oracle-cap", oracle_cap, "run the oracle when q*p <= cap");
    verify->add_option("--jobs", jobs, "worker threads");

    CLI::App* tables = app.add_subcommand("tables", "unit coefficients and orbit maps");
    (void)tables;

    std::vector<long> seq_ps;
    CLI::App* sequence = app.add_subcommand("sequence", "a-values at supplied primes");
    sequence->add_option("--q", q_arg, "one of 3,7,11,19,43,67,163")->required();
    sequence->add_option("p", seq_ps, "primes = 1 mod 4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(density))
            return run_density(q_arg, x_max, method, oracle_cap, jobs, out, format, records_out);
        if (app.got_subcommand(verify)) return run_verify(q_arg, x_max, oracle_cap, jobs);
        if (app.got_subcommand(tables)) return run_tables();
        return run_sequence(q_arg, seq_ps);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
