#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sedecim/sixteen.hpp"

namespace sedecim {

enum class RunMethod { CRITERION, ORACLE, BOTH };
enum class OutputFormat { CSV, JSON };

struct RunConfig {
    std::vector<int> qs = {3, 7, 11, 19, 43, 67, 163};
    long x_max = 10000;
    RunMethod method = RunMethod::BOTH;
    long long oracle_cap = 30000000;  // the oracle runs when q * p <= oracle_cap
    int jobs = 1;
    std::string out_path;  // empty: stdout
    OutputFormat format = OutputFormat::CSV;
};

struct DensityReport {
    int q = 0;
    long x_max = 0;
    long n1 = 0;                   // primes p = 1 mod 4, p <= x_max (p != q)
    long n4 = 0, n8 = 0, n16 = 0;  // counts with 4 | h, 8 | h, 16 | h
    long long partial_sum = 0;     // sum of e_p
    long long max_abs_partial = 0;
    std::vector<std::pair<long, long long>> checkpoints;  // (#primes, partial sum)
};

struct Mismatch {
    int q = 0;
    bigint p;
    int e = 0;
    std::int64_t h = 0;
};

struct VerifyResult {
    std::vector<Mismatch> mismatches;
    long checked = 0;
    long skipped = 0;  // records with no oracle data
};

/** Ascending primes p <= x with p = 1 mod 4 (segmented sieve). */
std::vector<long> sieve_primes(long x);

/** True iff the record's chi/chi4/e agree with v2 of the oracle class number. */
bool record_consistent(const EpRecord& r);

/** One EpRecord per (q, p), ordered by (q, p) independently of cfg.jobs. */
std::vector<EpRecord> run_batch(const RunConfig& cfg);

/** Density and cancellation summary over the records with the given q. */
DensityReport density_report(int q, long x_max, const std::vector<EpRecord>& records);

/** Collects every record whose criterion data contradicts the oracle. */
VerifyResult verify_records(const std::vector<EpRecord>& records);

/** num/den to 6 decimal places, "NA" when den = 0. */
std::string format_ratio(long long num, long long den);

void write_csv(std::ostream& os, const std::vector<EpRecord>& records);
void write_density_csv(std::ostream& os, const std::vector<DensityReport>& reports);
void write_density_json(std::ostream& os, const std::vector<DensityReport>& reports);

}  // namespace sedecim
