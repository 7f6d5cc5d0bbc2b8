#include "sedecim/harness.hpp"

#include <atomic>
#include <cstdio>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sedecim/classgroup.hpp"

namespace sedecim {

std::vector<long> sieve_primes(long x) {
    if (x < 2) throw std::invalid_argument("sieve_primes: x must be >= 2");
    std::vector<long> out;
    long root = 1;
    while ((root + 1) * (root + 1) <= x) ++root;

    std::vector<bool> small(root + 1, true);
    std::vector<long> base;
    for (long i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (long j = i * i; j <= root; j += i) small[j] = false;
    }
    for (long p : base)
        if (p % 4 == 1) out.push_back(p);

    const long seg = 1 << 16;
    std::vector<bool> mark;
    for (long lo = root + 1; lo <= x; lo += seg) {
        long hi = lo + seg - 1 < x ? lo + seg - 1 : x;
        mark.assign(hi - lo + 1, true);
        for (long p : base) {
            long start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (long j = start; j <= hi; j += p) mark[j - lo] = false;
        }
        for (long n = lo; n <= hi; ++n)
            if (mark[n - lo] && n % 4 == 1) out.push_back(n);
    }
    return out;
}

bool record_consistent(const EpRecord& r) {
    if (!r.h_known) return true;
    int k = v2(bigint(r.h));
    if ((r.e == 1) != (k >= 4)) return false;
    if ((r.e == -1) != (k == 3)) return false;
    if ((r.e == 0) != (k < 3)) return false;
    if ((r.chi == 1) != (k >= 2)) return false;
    if (r.chi4_known && (r.chi4 == 1) != (k >= 3)) return false;
    return true;
}

std::vector<EpRecord> run_batch(const RunConfig& cfg) {
    if (cfg.jobs < 1) throw std::invalid_argument("run_batch: jobs must be >= 1");
    for (int q : cfg.qs)
        if (!is_supported_q(q)) throw std::invalid_argument("run_batch: unsupported q");

    const std::vector<long> primes = sieve_primes(cfg.x_max);

    struct Task {
        int qi;
        long p;
    };
    std::vector<Task> tasks;
    std::vector<std::unique_ptr<QContext>> ctxs;
    for (std::size_t qi = 0; qi < cfg.qs.size(); ++qi) {
        ctxs.push_back(std::make_unique<QContext>(cfg.qs[qi]));
        for (long p : primes)
            if (p != cfg.qs[qi]) tasks.push_back({static_cast<int>(qi), p});
    }

    std::vector<EpRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;

    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            {
                std::lock_guard<std::mutex> lk(err_mu);
                if (err) return;
            }
            try {
                const Task& t = tasks[i];
                const QContext& ctx = *ctxs[t.qi];
                EpRecord r = criterion_record(ctx, bigint(t.p));
                if (cfg.method != RunMethod::CRITERION &&
                    static_cast<long long>(ctx.q()) * t.p <= cfg.oracle_cap) {
                    r.h_known = true;
                    r.h = class_number(-static_cast<std::int64_t>(ctx.q()) * t.p);
                    r.agree = record_consistent(r);
                }
                out[i] = std::move(r);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };

    if (cfg.jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

DensityReport density_report(int q, long x_max, const std::vector<EpRecord>& records) {
    DensityReport rep;
    rep.q = q;
    rep.x_max = x_max;
    long long partial = 0;
    for (const EpRecord& r : records) {
        if (r.q != q) continue;
        ++rep.n1;
        if (r.chi == 1) ++rep.n4;
        if (r.chi4_known && r.chi4 == 1) ++rep.n8;
        if (r.e == 1) ++rep.n16;
        partial += r.e;
        long long mag = partial < 0 ? -partial : partial;
        if (mag > rep.max_abs_partial) rep.max_abs_partial = mag;
        if ((rep.n1 & (rep.n1 - 1)) == 0) rep.checkpoints.emplace_back(rep.n1, partial);
    }
    rep.partial_sum = partial;
    if (rep.n1 > 0 &&
        (rep.checkpoints.empty() || rep.checkpoints.back().first != rep.n1))
        rep.checkpoints.emplace_back(rep.n1, partial);
    return rep;
}

VerifyResult verify_records(const std::vector<EpRecord>& records) {
    VerifyResult res;
    for (const EpRecord& r : records) {
        if (!r.h_known) {
            ++res.skipped;
            continue;
        }
        ++res.checked;
        if (!record_consistent(r)) res.mismatches.push_back({r.q, r.p, r.e, r.h});
    }
    return res;
}

std::string format_ratio(long long num, long long den) {
    if (den == 0) return "NA";
    long long scaled = (num * 2000000 + den) / (2 * den);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%lld.%06lld", scaled / 1000000, scaled % 1000000);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<EpRecord>& records) {
    os << "q,p,chi,chi4,u,v,e,h,v2h,agree\n";
    for (const EpRecord& r : records) {
        os << r.q << ',' << r.p.get_str() << ',' << r.chi << ',';
        if (r.chi4_known)
            os << r.chi4;
        else
            os << "NA";
        os << ',';
        if (r.uv_known)
            os << r.u.get_str() << ',' << r.v.get_str();
        else
            os << "NA,NA";
        os << ',' << r.e << ',';
        if (r.h_known)
            os << r.h << ',' << v2(bigint(r.h)) << ',' << (r.agree ? "true" : "false");
        else
            os << "NA,NA,NA";
        os << '\n';
    }
}

void write_density_csv(std::ostream& os, const std::vector<DensityReport>& reports) {
    os << "q,x_max,n1,n4,n8,n16,ratio4,ratio8,ratio16,partial_sum,max_abs_partial\n";
    for (const DensityReport& r : reports) {
        os << r.q << ',' << r.x_max << ',' << r.n1 << ',' << r.n4 << ',' << r.n8 << ','
           << r.n16 << ',' << format_ratio(r.n4, r.n1) << ',' << format_ratio(r.n8, r.n1)
           << ',' << format_ratio(r.n16, r.n1) << ',' << r.partial_sum << ','
           << r.max_abs_partial << '\n';
    }
}

void write_density_json(std::ostream& os, const std::vector<DensityReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DensityReport& r : reports) {
        nlohmann::json j;
        j["q"] = r.q;
        j["x_max"] = r.x_max;
        j["n1"] = r.n1;
        j["n4"] = r.n4;
        j["n8"] = r.n8;
        j["n16"] = r.n16;
        j["ratio4"] = format_ratio(r.n4, r.n1);
        j["ratio8"] = format_ratio(r.n8, r.n1);
        j["ratio16"] = format_ratio(r.n16, r.n1);
        j["partial_sum"] = r.partial_sum;
        j["max_abs_partial"] = r.max_abs_partial;
        nlohmann::json cps = nlohmann::json::array();
        for (const auto& [n, s] : r.checkpoints) cps.push_back({n, s});
        j["checkpoints"] = cps;
        arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
}

}  // namespace sedecim
