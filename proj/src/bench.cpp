#include "socrep/bench.hpp"

#include "socrep/errors.hpp"
#include "socrep/verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

namespace socrep {

void for_each_partition(long long s_hat, int m, const std::function<void(const WeightTuple&)>& visit) {
    if (m < 1 || s_hat < m) throw InvalidInput("partitions need s_hat >= m >= 1");
    std::vector<long long> parts;
    // rem: what is left to place, k: slots left, cap: largest allowed part
    std::function<void(long long, int, long long, long long)> rec = [&](long long rem, int k, long long cap, long long g) {
        if (k == 0) {
            if (rem == 0 && g == 1) {
                std::vector<Integer> s(parts.begin(), parts.end());
                visit(WeightTuple(std::move(s)));
            }
            return;
        }
        for (long long v = std::min(cap, rem - (k - 1)); v >= 1; --v) {
            if (v * k < rem) break;
            parts.push_back(v);
            rec(rem - v, k - 1, v, std::gcd(g, v));
            parts.pop_back();
        }
    };
    rec(s_hat, m, s_hat, 0);
}

std::vector<WeightTuple> partitions(long long s_hat, int m) {
    std::vector<WeightTuple> out;
    for_each_partition(s_hat, m, [&](const WeightTuple& w) { out.push_back(w); });
    return out;
}

namespace {

struct Cell {
    int size = 0;
    double micros = 0;
    bool exhaustive = true;
};

Cell run_one(const WeightTuple& w, Strategy st, const BenchOptions& opt) {
    Cell c;
    Configuration cfg;
    const int reps = std::max(1, opt.repeat);
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
        if (st.is_traversal()) {
            try {
                auto res = traversal(w, st, opt.budget);
                cfg = std::move(res.config);
                c.exhaustive = res.exhaustive;
            } catch (const TraversalExhausted& e) {
                cfg = e.fallback();
                c.exhaustive = false;
            }
        } else {
            cfg = heuristic(w, st);
        }
    }
    c.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count() / reps;
    c.size = cfg.size();
    auto rec = reconstruct(cfg, w);
    if (!rec.valid()) {
        throw InternalConsistency(st.name() + " produced an invalid representation of " + w.str() + ": " + rec.reason);
    }
    if (c.size < lower_bound(w)) {
        throw InternalConsistency(st.name() + " produced a size below the lower bound for " + w.str());
    }
    return c;
}

}  // namespace

BenchReport bench_run(long long s_hat, int m, const std::vector<Strategy>& algorithms, const BenchOptions& options) {
    if (algorithms.empty()) throw InvalidInput("no algorithms selected");
    if (m < 2) throw InvalidInput("bench needs m >= 2");
    BenchReport report;
    report.s_hat = s_hat;
    report.m = m;
    const auto parts = partitions(s_hat, m);
    report.partition_count = static_cast<long long>(parts.size());
    const std::size_t na = algorithms.size();
    std::vector<Cell> cells(parts.size() * na);

    unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs) : std::thread::hardware_concurrency();
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t k = next++; k < cells.size(); k = next++) {
            try {
                cells[k] = run_one(parts[k / na], algorithms[k % na], options);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = std::current_exception();
                next = cells.size();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    for (const auto& a : algorithms) report.totals.push_back({a.name(), 0, 0, 0});
    for (std::size_t k = 0; k < cells.size(); ++k) {
        auto& t = report.totals[k % na];
        t.total_size += cells[k].size;
        t.seconds += cells[k].micros * 1e-6;
        if (!cells[k].exhaustive) ++t.budget_hits;
        if (options.keep_rows) {
            report.rows.push_back({parts[k / na], algorithms[k % na].name(), cells[k].size, cells[k].micros, cells[k].exhaustive});
        }
    }
    return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
    out << "tuple,algorithm,size,micros\n";
    for (const auto& r : report.rows) {
        std::string t;
        for (std::size_t i = 0; i < r.tuple.m(); ++i) t += (i ? " " : "") + to_string(r.tuple[i]);
        out << '"' << t << "\"," << r.algorithm << ',' << r.size << ',' << r.micros << '\n';
    }
}

}  // namespace socrep
