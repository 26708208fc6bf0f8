#include "lame/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "lame/elliptic.hpp"
#include "lame/errors.hpp"

namespace lame {

std::string format_sig15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

SweepRow compute_row(double h, double nu, double tau, const IntegrationConfig& cfg) {
    const Modulus m = Modulus::from_tau(tau);
    SweepRow row;
    row.tau = tau;
    row.k = m.k();
    row.kprime = m.kprime();
    row.K = ellip_K(m);
    row.E = ellip_E(m);

    const LameParams p(h, nu, m);
    const bool theorem_applies = h > 0.0 && h > p.nu() * (p.nu() + 1.0);
    if (theorem_applies) {
        const AsymptoticConstants ac = asymptotic_constants(h, p.nu());
        row.omega = ac.omega;
        row.approx = approx_discriminant(p);
        row.bound = error_bound(p);
    }

    try {
        const DiscriminantReport rep = classify(p, cfg);
        row.D = rep.D;
        row.verdict = rep.verdict;
    } catch (const Error&) {
        // integration failure: leave D empty, verdict Undetermined
        row.D = std::nullopt;
        row.verdict = Verdict::Undetermined;
    }
    return row;
}

std::vector<SweepRow> run_sweep(double h, double nu, double tau_min,
                                double tau_max, int steps,
                                const IntegrationConfig& cfg, unsigned threads) {
    if (!(tau_min < tau_max) || steps < 2)
        throw PreconditionViolated("run_sweep: requires tau_min < tau_max and steps >= 2");
    if (!(tau_min > 0.0))
        throw PreconditionViolated("run_sweep: requires tau_min > 0");

    std::vector<double> taus(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        taus[i] = tau_min + (tau_max - tau_min) * i / (steps - 1);
    taus.back() = tau_max;

    std::vector<SweepRow> rows(taus.size());
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(taus.size()));

    // rows are independent; output order is fixed by index regardless of
    // which worker finishes first
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < taus.size(); i = next.fetch_add(1))
            rows[i] = compute_row(h, nu, taus[i], cfg);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

void put_cell(std::ostream& os, const std::optional<double>& v) {
    if (v) os << format_sig15(*v);
}

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    return std::stod(cell);
}

} // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "tau,k,kprime,K,E,omega,D,approx,bound,verdict\n";
    for (const SweepRow& r : rows) {
        os << format_sig15(r.tau) << ',' << format_sig15(r.k) << ','
           << format_sig15(r.kprime) << ',' << format_sig15(r.K) << ','
           << format_sig15(r.E) << ',';
        put_cell(os, r.omega);
        os << ',';
        put_cell(os, r.D);
        os << ',';
        put_cell(os, r.approx);
        os << ',';
        put_cell(os, r.bound);
        os << ',' << to_string(r.verdict) << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
    std::vector<SweepRow> rows;
    std::string line;
    if (!std::getline(is, line))
        throw Error("read_sweep_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "tau,k,kprime,K,E,omega,D,approx,bound,verdict")
        throw Error("read_sweep_csv: unexpected header: " + line);

    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        if (cells.size() != 10)
            throw Error("read_sweep_csv: expected 10 cells, got line: " + line);

        SweepRow r;
        r.tau = std::stod(cells[0]);
        r.k = std::stod(cells[1]);
        r.kprime = std::stod(cells[2]);
        r.K = std::stod(cells[3]);
        r.E = std::stod(cells[4]);
        r.omega = parse_cell(cells[5]);
        r.D = parse_cell(cells[6]);
        r.approx = parse_cell(cells[7]);
        r.bound = parse_cell(cells[8]);
        const auto v = verdict_from_string(cells[9]);
        if (!v) throw Error("read_sweep_csv: unknown verdict: " + cells[9]);
        r.verdict = *v;
        rows.push_back(r);
    }
    return rows;
}

} // namespace lame
