#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lame/discriminant.hpp"

namespace lame {

/// One record of a tau-parametrized sweep at fixed (h, nu).
/// omega/approx/bound are absent when h <= nu(nu+1); D is absent when the
/// integration failed (the row then carries verdict Undetermined).
struct SweepRow {
    double tau;
    double k;
    double kprime;
    double K;
    double E;
    std::optional<double> omega;
    std::optional<double> D;
    std::optional<double> approx;
    std::optional<double> bound;
    Verdict verdict = Verdict::Undetermined;
};

/// Computes the full record for one (h, nu, tau) point. Shared by the
/// `point` and `sweep` commands so a sweep row and the point report at the
/// same tau are identical.
SweepRow compute_row(double h, double nu, double tau,
                     const IntegrationConfig& cfg = {});

/// Uniform tau grid of `steps` points over [tau_min, tau_max], rows emitted
/// in tau order. Rows are computed concurrently (threads = 0 picks the
/// hardware count).
std::vector<SweepRow> run_sweep(double h, double nu, double tau_min,
                                double tau_max, int steps,
                                const IntegrationConfig& cfg = {},
                                unsigned threads = 0);

/// 15-significant-digit formatting ("%.15g", C locale) used for every
/// number the CLI emits.
std::string format_sig15(double v);

/// CSV with header tau,k,kprime,K,E,omega,D,approx,bound,verdict; UTF-8,
/// LF line endings, empty cells for absent values.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& is);

} // namespace lame
