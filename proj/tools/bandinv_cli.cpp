// Command-line surface for the banded-inverse library: certified approximate
// inverses, Wiener/Sobolev symbol reports, covariance mixing diagnostics, and
// the banded precision estimator. Exit codes: 0 success, 1 input error
// (bad files/flags), 2 mathematical refusal (theorem preconditions unmet).

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Core>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <bandinv/bandinv.hpp>

using namespace bandinv;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- helpers --

SymbolSeries::Offset parse_offset(const std::string& s) {
    if (s.empty()) throw InputError("empty offset literal");
    std::size_t t = 0;
    const bool neg = s[0] == '-';
    if (neg || s[0] == '+') t = 1;
    if (t == s.size()) throw InputError("bad offset literal '" + s + "'");
    SymbolSeries::Offset v = 0;
    const SymbolSeries::Offset cap = (static_cast<SymbolSeries::Offset>(1) << 120);
    for (; t < s.size(); ++t) {
        if (s[t] < '0' || s[t] > '9') throw InputError("bad offset literal '" + s + "'");
        v = v * 10 + (s[t] - '0');
        if (v > cap) throw InputError("offset literal '" + s + "' out of range");
    }
    return neg ? -v : v;
}

// Minimal half-bandwidth that holds every nonzero of a square dense matrix.
int measured_bandwidth(const DenseMatrix& a) {
    const long n = static_cast<long>(a.rows());
    long k = 0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0.0)
                k = std::max(k, std::labs(i - j));
    return static_cast<int>(k);
}

BandedMatrix as_banded(const MatrixFile& mf, std::optional<int> k_flag) {
    if (mf.banded.has_value() && !k_flag.has_value()) return *mf.banded;
    const int k = k_flag.value_or(measured_bandwidth(mf.dense));
    // Strict: a width flag narrower than the data is an error, not a silent cut.
    return BandedMatrix::from_dense(mf.dense, std::min<int>(k, static_cast<int>(mf.dense.rows()) - 1));
}

ordered_json bounds_json(const SpectralBounds& b) {
    return ordered_json{{"m_lo", b.m_lo},
                        {"M_hi", b.M_hi},
                        {"kappa", b.kappa},
                        {"source", b.user_supplied ? "user" : "measured"},
                        {"rigor", b.rigor()}};
}

ordered_json certificate_json(const InverseCertificate& c) {
    ordered_json j{{"construction", c.construction},
                   {"terms", c.terms},
                   {"band_width", c.band_width},
                   {"gamma", c.gamma},
                   {"error_bound", c.error_bound},
                   {"rigor", c.rigor},
                   {"bounds", bounds_json(c.bounds_used)}};
    if (c.bdo.has_value()) {
        j["bdo"] = ordered_json{{"k", c.bdo->k},
                                {"epsilon_k", c.bdo->epsilon_k},
                                {"alpha_k", c.bdo->alpha_k},
                                {"kappa_plus", c.bdo->kappa_plus},
                                {"kappa_minus", c.bdo->kappa_minus}};
    }
    return j;
}

void write_report(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open report file for writing");
    out << j.dump(2) << "\n";
}

void print_bounds_text(const SpectralBounds& b) {
    std::cout << "  m      = " << format_double(b.m_lo) << "  (lower bound, " << b.rigor() << ")\n"
              << "  M      = " << format_double(b.M_hi) << "  (upper bound)\n"
              << "  kappa  = " << format_double(b.kappa) << "\n";
}

// --------------------------------------------------------------- commands --

struct ApproxArgs {
    std::string matrix_path, construction = "spd", out_path, report_path;
    std::optional<int> k;
    std::optional<int> terms;
    std::optional<double> tol;
    bool oracle = false;
};

int cmd_approx_inverse(const ApproxArgs& a) {
    const MatrixFile mf = read_matrix(a.matrix_path);

    const InverseCertificate cert = [&] {
        if (a.construction == "bdo") {
            if (!a.k.has_value())
                throw InputError("approx-inverse: --construction bdo requires --k");
            int terms = a.terms.value_or(-1);
            if (a.tol.has_value()) {
                // Plan the series length from the truncation's own bracket.
                const BandedMatrix trunc = band_truncate(mf.dense, *a.k);
                terms = terms_for_tolerance(singular_bounds(trunc), SeriesKind::general, *a.tol);
            }
            return bdo_inverse(mf.dense, *a.k, terms < 0 ? 10 : terms);
        }
        const BandedMatrix banded = as_banded(mf, a.k);
        const bool spd = a.construction == "spd";
        if (!spd && a.construction != "general")
            throw InputError("approx-inverse: unknown construction '" + a.construction + "'");
        const SpectralBounds b = spd ? spd_bounds(banded) : singular_bounds(banded);
        int terms = a.terms.value_or(-1);
        if (a.tol.has_value())
            terms = terms_for_tolerance(b, spd ? SeriesKind::spd : SeriesKind::general, *a.tol);
        if (terms < 0) terms = 10;
        return spd ? neumann_spd(banded, terms, b) : neumann_general(banded, terms, b);
    }();

    std::cout << "construction = " << cert.construction << "\n";
    print_bounds_text(cert.bounds_used);
    std::cout << "  gamma  = " << format_double(cert.gamma) << "\n"
              << "  terms  = " << cert.terms << "\n"
              << "  band_width  = " << cert.band_width << "\n"
              << "  error_bound = " << format_double(cert.error_bound) << "\n";
    if (cert.bdo.has_value())
        std::cout << "  delta_k (measured ||A - B_k(A)||) = " << format_double(cert.bdo->epsilon_k)
                  << "  alpha = " << format_double(cert.bdo->alpha_k) << "\n";

    ordered_json report = certificate_json(cert);
    if (a.oracle) {
        const DenseMatrix inv = from_eigen(to_eigen(mf.dense).inverse());
        const double achieved = op_norm(inv - cert.approx.to_dense());
        report["oracle"] = ordered_json{{"achieved_error", achieved},
                                        {"within_bound", achieved <= cert.error_bound * (1 + 1e-9)}};
        std::cout << "  achieved (dense-inverse oracle) = " << format_double(achieved) << "\n";
    }
    if (!a.out_path.empty()) write_matrix_banded(a.out_path, cert.approx);
    if (!a.report_path.empty()) write_report(a.report_path, report);
    return 0;
}

struct WienerArgs {
    std::string matrix_path, symbol, metric_points, report_path, cutoff;
    long long mmax = 0;
    double shift = 4.0;
};

SymbolSeries load_symbol(const std::string& name, long long mmax, double shift) {
    if (name == "example53") {
        if (mmax <= 0) throw InputError("symbol 'example53' requires --mmax > 0");
        return example53_symbol(mmax, shift);
    }
    return read_symbol(name);
}

int cmd_wiener_norm(const WienerArgs& a) {
    ordered_json report;
    if (!a.matrix_path.empty()) {
        const MatrixFile mf = read_matrix(a.matrix_path);
        const double wn = wiener_norm(mf.dense);
        report["wiener_norm"] = wn;
        std::cout << "wiener_norm = " << format_double(wn) << "\n";
        if (!a.metric_points.empty()) {
            const IndexMetric rho = read_points(a.metric_points);
            const double gwn = generalized_wiener_norm(mf.dense, rho);
            report["generalized_wiener_norm"] = gwn;
            std::cout << "generalized_wiener_norm = " << format_double(gwn) << "\n";
        }
        const double on = op_norm(mf.dense);
        report["op_norm"] = on;
        std::cout << "op_norm = " << format_double(on) << "  (op_norm <= wiener_norm)\n";
    } else if (!a.symbol.empty()) {
        const SymbolSeries f = load_symbol(a.symbol, a.mmax, a.shift);
        const double wn = symbol_wiener_norm(f);
        SymbolSeries::Offset cutoff = 0;
        for (const auto& [k, v] : f.terms()) cutoff = std::max(cutoff, k < 0 ? -k : k);
        if (!a.cutoff.empty()) cutoff = parse_offset(a.cutoff);
        const double sob = sobolev_half_partial(f, cutoff);
        report["wiener_norm"] = wn;
        report["sobolev_half_partial"] = sob;
        report["sobolev_cutoff"] = offset_to_string(cutoff);
        std::cout << "wiener_norm = " << format_double(wn) << "\n"
                  << "sobolev_half_partial = " << format_double(sob) << "  (cutoff "
                  << offset_to_string(cutoff) << ")\n";
    } else {
        throw InputError("wiener-norm: need --matrix or --symbol");
    }
    if (!a.report_path.empty()) write_report(a.report_path, report);
    return 0;
}

struct SymbolArgs {
    std::string symbol, report_path, cutoff;
    long long mmax = 0;
    double shift = 4.0;
};

int cmd_symbol_report(const SymbolArgs& a) {
    const SymbolSeries f = load_symbol(a.symbol, a.mmax, a.shift);
    const double wn = symbol_wiener_norm(f);
    const double f0 = f.coefficient(0);
    const double offband = wn - std::abs(f0);
    SymbolSeries::Offset maxoff = 0;
    for (const auto& [k, v] : f.terms()) maxoff = std::max(maxoff, k < 0 ? -k : k);
    const SymbolSeries::Offset cutoff = a.cutoff.empty() ? maxoff : parse_offset(a.cutoff);
    const double sob = sobolev_half_partial(f, cutoff);

    std::cout << "support_size = " << f.support_size() << "\n"
              << "max_offset = " << offset_to_string(maxoff) << "\n"
              << "f_0 = " << format_double(f0) << "\n"
              << "wiener_norm = " << format_double(wn) << "\n"
              << "off_diagonal_sum = " << format_double(offband) << "\n"
              << "symbol_range = [" << format_double(f0 - offband) << ", "
              << format_double(f0 + offband) << "]"
              << (f0 - offband > 0 ? "  (positive: sections are positive definite)" : "") << "\n"
              << "sobolev_half_partial = " << format_double(sob) << "  (cutoff "
              << offset_to_string(cutoff) << ")\n";

    if (!a.report_path.empty())
        write_report(a.report_path,
                     ordered_json{{"support_size", f.support_size()},
                                  {"max_offset", offset_to_string(maxoff)},
                                  {"f0", f0},
                                  {"wiener_norm", wn},
                                  {"off_diagonal_sum", offband},
                                  {"symbol_min", f0 - offband},
                                  {"symbol_max", f0 + offband},
                                  {"sobolev_half_partial", sob},
                                  {"sobolev_cutoff", offset_to_string(cutoff)}});
    return 0;
}

struct MixingArgs {
    std::string matrix_path, report_path, csv_path;
    int pmax = 0;
    bool gamma = false;
    bool inverse = false;
    int cone = 0;
    std::vector<std::size_t> hellinger;  // m n p k
    std::vector<std::size_t> leakage;    // m n p
};

int cmd_mixing_check(const MixingArgs& a) {
    const MatrixFile mf = read_matrix(a.matrix_path);
    const std::size_t n = mf.dense.rows();
    const int pmax = a.pmax > 0 ? a.pmax : static_cast<int>(std::min<std::size_t>(n - 1, 10));

    MixingReport rep = beta_criterion_profile(mf.dense, pmax);
    ordered_json report{{"n", n}, {"p_max", pmax}};
    ordered_json profile = ordered_json::array();
    std::cout << "criterion profile b(p):\n";
    for (const auto& [p, b] : rep.profile) {
        profile.push_back(ordered_json::array({p, b}));
        std::cout << "  b(" << p << ") = " << format_double(b) << "\n";
    }
    report["profile"] = profile;
    report["verdict"] = rep.verdict;
    std::cout << "verdict: " << rep.verdict << "\n";

    if (a.gamma) {
        ordered_json g = ordered_json::array();
        std::cout << "sufficient statistic gamma(p):\n";
        for (int p = 1; p <= pmax; ++p) {
            const double v = gamma_sufficient(mf.dense, p);
            g.push_back(ordered_json::array({p, v}));
            std::cout << "  gamma(" << p << ") = " << format_double(v) << "\n";
        }
        report["gamma_profile"] = g;
    }

    if (!a.hellinger.empty()) {
        if (a.hellinger.size() != 4)
            throw InputError("mixing-check: --hellinger takes exactly four values: m n p k");
        const std::size_t m = a.hellinger[0], nn = a.hellinger[1], p = a.hellinger[2],
                          k = a.hellinger[3];
        const CovBlocks blocks = extract_blocks(mf.dense, m, nn, p, k);
        const HellingerResult h = hellinger_affinity(blocks);
        const double t = cross_trace(whiten_blocks(blocks));
        const auto [lo, hi] = squeeze_bounds(t);
        report["hellinger"] = ordered_json{{"window_m", m},
                                           {"window_n", nn},
                                           {"gap_p", p},
                                           {"block_k", k},
                                           {"affinity", h.affinity},
                                           {"h2", h.h2},
                                           {"tv_lo", h.tv_lo},
                                           {"tv_hi", h.tv_hi},
                                           {"whitened_cross_trace", t},
                                           {"squeeze_lo", lo},
                                           {"squeeze_hi", hi},
                                           {"tv_note", h.tv_note}};
        std::cout << "hellinger window [" << m << ".." << nn << "] x gap " << p << " x " << k
                  << " coordinates:\n"
                  << "  affinity = " << format_double(h.affinity) << "\n"
                  << "  H^2 = " << format_double(h.h2) << "\n"
                  << "  TV in [" << format_double(h.tv_lo) << ", " << format_double(h.tv_hi)
                  << "]\n"
                  << "  squeeze bracket on affinity: [" << format_double(lo) << ", "
                  << format_double(hi) << "]  (whitened cross trace " << format_double(t) << ")\n";
    }

    if (!a.leakage.empty()) {
        if (a.leakage.size() != 3)
            throw InputError("mixing-check: --leakage takes exactly three values: m n p");
        const std::size_t m = a.leakage[0], nn = a.leakage[1], p = a.leakage[2];
        const double energy = prediction_leakage(mf.dense, m, nn, p);
        const double bound = prediction_leakage_bound(mf.dense, static_cast<int>(p));
        report["leakage"] = ordered_json{{"window_m", m},
                                         {"window_n", nn},
                                         {"gap_p", p},
                                         {"energy", energy},
                                         {"band_distance_bound", bound}};
        std::cout << "prediction leakage over [" << m << ".." << nn << "] at gap " << p << ": "
                  << format_double(energy) << "  (bound " << format_double(bound) << ")\n";
    }

    if (a.inverse) {
        const int cone = a.cone > 0 ? a.cone : std::max(1, pmax / 2);
        const FInversionReport w = f_inversion_witness(mf.dense, cone, pmax);
        ordered_json sp = ordered_json::array(), ip = ordered_json::array();
        for (const auto& [p, b] : w.sigma_profile) sp.push_back(ordered_json::array({p, b}));
        for (const auto& [p, b] : w.inverse_profile) ip.push_back(ordered_json::array({p, b}));
        report["inversion_witness"] = ordered_json{{"cone", cone},
                                                   {"sigma_tail", w.sigma_tail},
                                                   {"inverse_tail", w.inverse_tail},
                                                   {"sigma_profile", sp},
                                                   {"inverse_profile", ip}};
        std::cout << "inversion witness at cone " << cone << ": sigma tail "
                  << format_double(w.sigma_tail) << ", inverse tail "
                  << format_double(w.inverse_tail) << "\n";
    }

    if (!a.csv_path.empty()) {
        std::ofstream csv(a.csv_path);
        if (!csv) throw InputError(a.csv_path + ": cannot open CSV file for writing");
        csv << "p,b_p\n";
        for (const auto& [p, b] : rep.profile) csv << p << "," << format_double(b) << "\n";
    }
    if (!a.report_path.empty()) write_report(a.report_path, report);
    return 0;
}

struct EstimateArgs {
    std::string truth_path, samples_path, k_spec = "auto", out_cov, out_prec, report_path;
    long long n_samples = 0;
    std::uint64_t seed = 0;
    std::vector<int> grid{0, 1, 2, 3, 4, 5};
    int folds = 2;
    int terms = 6;
};

int cmd_estimate(const EstimateArgs& a) {
    SampleSet samples;
    std::optional<DenseMatrix> truth;
    if (!a.truth_path.empty()) {
        truth = read_matrix(a.truth_path).dense;
        if (a.n_samples < 2) throw InputError("estimate: --N must be at least 2");
        samples = sample_gaussian(*truth, static_cast<std::size_t>(a.n_samples), a.seed);
    } else if (!a.samples_path.empty()) {
        samples = read_samples(a.samples_path);
    } else {
        throw InputError("estimate: need --truth (with --N, --seed) or --samples");
    }

    const CovarianceEstimate emp = empirical_cov(samples);
    int k = 0;
    bool selected = false;
    if (a.k_spec == "auto") {
        std::vector<int> grid;
        for (int g : a.grid)
            if (static_cast<std::size_t>(g) < samples.dim) grid.push_back(g);
        if (grid.empty()) throw InputError("estimate: width grid has no entry below the dimension");
        k = select_k(samples, grid, a.folds);
        selected = true;
    } else {
        try {
            k = std::stoi(a.k_spec);
        } catch (const std::exception&) {
            throw InputError("estimate: --k must be an integer or 'auto'");
        }
    }

    const PrecisionEstimate prec = banded_precision_estimator(emp, k, a.terms);

    std::cout << "N = " << samples.n_samples << ", dim = " << samples.dim << ", seed = "
              << samples.seed << "\n"
              << "k = " << k << (selected ? "  (cross-validated)" : "") << "\n"
              << "banded covariance eigenvalue range: [" << format_double(prec.lambda_min) << ", "
              << format_double(prec.lambda_max) << "]\n"
              << "gamma_hat = " << format_double(prec.certificate.gamma) << "\n"
              << "terms = " << a.terms << ", band_width = " << prec.certificate.band_width << "\n"
              << "series error_bound (vs banded target) = "
              << format_double(prec.certificate.error_bound) << "\n";

    ordered_json report{{"N", samples.n_samples},
                        {"dim", samples.dim},
                        {"seed", samples.seed},
                        {"k", k},
                        {"k_selected_by_cv", selected},
                        {"terms", a.terms},
                        {"lambda_min", prec.lambda_min},
                        {"lambda_max", prec.lambda_max},
                        {"gamma_hat", prec.certificate.gamma},
                        {"certificate", certificate_json(prec.certificate)}};

    if (truth.has_value()) {
        const double cov_err = op_norm(prec.banded_cov.to_dense() - *truth);
        const DenseMatrix truth_inv = from_eigen(to_eigen(*truth).inverse());
        const double prec_err = op_norm(prec.certificate.approx.to_dense() - truth_inv);
        report["achieved"] = ordered_json{{"banded_cov_op_error", cov_err},
                                          {"precision_series_op_error", prec_err}};
        std::cout << "achieved vs truth: ||B_k(S_hat) - Sigma|| = " << format_double(cov_err)
                  << ", ||series - Sigma^{-1}|| = " << format_double(prec_err) << "\n";
    }

    if (!a.out_cov.empty()) write_matrix_banded(a.out_cov, prec.banded_cov);
    if (!a.out_prec.empty()) write_matrix_banded(a.out_prec, prec.certificate.approx);
    if (!a.report_path.empty()) write_report(a.report_path, report);
    return 0;
}

struct SampleArgs {
    std::string truth_path, out_path;
    long long n_samples = 0;
    std::uint64_t seed = 0;
};

int cmd_sample(const SampleArgs& a) {
    const DenseMatrix truth = read_matrix(a.truth_path).dense;
    if (a.n_samples < 1) throw InputError("sample: --N must be positive");
    const SampleSet s = sample_gaussian(truth, static_cast<std::size_t>(a.n_samples), a.seed);
    write_samples(a.out_path, s);
    std::cout << "wrote " << s.n_samples << " x " << s.dim << " samples (seed " << s.seed
              << ") to " << a.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("BANDED_INVERSE_THREADS")) {
        const int t = std::atoi(threads);
        if (t > 0) Eigen::setNbThreads(t);
    }

    CLI::App app{"Banded approximate inverses with certified error bounds"};
    app.require_subcommand(1);

    ApproxArgs approx;
    CLI::App* ap = app.add_subcommand("approx-inverse",
                                      "Banded approximant of A^{-1} with a certified bound");
    ap->add_option("--matrix", approx.matrix_path, "input matrix file")->required();
    ap->add_option("--construction", approx.construction, "spd | general | bdo (default spd)");
    ap->add_option("--k", approx.k, "half-bandwidth (bdo: truncation width)");
    ap->add_option("--terms", approx.terms, "series length n (j = 0..n)");
    ap->add_option("--tol", approx.tol, "plan the series length for this error bound");
    ap->add_flag("--oracle", approx.oracle, "also compute the dense inverse and report achieved error");
    ap->add_option("--out", approx.out_path, "write the approximant (banded format)");
    ap->add_option("--report", approx.report_path, "write a JSON certificate");

    WienerArgs wiener;
    CLI::App* wn = app.add_subcommand("wiener-norm", "Wiener norm of a matrix or symbol");
    wn->add_option("--matrix", wiener.matrix_path, "input matrix file");
    wn->add_option("--symbol", wiener.symbol, "'example53' or a symbol file");
    wn->add_option("--mmax", wiener.mmax, "support parameter for example53");
    wn->add_option("--shift", wiener.shift, "f_0 for example53 (default 4)");
    wn->add_option("--metric", wiener.metric_points, "points file: also report the metric-generalized norm");
    wn->add_option("--sobolev-cutoff", wiener.cutoff, "offset cutoff for the Sobolev partial sum");
    wn->add_option("--report", wiener.report_path, "write a JSON report");

    SymbolArgs symbol;
    CLI::App* sy = app.add_subcommand("symbol-report", "Summability and Sobolev diagnostics of a symbol");
    sy->add_option("--symbol", symbol.symbol, "'example53' or a symbol file")->required();
    sy->add_option("--mmax", symbol.mmax, "support parameter for example53");
    sy->add_option("--shift", symbol.shift, "f_0 for example53 (default 4)");
    sy->add_option("--sobolev-cutoff", symbol.cutoff, "offset cutoff for the Sobolev partial sum");
    sy->add_option("--report", symbol.report_path, "write a JSON report");

    MixingArgs mixing;
    CLI::App* mx = app.add_subcommand("mixing-check", "Covariance decay and dependence diagnostics");
    mx->add_option("--matrix", mixing.matrix_path, "covariance section file")->required();
    mx->add_option("--pmax", mixing.pmax, "largest gap in the profile (default min(n-1, 10))");
    mx->add_flag("--gamma", mixing.gamma, "include the gamma sufficient statistic");
    mx->add_option("--hellinger", mixing.hellinger, "window: m n p k")->expected(4);
    mx->add_option("--leakage", mixing.leakage, "prediction window: m n p")->expected(3);
    mx->add_flag("--inverse", mixing.inverse, "include the inversion decay witness");
    mx->add_option("--cone", mixing.cone, "cone index for the witness (default pmax/2)");
    mx->add_option("--csv", mixing.csv_path, "write the profile as CSV");
    mx->add_option("--report", mixing.report_path, "write a JSON report");

    EstimateArgs est;
    CLI::App* es = app.add_subcommand("estimate", "Banded covariance and precision-series estimator");
    es->add_option("--truth", est.truth_path, "true covariance file (sample internally)");
    es->add_option("--N", est.n_samples, "sample count (with --truth)");
    es->add_option("--seed", est.seed, "sampler seed (with --truth)");
    es->add_option("--samples", est.samples_path, "read samples from a file instead");
    es->add_option("--k", est.k_spec, "banding width, or 'auto' for cross-validation (default)");
    es->add_option("--grid", est.grid, "candidate widths for 'auto' (default 0..5)");
    es->add_option("--folds", est.folds, "cross-validation folds (default 2)");
    es->add_option("--terms", est.terms, "series length for the precision estimator (default 6)");
    es->add_option("--out-cov", est.out_cov, "write the banded covariance estimate");
    es->add_option("--out-prec", est.out_prec, "write the precision-series approximant");
    es->add_option("--report", est.report_path, "write a JSON report");

    SampleArgs smp;
    CLI::App* sm = app.add_subcommand("sample", "Draw Gaussian samples from a covariance file");
    sm->add_option("--truth", smp.truth_path, "covariance file")->required();
    sm->add_option("--N", smp.n_samples, "sample count")->required();
    sm->add_option("--seed", smp.seed, "sampler seed");
    sm->add_option("--out", smp.out_path, "output samples file")->required();

    try {
        app.parse(argc, argv);
        if (ap->parsed()) return cmd_approx_inverse(approx);
        if (wn->parsed()) return cmd_wiener_norm(wiener);
        if (sy->parsed()) return cmd_symbol_report(symbol);
        if (mx->parsed()) return cmd_mixing_check(mixing);
        if (es->parsed()) return cmd_estimate(est);
        if (sm->parsed()) return cmd_sample(smp);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
