#include "moran/cli.hpp"

#include "moran/asymptotics.hpp"
#include "moran/errors.hpp"
#include "moran/height_stats.hpp"
#include "moran/oracle.hpp"
#include "moran/output.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moran {

namespace {

// Invalid command-line input; the message starts with the offending flag.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

// Floating-point means are O(n^2); beyond this they are left empty.
constexpr std::size_t kFloatMeanLimit = 16384;

// Below this Mellin N the main term is not yet a usable approximation.
constexpr double kMellinRegimeN = 10.0;

struct Options {
    std::string p = "";
    std::string n = "";
    std::string format = "csv";
    std::string mode = "auto";
    std::string variant = "paper";
    std::string model = "restricted";
    std::string sampler = "conditioned";
    std::string precision = "high";
    std::string u = "";
    std::string H = "";
    std::string H_range = "5..40";
    std::uint64_t seed = 1;
    std::size_t trials = 100000;
    std::size_t chunk_size = SimulationOptions{}.chunk_size;
    std::size_t dp_exact_limit = kDpExactLimit;
    std::uint64_t max_rejections = SimulationOptions{}.max_rejections;
};

ModelParams parse_p(const std::string& text) {
    Rational p;
    try {
        p = parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--p", "expected a fraction or decimal, got '" + text + "'");
    }
    if (!(p > 0 && p < 1)) throw UsageError("--p", "p must lie strictly between 0 and 1, got " + to_string(p));
    return ModelParams(p);
}

std::size_t parse_count(const std::string& flag, const std::string& text) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (text.empty() || text.front() == '-' || text.front() == '+') throw std::invalid_argument(text);
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw UsageError(flag, "expected a non-negative integer, got '" + text + "'");
    }
    if (pos != text.size()) throw UsageError(flag, "expected a non-negative integer, got '" + text + "'");
    return static_cast<std::size_t>(v);
}

// "12", "8,16,32"
std::vector<std::size_t> parse_list(const std::string& flag, const std::string& text, std::size_t minimum) {
    std::vector<std::size_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t v = parse_count(flag, item);
        if (v < minimum) throw UsageError(flag, "values must be at least " + std::to_string(minimum) + ", got " + item);
        values.push_back(v);
    }
    if (values.empty() || text.back() == ',') throw UsageError(flag, "expected a value or comma list, got '" + text + "'");
    return values;
}

std::size_t parse_single(const std::string& flag, const std::string& text, std::size_t minimum) {
    auto values = parse_list(flag, text, minimum);
    if (values.size() != 1) throw UsageError(flag, "this command takes a single value, got '" + text + "'");
    return values.front();
}

// comma list whose items are heights or ranges a..b
std::vector<std::size_t> parse_range(const std::string& flag, const std::string& text) {
    std::vector<std::size_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            values.push_back(parse_count(flag, item));
            continue;
        }
        const std::size_t lo = parse_count(flag, item.substr(0, dots));
        const std::size_t hi = parse_count(flag, item.substr(dots + 2));
        if (lo > hi) throw UsageError(flag, "empty range '" + item + "'");
        for (std::size_t h = lo; h <= hi; ++h) values.push_back(h);
    }
    if (values.empty() || text.back() == ',') throw UsageError(flag, "expected heights or ranges, got '" + text + "'");
    return values;
}

EvalMode resolve_mode(const std::string& mode, std::size_t n) {
    if (mode == "exact") return EvalMode::Exact;
    if (mode == "float") return EvalMode::Float;
    return default_mode(n);
}

const char* mode_name(EvalMode m) { return m == EvalMode::Exact ? "exact" : "float"; }

WalkModel parse_model(const std::string& s) { return s == "standard" ? WalkModel::Standard : WalkModel::Restricted; }

TailVariant parse_variant(const std::string& s) {
    return s == "corrected" ? TailVariant::CorrectedConstants : TailVariant::PaperConstants;
}

SimulationOptions simulation_options(const Options& o) {
    SimulationOptions s;
    s.sampler = o.sampler == "rejection" ? RestrictedSampler::Rejection : RestrictedSampler::Conditioned;
    s.chunk_size = o.chunk_size;
    s.max_rejections = o.max_rejections;
    return s;
}

Cell as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Cell float_or_empty(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

OutputRecord start(const std::string& command, const Options& o, const ModelParams& params) {
    OutputRecord r;
    r.command = command;
    r.add_parameter("p", to_string(params.p()));
    r.add_parameter("format", o.format);
    return r;
}

double stderr_of(const SimulationResult& s) {
    return std::sqrt(s.variance / static_cast<double>(s.trials));
}

// (estimate - exact)/stderr, empty when undefined
Cell z_score(double estimate, const std::optional<double>& exact, double se) {
    if (!exact || se == 0.0) return std::monostate{};
    return (estimate - *exact) / se;
}

std::optional<double> restricted_mean(const ModelParams& params, std::size_t n, EvalMode mode) {
    if (mode == EvalMode::Exact) return to_double(height_mean(params, n));
    if (n <= kFloatMeanLimit) return height_mean_float(params, n);
    return std::nullopt;
}

// ---- commands ----

OutputRecord cmd_dist(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const std::size_t n = parse_single("--n", o.n, 1);
    const EvalMode mode = resolve_mode(o.mode, n);
    OutputRecord r = start("dist", o, params);
    r.add_parameter("n", std::to_string(n));
    r.add_parameter("mode", o.mode);
    r.add_parameter("eval", mode_name(mode));

    if (mode == EvalMode::Exact) {
        const HeightDistribution d = height_pmf(params, n);
        const auto cdf = d.cdf();
        r.add_summary("mean", ColumnType::Rational, d.mean());
        r.add_summary("variance", ColumnType::Rational, d.variance());
        r.add_column("h", ColumnType::Int);
        r.add_column("pmf", ColumnType::Rational);
        r.add_column("cdf", ColumnType::Rational);
        for (std::size_t h = 0; h <= n; ++h) r.rows.push_back({as_int(h), d.pmf[h], cdf[h]});
    } else {
        const HeightDistributionFloat d = height_pmf_float(params, n);
        r.add_summary("mean", ColumnType::Float, d.mean());
        r.add_summary("variance", ColumnType::Float, d.variance());
        r.add_column("h", ColumnType::Int);
        r.add_column("pmf", ColumnType::Float);
        r.add_column("cdf", ColumnType::Float);
        for (std::size_t h = 0; h <= n; ++h) r.rows.push_back({as_int(h), d.pmf[h], d.cdf[h]});
    }
    return r;
}

OutputRecord cmd_moments(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const auto ns = parse_list("--n", o.n, 1);
    OutputRecord r = start("moments", o, params);
    r.add_parameter("n", o.n);
    r.add_parameter("mode", o.mode);
    r.add_column("n", ColumnType::Int);
    r.add_column("eval", ColumnType::Text);
    r.add_column("mean_exact", ColumnType::Rational);
    r.add_column("mean", ColumnType::Float);
    r.add_column("variance_exact", ColumnType::Rational);
    r.add_column("variance", ColumnType::Float);
    for (std::size_t n : ns) {
        const EvalMode mode = resolve_mode(o.mode, n);
        if (mode == EvalMode::Exact) {
            const HeightDistribution d = height_pmf(params, n);
            const Rational m = d.mean();
            const Rational v = d.variance();
            r.rows.push_back({as_int(n), std::string(mode_name(mode)), m, to_double(m), v, to_double(v)});
        } else {
            const HeightDistributionFloat d = height_pmf_float(params, n);
            r.rows.push_back(
                {as_int(n), std::string(mode_name(mode)), std::monostate{}, d.mean(), std::monostate{}, d.variance()});
        }
    }
    return r;
}

OutputRecord cmd_pgf(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const auto ns = parse_list("--n", o.n, 1);
    Rational u;
    try {
        u = parse_rational(o.u);
    } catch (const std::invalid_argument&) {
        throw UsageError("--u", "expected a fraction or decimal, got '" + o.u + "'");
    }
    OutputRecord r = start("pgf", o, params);
    r.add_parameter("n", o.n);
    r.add_parameter("u", to_string(u));
    r.add_parameter("mode", o.mode);
    r.add_column("n", ColumnType::Int);
    r.add_column("eval", ColumnType::Text);
    r.add_column("pgf_exact", ColumnType::Rational);
    r.add_column("pgf", ColumnType::Float);
    for (std::size_t n : ns) {
        const EvalMode mode = resolve_mode(o.mode, n);
        if (mode == EvalMode::Exact) {
            const Rational g = height_pgf(params, n, u);
            r.rows.push_back({as_int(n), std::string(mode_name(mode)), g, to_double(g)});
        } else {
            const double g = height_pgf(height_pmf_float(params, n), to_double(u));
            r.rows.push_back({as_int(n), std::string(mode_name(mode)), std::monostate{}, g});
        }
    }
    return r;
}

OutputRecord cmd_coeff(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const std::size_t N = parse_single("--n", o.n, 0);
    const std::optional<std::size_t> H =
        o.H.empty() ? std::nullopt : std::optional<std::size_t>(parse_single("--H", o.H, 0));
    const std::size_t bound = H.value_or(0);
    const EvalMode mode = resolve_mode(o.mode, N);
    OutputRecord r = start("coeff", o, params);
    r.add_parameter("n", std::to_string(N));
    r.add_parameter("H", H ? std::to_string(bound) : "none");
    r.add_parameter("mode", o.mode);
    r.add_parameter("eval", mode_name(mode));
    const bool exact = mode == EvalMode::Exact;

    r.add_column("k", ColumnType::Int);
    r.add_column("coeff_exact", ColumnType::Rational);
    r.add_column("coeff", ColumnType::Float);
    r.add_column("binet", ColumnType::Float);
    r.add_column("asymptotic", ColumnType::Float);
    if (H) {
        r.add_column("bounded_exact", ColumnType::Rational);
        r.add_column("bounded", ColumnType::Float);
        r.add_column("bounded_asymptotic", ColumnType::Float);
    }

    std::vector<Rational> unbounded_exact, bounded_exact;
    std::vector<double> unbounded_float, bounded_float;
    if (exact) {
        unbounded_exact = gf_coeffs_upto(unbounded_gf(params), N);
        if (H) bounded_exact = gf_coeffs_upto(bounded_gf(params, bound), N);
    } else {
        unbounded_float = gf_coeffs_upto_float(unbounded_gf(params), N);
        if (H) bounded_float = gf_coeffs_upto_float(bounded_gf(params, bound), N);
    }
    for (std::size_t k = 0; k <= N; ++k) {
        std::vector<Cell> row{as_int(k)};
        if (exact) {
            row.push_back(unbounded_exact[k]);
            row.push_back(to_double(unbounded_exact[k]));
        } else {
            row.push_back(std::monostate{});
            row.push_back(unbounded_float[k]);
        }
        row.push_back(binet_coeff(params, k));
        row.push_back(coeff_asymptotic_unbounded(params, k));
        if (H) {
            if (exact) {
                row.push_back(bounded_exact[k]);
                row.push_back(to_double(bounded_exact[k]));
            } else {
                row.push_back(std::monostate{});
                row.push_back(bounded_float[k]);
            }
            row.push_back(coeff_asymptotic_bounded(params, k, bound));
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

template <typename Real>
void root_rows(OutputRecord& r, const ModelParams& params, const std::vector<std::size_t>& Hs) {
    using std::abs;
    for (std::size_t H : Hs) {
        const BootstrapEstimate<Real> e = bootstrap_estimate<Real>(params, H);
        const Real err_first = abs(Real(e.epsilon_first - e.numeric_root));
        const Real err_refined = abs(Real(e.epsilon_refined - e.numeric_root));
        r.rows.push_back({as_int(H), static_cast<double>(e.epsilon_first), static_cast<double>(e.epsilon_refined),
                          static_cast<double>(e.numeric_root), static_cast<double>(e.residual),
                          static_cast<double>(err_first), static_cast<double>(err_refined),
                          std::int64_t{err_refined < err_first ? 1 : 0}});
    }
}

OutputRecord cmd_roots(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const auto Hs = parse_range("--H", o.H_range);
    OutputRecord r = start("roots", o, params);
    r.add_parameter("H", o.H_range);
    r.add_parameter("precision", o.precision);
    r.add_column("H", ColumnType::Int);
    r.add_column("epsilon_first", ColumnType::Float);
    r.add_column("epsilon_refined", ColumnType::Float);
    r.add_column("numeric_root", ColumnType::Float);
    r.add_column("residual", ColumnType::Float);
    r.add_column("error_first", ColumnType::Float);
    r.add_column("error_refined", ColumnType::Float);
    r.add_column("refined_closer", ColumnType::Int);
    if (o.precision == "high") {
        root_rows<HighPrecision>(r, params, Hs);
    } else {
        root_rows<double>(r, params, Hs);
    }
    return r;
}

OutputRecord cmd_asymp(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const auto ns = parse_list("--n", o.n, 2);
    const TailVariant variant = parse_variant(o.variant);
    OutputRecord r = start("asymp", o, params);
    r.add_parameter("n", o.n);
    r.add_parameter("variant", o.variant);
    r.add_parameter("mode", o.mode);
    r.add_parameter("float_mean_limit", std::to_string(kFloatMeanLimit));
    r.add_parameter("regime_min_N", format_double(kMellinRegimeN));
    r.add_column("n", ColumnType::Int);
    r.add_column("eval", ColumnType::Text);
    r.add_column("mean", ColumnType::Float);
    r.add_column("sum_approx", ColumnType::Float);
    r.add_column("N", ColumnType::Float);
    r.add_column("omega", ColumnType::Float);
    r.add_column("main_term", ColumnType::Float);
    r.add_column("direct_sum", ColumnType::Float);
    r.add_column("direct_minus_main", ColumnType::Float);
    r.add_column("mean_minus_main", ColumnType::Float);
    r.add_column("regime", ColumnType::Text);
    for (std::size_t n : ns) {
        const EvalMode mode = resolve_mode(o.mode, n);
        const std::optional<double> mean = restricted_mean(params, n, mode);
        const MellinParams mp = mellin_params(params, n, variant);
        const double main = mellin_main_term(mp);
        const double direct = mellin_direct_sum(mp);
        r.rows.push_back({as_int(n), std::string(mean ? mode_name(mode) : "none"), float_or_empty(mean),
                          mean_height_sum(params, n, variant), mp.N, mp.omega, main, direct, direct - main,
                          mean ? Cell(*mean - main) : Cell(std::monostate{}),
                          std::string(mp.N >= kMellinRegimeN ? "ok" : "out-of-regime")});
    }
    return r;
}

OutputRecord cmd_simulate(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const std::size_t n = parse_single("--n", o.n, 1);
    const WalkModel model = parse_model(o.model);
    const SimulationOptions sim_opts = simulation_options(o);
    OutputRecord r = start("simulate", o, params);
    r.add_parameter("n", std::to_string(n));
    r.add_parameter("model", o.model);
    r.add_parameter("sampler", o.sampler);
    r.add_parameter("trials", std::to_string(o.trials));
    r.add_parameter("seed", std::to_string(o.seed));
    r.add_parameter("chunk_size", std::to_string(o.chunk_size));
    r.add_parameter("max_rejections", std::to_string(o.max_rejections));
    r.add_parameter("dp_exact_limit", std::to_string(o.dp_exact_limit));

    const SimulationResult s = simulate(params, n, o.trials, o.seed, model, sim_opts);
    const auto table = dp_cdf_table(params, n, model, o.dp_exact_limit);
    const bool exact = table.front().exact.has_value();
    double mean = 0.0;
    for (std::size_t H = 0; H < n; ++H) mean += 1.0 - table[H].value;

    const double T = static_cast<double>(o.trials);
    r.add_summary("sim_mean", ColumnType::Float, s.mean);
    r.add_summary("sim_variance", ColumnType::Float, s.variance);
    r.add_summary("sim_stderr", ColumnType::Float, stderr_of(s));
    r.add_summary("rejections", ColumnType::Int, static_cast<std::int64_t>(s.rejections));
    r.add_summary("mean", ColumnType::Float, mean);
    r.add_summary("dp_eval", ColumnType::Text, std::string(exact ? "exact" : "float"));

    r.add_column("h", ColumnType::Int);
    r.add_column("count", ColumnType::Int);
    r.add_column("empirical_cdf", ColumnType::Float);
    r.add_column("cdf_exact", ColumnType::Rational);
    r.add_column("cdf", ColumnType::Float);
    r.add_column("binomial_sd", ColumnType::Float);
    r.add_column("z", ColumnType::Float);
    double max_abs_z = 0.0;
    std::uint64_t running = 0;
    for (std::size_t h = 0; h <= n; ++h) {
        running += s.histogram[h];
        const double emp = static_cast<double>(running) / T;
        const double c = table[h].value;
        const double sd = std::sqrt(c * (1.0 - c) / T);
        Cell z = std::monostate{};
        if (sd > 0.0) {
            z = (emp - c) / sd;
            max_abs_z = std::max(max_abs_z, std::fabs((emp - c) / sd));
        }
        r.rows.push_back({as_int(h), static_cast<std::int64_t>(s.histogram[h]), emp,
                          exact ? Cell(*table[h].exact) : Cell(std::monostate{}), c, sd, z});
    }
    r.add_summary("max_abs_z", ColumnType::Float, max_abs_z);
    return r;
}

OutputRecord cmd_compare(const Options& o) {
    const ModelParams params = parse_p(o.p);
    const auto ns = parse_list("--n", o.n, 1);
    const TailVariant variant = parse_variant(o.variant);
    const SimulationOptions sim_opts = simulation_options(o);
    OutputRecord r = start("compare", o, params);
    r.add_parameter("n", o.n);
    r.add_parameter("trials", std::to_string(o.trials));
    r.add_parameter("seed", std::to_string(o.seed));
    r.add_parameter("variant", o.variant);
    r.add_parameter("mode", o.mode);
    r.add_parameter("sampler", o.sampler);
    r.add_parameter("chunk_size", std::to_string(o.chunk_size));
    r.add_parameter("max_rejections", std::to_string(o.max_rejections));
    r.add_parameter("dp_exact_limit", std::to_string(o.dp_exact_limit));
    r.add_parameter("float_mean_limit", std::to_string(kFloatMeanLimit));

    r.add_column("n", ColumnType::Int);
    r.add_column("eval", ColumnType::Text);
    r.add_column("mean", ColumnType::Float);
    r.add_column("main_term", ColumnType::Float);
    r.add_column("sim_mean", ColumnType::Float);
    r.add_column("sim_stderr", ColumnType::Float);
    r.add_column("sim_z", ColumnType::Float);
    r.add_column("standard_mean", ColumnType::Float);
    r.add_column("standard_sim_mean", ColumnType::Float);
    r.add_column("standard_sim_stderr", ColumnType::Float);
    r.add_column("standard_sim_z", ColumnType::Float);
    for (std::size_t n : ns) {
        const EvalMode mode = resolve_mode(o.mode, n);
        const std::optional<double> mean = restricted_mean(params, n, mode);
        const double main = mellin_main_term(mellin_params(params, n, variant));
        const SimulationResult rs = simulate(params, n, o.trials, o.seed, WalkModel::Restricted, sim_opts);
        const SimulationResult ss = simulate(params, n, o.trials, o.seed, WalkModel::Standard, sim_opts);
        const double std_mean = dp_mean(params, n, WalkModel::Standard, o.dp_exact_limit);
        r.rows.push_back({as_int(n), std::string(mean ? mode_name(mode) : "none"), float_or_empty(mean), main,
                          rs.mean, stderr_of(rs), z_score(rs.mean, mean, stderr_of(rs)), std_mean, ss.mean,
                          stderr_of(ss), z_score(ss.mean, std_mean, stderr_of(ss))});
    }
    return r;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "up-step probability, fraction or decimal")->required();
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void add_mode(CLI::App* cmd, Options& o) {
    cmd->add_option("--mode", o.mode, "exact, float, or auto (exact up to n = " + std::to_string(kExactModeLimit) + ")")
        ->check(CLI::IsMember({"exact", "float", "auto"}))
        ->capture_default_str();
}

void add_simulation(CLI::App* cmd, Options& o) {
    cmd->add_option("--trials", o.trials, "number of simulated walks")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
    cmd->add_option("--sampler", o.sampler, "restricted-walk sampler")
        ->check(CLI::IsMember({"conditioned", "rejection"}))
        ->capture_default_str();
    cmd->add_option("--chunk-size", o.chunk_size, "walks per seeded chunk")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--dp-exact-limit", o.dp_exact_limit, "largest n for the exact DP")->capture_default_str();
    cmd->add_option("--max-rejections", o.max_rejections, "rejection sampler budget")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Height statistics of the Moran walk"};
    app.name("moranwalk");
    app.require_subcommand(1);
    Options o;

    auto* dist = app.add_subcommand("dist", "distribution of the height H_n");
    add_common(dist, o);
    dist->add_option("--n", o.n, "walk length")->required();
    add_mode(dist, o);

    auto* moments = app.add_subcommand("moments", "mean and variance of H_n");
    add_common(moments, o);
    moments->add_option("--n", o.n, "walk length or comma list")->required();
    add_mode(moments, o);

    auto* pgf = app.add_subcommand("pgf", "E[u^H_n]");
    add_common(pgf, o);
    pgf->add_option("--n", o.n, "walk length or comma list")->required();
    pgf->add_option("--u", o.u, "evaluation point, fraction or decimal")->required();
    add_mode(pgf, o);

    auto* coeff = app.add_subcommand("coeff", "series coefficients k = 0..n, unbounded and bounded by --H");
    add_common(coeff, o);
    coeff->add_option("--n", o.n, "last coefficient index")->required();
    coeff->add_option("--H", o.H, "height bound for the bounded series");
    add_mode(coeff, o);

    auto* roots = app.add_subcommand("roots", "dominant root estimates of the bounded denominator");
    add_common(roots, o);
    roots->add_option("--H", o.H_range, "heights, a..b or comma list")->capture_default_str();
    roots->add_option("--precision", o.precision, "arithmetic")
        ->check(CLI::IsMember({"high", "double"}))
        ->capture_default_str();

    auto* asymp = app.add_subcommand("asymp", "mean height against its tail sum and Mellin approximations");
    add_common(asymp, o);
    asymp->add_option("--n", o.n, "walk length or comma list, each >= 2")->required();
    asymp->add_option("--variant", o.variant, "tail constants")
        ->check(CLI::IsMember({"paper", "corrected"}))
        ->capture_default_str();
    add_mode(asymp, o);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo height histogram against the exact DP");
    add_common(sim, o);
    sim->add_option("--n", o.n, "walk length")->required();
    sim->add_option("--model", o.model, "walk model")
        ->check(CLI::IsMember({"restricted", "standard"}))
        ->capture_default_str();
    add_simulation(sim, o);

    auto* compare = app.add_subcommand("compare", "exact, asymptotic and simulated means side by side");
    add_common(compare, o);
    compare->add_option("--n", o.n, "comma list of walk lengths")->required();
    compare->add_option("--variant", o.variant, "tail constants for the main term")
        ->check(CLI::IsMember({"paper", "corrected"}))
        ->capture_default_str();
    add_mode(compare, o);
    add_simulation(compare, o);

    std::vector<std::string> argv_storage{"moranwalk"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        OutputRecord record;
        if (dist->parsed()) record = cmd_dist(o);
        else if (moments->parsed()) record = cmd_moments(o);
        else if (pgf->parsed()) record = cmd_pgf(o);
        else if (coeff->parsed()) record = cmd_coeff(o);
        else if (roots->parsed()) record = cmd_roots(o);
        else if (asymp->parsed()) record = cmd_asymp(o);
        else if (sim->parsed()) record = cmd_simulate(o);
        else record = cmd_compare(o);

        std::ostringstream buffer;
        write_record(record, o.format == "json" ? OutputFormat::Json : OutputFormat::Csv, buffer);
        out << buffer.str();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RegimeViolation& e) {
        err << "regime violation: " << e.what() << '\n';
        return kExitRegime;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace moran
