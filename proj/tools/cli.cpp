#include "cli.hpp"

#include "projdim/automaton.hpp"
#include "projdim/cocycle.hpp"
#include "projdim/dimension.hpp"
#include "projdim/gibbs.hpp"
#include "projdim/oracle.hpp"
#include "projdim/simplex.hpp"
#include "projdim/subshift.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <future>
#include <iostream>
#include <sstream>

namespace projdim::cli {

namespace {

using ordered = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Column-ordered table rendered as CSV or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<ordered>> rows;
    ordered extra = ordered::object();  // JSON-only fields

    std::string csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                const auto& c = row[i];
                if (c.is_null()) continue;
                if (c.is_string()) os << c.get<std::string>();
                else if (c.is_number_float()) os << fmt_double(c.get<double>());
                else os << c.dump();
            }
            os << '\n';
        }
        return os.str();
    }

    std::string json(const std::string& command) const {
        ordered j;
        j["command"] = command;
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
        j["columns"] = columns;
        ordered rs = ordered::array();
        for (const auto& row : rows) {
            ordered r;
            for (std::size_t i = 0; i < row.size(); ++i) r[columns[i]] = row[i];
            rs.push_back(r);
        }
        j["rows"] = rs;
        return j.dump(2) + "\n";
    }
};

void write_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp." + std::to_string(std::hash<std::string>{}(text) % 1000000);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
        out << text;
        if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

struct Common {
    long long p = 1, q = 1;
    std::string format;
    std::string out_path;
    std::string cache_dir;
    bool no_cache = false;
};

void add_slope(CLI::App* sub, Common& c) {
    sub->add_option("--p", c.p, "numerator of the slope")->required();
    sub->add_option("--q", c.q, "denominator of the slope")->required();
}

// Subcommand defaults are applied after parsing, since options share storage.
std::map<const CLI::App*, std::string>& default_formats() {
    static thread_local std::map<const CLI::App*, std::string> m;
    return m;
}

void add_output(CLI::App* sub, Common& c, const std::string& default_format) {
    default_formats()[sub] = default_format;
    sub->add_option("--format", c.format, "json or csv (default " + default_format + ")")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_path, "write to this file instead of stdout");
    sub->add_option("--cache-dir", c.cache_dir, "result cache directory (env PROJDIM_CACHE_DIR)");
    sub->add_flag("--no-cache", c.no_cache, "bypass the result cache");
}

ResultCache make_cache(const Common& c) {
    if (c.no_cache) return ResultCache{};
    if (!c.cache_dir.empty()) return ResultCache{c.cache_dir};
    return ResultCache{default_cache_dir()};
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) out << text;
    else write_atomic(c.out_path, text);
}

void emit_table(const Common& c, const Table& t, const std::string& command, std::ostream& out) {
    emit(c, c.format == "csv" ? t.csv() : t.json(command), out);
}

ordered slope_json(const SlopeParam& s) { return {{"p", s.p()}, {"q", s.q()}}; }

// Big integer through the cache, stored as a decimal string.
BigInt cached_big(const ResultCache& cache, const SlopeParam& s, const std::string& computation, std::size_t n,
                  const std::function<BigInt()>& compute) {
    const CacheKey key{s.p(), s.q(), computation, n, kVersion};
    if (auto hit = cache.lookup(key); hit && hit->is_string()) {
        try {
            return BigInt(hit->get<std::string>());
        } catch (...) {
            // corrupt value: recompute below
        }
    }
    BigInt v = compute();
    cache.store(key, v.str());
    return v;
}

// ---- subcommands -------------------------------------------------------

int cmd_count(const Common& c, std::size_t n_max, const std::string& method, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    const auto cache = make_cache(c);
    const bool all = method == "all";
    Table t;
    t.columns.push_back("n");
    if (all || method == "oracle") t.columns.push_back("oracle");
    if (all || method == "paths") t.columns.push_back("paths");
    if (all || method == "cocycle") t.columns.push_back("cocycle");
    if (all) t.columns.push_back("agree");
    t.extra["slope"] = slope_json(s);
    const auto automaton = build_overlap_automaton(s);
    bool agree_all = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<ordered> row{n};
        std::vector<BigInt> vals;
        if (all || method == "oracle") {
            if (n <= kDefaultBruteCap) {
                vals.push_back(cached_big(cache, s, "count-oracle", n, [&] { return overlap_count_exact(s, n); }));
                row.push_back(vals.back().str());
            } else if (all) {
                row.push_back(nullptr);
            } else {
                throw Error(ErrorKind::CapExceeded, "oracle limited to n <= " + std::to_string(kDefaultBruteCap));
            }
        }
        if (all || method == "paths") {
            vals.push_back(cached_big(cache, s, "count-paths", n, [&] { return count_via_paths(automaton, n); }));
            row.push_back(vals.back().str());
        }
        if (all || method == "cocycle") {
            vals.push_back(cached_big(cache, s, "count-cocycle", n, [&] { return count_via_cocycle(s, n); }));
            row.push_back(vals.back().str());
        }
        if (all) {
            const bool agree = std::all_of(vals.begin(), vals.end(), [&](const BigInt& v) { return v == vals[0]; });
            agree_all = agree_all && agree;
            row.push_back(agree);
        }
        t.rows.push_back(std::move(row));
    }
    emit_table(c, t, "count", out);
    return agree_all ? kOk : kComputationError;
}

int cmd_growth(const Common& c, double tol, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    const auto a = build_overlap_automaton(s);
    PerronOptions opt;
    opt.tol = tol;
    const auto g = overlap_growth(a, opt);
    const auto k = equivalence_constants(a);
    Table t;
    t.columns = {"p", "q", "states", "strongly_connected", "N_lower", "N_upper", "c_l", "c_r"};
    t.rows.push_back({s.p(), s.q(), a.state_count(), strong_connectivity(a), g.lower, g.upper, k.c_l, k.c_r});
    emit_table(c, t, "growth", out);
    return kOk;
}

int cmd_pressure(const Common& c, std::size_t n_max, double tol, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    const auto cache = make_cache(c);
    Table t;
    t.columns = {"n", "L_n", "S_n"};
    t.extra["slope"] = slope_json(s);
    // Sums are cached per n; a miss recomputes the whole sequence once.
    std::vector<PressureEstimate> seq;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const CacheKey key{s.p(), s.q(), "pressure-sums", n, kVersion};
        PressureEstimate e;
        e.n = n;
        auto hit = cache.lookup(key);
        bool ok = false;
        if (hit && hit->is_array() && hit->size() == 2 && (*hit)[0].is_string() && (*hit)[1].is_string()) {
            try {
                e.lower_sum = BigInt((*hit)[0].get<std::string>());
                e.full_sum = BigInt((*hit)[1].get<std::string>());
                ok = true;
            } catch (...) {
            }
        }
        if (!ok) {
            if (n_max > kPressureCap)
                throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n_max) + " exceeds cap " + std::to_string(kPressureCap));
            seq = pressure_sequence(s, n_max);
            for (const auto& x : seq)
                cache.store({s.p(), s.q(), "pressure-sums", x.n, kVersion},
                            nlohmann::json::array({x.lower_sum.str(), x.full_sum.str()}));
            break;
        }
        e.lower = log_big(e.lower_sum) / n;
        e.full = log_big(e.full_sum) / n;
        seq.push_back(e);
    }
    for (const auto& e : seq) t.rows.push_back({e.n, e.lower, e.full});
    PerronOptions opt;
    opt.tol = tol;
    const auto gap = pressure_gap_check(s, opt);
    t.extra["spectral"] = {{"lower", gap.P.lower}, {"upper", gap.P.upper}};
    t.extra["overlap_growth"] = {{"lower", gap.N.lower}, {"upper", gap.N.upper}};
    t.extra["gap_ok"] = gap.ok;
    emit_table(c, t, "pressure", out);
    return gap.ok ? kOk : kComputationError;
}

int cmd_entropy(const Common& c, std::size_t n_max, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    const auto r = hrw_estimates(s, n_max);
    Table t;
    t.columns = {"n", "H_n", "H_n_over_n", "increment", "jensen_rhs", "jensen_ok"};
    t.extra["slope"] = slope_json(s);
    t.extra["h_rw"] = r.h_rw();
    t.extra["lyapunov"] = r.lyapunov;
    bool ok = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto j = jensen_bound(s, n);
        ok = ok && j.ok;
        ordered inc = n >= 2 ? ordered(r.increments[n - 2]) : ordered(nullptr);
        t.rows.push_back({n, r.H[n - 1], r.per_symbol[n - 1], inc, j.rhs, j.ok});
    }
    emit_table(c, t, "entropy", out);
    return ok ? kOk : kComputationError;
}

// The fields of a dimension report the CLI needs, read back from its JSON so
// cache hits and fresh runs go through the same path.
struct ReportSummary {
    std::string text;
    double N_upper = 0, P_upper = 0, h_rw = 0, dim_estimate = 0, dim_lower = 0;
    bool singular = false, consistent = false;
};

ReportSummary cached_report(const ResultCache& cache, const SlopeParam& s, const DimensionOptions& opt) {
    const CacheKey key{s.p(), s.q(), "dimension-f" + std::to_string(opt.fourier_n), opt.entropy_n, kVersion};
    ReportSummary r;
    nlohmann::json j;
    if (auto hit = cache.lookup(key); hit && hit->is_string()) {
        j = nlohmann::json::parse(hit->get<std::string>(), nullptr, false);
        if (!j.is_discarded() && j.contains("dim_lower") && j.contains("consistent")) r.text = hit->get<std::string>();
    }
    if (r.text.empty()) {
        r.text = to_json(dimension_report(s, opt));
        j = nlohmann::json::parse(r.text);
        cache.store(key, r.text);
    }
    r.N_upper = j["N"]["upper"].get<double>();
    r.P_upper = j["P"]["upper"].get<double>();
    r.h_rw = j["h_rw"].get<double>();
    r.dim_estimate = j["dim_estimate"].get<double>();
    r.dim_lower = j["dim_lower"].get<double>();
    r.singular = j["singular"].get<bool>();
    r.consistent = j["consistent"].get<bool>();
    return r;
}

int cmd_dimension(const Common& c, std::size_t entropy_n, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    DimensionOptions opt;
    opt.entropy_n = entropy_n;
    const auto r = cached_report(make_cache(c), s, opt);
    if (c.format == "csv") {
        Table t;
        t.columns = {"p", "q", "N_upper", "P_upper", "h_rw", "dim_estimate", "dim_lower", "singular"};
        t.rows.push_back({s.p(), s.q(), r.N_upper, r.P_upper, r.h_rw, r.dim_estimate, r.dim_lower, r.singular});
        emit(c, t.csv(), out);
    } else {
        emit(c, r.text + "\n", out);
    }
    return r.consistent ? kOk : kComputationError;
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad rational '" + text + "'");
    }
}

int cmd_fourier(const Common& c, std::size_t n_max, const std::string& eta, std::size_t terms, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    Table t;
    if (!eta.empty()) {
        const auto v = fourier_partial(s, parse_rational(eta), terms);
        t.columns = {"p", "q", "eta", "terms", "re", "im", "modulus"};
        std::ostringstream e;
        e << v.eta;
        t.rows.push_back({s.p(), s.q(), e.str(), terms, v.value.real(), v.value.imag(), std::abs(v.value)});
        emit_table(c, t, "fourier", out);
        return kOk;
    }
    const auto r = fourier_nondecay(s, n_max);
    t.columns = {"p", "q", "N_max", "modulus_at_q", "max_deviation", "nondecay", "singular"};
    const bool singular = r.nondecay && r.modulus_at_q > 1e-3;
    t.rows.push_back({s.p(), s.q(), r.n_max, r.modulus_at_q, r.max_deviation, r.nondecay, singular});
    emit_table(c, t, "fourier", out);
    return kOk;
}

int cmd_contraction(const Common& c, std::size_t samples, std::uint64_t seed, std::size_t length, std::ostream& out) {
    Table t;
    t.columns = {"word", "contractive", "pos", "zero", "coefficient"};
    std::size_t count = 0;
    for (const auto& z : all_bwords(3)) {
        const auto m = cocycle_product(z);
        const auto prof = row_profile(m);
        const bool con = classify_word(z) == Contractivity::Contractive;
        count += con;
        t.rows.push_back({to_string(z), con, prof.pos, prof.zero, birkhoff_coefficient(cocycle_product_real(z))});
    }
    t.extra["contractive_count"] = count;
    t.extra["tau"] = max_contraction_tau();
    t.extra["frequency"] = contractive_frequency(samples, length, seed);
    t.extra["samples"] = samples;
    t.extra["seed"] = seed;
    emit_table(c, t, "contraction", out);
    return kOk;
}

int cmd_gibbs(const Common& c, std::size_t n_max, std::size_t masses, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    const auto g = build_gibbs_system(s);
    if (masses > 0) {
        if (c.format == "csv") {
            emit(c, cylinder_mass_csv(g, masses), out);
        } else {
            Table t;
            t.columns = {"word", "mass"};
            std::istringstream in(cylinder_mass_csv(g, masses));
            std::string line;
            std::getline(in, line);
            while (std::getline(in, line)) {
                const auto comma = line.find(',');
                t.rows.push_back({line.substr(0, comma), std::stod(line.substr(comma + 1))});
            }
            emit(c, t.json("gibbs-masses"), out);
        }
        return kOk;
    }
    const auto seq = weak_gibbs_constants(g, n_max);
    Table t;
    t.columns = {"n", "log_C_n_over_n"};
    for (const auto& p : seq) t.rows.push_back({p.n, p.log_c_over_n});
    t.extra["slope"] = slope_json(s);
    t.extra["perron_value"] = {{"lower", g.perron_value.lower}, {"upper", g.perron_value.upper}};
    std::vector<double> r(g.R.data(), g.R.data() + g.R.size());
    t.extra["R"] = r;
    emit_table(c, t, "gibbs", out);
    return kOk;
}

int cmd_export(const Common& c, const std::string& kind, std::ostream& out) {
    const auto s = make_slope(c.p, c.q);
    if (kind == "overlap") emit(c, to_dot(build_overlap_automaton(s)), out);
    else emit(c, to_dot(build_line_subshift(s)), out);
    return kOk;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::NotCoprime:
        case ErrorKind::OutOfRange:
        case ErrorKind::InvalidArgument:
            return kUsageError;
        default:
            return kComputationError;
    }
}

}  // namespace

// ---- batch ---------------------------------------------------------------

RunConfig parse_run_config(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorKind::InvalidArgument, "config is not a JSON object");
    RunConfig c;
    try {
        if (j.contains("slopes"))
            for (const auto& pair : j["slopes"]) {
                if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::InvalidArgument, "slopes are [p, q] pairs");
                c.slopes.emplace_back(pair[0].get<long long>(), pair[1].get<long long>());
            }
        if (j.contains("q_max"))
            for (const auto& s : slopes_up_to(j["q_max"].get<int>())) c.slopes.emplace_back(s.p(), s.q());
        if (j.contains("computations")) c.computations = j["computations"].get<std::vector<std::string>>();
        if (j.contains("count_n")) c.count_n = j["count_n"].get<std::size_t>();
        if (j.contains("pressure_n")) c.pressure_n = j["pressure_n"].get<std::size_t>();
        if (j.contains("entropy_n")) c.entropy_n = j["entropy_n"].get<std::size_t>();
        if (j.contains("fourier_n")) c.fourier_n = j["fourier_n"].get<std::size_t>();
        if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
        if (j.contains("format")) c.format = j["format"].get<std::string>();
        if (j.contains("jobs")) c.jobs = std::max(1u, j["jobs"].get<unsigned>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
    }
    for (const auto& [p, q] : c.slopes) make_slope(p, q);
    if (!(c.tolerance > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (c.format != "json" && c.format != "csv") throw Error(ErrorKind::InvalidArgument, "format is json or csv");
    static const std::vector<std::string> known{"dimension", "count", "pressure", "entropy", "gibbs"};
    for (const auto& comp : c.computations)
        if (std::find(known.begin(), known.end(), comp) == known.end())
            throw Error(ErrorKind::InvalidArgument, "unknown computation '" + comp + "'");
    return c;
}

namespace {

struct SlopeOutcome {
    SlopeParam slope;
    ordered doc = ordered::object();
    std::vector<std::string> errors;
    Enclosure N, P;
    bool have_dim = false;
    double dim_lower = 0.0;
    bool singular = false;
    bool gap_ok = false;
};

SlopeOutcome run_slope(const RunConfig& cfg, const ResultCache& cache, const SlopeParam& s) {
    SlopeOutcome o{s};
    o.doc["slope"] = slope_json(s);
    PerronOptions perron;
    perron.tol = cfg.tolerance;
    auto attempt = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            o.errors.push_back(name + ": " + e.what());
            o.doc["errors"][name] = e.what();
        }
    };
    attempt("pressure_gap", [&] {
        const auto g = pressure_gap_check(s, perron);
        o.N = g.N;
        o.P = g.P;
        o.gap_ok = g.ok;
        o.doc["pressure_gap"] = {{"N", {{"lower", g.N.lower}, {"upper", g.N.upper}}},
                                 {"P", {{"lower", g.P.lower}, {"upper", g.P.upper}}},
                                 {"ok", g.ok}};
        if (!g.ok) throw Error(ErrorKind::NotConverged, "N exceeds P");
    });
    for (const auto& comp : cfg.computations) {
        if (comp == "dimension") {
            attempt("dimension", [&] {
                DimensionOptions opt;
                opt.entropy_n = cfg.entropy_n;
                opt.fourier_n = cfg.fourier_n;
                opt.perron = perron;
                const auto r = cached_report(cache, s, opt);
                o.doc["dimension"] = ordered::parse(r.text);
                o.have_dim = true;
                o.dim_lower = r.dim_lower;
                o.singular = r.singular;
            });
        } else if (comp == "count") {
            attempt("count", [&] {
                ordered rows = ordered::array();
                const auto a = build_overlap_automaton(s);
                for (std::size_t n = 1; n <= cfg.count_n; ++n) {
                    const BigInt paths = cached_big(cache, s, "count-paths", n, [&] { return count_via_paths(a, n); });
                    const BigInt coc = cached_big(cache, s, "count-cocycle", n, [&] { return count_via_cocycle(s, n); });
                    if (paths != coc) throw Error(ErrorKind::NotConverged, "count mismatch at n=" + std::to_string(n));
                    rows.push_back({{"n", n}, {"N_n", paths.str()}});
                }
                o.doc["count"] = rows;
            });
        } else if (comp == "pressure") {
            attempt("pressure", [&] {
                ordered rows = ordered::array();
                for (const auto& e : pressure_sequence(s, cfg.pressure_n))
                    rows.push_back({{"n", e.n}, {"L_n", e.lower}, {"S_n", e.full}});
                o.doc["pressure"] = rows;
            });
        } else if (comp == "entropy") {
            attempt("entropy", [&] {
                const auto r = hrw_estimates(s, cfg.entropy_n);
                o.doc["entropy"] = {{"H", r.H}, {"h_rw", r.h_rw()}};
            });
        } else if (comp == "gibbs") {
            attempt("gibbs", [&] {
                const auto g = build_gibbs_system(s, perron);
                ordered rows = ordered::array();
                for (const auto& p : weak_gibbs_constants(g, std::min<std::size_t>(cfg.pressure_n, kWeakGibbsCap)))
                    rows.push_back({{"n", p.n}, {"log_C_n_over_n", p.log_c_over_n}});
                o.doc["gibbs"] = rows;
            });
        }
    }
    return o;
}

}  // namespace

int batch_run(const RunConfig& cfg, const ResultCache& cache, std::ostream& out, std::ostream& err) {
    std::vector<SlopeParam> slopes;
    for (const auto& [p, q] : cfg.slopes) slopes.push_back(make_slope(p, q));
    std::vector<std::optional<SlopeOutcome>> results(slopes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < slopes.size();) results[i] = run_slope(cfg, cache, slopes[i]);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, slopes.size()))));
    std::vector<std::future<void>> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    const std::filesystem::path dir(cfg.output_dir);
    std::ostringstream summary;
    summary << "p,q,N,P,dim_lower,singular,gap_ok,status\n";
    std::size_t failed = 0;
    for (const auto& r : results) {
        const auto& o = *r;
        const std::string stem = "slope_" + std::to_string(o.slope.p()) + "_" + std::to_string(o.slope.q());
        if (cfg.format == "json") {
            write_atomic(dir / (stem + ".json"), o.doc.dump(2) + "\n");
        } else {
            std::ostringstream csv;
            csv << "field,value\n";
            csv << "N_upper," << fmt_double(o.N.upper) << "\nP_upper," << fmt_double(o.P.upper) << "\n";
            if (o.have_dim) csv << "dim_lower," << fmt_double(o.dim_lower) << "\n";
            write_atomic(dir / (stem + ".csv"), csv.str());
        }
        const bool ok = o.errors.empty();
        failed += !ok;
        summary << o.slope.p() << ',' << o.slope.q() << ',' << fmt_double(o.N.mid()) << ',' << fmt_double(o.P.mid())
                << ',' << (o.have_dim ? fmt_double(o.dim_lower) : "") << ',' << (o.have_dim ? (o.singular ? "true" : "false") : "")
                << ',' << (o.gap_ok ? "true" : "false") << ',' << (ok ? "ok" : "failed") << '\n';
        for (const auto& e : o.errors) err << o.slope.label() << ": " << e << '\n';
    }
    write_atomic(dir / "summary.csv", summary.str());
    out << summary.str();
    if (failed) err << failed << " of " << results.size() << " slopes failed\n";
    return failed ? kComputationError : kOk;
}

// ---- entry point ---------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    default_formats().clear();
    CLI::App app{"Exact overlap counts, pressure and dimension bounds for projected Sierpinski measures", "projdim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common c;
    std::size_t n = 8, n_pressure = 20, n_entropy = 10, n_fourier = 20, n_gibbs = 20, masses = 0, terms = 40;
    std::size_t samples = 100000, length = 64;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::string method = "all", eta, kind = "overlap", config_path;
    unsigned jobs = 1;

    auto* count = app.add_subcommand("count", "exact overlap counts N_n by oracle, automaton paths and cocycle");
    add_slope(count, c);
    add_output(count, c, "csv");
    count->add_option("--n", n, "largest word length")->check(CLI::Range(1, 4096));
    count->add_option("--method", method)->check(CLI::IsMember({"oracle", "paths", "cocycle", "all"}));

    auto* growth = app.add_subcommand("growth", "growth rate N with Collatz-Wielandt enclosure");
    add_slope(growth, c);
    add_output(growth, c, "csv");
    growth->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto* pressure = app.add_subcommand("pressure", "pressure approximants L_n, S_n and spectral pressure");
    add_slope(pressure, c);
    add_output(pressure, c, "csv");
    pressure->add_option("--n", n_pressure)->check(CLI::Range(1, 1000));
    pressure->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto* entropy = app.add_subcommand("entropy", "random walk entropy H_n and the Jensen chain");
    add_slope(entropy, c);
    add_output(entropy, c, "csv");
    entropy->add_option("--n", n_entropy)->check(CLI::Range(1, 1000));

    auto* dimension = app.add_subcommand("dimension", "dimension report");
    add_slope(dimension, c);
    add_output(dimension, c, "json");
    dimension->add_option("--entropy-n", n_entropy)->check(CLI::Range(1, 1000));

    auto* fourier = app.add_subcommand("fourier", "Fourier non-decay along q 2^N, or one partial product");
    add_slope(fourier, c);
    add_output(fourier, c, "csv");
    fourier->add_option("--N", n_fourier)->check(CLI::Range(0, 1000));
    fourier->add_option("--eta", eta, "evaluate one partial product at this rational");
    fourier->add_option("--terms", terms)->check(CLI::Range(0, 1000));

    auto* contraction = app.add_subcommand("contraction", "contractivity census of length-3 words");
    add_output(contraction, c, "csv");
    contraction->add_option("--samples", samples)->check(CLI::Range(0, 100000000));
    contraction->add_option("--seed", seed);
    contraction->add_option("--length", length)->check(CLI::Range(3, 1000000));

    auto* gibbs = app.add_subcommand("gibbs", "weak Gibbs constants log C_n / n");
    add_slope(gibbs, c);
    add_output(gibbs, c, "csv");
    gibbs->add_option("--n", n_gibbs)->check(CLI::Range(1, 1000));
    gibbs->add_option("--masses", masses, "emit cylinder masses of this length instead");

    auto* exporter = app.add_subcommand("automaton-export", "DOT export of the overlap automaton or line subshift");
    add_slope(exporter, c);
    add_output(exporter, c, "json");
    exporter->add_option("--kind", kind)->check(CLI::IsMember({"overlap", "subshift"}));

    auto* batch = app.add_subcommand("batch", "run a JSON config across slopes");
    batch->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    batch->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    batch->add_option("--cache-dir", c.cache_dir);
    batch->add_flag("--no-cache", c.no_cache);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        default_formats().clear();
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help, --version
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    for (const auto& [sub, fmt] : default_formats())
        if (*sub && c.format.empty()) c.format = fmt;
    default_formats().clear();

    try {
        if (*count) return cmd_count(c, n, method, out);
        if (*growth) return cmd_growth(c, tol, out);
        if (*pressure) return cmd_pressure(c, n_pressure, tol, out);
        if (*entropy) return cmd_entropy(c, n_entropy, out);
        if (*dimension) return cmd_dimension(c, n_entropy, out);
        if (*fourier) return cmd_fourier(c, n_fourier, eta, terms, out);
        if (*contraction) return cmd_contraction(c, samples, seed, length, out);
        if (*gibbs) return cmd_gibbs(c, n_gibbs, masses, out);
        if (*exporter) return cmd_export(c, kind, out);
        if (*batch) {
            std::ifstream in(config_path);
            std::stringstream buf;
            buf << in.rdbuf();
            auto cfg = parse_run_config(buf.str());
            if (batch->count("--jobs")) cfg.jobs = jobs;
            return batch_run(cfg, make_cache(c), out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }
    return kUsageError;
}

}  // namespace projdim::cli
