#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "torsionlab/checks.hpp"
#include "torsionlab/fox.hpp"
#include "torsionlab/json_io.hpp"
#include "torsionlab/knot.hpp"

namespace {

using nlohmann::json;
using namespace torsionlab;

// All floating-point text output carries 12 significant digits.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round12(double v) { return std::stod(fmt(v)); }

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InvalidParameter("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

GroupPresentation load_presentation(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return presentation_from_json(json::parse(text));
        break;
    }
    return parse_presentation(text);
}

struct TorusSpec {
    int q = 0, l = 0;
    double t = 0.0;
};

TorusSpec parse_torus_spec(const std::string& s, bool with_t) {
    TorusSpec spec;
    std::istringstream ss(s);
    char c1 = 0, c2 = 0;
    if (with_t) {
        if (!(ss >> spec.q >> c1 >> spec.l >> c2 >> spec.t) || c1 != ',' || c2 != ',')
            throw InvalidParameter("--torus expects q,l,t");
    } else {
        if (!(ss >> spec.q >> c1 >> spec.l) || c1 != ',')
            throw InvalidParameter("--torus expects q,l");
    }
    std::string rest;
    if (ss >> rest) throw InvalidParameter("trailing characters in --torus");
    return spec;
}

double rank_tol_default() {
    if (const char* env = std::getenv("TORSIONLAB_RANK_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
        throw InvalidParameter("TORSIONLAB_RANK_TOL must be a positive number");
    }
    return kRankTolDefault;
}

// --- torsion ---------------------------------------------------------------

struct TorsionJob {
    std::string torus;      // "q,l,t"
    std::string file;
    std::string dsl;
    std::string images;     // JSON [[w,x,y,z], ...]
    std::optional<double> abelian_theta;
    double rank_tol = kRankTolDefault;
    std::string format = "text";
};

void merge_job_file(TorsionJob& job, const std::string& path) {
    const json j = json::parse(read_file(path));
    if (j.contains("presentation")) {
        const json& p = j["presentation"];
        if (p.contains("file")) job.file = p["file"].get<std::string>();
        if (p.contains("dsl")) job.dsl = p["dsl"].get<std::string>();
        if (p.contains("json")) job.dsl = p["json"].dump();
        if (p.contains("torus")) job.dsl = to_dsl(torus_knot_presentation(p["torus"].get<int>()));
    }
    if (j.contains("representation")) {
        const json& r = j["representation"];
        if (r.contains("torus")) {
            const auto v = r["torus"];
            job.torus = std::to_string(v.at(0).get<int>()) + "," +
                        std::to_string(v.at(1).get<int>()) + "," +
                        std::to_string(v.at(2).get<double>());
        }
        if (r.contains("abelian_theta")) job.abelian_theta = r["abelian_theta"].get<double>();
        if (r.contains("images")) job.images = r["images"].dump();
    }
    if (j.contains("rank_tol")) job.rank_tol = j["rank_tol"].get<double>();
    if (j.contains("format")) job.format = j["format"].get<std::string>();
}

std::vector<UnitQuaternion> parse_images(const std::string& text) {
    const json j = json::parse(text);
    if (!j.is_array()) throw InvalidParameter("--images expects a JSON array of quaternions");
    std::vector<UnitQuaternion> out;
    for (const json& q : j) {
        if (!q.is_array() || q.size() != 4)
            throw InvalidParameter("each image must be [w, x, y, z]");
        out.emplace_back(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                         q[3].get<double>());
    }
    return out;
}

int cmd_torsion(const TorsionJob& job) {
    int sources = (!job.torus.empty()) + (!job.file.empty()) + (!job.dsl.empty());
    if (sources != 1)
        throw InvalidParameter("need exactly one presentation source (--torus, --file or --dsl)");
    int reps = (!job.torus.empty()) + job.abelian_theta.has_value() + (!job.images.empty());
    if (reps != 1)
        throw InvalidParameter(
            "need exactly one representation spec (--torus, --abelian-theta or --images)");

    GroupPresentation p;
    std::optional<Representation> rho;
    std::string mode;
    double value = 0.0;

    if (!job.torus.empty()) {
        const TorusSpec spec = parse_torus_spec(job.torus, true);
        rho = torus_rep(spec.q, spec.l, spec.t);  // validates q, l, t
        p = torus_knot_presentation(spec.q);
        mode = "nonabelian";
        value = nonabelian_torsion(p, *rho, job.rank_tol);
    } else {
        p = load_presentation(job.file.empty() ? job.dsl : read_file(job.file));
        if (job.abelian_theta) {
            mode = "abelian";
            value = abelian_torsion(p, *job.abelian_theta, job.rank_tol);
            rho = abelian_rep(p, *job.abelian_theta);
        } else {
            rho = Representation(p, parse_images(job.images));
            mode = "nonabelian";
            value = nonabelian_torsion(p, *rho, job.rank_tol);
        }
    }

    const TwistedComplex tc = twisted_complex(p, *rho);
    const CohomologySummary coh = twisted_cohomology(tc, job.rank_tol);
    const bool regular = is_regular(tc, job.rank_tol);
    bool mu_regular = false;
    if (regular && p.meridian) mu_regular = is_mu_regular(tc, *p.meridian, job.rank_tol);
    const int t0 = tau0(p);
    std::optional<double> theta;
    if (p.meridian) {
        try {
            theta = theta_mu(*rho, *p.meridian);
        } catch (const CentralMeridian&) {
        }
    }

    if (job.format == "json") {
        json out{{"mode", mode},
                 {"torsion", round12(value)},
                 {"tau0", t0},
                 {"b", {coh.b0, coh.b1, coh.b2}},
                 {"regular", regular},
                 {"mu_regular", mu_regular}};
        if (theta) out["theta_mu"] = round12(*theta);
        if (job.abelian_theta) out["theta"] = round12(*job.abelian_theta);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "mode = " << mode << "\n";
        if (job.abelian_theta) std::cout << "theta = " << fmt(*job.abelian_theta) << "\n";
        std::cout << "torsion = " << fmt(value) << "\n";
        std::cout << "tau0 = " << t0 << "\n";
        std::cout << "b0 = " << coh.b0 << "\nb1 = " << coh.b1 << "\nb2 = " << coh.b2 << "\n";
        std::cout << "regular = " << (regular ? "true" : "false") << "\n";
        std::cout << "mu_regular = " << (mu_regular ? "true" : "false") << "\n";
        if (theta) std::cout << "theta_mu = " << fmt(*theta) << "\n";
    }
    return 0;
}

// --- alexander ---------------------------------------------------------------

int cmd_alexander(const std::string& file, const std::string& dsl, int torus_q) {
    const int sources = (!file.empty()) + (!dsl.empty()) + (torus_q != 0);
    if (sources != 1)
        throw InvalidParameter("need exactly one presentation source (--file, --dsl or --torus)");
    GroupPresentation p;
    if (torus_q != 0) p = torus_knot_presentation(torus_q);
    else p = load_presentation(file.empty() ? dsl : read_file(file));
    std::cout << alexander_polynomial(p).str() << "\n";
    return 0;
}

// --- scan ----------------------------------------------------------------------

std::vector<double> parse_grid(const std::string& s) {
    double a = 0, b = 0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(s);
    if (!(ss >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':')
        throw InvalidParameter("--grid expects a:b:n");
    std::string rest;
    if (ss >> rest) throw InvalidParameter("trailing characters in --grid");
    if (n < 1) throw InvalidParameter("grid needs at least one point");
    std::vector<double> ts;
    if (n == 1) ts.push_back(a);
    else
        for (int k = 0; k < n; ++k) ts.push_back(a + (b - a) * k / (n - 1));
    return ts;
}

int cmd_scan(const std::string& torus, const std::string& grid, double fd_step,
             const std::string& format, double rank_tol) {
    const TorusSpec spec = parse_torus_spec(torus, false);
    const std::vector<double> ts = parse_grid(grid);
    if (fd_step <= 0) throw InvalidParameter("--fd-step must be positive");
    const std::vector<ScanRow> rows = scan_torus(spec.q, spec.l, ts, fd_step, rank_tol);
    if (format == "json") {
        json out = json::array();
        for (const ScanRow& r : rows)
            out.push_back({{"t", round12(r.t)},
                           {"theta_m", round12(r.theta_m)},
                           {"tor", round12(r.tor)},
                           {"dtheta_dt", round12(r.dtheta_dt)},
                           {"tau_form", round12(r.tau_form)},
                           {"closed_form", round12(r.closed_form)},
                           {"abs_err", round12(r.abs_err)}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "t,theta_m,tor,dtheta_dt,tau_form,closed_form,abs_err\n";
        for (const ScanRow& r : rows)
            std::cout << fmt(r.t) << ',' << fmt(r.theta_m) << ',' << fmt(r.tor) << ','
                      << fmt(r.dtheta_dt) << ',' << fmt(r.tau_form) << ',' << fmt(r.closed_form)
                      << ',' << fmt(r.abs_err) << "\n";
    }
    return 0;
}

// --- check -----------------------------------------------------------------------

int cmd_check(const std::string& suite, int trials, unsigned long long seed) {
    std::vector<std::string> names;
    if (suite == "all") names = all_check_names();
    else names.push_back(suite);
    const std::vector<CheckReport> reports = run_checks(names, trials, seed);
    bool all_pass = true;
    for (const CheckReport& r : reports) {
        std::cout << format_report(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return all_pass ? 0 : 2;
}

// --- torsion-raw -------------------------------------------------------------------

int cmd_torsion_raw(const std::string& file, const std::string& format, double rank_tol) {
    const BasedChainComplex c = complex_from_json(json::parse(read_file(file)));
    validate_complex(c, rank_tol);
    const TorsionResult res = sign_determined_torsion(c, rank_tol);
    if (format == "json") {
        json out{{"value", round12(res.value)},
                 {"tor", round12(res.tor)},
                 {"sign_exponent", res.sign_exponent},
                 {"alpha", res.alpha},
                 {"beta", res.beta}};
        std::cout << out.dump() << "\n";
    } else {
        auto join = [](const std::vector<long long>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        std::cout << "value = " << fmt(res.value) << "\n";
        std::cout << "tor = " << fmt(res.tor) << "\n";
        std::cout << "sign_exponent = " << res.sign_exponent << "\n";
        std::cout << "alpha = " << join(res.alpha) << "\n";
        std::cout << "beta = " << join(res.beta) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsionlab: sign-determined twisted Reidemeister torsion of knot exteriors"};
    app.require_subcommand(1);

    TorsionJob job;
    job.rank_tol = -1.0;  // sentinel: resolve default/env after parsing
    std::string job_file;
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion of a knot presentation");
    torsion_cmd->add_option("--torus", job.torus, "builtin torus knot rep q,l,t");
    torsion_cmd->add_option("--file", job.file, "presentation file (DSL or JSON)");
    torsion_cmd->add_option("--dsl", job.dsl, "inline presentation DSL");
    torsion_cmd->add_option("--images", job.images, "per-generator quaternions [[w,x,y,z],...]");
    double theta_opt = 0.0;
    auto* theta_flag =
        torsion_cmd->add_option("--abelian-theta", theta_opt, "abelian representation angle");
    torsion_cmd->add_option("--rank-tol", job.rank_tol, "rank tolerance");
    torsion_cmd->add_option("--format", job.format, "text | json");
    torsion_cmd->add_option("--job", job_file, "JSON job file");

    std::string alex_file, alex_dsl;
    int alex_q = 0;
    auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial");
    alex_cmd->add_option("--file", alex_file, "presentation file (DSL or JSON)");
    alex_cmd->add_option("--dsl", alex_dsl, "inline presentation DSL");
    alex_cmd->add_option("--torus", alex_q, "builtin torus knot presentation q");

    std::string scan_torus, scan_grid = "0.1:0.9:9", scan_format = "csv";
    double fd_step = 1e-5, scan_tol = -1.0;
    auto* scan_cmd = app.add_subcommand("scan", "torsion across a t-grid (CSV)");
    scan_cmd->add_option("--torus", scan_torus, "torus knot q,l")->required();
    scan_cmd->add_option("--grid", scan_grid, "t grid a:b:n");
    scan_cmd->add_option("--fd-step", fd_step, "central-difference step for dtheta/dt");
    scan_cmd->add_option("--format", scan_format, "csv | json");
    scan_cmd->add_option("--rank-tol", scan_tol, "rank tolerance");

    std::string check_suite = "all";
    int check_trials = 1000;
    unsigned long long check_seed = 12345;
    auto* check_cmd = app.add_subcommand("check", "randomized property suites and oracles");
    check_cmd->add_option("suite", check_suite, "suite name or 'all'");
    check_cmd->add_option("--trials", check_trials, "trials per randomized suite");
    check_cmd->add_option("--seed", check_seed, "RNG seed");

    std::string raw_file = "-", raw_format = "text";
    double raw_tol = -1.0;
    auto* raw_cmd = app.add_subcommand("torsion-raw", "torsion of a complex JSON file");
    raw_cmd->add_option("file,--file", raw_file, "complex JSON ('-' for stdin)");
    raw_cmd->add_option("--format", raw_format, "text | json");
    raw_cmd->add_option("--rank-tol", raw_tol, "rank tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*torsion_cmd) {
            if (!job_file.empty()) {
                TorsionJob from_file;
                from_file.rank_tol = -1.0;
                merge_job_file(from_file, job_file);
                // explicit flags win over the job file
                if (job.torus.empty()) job.torus = from_file.torus;
                if (job.file.empty()) job.file = from_file.file;
                if (job.dsl.empty()) job.dsl = from_file.dsl;
                if (job.images.empty()) job.images = from_file.images;
                if (!*theta_flag && from_file.abelian_theta)
                    job.abelian_theta = from_file.abelian_theta;
                if (job.rank_tol < 0 && from_file.rank_tol > 0) job.rank_tol = from_file.rank_tol;
                if (job.format == "text" && from_file.format != "text")
                    job.format = from_file.format;
            }
            if (*theta_flag) job.abelian_theta = theta_opt;
            if (job.rank_tol < 0) job.rank_tol = rank_tol_default();
            return cmd_torsion(job);
        }
        if (*alex_cmd) return cmd_alexander(alex_file, alex_dsl, alex_q);
        if (*scan_cmd)
            return cmd_scan(scan_torus, scan_grid, fd_step, scan_format,
                            scan_tol > 0 ? scan_tol : rank_tol_default());
        if (*check_cmd) {
            if (check_suite != "all") {
                const auto names = all_check_names();
                if (std::find(names.begin(), names.end(), check_suite) == names.end())
                    throw InvalidParameter("unknown check suite: " + check_suite);
            }
            return cmd_check(check_suite, check_trials, check_seed);
        }
        if (*raw_cmd)
            return cmd_torsion_raw(raw_file, raw_format, raw_tol > 0 ? raw_tol : rank_tol_default());
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownGenerator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DeficiencyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
