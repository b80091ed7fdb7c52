#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "agk/acceptance.hpp"
#include "agk/darboux.hpp"
#include "agk/galois.hpp"
#include "agk/output.hpp"
#include "agk/scenarios.hpp"

using json = nlohmann::json;

namespace {

agk::Rational parse_rational_or_die(const std::string& text, const char* flag) {
    auto r = agk::Rational::parse(text);
    if (!r) {
        std::cerr << "error: cannot parse " << flag << " = '" << text << "' (want p, p/q or a decimal)\n";
        std::exit(2);
    }
    return *r;
}

json verdict_json(const agk::Verdict& v) {
    json j;
    j["level"] = agk::to_string(v.level);
    j["rule"] = v.rule;
    if (v.kappa) j["kappa"] = v.kappa->str();
    json w;
    if (v.witness.l) w["l"] = *v.witness.l;
    if (v.witness.j) w["j"] = *v.witness.j;
    if (v.witness.family) w["family"] = *v.witness.family;
    if (!v.witness.second_integral.empty()) w["second_integral"] = v.witness.second_integral;
    j["witness"] = w;
    j["notes"] = v.notes;
    return j;
}

void print_verdict_human(const agk::Verdict& v) {
    std::cout << "verdict: " << agk::to_string(v.level) << "\n";
    std::cout << "rule:    " << v.rule << "\n";
    if (v.kappa) std::cout << "kappa:   " << v.kappa->str() << "\n";
    if (v.witness.l) std::cout << "witness: l = " << *v.witness.l << "\n";
    if (v.witness.j) std::cout << "witness: j = " << *v.witness.j << "\n";
    if (v.witness.family) std::cout << "witness: family = " << *v.witness.family << "\n";
    if (!v.witness.second_integral.empty()) {
        std::cout << "second integral: " << v.witness.second_integral << "\n";
    }
    for (const auto& n : v.notes) std::cout << "note:    " << n << "\n";
}

struct PoincareOptions {
    std::string scenario;
    std::string mu, a, b;
    double h = 0.0;
    bool have_h = false;
    std::string out_dir = ".";
    std::string format = "csv";
    double dt = 0.0;
    double max_time = 0.0;
    double escape_radius = 0.0;
    std::string seeds;
    std::string config_file;
};

bool parse_seed_grid(const std::string& text, int& nx, int& npx) {
    auto x = text.find('x');
    if (x == std::string::npos) return false;
    try {
        nx = std::stoi(text.substr(0, x));
        npx = std::stoi(text.substr(x + 1));
    } catch (...) {
        return false;
    }
    return nx > 0 && npx > 0;
}

void apply_config_file(agk::Scenario& s, const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot read config file " << path << "\n";
        std::exit(2);
    }
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string t) {
            const char* ws = " \t\r";
            auto b = t.find_first_not_of(ws);
            auto e = t.find_last_not_of(ws);
            return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        try {
            if (key == "mu") s.params.mu = std::stod(val);
            else if (key == "a") s.params.a = std::stod(val);
            else if (key == "b") s.params.b = std::stod(val);
            else if (key == "h") s.h = std::stod(val);
            else if (key == "dt") s.config.step = std::stod(val);
            else if (key == "max_time") s.config.max_time = std::stod(val);
            else if (key == "escape_radius") s.config.escape_radius = std::stod(val);
            else if (key == "name") s.name = val;
            else if (key == "seeds") {
                if (!parse_seed_grid(val, s.grid.nx, s.grid.npx)) {
                    std::cerr << "error: bad seeds spec in config: " << val << "\n";
                    std::exit(2);
                }
            } else {
                std::cerr << "error: unknown config key '" << key << "'\n";
                std::exit(2);
            }
        } catch (...) {
            std::cerr << "error: bad value for config key '" << key << "'\n";
            std::exit(2);
        }
    }
}

int cmd_classify(const std::string& mu, const std::string& a, const std::string& b,
                 const std::string& format) {
    agk::RationalParams p{parse_rational_or_die(mu, "--mu"), parse_rational_or_die(a, "--a"),
                          parse_rational_or_die(b, "--b")};
    agk::Verdict v = agk::classify(p);
    if (format == "json") {
        json j = verdict_json(v);
        j["params"] = {{"mu", p.mu.str()}, {"a", p.a.str()}, {"b", p.b.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_verdict_human(v);
    }
    return 0;
}

int cmd_darboux(const std::string& a_text, const std::string& b_text, const std::string& format) {
    agk::Rational a = parse_rational_or_die(a_text, "--a");
    agk::Rational b = parse_rational_or_die(b_text, "--b");
    if (a.is_zero() && b.is_zero()) {
        std::cerr << "error: (a, b) = (0, 0) has no quartic part to analyze\n";
        return 2;
    }
    auto pot = agk::HomogeneousPoly2::agk_quartic(a, b);
    auto lam = agk::lambda_set(agk::polar_form(pot));
    auto points = agk::darboux_points(pot, 4.0);
    auto necessary = agk::rational_integrability_necessary(pot);

    json j;
    j["params"] = {{"a", a.str()}, {"b", b.str()}};
    j["degenerate_circle"] = points.degenerate_circle;
    json jlam = json::array();
    for (std::size_t i = 0; i < lam.values.size(); ++i) {
        json e;
        e["value"] = lam.values[i];
        if (lam.exact_available) e["exact"] = lam.exact[i].str();
        auto rat = lam.exact_available ? std::optional<agk::Rational>(lam.exact[i])
                                       : agk::Rational::from_double(lam.values[i]);
        if (rat) {
            auto w = agk::mr_member(4, *rat);
            e["member"] = w.has_value();
            if (w) {
                e["witness"] = {{"family", w->family}, {"j", w->j}};
            }
        }
        jlam.push_back(e);
    }
    j["lambda_set"] = jlam;
    json jpts = json::array();
    for (const auto& pt : points.points) {
        auto rep = agk::hessian_spectrum(pot, pt);
        json e;
        e["c"] = {{"x_re", pt.cx.real()}, {"x_im", pt.cx.imag()},
                  {"y_re", pt.cy.real()}, {"y_im", pt.cy.imag()}};
        e["alpha"] = pt.alpha;
        e["spectrum"] = {rep.eigenvalues[0], rep.eigenvalues[1]};
        e["lambda_tilde"] = rep.lambda_tilde;
        e["degenerate"] = rep.degenerate;
        jpts.push_back(e);
    }
    j["darboux_points"] = jpts;
    const char* status = necessary.status == agk::NecessaryReport::Status::NotExcluded
                             ? "not-excluded"
                             : (necessary.status == agk::NecessaryReport::Status::Excluded
                                    ? "excluded"
                                    : "inconclusive");
    j["rational_necessary_condition"] = status;

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "quartic part with a = " << a.str() << ", b = " << b.str() << "\n";
    if (points.degenerate_circle) {
        std::cout << "Darboux points form a circle (rotational symmetry); one representative shown\n";
    }
    std::cout << "lambda set:";
    for (std::size_t i = 0; i < lam.values.size(); ++i) {
        std::cout << " " << (lam.exact_available ? lam.exact[i].str() : agk::format_double(lam.values[i]));
    }
    std::cout << "\n";
    for (const auto& e : jlam) {
        std::cout << "  lambda " << (e.contains("exact") ? e["exact"].get<std::string>()
                                                         : std::to_string(e["value"].get<double>()));
        if (e.contains("member") && e["member"].get<bool>()) {
            std::cout << "  member (family " << e["witness"]["family"] << ", j = " << e["witness"]["j"]
                      << ")\n";
        } else {
            std::cout << "  no witness\n";
        }
    }
    auto cplx = [](double re, double im) {
        std::ostringstream os;
        if (im == 0.0) {
            os << re;
        } else if (re == 0.0) {
            os << im << "i";
        } else {
            os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
        }
        return os.str();
    };
    for (const auto& e : jpts) {
        std::cout << "  point (" << cplx(e["c"]["x_re"].get<double>(), e["c"]["x_im"].get<double>())
                  << ", " << cplx(e["c"]["y_re"].get<double>(), e["c"]["y_im"].get<double>())
                  << "): spectrum [" << e["spectrum"][0].get<double>() << ", "
                  << e["spectrum"][1].get<double>() << "]\n";
    }
    std::cout << "rational necessary condition: " << status << "\n";
    return 0;
}

int cmd_poincare(const PoincareOptions& opt) {
    agk::Scenario scenario;
    if (!opt.scenario.empty()) {
        const agk::Scenario* found = agk::find_scenario(opt.scenario);
        if (!found) {
            std::cerr << "error: unknown scenario '" << opt.scenario << "'\n";
            return 2;
        }
        scenario = *found;
    } else {
        if (opt.mu.empty() || opt.a.empty() || opt.b.empty() || !opt.have_h) {
            std::cerr << "error: either --scenario or all of --mu --a --b --h are required\n";
            return 2;
        }
        scenario.name = "custom";
        scenario.params.mu = parse_rational_or_die(opt.mu, "--mu").to_double();
        scenario.params.a = parse_rational_or_die(opt.a, "--a").to_double();
        scenario.params.b = parse_rational_or_die(opt.b, "--b").to_double();
        scenario.h = opt.h;
    }
    if (!opt.config_file.empty()) apply_config_file(scenario, opt.config_file);
    if (opt.dt > 0.0) scenario.config.step = opt.dt;
    if (opt.max_time > 0.0) scenario.config.max_time = opt.max_time;
    if (opt.escape_radius > 0.0) scenario.config.escape_radius = opt.escape_radius;
    if (!opt.seeds.empty() && !parse_seed_grid(opt.seeds, scenario.grid.nx, scenario.grid.npx)) {
        std::cerr << "error: bad --seeds spec '" << opt.seeds << "' (want NxM)\n";
        return 2;
    }

    agk::ScenarioDataset data;
    try {
        data = agk::run_scenario(scenario);
    } catch (const agk::IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << "\n";
        return 3;
    }

    int escapes = 0;
    double max_err = 0.0;
    std::size_t events = 0;
    for (const auto& r : data.runs) {
        if (r.result.metrics.escaped) ++escapes;
        max_err = std::max(max_err, r.result.metrics.max_energy_error);
        events += r.result.events.size();
    }

    const std::string base = opt.out_dir + "/" + scenario.name;
    if (opt.format == "json") {
        json j;
        j["scenario"] = scenario.name;
        j["params"] = {{"mu", scenario.params.mu}, {"a", scenario.params.a}, {"b", scenario.params.b}};
        j["h"] = scenario.h;
        json runs = json::array();
        for (const auto& r : data.runs) {
            json rr;
            rr["seed_index"] = r.seed_index;
            rr["seed"] = {r.seed.x(), r.seed.y(), r.seed.px(), r.seed.py()};
            rr["escaped"] = r.result.metrics.escaped;
            if (r.result.metrics.escape_time) rr["escape_time"] = *r.result.metrics.escape_time;
            rr["crossings"] = r.result.metrics.crossings;
            if (r.result.metrics.second_integral_drift) {
                rr["second_integral_drift"] = *r.result.metrics.second_integral_drift;
            }
            rr["max_energy_error"] = r.result.metrics.max_energy_error;
            json ev = json::array();
            for (const auto& e : r.result.events) ev.push_back({e.t, e.x, e.px, e.energy_error});
            rr["events"] = ev;
            runs.push_back(rr);
        }
        j["runs"] = runs;
        agk::write_file_atomic(base + ".json", j.dump(2) + "\n");
        std::cout << "wrote " << base << ".json\n";
    } else {
        agk::write_file_atomic(base + "-events.csv", agk::events_csv(data));
        agk::write_file_atomic(base + "-metrics.csv", agk::metrics_csv(data));
        std::cout << "wrote " << base << "-events.csv and " << base << "-metrics.csv\n";
        if (opt.format == "svg") {
            agk::write_file_atomic(base + "-section.svg", agk::section_svg(data));
            std::cout << "wrote " << base << "-section.svg\n";
        }
    }
    std::cout << "seeds " << data.runs.size() << ", events " << events << ", escapes " << escapes
              << ", max energy error " << agk::format_double(max_err) << "\n";
    return 0;
}

int cmd_scan(const std::string& which, const std::string& list, const std::string& mu,
             const std::string& a, const std::string& b, double h, const std::string& seeds,
             double dt, double max_time, const std::string& out_path, const std::string& format) {
    agk::Params base;
    base.mu = parse_rational_or_die(mu, "--mu").to_double();
    base.a = parse_rational_or_die(a, "--a").to_double();
    base.b = parse_rational_or_die(b, "--b").to_double();

    std::vector<double> values;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (...) {
            std::cerr << "error: bad scan value '" << item << "'\n";
            return 2;
        }
    }
    if (values.empty()) {
        std::cerr << "error: empty scan list\n";
        return 2;
    }

    agk::GridSpec grid;
    if (!seeds.empty() && !parse_seed_grid(seeds, grid.nx, grid.npx)) {
        std::cerr << "error: bad --seeds spec '" << seeds << "'\n";
        return 2;
    }
    agk::IntegratorConfig cfg;
    if (dt > 0.0) cfg.step = dt;
    if (max_time > 0.0) cfg.max_time = max_time;

    std::string csv = "param,value,seeds,escaped,escape_fraction,mean_second_integral_drift,verdict,rule\n";
    json rows = json::array();
    for (double v : values) {
        agk::Params p = base;
        if (which == "b") {
            p.b = v;
        } else {
            p.a = v;
        }
        agk::SweepPoint pt;
        try {
            pt = agk::sweep_point(v, p, h, grid, cfg);
        } catch (const agk::IntegrationError& e) {
            std::cerr << "integration failure: " << e.what() << "\n";
            return 3;
        }
        csv += which + "," + agk::format_double(v) + "," + std::to_string(pt.seeds) + "," +
               std::to_string(pt.escaped) + "," + agk::format_double(pt.escape_fraction) + ",";
        if (pt.mean_drift) csv += agk::format_double(*pt.mean_drift);
        csv += std::string(",") + agk::to_string(pt.verdict.level) + "," + pt.verdict.rule + "\n";
        json row;
        row["param"] = which;
        row["value"] = v;
        row["seeds"] = pt.seeds;
        row["escaped"] = pt.escaped;
        row["escape_fraction"] = pt.escape_fraction;
        if (pt.mean_drift) row["mean_second_integral_drift"] = *pt.mean_drift;
        row["verdict"] = verdict_json(pt.verdict);
        rows.push_back(row);
    }
    const std::string body = format == "json" ? rows.dump(2) + "\n" : csv;
    if (out_path.empty()) {
        std::cout << body;
    } else {
        agk::write_file_atomic(out_path, body);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrability analysis and Poincare sections for the quartic symmetric Hamiltonian"};
    app.require_subcommand(1);
    // --h is an energy flag below, so help must not claim -h
    app.set_help_flag("--help", "print help");

    // classify
    auto* classify = app.add_subcommand("classify", "integrability verdict for (mu, a, b)");
    classify->set_help_flag("--help", "print help");
    std::string cl_mu, cl_a, cl_b, cl_format = "text";
    classify->add_option("--mu", cl_mu, "mu (accepts p/q)")->required();
    classify->add_option("--a", cl_a, "a (accepts p/q)")->required();
    classify->add_option("--b", cl_b, "b (accepts p/q)")->required();
    classify->add_option("--format", cl_format, "text or json");

    // darboux
    auto* darboux = app.add_subcommand("darboux", "Darboux points, spectra and table membership");
    darboux->set_help_flag("--help", "print help");
    std::string dx_a, dx_b, dx_format = "text";
    darboux->add_option("--a", dx_a, "a (accepts p/q)")->required();
    darboux->add_option("--b", dx_b, "b (accepts p/q)")->required();
    darboux->add_option("--format", dx_format, "text or json");

    // poincare
    auto* poincare = app.add_subcommand("poincare", "run a section scenario and write events/metrics");
    poincare->set_help_flag("--help", "print help");
    PoincareOptions po;
    poincare->add_option("--scenario", po.scenario, "built-in scenario name (fig1-top .. fig6-bottom)");
    poincare->add_option("--mu", po.mu, "mu");
    poincare->add_option("--a", po.a, "a");
    poincare->add_option("--b", po.b, "b");
    auto* hopt = poincare->add_option("--h", po.h, "energy level");
    poincare->add_option("--out", po.out_dir, "output directory (default .)");
    poincare->add_option("--format", po.format, "csv, json or svg");
    poincare->add_option("--dt", po.dt, "integrator step");
    poincare->add_option("--max-time", po.max_time, "integration horizon");
    poincare->add_option("--escape-radius", po.escape_radius, "escape radius");
    poincare->add_option("--seeds", po.seeds, "seed grid NxM");
    poincare->add_option("--config", po.config_file, "key = value override file");

    // scan
    auto* scan = app.add_subcommand("scan", "sweep a parameter and aggregate chaos metrics");
    scan->set_help_flag("--help", "print help");
    std::string sc_b_list, sc_a_list, sc_mu, sc_a, sc_b, sc_seeds, sc_out, sc_format = "csv";
    double sc_h = 0.0, sc_dt = 0.0, sc_maxt = 0.0;
    scan->add_option("--scan-b", sc_b_list, "comma list of b values");
    scan->add_option("--scan-a", sc_a_list, "comma list of a values");
    scan->add_option("--mu", sc_mu, "mu")->required();
    scan->add_option("--a", sc_a, "base a")->required();
    scan->add_option("--b", sc_b, "base b")->required();
    scan->add_option("--h", sc_h, "energy level")->required();
    scan->add_option("--seeds", sc_seeds, "seed grid NxM");
    scan->add_option("--dt", sc_dt, "integrator step");
    scan->add_option("--max-time", sc_maxt, "integration horizon");
    scan->add_option("--out", sc_out, "output CSV path (default stdout)");
    scan->add_option("--format", sc_format, "csv or json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->set_help_flag("--help", "print help");
    bool vf_full = false;
    verify->add_flag("--full", vf_full, "cover the full scenario registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(cl_mu, cl_a, cl_b, cl_format);
        if (darboux->parsed()) return cmd_darboux(dx_a, dx_b, dx_format);
        if (poincare->parsed()) {
            po.have_h = hopt->count() > 0;
            return cmd_poincare(po);
        }
        if (scan->parsed()) {
            if (sc_b_list.empty() == sc_a_list.empty()) {
                std::cerr << "error: exactly one of --scan-b / --scan-a is required\n";
                return 2;
            }
            const std::string which = sc_b_list.empty() ? "a" : "b";
            const std::string list = sc_b_list.empty() ? sc_a_list : sc_b_list;
            return cmd_scan(which, list, sc_mu, sc_a, sc_b, sc_h, sc_seeds, sc_dt, sc_maxt, sc_out,
                            sc_format);
        }
        if (verify->parsed()) return agk::run_acceptance_and_report(vf_full);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
