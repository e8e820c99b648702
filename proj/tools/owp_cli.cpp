#include "owp/baselines.hpp"
#include "owp/io.hpp"
#include "owp/layoutgen.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace owp;

constexpr int kExitInvalidInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

int worker_cap() {
    // Kept for interface stability; every pipeline is sequential so the
    // cap cannot change results.
    if (const char* env = std::getenv("OWP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

ChannelParams load_params(const std::string& path, double r) {
    ChannelParams p;
    p.r = r;
    if (path.empty()) return p;
    const json j = load_json(path);
    p.B = j.value("B", p.B);
    p.theta_max = j.value("theta_max", p.theta_max);
    p.A_pd = j.value("A_pd", p.A_pd);
    p.h_led_pd = j.value("h", p.h_led_pd);
    p.NEP = j.value("NEP", p.NEP);
    p.R_eff = j.value("R_eff", p.R_eff);
    p.G_tia = j.value("G_tia", p.G_tia);
    p.mu_led = j.value("mu_led", p.mu_led);
    p.r = j.value("r", p.r);
    return p;
}

PowerScheme parse_power(const std::string& s) {
    PowerScheme ps;
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--power", "expected per-led:<W> or total:<W>");
    const std::string kind = s.substr(0, colon);
    ps.watts = std::stod(s.substr(colon + 1));
    if (kind == "per-led")
        ps.kind = PowerScheme::Kind::PerLed;
    else if (kind == "total")
        ps.kind = PowerScheme::Kind::Total;
    else
        throw CLI::ValidationError("--power", "unknown scheme '" + kind + "'");
    if (ps.watts <= 0) throw CLI::ValidationError("--power", "wattage must be > 0");
    return ps;
}

struct PlanOutcome {
    Deployment dep;
    CoverageReport cov;
    ConnectivityReport backhaul; // meaningful for ctc only
    Partition part;
};

PlanOutcome run_plan(const Layout& l, const std::string& method, double r, double ht_R,
                     const GeomConfig& cfg) {
    PlanOutcome out;
    if (method == "hex") {
        HexResult h = hex_deploy(l, r, {}, cfg);
        out.dep = h.dep;
        out.cov = h.cov;
        return out;
    }
    if (method == "hexplus") {
        out.dep = hexplus_deploy(l, r, {}, cfg);
        out.cov = verify_coverage(out.dep, l, r, cfg);
        return out;
    }
    const double R = ht_R > 0 ? ht_R : default_R(r);
    out.part = hyper_triangulate(l, R);
    PVGraph g = build_pv_graph(out.part, l, r, cfg);
    if (method == "mcc") {
        out.dep = place_aps(mcc(g), l, r, cfg);
    } else if (method == "ctc") {
        ConnectivityTree t = ctc(g, l, r, cfg);
        out.dep = deploy_from_tree(std::move(t), l, r, cfg);
        out.backhaul = verify_backhaul(out.dep, l, cfg);
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    }
    out.cov = verify_coverage(out.dep, l, r, cfg);
    return out;
}

std::string command_line(int argc, char** argv) {
    std::ostringstream s;
    for (int i = 0; i < argc; ++i) s << (i ? " " : "") << argv[i];
    return s.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Optical wireless access-point placement planner"};
    app.require_subcommand(1);
    (void)worker_cap();

    std::string layout_path, out_path, method = "mcc", svg_path, dep_path;
    std::string params_path, power_spec = "per-led:40";
    double range = 3.0, ht_R = 0.0;
    int users = 10000;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* c, bool needs_layout = true) {
        if (needs_layout)
            c->add_option("--layout", layout_path, "layout JSON file")->required();
        c->add_option("--out", out_path, "output file");
    };

    // plan
    auto* plan = app.add_subcommand("plan", "compute an AP deployment");
    add_common(plan);
    plan->add_option("--range", range, "cell range r [m]")->check(CLI::PositiveNumber);
    plan->add_option("--method", method, "mcc|ctc|hex|hexplus")
        ->check(CLI::IsMember({"mcc", "ctc", "hex", "hexplus"}));
    plan->add_option("--ht-R", ht_R, "triangulation side bound (default r)");
    plan->add_option("--svg", svg_path, "also write an SVG rendering");

    // verify
    auto* verify = app.add_subcommand("verify", "check coverage/backhaul of a deployment");
    add_common(verify);
    verify->add_option("--deployment", dep_path, "deployment JSON")->required();
    verify->add_option("--range", range, "cell range override (default: deployment's)");

    // bound
    auto* bound = app.add_subcommand("bound", "certified lower bound on the AP count");
    add_common(bound);
    bound->add_option("--range", range, "cell range r [m]")->check(CLI::PositiveNumber);
    bound->add_option("--ht-R", ht_R, "triangulation side bound (default r, must be <= 2r)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo channel metrics");
    add_common(sim);
    sim->add_option("--deployment", dep_path, "deployment JSON")->required();
    sim->add_option("--users", users, "number of user positions");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--power", power_spec, "per-led:<W> or total:<W>");
    sim->add_option("--params", params_path, "channel parameter JSON overrides");
    sim->add_option("--range", range, "cell range (deployment value wins on mismatch)");

    // batch
    int batch_seeds = 10, gen_n = 30, gen_seed_pts = 0;
    double gen_size = 20.0;
    std::vector<std::string> batch_methods{"mcc", "hexplus"};
    std::vector<double> batch_ranges{3.0};
    auto* batch = app.add_subcommand("batch", "generate layouts and compare methods");
    batch->add_option("--seeds", batch_seeds, "number of layout seeds");
    batch->add_option("--seed", seed, "base seed");
    batch->add_option("--n", gen_n, "layout vertex count");
    batch->add_option("--size", gen_size, "layout bounding square [m]");
    batch->add_option("--seed-points", gen_seed_pts, "Delaunay seed points (0 = 10n)");
    batch->add_option("--methods", batch_methods, "methods to compare");
    batch->add_option("--ranges", batch_ranges, "cell ranges to sweep");
    batch->add_option("--out", out_path, "aggregate CSV path")->required();

    // gen-layout
    auto* gen = app.add_subcommand("gen-layout", "random simple polygon generator");
    gen->add_option("--n", gen_n, "boundary edge count")->required();
    gen->add_option("--size", gen_size, "bounding square [m]");
    gen->add_option("--seed-points", gen_seed_pts, "Delaunay seed points (0 = 10n)");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", out_path, "layout JSON path")->required();

    // render
    auto* render = app.add_subcommand("render", "SVG rendering of a layout");
    add_common(render);
    render->add_option("--deployment", dep_path, "overlay a deployment");
    render->add_option("--range", range, "range for the coverage overlay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }
    const std::string cmd = command_line(argc, argv);
    GeomConfig cfg;

    if (plan->parsed()) {
        std::string warn;
        const Layout l = load_layout(layout_path, &warn);
        if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
        cfg.cr_range_hint = range;
        PlanOutcome res = run_plan(l, method, range, ht_R, cfg);
        const json j = deployment_to_json(res.dep, &res.cov,
                                          method == "ctc" ? &res.backhaul : nullptr);
        if (out_path.empty()) out_path = method + "-deployment.json";
        save_json(j, out_path);
        write_manifest(out_path, cmd,
                       {{"range", range}, {"method", method}, {"ht_R", ht_R}});
        if (!svg_path.empty()) {
            RenderOptions ro;
            ro.deployment = &res.dep;
            ro.coverage = &res.cov;
            ro.partition = res.part.triangles.empty() ? nullptr : &res.part;
            ro.show_partition = ro.partition != nullptr;
            ro.backhaul = method == "ctc" ? &res.backhaul : nullptr;
            write_text(svg_path, render_svg(l, ro));
        }
        std::cout << res.dep.aps.size() << " APs, covered="
                  << (res.cov.covered ? "true" : "false") << "\n";
        return 0;
    }

    if (verify->parsed()) {
        const Layout l = load_layout(layout_path);
        Deployment d = deployment_from_json(load_json(dep_path));
        const double r = d.r > 0 ? d.r : range;
        cfg.cr_range_hint = r;
        const CoverageReport cov = verify_coverage(d, l, r, cfg);
        const ConnectivityReport bh = verify_backhaul(d, l, cfg);
        const json j = deployment_to_json(d, &cov, &bh);
        if (!out_path.empty()) {
            save_json(j, out_path);
            write_manifest(out_path, cmd, {{"range", r}});
        }
        std::cout << "covered=" << (cov.covered ? "true" : "false")
                  << " backhaul=" << (bh.connected ? "true" : "false") << "\n";
        return cov.covered ? 0 : 1;
    }

    if (bound->parsed()) {
        const Layout l = load_layout(layout_path);
        double R = ht_R > 0 ? ht_R : default_R(range);
        if (R > 2 * range)
            throw CLI::ValidationError("--ht-R", "hidden-set argument needs R <= 2r");
        cfg.cr_range_hint = range;
        const Partition part = hyper_triangulate(l, R);
        const PVGraph g = build_pv_graph(part, l, range, cfg);
        const MisResult mis = max_independent_set(g);
        json j = {{"t_max", (int)mis.ids.size()},
                  {"exact", mis.exact},
                  {"lower_bound", 1},
                  {"certified", false}};
        std::optional<HiddenSetCertificate> cert = find_hidden_points(mis.ids, g);
        bool tight = cert.has_value(); // full set found => s_max = t_max
        if (!cert) {
            HiddenSetCertificate sub = find_hidden_subset(mis.ids, g);
            if (sub.s() > 0) cert = std::move(sub);
        }
        if (cert && verify_hidden_set(cert->points, l, range, cfg)) {
            CertCheck chk{true, cert->s(), {-1, -1}};
            j["lower_bound"] = cert->s();
            j["certified"] = true;
            j["tight"] = tight && mis.exact;
            j["certificate"] = hidden_certificate_to_json(*cert, chk);
        }
        if (out_path.empty()) out_path = "bound.json";
        save_json(j, out_path);
        write_manifest(out_path, cmd, {{"range", range}, {"ht_R", R}});
        std::cout << "lower_bound=" << j["lower_bound"].get<int>()
                  << " t_max=" << mis.ids.size() << (mis.exact ? "" : " (heuristic)")
                  << "\n";
        return 0;
    }

    if (sim->parsed()) {
        const Layout l = load_layout(layout_path);
        const Deployment d = deployment_from_json(load_json(dep_path));
        double r = d.r > 0 ? d.r : range;
        if (d.r > 0 && sim->count("--range") && std::abs(range - d.r) > 1e-12) {
            std::cerr << "warning: --range " << range << " differs from deployment r "
                      << d.r << "; using the deployment value\n";
        }
        const ChannelParams p = load_params(params_path, r);
        const PowerScheme scheme = parse_power(power_spec);
        const Metrics m = simulate(l, d, p, scheme, users, seed, cfg);
        if (out_path.empty()) out_path = "metrics.json";
        save_json(metrics_to_json(m, p, scheme, users, seed), out_path);
        std::filesystem::path base = out_path;
        base.replace_extension();
        write_cdf_csv(m.rate_cdf, base.string() + "-rate-cdf.csv");
        write_cdf_csv(m.illum_cdf, base.string() + "-illum-cdf.csv");
        write_manifest(out_path, cmd,
                       {{"users", users}, {"seed", seed}, {"power", power_spec}});
        std::cout << "R_min=" << m.R_min << " R_mean=" << m.R_mean
                  << " E_avg=" << m.E_avg << "\n";
        return 0;
    }

    if (batch->parsed()) {
        std::ostringstream csv;
        csv.precision(12);
        csv << "seed,range,method,ap_count,covered,outage_fraction\n";
        for (int i = 0; i < batch_seeds; ++i) {
            LayoutGenConfig gc;
            gc.n = gen_n;
            gc.size = gen_size;
            gc.n_seed_points = gen_seed_pts;
            gc.seed = seed + (std::uint64_t)i;
            const Layout l = gen_layout(gc);
            for (double r : batch_ranges)
                for (const std::string& meth : batch_methods) {
                    GeomConfig rcfg;
                    rcfg.cr_range_hint = r;
                    try {
                        PlanOutcome res = run_plan(l, meth, r, 0.0, rcfg);
                        csv << gc.seed << ',' << r << ',' << meth << ','
                            << res.dep.aps.size() << ','
                            << (res.cov.covered ? 1 : 0) << ','
                            << res.cov.outage_fraction << '\n';
                    } catch (const std::exception& e) {
                        csv << gc.seed << ',' << r << ',' << meth << ",-1,0,1\n";
                        std::cerr << "seed " << gc.seed << " " << meth
                                  << " failed: " << e.what() << "\n";
                    }
                }
        }
        write_text(out_path, csv.str());
        write_manifest(out_path, cmd, {{"seeds", batch_seeds}, {"base_seed", seed}});
        return 0;
    }

    if (gen->parsed()) {
        LayoutGenConfig gc;
        gc.n = gen_n;
        gc.size = gen_size;
        gc.n_seed_points = gen_seed_pts;
        gc.seed = seed;
        const Layout l = gen_layout(gc);
        save_layout(l, out_path);
        write_manifest(out_path, cmd,
                       {{"n", gen_n}, {"size", gen_size}, {"seed", seed}});
        std::cout << "wrote " << out_path << " (" << l.size() << " vertices)\n";
        return 0;
    }

    if (render->parsed()) {
        const Layout l = load_layout(layout_path);
        RenderOptions ro;
        Deployment d;
        CoverageReport cov;
        ConnectivityReport bh;
        if (!dep_path.empty()) {
            d = deployment_from_json(load_json(dep_path));
            const double r = d.r > 0 ? d.r : range;
            cfg.cr_range_hint = r;
            cov = verify_coverage(d, l, r, cfg);
            bh = verify_backhaul(d, l, cfg);
            ro.deployment = &d;
            ro.coverage = &cov;
            ro.backhaul = &bh;
        }
        if (out_path.empty()) out_path = l.name() + ".svg";
        write_text(out_path, render_svg(l, ro));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const owp::DisconnectedAreaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
