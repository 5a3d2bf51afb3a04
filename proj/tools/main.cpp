#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace omega::cli;

int main(int argc, char** argv) {
    CLI::App app{"Poisson Fourier modes on Omega: evaluation, identity verification, spectral "
                 "decomposition"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--radial-order", cfg.radial_order, "Gauss-Legendre order of the radial rule");
    app.add_option("--angular-order", cfg.angular_order, "node count of the angular trapezoid rule");
    app.add_option("--tol", cfg.tol, "tolerance override for verification suites");
    app.add_option("--max-m", cfg.max_m, "maximum mode degree");
    app.add_option("--seed", cfg.seed, "seed for sample-based checks");
    app.add_option("--format", cfg.format, "output format (json|csv)");

    std::string target, point, point2, suite, fspec, out_path, which, restrict_to, psi, family =
        "direct";
    long m = 0, n = 0;

    app.fallthrough();  // global options may follow the subcommand name

    CLI::App* eval = app.add_subcommand("eval", "evaluate a catalogue function at a point");
    eval->fallthrough();
    eval->add_option("target", target, "pfm|f|csh|zonal")->required();
    eval->add_option("--m", m, "degree (or first f index)");
    eval->add_option("--n", n, "homogeneity (or second f index)");
    eval->add_option("--point", point, "z,w (x,y,z for csh; omit for csh to export the polynomial)");
    eval->add_option("--point2", point2, "second point for zonal");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "cid|l1|whipple|gram|eigen|basis|zonal|csh|all")->required();

    CLI::App* dec = app.add_subcommand("decompose", "Schauder coefficients of a catalogue function");
    dec->fallthrough();
    dec->add_option("--f", fspec, "function spec, e.g. pfm:2,1 | f:1,1 | geom | exp:6")->required();
    dec->add_option("--out", out_path, "also write the coefficient table to this file");

    CLI::App* table = app.add_subcommand("table", "emit coefficient/Gram tables");
    table->fallthrough();
    table->add_option("which", which, "basis-change|gram")->required();
    table->add_option("--m", cfg.max_m, "maximum mode degree of the table");

    CLI::App* zonal = app.add_subcommand("zonal", "evaluate the zonal harmonic Z_m");
    zonal->fallthrough();
    zonal->add_option("--m", m, "degree")->required();
    zonal->add_option("--p1", point, "first point z,w (or z for restrictions)")->required();
    zonal->add_option("--p2", point2, "second point u,v (or u for restrictions)")->required();
    zonal->add_option("--restrict", restrict_to, "sphere|disk");

    CLI::App* transform = app.add_subcommand("transform", "apply a Moebius map of Omega");
    transform->fallthrough();
    transform->add_option("--psi", psi, "matrix entries a,b,c,d")->required();
    transform->add_option("--family", family, "direct|swapped");
    transform->add_option("--point", point, "z,w")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (eval->parsed()) return cmd_eval(target, m, n, point, point2, cfg);
        if (verify->parsed()) return cmd_verify(suite, cfg);
        if (dec->parsed()) return cmd_decompose(fspec, cfg, out_path);
        if (table->parsed()) return cmd_table(which, cfg);
        if (zonal->parsed()) return cmd_zonal(m, point, point2, restrict_to, cfg);
        if (transform->parsed()) return cmd_transform(psi, family, point, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitBadArgs;
}
