#include "commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "omega/basischange.hpp"
#include "omega/catalogue.hpp"
#include "omega/hypergeom.hpp"
#include "omega/jacobi.hpp"
#include "omega/moebius.hpp"
#include "omega/pfm.hpp"
#include "omega/quadrature.hpp"
#include "omega/sampling.hpp"
#include "omega/sphere.hpp"
#include "omega/zonal.hpp"
#include "point_syntax.hpp"

namespace omega::cli {

namespace {

using nlohmann::json;

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

struct SuiteReport {
    long cases = 0;
    long failures = 0;
    double max_error = 0.0;

    void tally(bool ok, double err = 0.0) {
        ++cases;
        if (!ok) ++failures;
        max_error = std::max(max_error, err);
    }
    void merge(const SuiteReport& o) {
        cases += o.cases;
        failures += o.failures;
        max_error = std::max(max_error, o.max_error);
    }
};

SphereQuadrature quad_of(const RunConfig& cfg) {
    return SphereQuadrature::make(cfg.radial_order, cfg.angular_order);
}

long pick_max_m(const RunConfig& cfg, long fallback) { return cfg.max_m >= 0 ? cfg.max_m : fallback; }

double pick_tol(const RunConfig& cfg, double fallback) { return cfg.tol > 0.0 ? cfg.tol : fallback; }

// --- verification suites -------------------------------------------------

SuiteReport suite_cid(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 25);
    for (long m = 0; m <= mm; ++m) r.tally(cid_check(m));
    return r;
}

SuiteReport suite_l1(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 12);
    for (long m = 0; m <= mm; ++m) {
        for (long n = 0; n <= m; ++n) {
            for (long d = 0; d <= n; ++d) {
                for (long s = 0; s <= m; ++s) r.tally(verify_L1(m, n, d, s));
                for (long s = 0; s <= n; ++s) {
                    if (n >= d + s) r.tally(t1_check(m, n, d, s));
                    if (n <= d + s) r.tally(t2_check(m, n, d, s));
                    if (n == d + s)
                        r.tally(t1_check(m, n, d, s) == t2_check(m, n, d, s));
                }
            }
        }
    }
    return r;
}

SuiteReport suite_whipple(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 10);
    // Raynal two-term relation on the integer family
    for (long m = 0; m <= mm; ++m)
        for (long n = 0; n <= m; ++n)
            for (long d = 0; d <= n; ++d)
                for (long s = 0; d + s <= n; ++s) r.tally(raynal_check(m, n, d, s));
    // parameter solve round trip on a seeded set
    Sampler smp(cfg.seed);
    for (int trial = 0; trial < 50; ++trial) {
        Rat a = rat(static_cast<long>(smp.uniform(-6, 7)));
        Rat b = rat(static_cast<long>(smp.uniform(-6, 7)));
        Rat c = rat(static_cast<long>(smp.uniform(-6, 7)));
        Rat e = rat(static_cast<long>(smp.uniform(1, 8)));
        Rat f = rat(static_cast<long>(smp.uniform(1, 8)));
        WhippleParams wp = whipple_solve(a, b, c, e, f);
        Rat sum = wp.r[0] + wp.r[1] + wp.r[2] + wp.r[3] + wp.r[4] + wp.r[5];
        bool ok = sum == 0 && wp.alpha(1, 4, 5) == a && wp.alpha(2, 4, 5) == b &&
                  wp.alpha(3, 4, 5) == c && wp.beta(4, 0) == e && wp.beta(5, 0) == f &&
                  wp.alpha(1, 2, 3) == e + f - a - b - c;
        r.tally(ok);
    }
    // Chu-Vandermonde and Gauss families
    for (long k = 0; k <= 6; ++k)
        for (long b = 1; b <= 5; ++b)
            for (long c = 1; c <= 5; ++c) {
                r.tally(chu_vandermonde_check(k, rat(b), rat(c)));
                r.tally(gauss_sum_check(-k, rat(b), rat(c)));
            }
    // shift reduction on the degree-lowering parameter family
    for (long m = 2; m <= std::min(mm, 7L); ++m)
        for (long n = 0; n <= m; ++n)
            for (long d = 0; d <= n; ++d)
                for (long s = 0; d + s <= n; ++s) {
                    TerminatingPFQ series{{rat(s - n), rat(2 * m - n - s + 1), rat(m - d + 1)},
                                          {rat(2 * m - n + 2), rat(m - n + 1)},
                                          Gaussian{rat(1)}};
                    r.tally(shift_reduce_check(series, n - d));
                }
    // two-term 3F2 transformation on seeded terminating tuples
    for (int trial = 0; trial < 200; ++trial) {
        long k = static_cast<long>(smp.uniform(0, 5));
        Rat a = rat(-k);
        Rat b = rat(static_cast<long>(smp.uniform(-4, 7)));
        Rat c = rat(static_cast<long>(smp.uniform(-4, 7)));
        Rat e = rat(static_cast<long>(smp.uniform(1, 8)));
        Rat f = rat(static_cast<long>(smp.uniform(1, 8)));
        if (pochhammer(f, k) == 0) continue;
        Rat low2 = e + f - b - c;
        long nt = k;
        for (Rat up : {e - b, e - c})
            if (is_nonpositive_integer(up)) nt = std::min(nt, -to_long(up));
        bool pole = false;
        for (long j = 0; j < nt; ++j)
            if (low2 + j == 0) pole = true;
        if (pole) continue;
        r.tally(cor335_check(a, b, c, e, f));
    }
    return r;
}

SuiteReport suite_gram(const RunConfig& cfg) {
    SuiteReport r;
    double tol = pick_tol(cfg, 1e-10);
    double dev = gram_check(pick_max_m(cfg, 6), quad_of(cfg));
    r.tally(dev < tol, dev);
    return r;
}

SuiteReport suite_eigen(const RunConfig& cfg) {
    SuiteReport r;
    double tol = pick_tol(cfg, 1e-5);
    Sampler smp(cfg.seed);
    std::vector<OmegaPoint> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(smp.omega_point_in_disk());
    long mm = pick_max_m(cfg, 6);
    for (long m = 0; m <= mm; ++m)
        for (long n = -m; n <= m; ++n) {
            double res = eigen_residual({m, n}, pts);
            r.tally(res < tol, res);
        }
    return r;
}

SuiteReport suite_basis(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 12);
    r.tally(roundtrip_check(mm));
    r.tally(a_bound_check(std::max(mm, 15L)));
    r.tally(cid_check(std::min(mm, 15L)));
    // expansion rows reproduce the mode pointwise; sample radius keeps the
    // row terms small enough that the 1e-11 relative budget is meaningful
    Sampler smp(cfg.seed);
    std::vector<OmegaPoint> pts;
    for (int i = 0; i < 50; ++i) pts.push_back(smp.omega_point_in_disk(0.35, 0.4));
    for (long m = 0; m <= std::min(mm, 12L); ++m)
        for (long n = -m; n <= m; ++n) {
            BasisChangeRow row = pfm_in_f(m, n);
            double worst = 0.0;
            for (const OmegaPoint& p : pts) {
                Complex direct = pfm_eval({m, n}, p);
                Complex viaf{0.0, 0.0};
                for (const BasisChangeTerm& t : row.terms)
                    viaf += to_double(t.coeff) * f_pq_eval(t.i, t.j, p);
                worst = std::max(worst, std::abs(direct - viaf) / (1.0 + std::abs(direct)));
            }
            r.tally(worst < 1e-11, worst);
        }
    // contour coefficients recover the exact rows
    for (long m = 0; m <= 2; ++m)
        for (long n = -m; n <= m; ++n) {
            BasisChangeRow row = pfm_in_f(m, n);
            double worst = 0.0;
            for (long p = 0; p <= 3; ++p)
                for (long q = 0; q <= 3; ++q) {
                    Complex num = b_coeff_numeric(pfm_evaluator({m, n}), p, q, 1.0, 1.0, 128);
                    Complex expect{0.0, 0.0};
                    for (const BasisChangeTerm& t : row.terms)
                        if (t.i == p && t.j == q) expect = to_double(t.coeff);
                    worst = std::max(worst, std::abs(num - expect));
                }
            r.tally(worst < 1e-9, worst);
        }
    return r;
}

SuiteReport suite_zonal(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 8);
    Sampler smp(cfg.seed);
    // sum route against pullback route
    for (long m = 0; m <= mm; ++m) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            OmegaPoint p1 = smp.omega_point_in_disk(0.35, 0.4);
            OmegaPoint p2 = smp.omega_point_in_disk(0.35, 0.4);
            worst = std::max(worst, std::abs(zonal_sum(m, p1, p2) - zonal_pullback(m, p1, p2)));
        }
        r.tally(worst < 1e-10, worst);
        OmegaPoint p = smp.omega_point_in_disk();
        double defin = std::abs(zonal_pullback(m, p, p) - static_cast<double>(2 * m + 1));
        r.tally(defin < 1e-10, defin);
    }
    // invariance under seeded maps
    std::vector<std::pair<OmegaPoint, OmegaPoint>> pairs;
    for (int i = 0; i < 10; ++i)
        pairs.emplace_back(smp.omega_point_in_disk(0.5, 0.3), smp.omega_point_in_disk(0.5, 0.3));
    for (int t = 0; t < 50; ++t) {
        MoebiusMap T = smp.moebius_map();
        while (!well_conditioned(T, pairs)) T = smp.moebius_map();
        double res = zonal_invariance_residual(std::min(mm, 5L), T, pairs);
        r.tally(res < 1e-9, res);
    }
    // sphere restriction bound and reality
    for (long m = 0; m <= std::max(mm, 10L); ++m) {
        double bound = 2.0 * m + 1.0 + 1e-9;
        bool ok = true;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j) {
                ExtendedComplex z{Complex{-2.0 + 4.0 * i / 49.0, 1.3}};
                ExtendedComplex u{Complex{-2.0 + 4.0 * j / 49.0, -0.7}};
                if (std::abs(zonal_sphere(m, z, u)) > bound) ok = false;
            }
        r.tally(ok);
    }
    // disk restriction: definiteness and automorphism invariance
    for (long m = 0; m <= std::min(mm, 5L); ++m) {
        Complex a = smp.disk(0.3);
        auto blaschke = [a](Complex zz) { return (a - zz) / (1.0 - std::conj(a) * zz); };
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            Complex z = smp.disk(0.5), u = smp.disk(0.5);
            worst = std::max(worst, std::abs(zonal_disk(m, z, u) -
                                             zonal_disk(m, blaschke(z), blaschke(u))));
        }
        r.tally(worst < 1e-9, worst);
        Complex z = smp.disk(0.8);
        r.tally(std::abs(zonal_disk(m, z, z) - (2.0 * m + 1.0)) < 1e-10);
    }
    return r;
}

SuiteReport suite_csh(const RunConfig& cfg) {
    SuiteReport r;
    long mm = pick_max_m(cfg, 10);
    for (long m = 0; m <= mm; ++m)
        for (long n = -m; n <= m; ++n) {
            TrivariatePoly h = harmonic_polynomial(m, n);
            r.tally(laplacian_C3(h).is_zero() && h.is_homogeneous(m));
        }
    Sampler smp(cfg.seed);
    // three-way oracle agreement on the sphere
    for (long m = 0; m <= std::min(mm, 5L); ++m)
        for (long n = -m; n <= m; ++n) {
            TrivariatePoly h = harmonic_polynomial(m, n);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
                SpherePointC x = stereo(smp.omega_point_wide(1.5, 0.3));
                Complex a = spfm_eval({m, n}, x);
                Complex b = csh_closed_form({m, n}, x);
                Complex c = h.eval(x.z1, x.z2, x.z3);
                worst = std::max(worst, std::max(std::abs(a - b), std::abs(a - c)));
            }
            r.tally(worst < 1e-10, worst);
        }
    // stereo round trips, including the infinity charts
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        OmegaPoint p;
        int mode = i % 5;
        if (mode == 0) p = {ExtendedComplex{smp.disk(2.0)}, ExtendedComplex::infinity()};
        else if (mode == 1) p = {ExtendedComplex::infinity(), ExtendedComplex{smp.disk(2.0)}};
        else if (mode == 2) p = {ExtendedComplex::infinity(), ExtendedComplex::infinity()};
        else p = smp.omega_point_wide(2.5, 0.05);
        if ((mode == 0 && p.z.is_zero()) || (mode == 1 && p.w.is_zero())) continue;
        SpherePointC s = stereo(p);
        OmegaPoint back = stereo_inv(s);
        double err = std::abs(s.sphere_defect());
        auto coord_err = [](const ExtendedComplex& a, const ExtendedComplex& b) {
            if (a.inf || b.inf) return (a.inf && b.inf) ? 0.0 : 1.0;
            return std::abs(a.v - b.v) / (1.0 + std::abs(a.v));
        };
        err = std::max({err, coord_err(p.z, back.z), coord_err(p.w, back.w)});
        worst = std::max(worst, err);
    }
    r.tally(worst < 1e-12, worst);
    // hyperboloid sheets
    std::vector<SpherePointC> lower, upper;
    for (int i = 0; i < 50; ++i) {
        double t = smp.uniform(0.0, 1.5), phi = smp.uniform(0.0, 2.0 * M_PI);
        Complex ia{0.0, std::sinh(t) * std::cos(phi)}, ib{0.0, std::sinh(t) * std::sin(phi)};
        lower.push_back({ia, ib, -std::cosh(t)});
        upper.push_back({ia, ib, std::cosh(t)});
    }
    r.tally(hyperboloid_check(lower));
    r.tally(hyperboloid_check(upper));
    // spherical Gram through the stereographic composition
    double dev = sphere_gram_check(std::min(mm, 5L), quad_of(cfg));
    r.tally(dev < pick_tol(cfg, 1e-10), dev);
    return r;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
    if (suite == "cid") return suite_cid(cfg);
    if (suite == "l1") return suite_l1(cfg);
    if (suite == "whipple") return suite_whipple(cfg);
    if (suite == "gram") return suite_gram(cfg);
    if (suite == "eigen") return suite_eigen(cfg);
    if (suite == "basis") return suite_basis(cfg);
    if (suite == "zonal") return suite_zonal(cfg);
    if (suite == "csh") return suite_csh(cfg);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

int cmd_eval(const std::string& target, long m, long n, const std::string& point,
             const std::string& point2, const RunConfig& cfg) {
    json out;
    if (point.empty() && target != "csh")
        throw std::invalid_argument("--point is required for target '" + target + "'");
    if (target == "pfm" || target == "f") {
        OmegaPoint p = parse_point(point);
        if (!in_omega(p)) throw std::domain_error("point outside Omega");
        Complex v = (target == "pfm") ? pfm_eval({m, n}, p)
                                      : f_pq_eval(m, n, p);  // for f, (m, n) carry (p, q)
        out = complex_json(v);
    } else if (target == "csh") {
        if (point.empty()) {
            // exact harmonic-polynomial export
            TrivariatePoly h = harmonic_polynomial(m, n);
            json terms = json::array();
            for (const auto& [e, c] : h.terms)
                terms.push_back(json{{"i", e[0]},
                                     {"j", e[1]},
                                     {"k", e[2]},
                                     {"re", to_double(c.re)},
                                     {"im", to_double(c.im)}});
            std::cout << terms.dump() << "\n";
            return kExitOk;
        }
        std::vector<ExtendedComplex> comps = parse_extended_list(point);
        if (comps.size() != 3 || comps[0].inf || comps[1].inf || comps[2].inf)
            throw std::invalid_argument("csh expects --point x,y,z with finite components");
        SpherePointC s{comps[0].v, comps[1].v, comps[2].v};
        out = complex_json(csh_closed_form({m, n}, s));
    } else if (target == "zonal") {
        OmegaPoint p1 = parse_point(point), p2 = parse_point(point2);
        out = complex_json(zonal_sum(m, p1, p2));
    } else {
        throw std::invalid_argument("unknown eval target '" + target + "'");
    }
    std::cout << out.dump() << "\n";
    (void)cfg;
    return kExitOk;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    static const char* kSuites[] = {"cid", "l1", "whipple", "gram", "eigen", "basis", "zonal", "csh"};
    SuiteReport total;
    json out;
    if (suite == "all") {
        json details = json::array();
        for (const char* s : kSuites) {
            SuiteReport r = run_suite(s, cfg);
            details.push_back(json{{"suite", s},
                                   {"cases", r.cases},
                                   {"failures", r.failures},
                                   {"max_error", r.max_error}});
            total.merge(r);
        }
        out = json{{"suite", "all"},
                   {"cases", total.cases},
                   {"failures", total.failures},
                   {"max_error", total.max_error},
                   {"suites", details}};
    } else {
        total = run_suite(suite, cfg);
        out = json{{"suite", suite},
                   {"cases", total.cases},
                   {"failures", total.failures},
                   {"max_error", total.max_error}};
    }
    std::cout << out.dump() << "\n";
    return total.failures == 0 ? kExitOk : kExitFailures;
}

int cmd_decompose(const std::string& fspec, const RunConfig& cfg, const std::string& out_path) {
    Evaluator F = catalogue_function(fspec);
    long mm = pick_max_m(cfg, 8);
    CoefficientTable table = decompose(F, mm, quad_of(cfg));
    json entries = json::array();
    for (const auto& e : table.entries)
        entries.push_back(json{{"m", e.m}, {"n", e.n}, {"re", e.c.real()}, {"im", e.c.imag()}});
    json out{{"max_m", table.max_m},
             {"radial_order", table.radial_order},
             {"angular_order", table.angular},
             {"entries", entries},
             {"residual", table.residual}};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        f << out.dump(2) << "\n";
    }
    std::cout << out.dump() << "\n";
    std::cerr << "reconstruction residual: " << table.residual << "\n";
    return kExitOk;
}

int cmd_table(const std::string& which, const RunConfig& cfg) {
    if (which == "gram") {
        long mm = pick_max_m(cfg, 4);
        SphereQuadrature q = quad_of(cfg);
        std::printf("m,n,p,q,re,im\n");
        for (long m = 0; m <= mm; ++m)
            for (long n = -m; n <= m; ++n)
                for (long p = 0; p <= mm; ++p)
                    for (long qq = -p; qq <= p; ++qq) {
                        Complex v = inner_product(pfm_evaluator({m, n}), pfm_evaluator({p, qq}), q);
                        std::printf("%ld,%ld,%ld,%ld,%.17g,%.17g\n", m, n, p, qq, v.real(),
                                    v.imag());
                    }
        return kExitOk;
    }
    if (which == "basis-change") {
        long mm = pick_max_m(cfg, 8);
        if (cfg.format == "csv") {
            std::printf("m,n,p,q,num,den\n");
            for (long m = 0; m <= mm; ++m)
                for (long n = -m; n <= m; ++n)
                    for (const BasisChangeTerm& t : pfm_in_f(m, n).terms)
                        std::printf("%ld,%ld,%ld,%ld,%s,%s\n", m, n, t.i, t.j,
                                    t.coeff.get_num().get_str().c_str(),
                                    t.coeff.get_den().get_str().c_str());
            return kExitOk;
        }
        json rows = json::array();
        for (long m = 0; m <= mm; ++m)
            for (long n = -m; n <= m; ++n) {
                json terms = json::array();
                for (const BasisChangeTerm& t : pfm_in_f(m, n).terms)
                    terms.push_back(json{{"p", t.i}, {"q", t.j}, {"coeff", to_string(t.coeff)}});
                rows.push_back(json{{"m", m}, {"n", n}, {"terms", terms}});
            }
        std::cout << rows.dump() << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown table '" + which + "'");
}

int cmd_zonal(long m, const std::string& p1, const std::string& p2,
              const std::string& restrict_to, const RunConfig& cfg) {
    (void)cfg;
    json out;
    if (restrict_to.empty()) {
        OmegaPoint a = parse_point(p1), b = parse_point(p2);
        out = complex_json(zonal_sum(m, a, b));
    } else if (restrict_to == "sphere") {
        out = json{{"value", zonal_sphere(m, parse_extended(p1), parse_extended(p2))}};
    } else if (restrict_to == "disk") {
        out = json{{"value", zonal_disk(m, parse_complex(p1), parse_complex(p2))}};
    } else {
        throw std::invalid_argument("--restrict must be sphere or disk");
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_transform(const std::string& psi, const std::string& family, const std::string& point,
                  const RunConfig& cfg) {
    (void)cfg;
    std::vector<ExtendedComplex> entries = parse_extended_list(psi);
    if (entries.size() != 4 || entries[0].inf || entries[1].inf || entries[2].inf || entries[3].inf)
        throw std::invalid_argument("--psi expects four finite complex entries a,b,c,d");
    MoebiusMap T{SphereMoebius{entries[0].v, entries[1].v, entries[2].v, entries[3].v},
                 Family::direct};
    if (T.psi.det() == Complex{0.0, 0.0}) throw std::invalid_argument("--psi matrix is singular");
    if (family == "swapped") T.family = Family::swapped;
    else if (family != "direct") throw std::invalid_argument("--family must be direct or swapped");
    OmegaPoint p = parse_point(point);
    if (!in_omega(p)) throw std::domain_error("point outside Omega");
    OmegaPoint img = apply(T, p);
    json out{{"z", format_extended(img.z)}, {"w", format_extended(img.w)}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace omega::cli
