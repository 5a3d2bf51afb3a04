#include "omega/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace omega {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// three-term recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (t * p0 - p1) / (t * t - 1.0);
            double dt = p0 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * pp * pp);
    }
}

struct KahanC {
    Complex sum{0.0, 0.0};
    Complex carry{0.0, 0.0};

    void add(Complex v) {
        Complex y = v - carry;
        Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

SphereQuadrature SphereQuadrature::make(int radial_order, int angular_count) {
    if (radial_order < 4 || angular_count < 4)
        throw std::domain_error("SphereQuadrature: orders must be at least 4");
    SphereQuadrature q;
    std::vector<double> x, w;
    gauss_legendre(radial_order, x, w);
    q.radial_nodes.resize(radial_order);
    q.radial_weights.resize(radial_order);
    for (int i = 0; i < radial_order; ++i) {
        q.radial_nodes[i] = 0.5 * (x[i] + 1.0);
        q.radial_weights[i] = 0.5 * w[i];
    }
    q.angular = angular_count;
    return q;
}

OmegaPoint SphereQuadrature::node(int r, int a) const {
    double u = radial_nodes[r];
    double s = u / (1.0 - u);
    double t = 2.0 * std::numbers::pi * a / angular;
    Complex z = std::polar(std::sqrt(s), t);
    return rotated_diagonal(ExtendedComplex{z});
}

Complex inner_product(const Evaluator& F, const Evaluator& G, const SphereQuadrature& q) {
    KahanC total;
    for (size_t r = 0; r < q.radial_nodes.size(); ++r) {
        KahanC ring;
        for (int a = 0; a < q.angular; ++a) {
            OmegaPoint p = q.node(static_cast<int>(r), a);
            ring.add(F(p) * std::conj(G(p)));
        }
        total.add(q.radial_weights[r] * ring.sum / static_cast<double>(q.angular));
    }
    return total.sum;
}

Complex integrate_diagonal(const Evaluator& h, const SphereQuadrature& q) {
    KahanC total;
    for (size_t r = 0; r < q.radial_nodes.size(); ++r) {
        KahanC ring;
        for (int a = 0; a < q.angular; ++a) ring.add(h(q.node(static_cast<int>(r), a)));
        total.add(q.radial_weights[r] * ring.sum / static_cast<double>(q.angular));
    }
    return total.sum;
}

Rat gram_closed_form(long m, long n) {
    long an = std::labs(n);
    if (an > m) return rat(0);
    Rat r = binomial(m, an) / (Rat(2 * m + 1) * binomial(m + an, an));
    r.canonicalize();
    return r;
}

double gram_check(long m_max, const SphereQuadrature& q) {
    // cache mode values on the grid: modes indexed by (m, n), |n| <= m <= m_max
    std::vector<PFMIndex> modes;
    for (long m = 0; m <= m_max; ++m)
        for (long n = -m; n <= m; ++n) modes.push_back({m, n});
    size_t nr = q.radial_nodes.size();
    size_t na = static_cast<size_t>(q.angular);
    std::vector<std::vector<Complex>> vals(modes.size(), std::vector<Complex>(nr * na));
    for (size_t k = 0; k < modes.size(); ++k)
        for (size_t r = 0; r < nr; ++r)
            for (size_t a = 0; a < na; ++a)
                vals[k][r * na + a] = pfm_eval(modes[k], q.node(static_cast<int>(r), static_cast<int>(a)));

    double worst = 0.0;
    for (size_t i = 0; i < modes.size(); ++i) {
        for (size_t j = i; j < modes.size(); ++j) {
            KahanC total;
            for (size_t r = 0; r < nr; ++r) {
                KahanC ring;
                for (size_t a = 0; a < na; ++a)
                    ring.add(vals[i][r * na + a] * std::conj(vals[j][r * na + a]));
                total.add(q.radial_weights[r] * ring.sum / static_cast<double>(na));
            }
            Complex expect{0.0, 0.0};
            if (modes[i].m == modes[j].m && modes[i].n == modes[j].n)
                expect = to_double(gram_closed_form(modes[i].m, modes[i].n));
            worst = std::max(worst, std::abs(total.sum - expect));
        }
    }
    return worst;
}

Complex schauder_coefficient(const Evaluator& F, long m, long n, const SphereQuadrature& q) {
    long an = std::labs(n);
    if (an > m) throw std::domain_error("schauder_coefficient: |n| > m");
    double scale = to_double(Rat(2 * m + 1) * binomial(m + an, an) / binomial(m, an));
    return scale * inner_product(F, pfm_evaluator({m, n}), q);
}

std::vector<OmegaPoint> residual_grid() {
    std::vector<OmegaPoint> grid;
    grid.reserve(100);
    for (int i = 0; i < 10; ++i) {
        double u = (i + 0.5) / 10.0;
        double s = u / (1.0 - u);
        for (int a = 0; a < 10; ++a) {
            double t = 2.0 * std::numbers::pi * (a + 0.13) / 10.0;
            grid.push_back(rotated_diagonal(ExtendedComplex{std::polar(std::sqrt(s), t)}));
        }
    }
    return grid;
}

CoefficientTable decompose(const Evaluator& F, long m_max, const SphereQuadrature& q) {
    CoefficientTable table;
    table.max_m = m_max;
    table.radial_order = static_cast<int>(q.radial_nodes.size());
    table.angular = q.angular;
    for (long m = 0; m <= m_max; ++m)
        for (long n = -m; n <= m; ++n)
            table.entries.push_back({m, n, schauder_coefficient(F, m, n, q)});
    double worst = 0.0;
    for (const OmegaPoint& p : residual_grid())
        worst = std::max(worst, std::abs(F(p) - reconstruct(table, p)));
    table.residual = worst;
    return table;
}

Complex reconstruct(const CoefficientTable& table, const OmegaPoint& pt) {
    KahanC acc;
    for (const auto& e : table.entries) acc.add(e.c * pfm_eval({e.m, e.n}, pt));
    return acc.sum;
}

}  // namespace omega
