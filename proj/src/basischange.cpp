#include "omega/basischange.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace omega {

namespace {

// Pascal table of C(a, k) for 0 <= a <= amax, 0 <= k <= a.
struct BinomTable {
    std::vector<std::vector<Int>> rows;

    explicit BinomTable(long amax) {
        rows.resize(amax + 1);
        for (long a = 0; a <= amax; ++a) {
            rows[a].resize(a + 1);
            rows[a][0] = 1;
            rows[a][a] = 1;
            for (long k = 1; k < a; ++k) rows[a][k] = rows[a - 1][k - 1] + rows[a - 1][k];
        }
    }

    Int get(long a, long k) const {
        if (k < 0 || k > a) return Int(0);
        return rows[a][k];
    }
};

}  // namespace

BasisChangeRow pfm_in_f(long m, long n) {
    BasisChangeRow row{m, n, {}};
    long an = std::labs(n);
    if (an > m) return row;  // the zero mode
    for (long j = 0; j <= m - an; ++j) {
        Rat c = binomial(m, an + j) * binomial(m + an + j, j);
        if (n % 2 != 0) c = -c;
        if (n >= 0)
            row.terms.push_back({j, j + n, c});
        else
            row.terms.push_back({j + an, j, c});
    }
    return row;
}

Rat a_coefficient(long s, long m, long n) {
    Rat c = binomial(m, s) / binomial(2 * m - s, n) * rat(2 * m - 2 * s + 1, 2 * m - s + 1);
    c.canonicalize();
    return (s % 2 != 0) ? Rat(-c) : c;
}

BasisChangeRow f_in_pfm(long p, long q) {
    if (p < 0 || q < 0) throw std::domain_error("f_in_pfm: negative index");
    BasisChangeRow row{p, q, {}};
    bool swapped = p > q;
    long n = swapped ? q : p;  // z-power in the p <= q normal form
    long m = swapped ? p : q;
    for (long s = 0; s <= n; ++s) {
        Rat c = a_coefficient(s, m, n);
        if ((m - n) % 2 != 0) c = -c;
        long mode_n = m - n;
        row.terms.push_back({m - s, swapped ? -mode_n : mode_n, c});
    }
    return row;
}

Rat cid_entry(long m, long n, long d) {
    BinomTable tab(2 * m);
    Rat tot(0);
    for (long s = 0; s <= n; ++s) {
        Rat outer = Rat(tab.get(m, s)) / Rat(tab.get(2 * m - s, n)) *
                    rat(2 * m - 2 * s + 1, 2 * m - s + 1);
        outer.canonicalize();
        Rat inner(0);
        for (long t = 0; t <= d; ++t) {
            Rat term(tab.get(s, t) * tab.get(m - s, d - t + m - n) * tab.get(m - s, d - t));
            inner += (t % 2 != 0) ? Rat(-term) : term;
        }
        Rat contrib = outer * inner;
        tot += (s % 2 != 0) ? Rat(-contrib) : contrib;
    }
    return tot;
}

bool cid_check(long m) {
    BinomTable tab(2 * m);
    for (long n = 0; n <= m; ++n) {
        for (long d = 0; d <= n; ++d) {
            Rat tot(0);
            for (long s = 0; s <= n; ++s) {
                Rat outer = Rat(tab.get(m, s)) / Rat(tab.get(2 * m - s, n)) *
                            rat(2 * m - 2 * s + 1, 2 * m - s + 1);
                outer.canonicalize();
                Rat inner(0);
                for (long t = 0; t <= d; ++t) {
                    Rat term(tab.get(s, t) * tab.get(m - s, d - t + m - n) * tab.get(m - s, d - t));
                    inner += (t % 2 != 0) ? Rat(-term) : term;
                }
                Rat contrib = outer * inner;
                tot += (s % 2 != 0) ? Rat(-contrib) : contrib;
            }
            if (tot != ((n == d) ? 1 : 0)) return false;
        }
    }
    return true;
}

bool a_bound_check(long m) {
    for (long n = 0; n <= m; ++n) {
        Rat partition(0);
        for (long s = 0; s <= n; ++s) {
            Rat a = a_coefficient(s, m, n);
            Rat mag = abs(a);
            if (mag > 1) return false;
            if (mag > binomial(m - s, n - s)) return false;  // refined bound
            partition += binomial(m - s, n - s) * mag;
        }
        if (partition != 1) return false;
    }
    return true;
}

bool roundtrip_check(long m_max) {
    for (long m = 0; m <= m_max; ++m) {
        for (long n = -m; n <= m; ++n) {
            std::map<std::pair<long, long>, Rat> acc;
            BasisChangeRow outer = pfm_in_f(m, n);
            for (const BasisChangeTerm& ft : outer.terms) {
                BasisChangeRow inner = f_in_pfm(ft.i, ft.j);
                for (const BasisChangeTerm& pt : inner.terms)
                    acc[{pt.i, pt.j}] += ft.coeff * pt.coeff;
            }
            for (const auto& [key, val] : acc) {
                Rat expect = (key.first == m && key.second == n) ? rat(1) : rat(0);
                if (val != expect) return false;
            }
            if (acc.find({m, n}) == acc.end()) return false;
        }
    }
    return true;
}

Complex b_coeff_numeric(const Evaluator& F, long p, long q, double r1, double r2, int nodes) {
    if (r1 <= 0.0 || r2 <= 0.0) throw std::domain_error("b_coeff_numeric: radii must be positive");
    bool lower = p < q;  // p < q uses the (z, w/(1+zw)) chart
    Complex acc{0.0, 0.0};
    for (int a = 0; a < nodes; ++a) {
        double th = 2.0 * std::numbers::pi * a / nodes;
        Complex z = std::polar(r1, th);
        for (int b = 0; b < nodes; ++b) {
            double ph = 2.0 * std::numbers::pi * b / nodes;
            Complex w = std::polar(r2, ph);
            Complex denom = 1.0 + z * w;
            OmegaPoint pt = lower ? OmegaPoint{ExtendedComplex{z},
                                               denom == Complex{0.0, 0.0}
                                                   ? ExtendedComplex::infinity()
                                                   : ExtendedComplex{w / denom}}
                                  : OmegaPoint{denom == Complex{0.0, 0.0}
                                                   ? ExtendedComplex::infinity()
                                                   : ExtendedComplex{z / denom},
                                               ExtendedComplex{w}};
            acc += F(pt) * std::polar(std::pow(r1, -static_cast<double>(p)),
                                      -static_cast<double>(p) * th) *
                   std::polar(std::pow(r2, -static_cast<double>(q)),
                              -static_cast<double>(q) * ph);
        }
    }
    double cells = static_cast<double>(nodes) * static_cast<double>(nodes);
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw std::overflow_error("b_coeff_numeric: numerical overflow");
    return acc / cells;
}

}  // namespace omega
