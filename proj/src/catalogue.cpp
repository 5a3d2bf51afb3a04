#include "omega/catalogue.hpp"

#include <stdexcept>

#include "omega/pfm.hpp"

namespace omega {

namespace {

std::pair<long, long> parse_index_pair(const std::string& body, const std::string& spec) {
    size_t comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("catalogue: expected two indices in '" + spec + "'");
    try {
        return {std::stol(body.substr(0, comma)), std::stol(body.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("catalogue: bad indices in '" + spec + "'");
    }
}

}  // namespace

Evaluator catalogue_function(const std::string& spec) {
    if (spec == "geom") {
        return [](const OmegaPoint& p) -> Complex {
            if (!p.both_finite()) {
                // 1/(1-zw) extends with value 0 at infinite products and 1 at
                // a single infinite coordinate paired with zero; on Omega the
                // only reachable cases have zw -> inf
                return {0.0, 0.0};
            }
            return 1.0 / (1.0 - p.z.v * p.w.v);
        };
    }
    if (spec.rfind("pfm:", 0) == 0) {
        auto [m, n] = parse_index_pair(spec.substr(4), spec);
        if (m < 0) throw std::invalid_argument("catalogue: pfm needs m >= 0");
        return pfm_evaluator({m, n});
    }
    if (spec.rfind("f:", 0) == 0) {
        auto [p, q] = parse_index_pair(spec.substr(2), spec);
        if (p < 0 || q < 0) throw std::invalid_argument("catalogue: f needs p,q >= 0");
        return f_pq_evaluator(p, q);
    }
    if (spec.rfind("combo:", 0) == 0) {
        // linear combination of modes: combo:m,n,re,im;m,n,re,im;...
        std::vector<std::pair<PFMIndex, Complex>> parts;
        std::string body = spec.substr(6);
        size_t start = 0;
        while (start < body.size()) {
            size_t semi = body.find(';', start);
            std::string piece =
                semi == std::string::npos ? body.substr(start) : body.substr(start, semi - start);
            long vals[2];
            double coef[2];
            char* cur = piece.data();
            char* end = nullptr;
            try {
                for (int i = 0; i < 2; ++i) {
                    vals[i] = std::strtol(cur, &end, 10);
                    if (end == cur || *end != ',') throw std::invalid_argument("");
                    cur = end + 1;
                }
                coef[0] = std::strtod(cur, &end);
                if (end == cur || *end != ',') throw std::invalid_argument("");
                cur = end + 1;
                coef[1] = std::strtod(cur, &end);
                if (end == cur || *end != '\0') throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("catalogue: bad combo term '" + piece + "'");
            }
            parts.push_back({PFMIndex{vals[0], vals[1]}, Complex{coef[0], coef[1]}});
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (parts.empty()) throw std::invalid_argument("catalogue: empty combo");
        return [parts](const OmegaPoint& p) {
            Complex acc{0.0, 0.0};
            for (const auto& [idx, c] : parts) acc += c * pfm_eval(idx, p);
            return acc;
        };
    }
    if (spec.rfind("exp:", 0) == 0) {
        long K;
        try {
            K = std::stol(spec.substr(4));
        } catch (const std::exception&) {
            throw std::invalid_argument("catalogue: bad truncation order in '" + spec + "'");
        }
        if (K < 0) throw std::invalid_argument("catalogue: exp needs K >= 0");
        return [K](const OmegaPoint& p) -> Complex {
            Complex zw = p.z.finite() * p.w.finite();
            Complex acc{0.0, 0.0}, term{1.0, 0.0};
            for (long j = 0; j <= K; ++j) {
                acc += term;
                term *= zw / static_cast<double>(j + 1);
            }
            return acc;
        };
    }
    throw std::invalid_argument("catalogue: unknown function spec '" + spec + "'");
}

}  // namespace omega
