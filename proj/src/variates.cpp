#include "intspace/variates.hpp"

#include <cmath>

#include "intspace/errors.hpp"
#include "intspace/interval.hpp"

namespace intspace {

void validate(const VariateModel& m) {
    switch (m.family) {
        case Family::uniform:
            if (!(m.p2 > m.p1))
                throw domain_error("uniform: requires b > a");
            return;
        case Family::exponential:
            if (!(m.p1 > 0.0))
                throw domain_error("exp: requires lambda > 0");
            return;
        case Family::logistic:
            if (!(m.p2 > 0.0))
                throw domain_error("logistic: requires sigma > 0");
            return;
    }
    throw domain_error("variate model: unknown family");
}

double pdf(const VariateModel& m, double x) {
    validate(m);
    switch (m.family) {
        case Family::uniform:
            return (x < m.p1 || x > m.p2) ? 0.0 : 1.0 / (m.p2 - m.p1);
        case Family::exponential:
            return x < 0.0 ? 0.0 : m.p1 * std::exp(-m.p1 * x);
        case Family::logistic: {
            const double u = std::abs((x - m.p1) / m.p2);
            const double e = std::exp(-u);
            return e / (m.p2 * (1.0 + e) * (1.0 + e));
        }
    }
    return 0.0;
}

double cdf(const VariateModel& m, double x) {
    validate(m);
    switch (m.family) {
        case Family::uniform:
            if (x <= m.p1) return 0.0;
            if (x >= m.p2) return 1.0;
            return (x - m.p1) / (m.p2 - m.p1);
        case Family::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-m.p1 * x);
        case Family::logistic: {
            const double u = (x - m.p1) / m.p2;
            if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
            const double e = std::exp(u);
            return e / (1.0 + e);
        }
    }
    return 0.0;
}

double quantile(const VariateModel& m, double p) {
    validate(m);
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("quantile: p must lie strictly in (0,1)");
    switch (m.family) {
        case Family::uniform:
            return m.p1 + p * (m.p2 - m.p1);
        case Family::exponential:
            return -std::log1p(-p) / m.p1;
        case Family::logistic:
            return m.p1 + m.p2 * (std::log(p) - std::log1p(-p));
    }
    return 0.0;
}

VariateModel parse_model(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw domain_error("model: expected 'family:params', got '" + text + "'");
    const std::string name = text.substr(0, colon);
    const std::string params = text.substr(colon + 1);

    auto parse_number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw domain_error("model: cannot parse number '" + s + "' in '" + text + "'");
        }
        if (used != s.size() || !std::isfinite(v))
            throw domain_error("model: cannot parse number '" + s + "' in '" + text + "'");
        return v;
    };
    auto split_two = [&](Family family) {
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw domain_error("model: '" + name + "' takes two parameters, got '" +
                               params + "'");
        VariateModel m;
        m.family = family;
        m.p1 = parse_number(params.substr(0, comma));
        m.p2 = parse_number(params.substr(comma + 1));
        validate(m);
        return m;
    };

    if (name == "uniform") return split_two(Family::uniform);
    if (name == "logistic") return split_two(Family::logistic);
    if (name == "exp") {
        if (params.find(',') != std::string::npos)
            throw domain_error("model: 'exp' takes one parameter, got '" + params + "'");
        VariateModel m;
        m.family = Family::exponential;
        m.p1 = parse_number(params);
        m.p2 = 0.0;
        validate(m);
        return m;
    }
    throw domain_error("model: unknown family '" + name +
                       "' (expected uniform, exp, or logistic)");
}

std::string format_model(const VariateModel& m) {
    switch (m.family) {
        case Family::uniform:
            return "uniform:" + std::to_string(m.p1) + "," + std::to_string(m.p2);
        case Family::exponential:
            return "exp:" + std::to_string(m.p1);
        case Family::logistic:
            return "logistic:" + std::to_string(m.p1) + "," + std::to_string(m.p2);
    }
    return "?";
}

void validate(const IntervalSpec& s) {
    if (s.n < 2) throw domain_error("spec: requires n >= 2");
    if (s.w < 1) throw domain_error("spec: requires w >= 1");
    if (s.i <= s.w) throw domain_error("spec: requires i > w");
    if (s.i > s.n) throw domain_error("spec: requires i <= n");
}

bool is_valid(const IntervalSpec& s) {
    return s.n >= 2 && s.w >= 1 && s.i > s.w && s.i <= s.n;
}

}  // namespace intspace
