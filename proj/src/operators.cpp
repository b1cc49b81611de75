#include "sqgsteady/operators.hpp"
#include "sqgsteady/errors.hpp"

#include <cmath>
#include <string>

namespace sqgsteady {

const char* family_name(Family f) {
    switch (f) {
        case Family::sqg_folded: return "sqg_folded";
        case Family::sqg_unfolded: return "sqg_unfolded";
        case Family::degregorio: return "degregorio";
        case Family::remainder: return "remainder";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "sqg_folded") return Family::sqg_folded;
    if (name == "sqg_unfolded") return Family::sqg_unfolded;
    if (name == "degregorio") return Family::degregorio;
    if (name == "remainder") return Family::remainder;
    throw config_error("unknown operator family: " + name);
}

namespace {

void require_fold(int m, const char* who) {
    if (m < 3)
        throw config_error(std::string(who) + " requires fold m >= 3, got " + std::to_string(m));
}

} // namespace

MultiplierOperator MultiplierOperator::sqg_folded(int m) {
    require_fold(m, "sqg_folded");
    return MultiplierOperator(Family::sqg_folded, m);
}

MultiplierOperator MultiplierOperator::sqg_unfolded() {
    return MultiplierOperator(Family::sqg_unfolded, 1);
}

MultiplierOperator MultiplierOperator::degregorio(int m) {
    if (m < 1) throw config_error("degregorio requires fold m >= 1, got " + std::to_string(m));
    return MultiplierOperator(Family::degregorio, m);
}

MultiplierOperator MultiplierOperator::remainder(int m) {
    require_fold(m, "remainder");
    return MultiplierOperator(Family::remainder, m);
}

double MultiplierOperator::symbol(int k) const {
    if (k < 1) throw config_error("multiplier symbol is defined for modes k >= 1");
    const double kk = static_cast<double>(k);
    switch (family_) {
        case Family::sqg_folded: {
            const double mk2 = static_cast<double>(m_) * m_ * kk * kk;
            return -(mk2 - 1.0) / (kk * (mk2 - 4.0));
        }
        case Family::sqg_unfolded: {
            if (k <= 2) return 0.0; // annihilated modes; the fold never meets them
            return -(kk * kk - 1.0) / (kk * (kk * kk - 4.0));
        }
        case Family::degregorio:
            return -1.0 / kk;
        case Family::remainder: {
            const double mk2 = static_cast<double>(m_) * m_ * kk * kk;
            return 3.0 / (mk2 - 4.0);
        }
    }
    return 0.0;
}

double MultiplierOperator::rho() const { return -symbol(1); }

SineSeries apply(const MultiplierOperator& op, const SineSeries& s) {
    SineSeries out(s.modes());
    for (int k = 1; k <= s.modes(); ++k) out[k] = op.symbol(k) * s[k];
    return out;
}

SineSeries apply_inverse(const MultiplierOperator& op, const SineSeries& s) {
    SineSeries out(s.modes());
    for (int k = 1; k <= s.modes(); ++k) {
        const double sig = op.symbol(k);
        if (sig == 0.0) {
            if (s[k] != 0.0)
                throw singular_mode_error("cannot invert multiplier on mode " + std::to_string(k) +
                                          ": symbol vanishes but coefficient is " +
                                          std::to_string(s[k]));
            out[k] = 0.0;
        } else {
            out[k] = s[k] / sig;
        }
    }
    return out;
}

GridFunction differentiate_on_grid(const SineSeries& s, int n) {
    std::vector<double> b(static_cast<std::size_t>(s.modes()));
    for (int k = 1; k <= s.modes(); ++k) b[static_cast<std::size_t>(k - 1)] = k * s[k];
    return cosine_to_grid(b, n);
}

double folding_residual(const SineSeries& f, int m, int n) {
    require_fold(m, "folding_residual");
    for (int k = 1; k <= f.modes(); ++k)
        if (k % m != 0 && f[k] != 0.0)
            throw config_error("folding_residual: input carries mode " + std::to_string(k) +
                               " which is not a multiple of the fold " + std::to_string(m));

    SineSeries g(f.modes() / m);
    for (int j = 1; j <= g.modes(); ++j) g[j] = f[j * m];

    const SineSeries smg = apply(MultiplierOperator::sqg_folded(m), g);
    const SineSeries sf = apply(MultiplierOperator::sqg_unfolded(), f);

    const GridFunction folded = to_grid(smg, n);
    double sup = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double x = folded.node(j);
        const double lhs = folded.values[static_cast<std::size_t>(j)] / m;
        const double rhs = sf.eval(x / m);
        sup = std::max(sup, std::abs(lhs - rhs));
    }
    return sup;
}

} // namespace sqgsteady
