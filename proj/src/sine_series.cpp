#include "sqgsteady/sine_series.hpp"
#include "sqgsteady/errors.hpp"
#include "sqgsteady/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace sqgsteady {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest trig table kept in the cache; bigger requests recompute rows.
constexpr std::size_t kTableByteCap = std::size_t{48} * 1024 * 1024;

// Row-major table of sin or cos at k * j * pi / N. Sine tables store the
// interior columns j = 1..N-1, cosine tables the closed range j = 0..N.
struct TrigTable {
    int grid_size = 0;
    int modes = 0;
    std::size_t cols = 0;
    std::vector<double> rows; // modes * cols

    const double* row(int k) const {
        return rows.data() + static_cast<std::size_t>(k - 1) * cols;
    }
};

void fill_row(double* out, int k, int n, bool sine, std::size_t cols) {
    // j starts at 1 for sine tables (interior), 0 for cosine tables.
    const int j0 = sine ? 1 : 0;
    const double step = static_cast<double>(k) * kPi / n;
    for (std::size_t c = 0; c < cols; ++c) {
        const double angle = step * (j0 + static_cast<int>(c));
        out[c] = sine ? std::sin(angle) : std::cos(angle);
    }
}

std::shared_ptr<const TrigTable> build_table(int n, int modes, bool sine) {
    auto t = std::make_shared<TrigTable>();
    t->grid_size = n;
    t->modes = modes;
    t->cols = sine ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n + 1);
    t->rows.resize(static_cast<std::size_t>(modes) * t->cols);
    for (int k = 1; k <= modes; ++k)
        fill_row(t->rows.data() + static_cast<std::size_t>(k - 1) * t->cols, k, n, sine, t->cols);
    return t;
}

// Cache keyed by (N, sine/cosine); grown monotonically in mode count.
std::shared_ptr<const TrigTable> get_table(int n, int modes, bool sine) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::shared_ptr<const TrigTable>> cache;

    const std::size_t cols = sine ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n + 1);
    if (static_cast<std::size_t>(modes) * cols * sizeof(double) > kTableByteCap)
        return build_table(n, modes, sine); // too big to keep; caller-local

    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, sine}];
    if (!slot || slot->modes < modes) slot = build_table(n, modes, sine);
    return slot;
}

void require_band(int modes, int n, bool synthesis) {
    if (n < 2) throw config_error("grid size must be at least 2, got " + std::to_string(n));
    if (modes > n - 1) {
        const std::string msg = "mode count " + std::to_string(modes) +
                                " exceeds grid capacity " + std::to_string(n - 1) +
                                " of an N=" + std::to_string(n) + " grid";
        if (synthesis) throw resolution_error(msg);
        throw aliasing_error(msg);
    }
}

} // namespace

double SineSeries::eval(double x) const {
    // sin(kx), cos(kx) by the coupled recurrence; error grows like K*eps.
    const double s1 = std::sin(x), c1 = std::cos(x);
    double sk = s1, ck = c1, acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += coeffs[i] * sk;
        const double s_next = sk * c1 + ck * s1;
        ck = ck * c1 - sk * s1;
        sk = s_next;
    }
    return acc;
}

double SineSeries::coeff_sup() const {
    double m = 0.0;
    for (double a : coeffs) m = std::max(m, std::abs(a));
    return m;
}

double GridFunction::node(int j) const { return static_cast<double>(j) * kPi / grid_size; }

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

GridFunction to_grid(const SineSeries& s, int n) {
    require_band(s.modes(), n, /*synthesis=*/true);
    GridFunction out(n);
    if (s.modes() == 0) return out;
    const auto table = get_table(n, s.modes(), /*sine=*/true);
    const auto& ops = simd::active();
    double* interior = out.values.data() + 1;
    for (int k = 1; k <= s.modes(); ++k) {
        const double a = s[k];
        if (a != 0.0) ops.axpy(a, table->row(k), interior, static_cast<std::size_t>(n - 1));
    }
    return out;
}

GridFunction cosine_to_grid(const std::vector<double>& b, int n) {
    const int modes = static_cast<int>(b.size());
    require_band(modes, n, /*synthesis=*/true);
    GridFunction out(n);
    if (modes == 0) return out;
    const auto table = get_table(n, modes, /*sine=*/false);
    const auto& ops = simd::active();
    for (int k = 1; k <= modes; ++k) {
        const double c = b[static_cast<std::size_t>(k - 1)];
        if (c != 0.0) ops.axpy(c, table->row(k), out.values.data(), static_cast<std::size_t>(n + 1));
    }
    return out;
}

SineSeries to_coefficients(const GridFunction& w, int modes) {
    const int n = w.grid_size;
    require_band(modes, n, /*synthesis=*/false);
    SineSeries s(modes);
    if (modes == 0) return s;
    const auto table = get_table(n, modes, /*sine=*/true);
    const auto& ops = simd::active();
    const double* interior = w.values.data() + 1;
    const double scale = 2.0 / n;
    for (int k = 1; k <= modes; ++k)
        s[k] = scale * ops.dot(table->row(k), interior, static_cast<std::size_t>(n - 1));
    return s;
}

double weighted_sine_integral(const GridFunction& w) {
    const int n = w.grid_size;
    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += w.values[static_cast<std::size_t>(j)] * std::sin(w.node(j));
    return acc * kPi / n;
}

double weighted_sine_integral(const SineSeries& s) {
    if (s.modes() == 0) return 0.0;
    return 0.5 * kPi * s[1];
}

GridFunction pointwise_power(const GridFunction& w, double p, double* clamped_mass) {
    GridFunction out(w.grid_size);
    double clipped = 0.0;
    for (std::size_t j = 0; j < w.values.size(); ++j) {
        const double v = w.values[j];
        if (v > 0.0) {
            out.values[j] = std::pow(v, p);
            if (!std::isfinite(out.values[j]))
                throw numerical_error("pointwise power produced a non-finite value");
        } else {
            out.values[j] = 0.0;
            clipped += -v;
        }
    }
    if (clamped_mass != nullptr) *clamped_mass = clipped * kPi / w.grid_size;
    return out;
}

double grid_inner(const GridFunction& a, const GridFunction& b) {
    if (a.grid_size != b.grid_size)
        throw config_error("grid_inner requires matching grids");
    const double* pa = a.values.data() + 1;
    const double* pb = b.values.data() + 1;
    const double dot = simd::active().dot(pa, pb, static_cast<std::size_t>(a.grid_size - 1));
    return dot * kPi / a.grid_size;
}

} // namespace sqgsteady
