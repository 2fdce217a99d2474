#pragma once

// Double-precision traces of the harmonic oscillator x'' = -x, its
// Stormer-Verlet discretization and truncated modified equations.

#include "modeq/modified_equation.hpp"
#include "modeq/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modeq {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sample {
    double t;
    double x;
};

class Trace {
public:
    explicit Trace(std::string label) : label_(std::move(label)) {}

    void push(double t, double x) {
        if (!samples_.empty() && !(t > samples_.back().t)) throw DomainError("trace times must increase strictly");
        samples_.push_back({t, x});
    }

    const std::string& label() const { return label_; }
    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    const Sample& operator[](std::size_t i) const { return samples_[i]; }

private:
    std::string label_;
    std::vector<Sample> samples_;
};

/// Frequencies of cos(omega t) solving the exact and truncated modified
/// equations of the Stormer-Verlet scheme; omega[N] keeps terms through h^(2N).
struct FrequencyLadder {
    double h = 0;
    double omega_exact = 0;
    std::array<double, 3> omega{};
};

/// sqrt(-S_N(h)) with S_N the Verlet multiplier through h^(2N).
inline double truncated_frequency(double h, unsigned n) {
    double sum = 0, hp = 1;
    for (unsigned k = 1; k <= n + 1; ++k) {
        sum += -verlet_closed_coefficient(k).to_double() * hp;
        hp *= h * h;
    }
    return std::sqrt(sum);
}

inline FrequencyLadder frequency_ladder(double h) {
    if (!(h > 0) || !(h < 2)) throw DomainError("frequency ladder needs 0 < h < 2");
    FrequencyLadder f;
    f.h = h;
    f.omega_exact = 2.0 / h * std::asin(h / 2);
    for (unsigned n = 0; n < 3; ++n) f.omega[n] = truncated_frequency(h, n);
    return f;
}

enum class ModifiedOrder { exact, n0, n1, n2 };

inline ModifiedOrder parse_modified_order(std::string_view tag) {
    if (tag == "exact") return ModifiedOrder::exact;
    if (tag == "0") return ModifiedOrder::n0;
    if (tag == "1") return ModifiedOrder::n1;
    if (tag == "2") return ModifiedOrder::n2;
    throw DomainError("unknown modified-equation order tag: " + std::string(tag));
}

inline const char* to_string(ModifiedOrder o) {
    switch (o) {
    case ModifiedOrder::exact: return "exact";
    case ModifiedOrder::n0: return "0";
    case ModifiedOrder::n1: return "1";
    case ModifiedOrder::n2: return "2";
    }
    return "?";
}

inline double ladder_frequency(const FrequencyLadder& f, ModifiedOrder o) {
    switch (o) {
    case ModifiedOrder::exact: return f.omega_exact;
    case ModifiedOrder::n0: return f.omega[0];
    case ModifiedOrder::n1: return f.omega[1];
    case ModifiedOrder::n2: return f.omega[2];
    }
    return f.omega_exact;
}

/// Samples x_j at t = j h, j = 0..steps, of x_{j+1} = (2 - h^2) x_j - x_{j-1}.
inline Trace discrete_trace(double h, std::size_t steps, double x0, double x1) {
    if (steps == 0) throw DomainError("discrete_trace needs at least one step");
    if (!(h > 0)) throw DomainError("discrete_trace needs h > 0");
    Trace tr("discrete");
    const double diag = 2 - h * h;
    double prev = x0, cur = x1;
    tr.push(0.0, x0);
    tr.push(h, x1);
    for (std::size_t j = 2; j <= steps; ++j) {
        double next = diag * cur - prev;
        prev = cur;
        cur = next;
        tr.push(static_cast<double>(j) * h, cur);
    }
    return tr;
}

/// cos(omega t) for x(0) = 1, x'(0) = 0, omega taken from the frequency ladder.
inline Trace modified_trace(double h, ModifiedOrder order, const std::vector<double>& t_grid) {
    const double omega = ladder_frequency(frequency_ladder(h), order);
    Trace tr(std::string("modified_") + to_string(order));
    for (double t : t_grid) tr.push(t, std::cos(omega * t));
    return tr;
}

// ---------------------------------------------------------------------------
// Figure data: h = 1 over t in [0, 12].

inline constexpr double figure_step = 1.0;
inline constexpr double figure_horizon = 12.0;
inline constexpr std::size_t figure_intervals = 600;

struct FigureRow {
    double t;
    double exact;
    std::optional<double> discrete;
    double mod2;
    double mod4;
};

/// Dense rows; the discrete column is filled at multiples of h only. The
/// discrete solution starts from x0 = 1, x1 = cos(omega_exact h) = 1 - h^2/2 so
/// the dots lie on the exact interpolating curve.
inline std::vector<FigureRow> figure1_rows() {
    const double h = figure_step;
    std::vector<double> grid;
    for (std::size_t i = 0; i <= figure_intervals; ++i)
        grid.push_back(figure_horizon * static_cast<double>(i) / static_cast<double>(figure_intervals));

    const auto steps = static_cast<std::size_t>(figure_horizon / h);
    Trace dots = discrete_trace(h, steps, 1.0, 1.0 - h * h / 2);
    Trace mod2 = modified_trace(h, ModifiedOrder::n1, grid);
    Trace mod4 = modified_trace(h, ModifiedOrder::n2, grid);

    const std::size_t per_step = figure_intervals / steps;
    std::vector<FigureRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        FigureRow r{grid[i], std::cos(grid[i]), std::nullopt, mod2[i].x, mod4[i].x};
        if (i % per_step == 0) r.discrete = dots[i / per_step].x;
        rows.push_back(r);
    }
    return rows;
}

inline std::string format_g15(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string figure1_csv(const std::vector<FigureRow>& rows) {
    std::string out = "t,exact,discrete,mod2,mod4\n";
    for (const auto& r : rows) {
        out += format_g15(r.t) + "," + format_g15(r.exact) + ",";
        if (r.discrete) out += format_g15(*r.discrete);
        out += "," + format_g15(r.mod2) + "," + format_g15(r.mod4) + "\n";
    }
    return out;
}

/// Single plot: polylines for the continuous curves, circles for the dots.
inline std::string figure1_svg(const std::vector<FigureRow>& rows) {
    constexpr double width = 800, height = 300, margin = 30;
    auto px = [&](double t) { return margin + (width - 2 * margin) * t / figure_horizon; };
    auto py = [&](double x) { return height / 2 - (height / 2 - margin) * x / 1.1; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(figure_horizon) << "\" y2=\"" << py(0)
        << "\" stroke=\"#999\"/>\n";
    auto polyline = [&](auto pick, const char* style) {
        svg << "<polyline fill=\"none\" " << style << " points=\"";
        for (const auto& r : rows) svg << format_g15(px(r.t)) << "," << format_g15(py(pick(r))) << " ";
        svg << "\"/>\n";
    };
    polyline([](const FigureRow& r) { return r.exact; }, "stroke=\"#000\" stroke-dasharray=\"6,4\"");
    polyline([](const FigureRow& r) { return r.mod2; }, "stroke=\"#9ab\" stroke-width=\"2\"");
    polyline([](const FigureRow& r) { return r.mod4; }, "stroke=\"#135\" stroke-width=\"2\"");
    for (const auto& r : rows) {
        if (!r.discrete) continue;
        svg << "<circle cx=\"" << format_g15(px(r.t)) << "\" cy=\"" << format_g15(py(*r.discrete)) << "\" r=\"4\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << content;
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

inline void figure1_emit(const std::string& out_path) { write_file(out_path, figure1_csv(figure1_rows())); }

// ---------------------------------------------------------------------------
// Residual orders.

enum class Scheme { euler, verlet };

/// Largest |stencil residual| of the truncated modified solution over one
/// period (Verlet) or one unit of time (Euler), together with the magnitude of
/// the terms that cancel in it.
struct ResidualSample {
    double residual;
    double scale;
};

/// For x(t) = cos(omega t) the Verlet stencil x(t-h) - 2x(t) + x(t+h) + h^2 x(t)
/// equals (h^2 - 4 sin^2(omega h / 2)) x(t); for x(t) = exp(S t) the Euler
/// stencil x(t+h) - x(t) + h x(t) equals (expm1(S h) + h) x(t). These forms
/// avoid the O(1) cancellation of the raw three-point difference.
inline ResidualSample stencil_residual_sample(Scheme scheme, std::size_t truncation_order, double h) {
    constexpr int grid = 64;
    if (scheme == Scheme::verlet) {
        const PowerSeries s = derive_second_order_symmetric(Stencil::stormer_verlet(), truncation_order / 2 * 2).multiplier;
        double sum = 0, hp = 1;
        for (std::size_t i = 0; i <= s.order(); ++i, hp *= h) sum += s[i].to_double() * hp;
        const double omega = std::sqrt(-sum);
        const double sn = std::sin(omega * h / 2);
        const double symbol = h * h - 4 * sn * sn;
        double worst = 0;
        for (int i = 0; i <= grid; ++i) {
            double t = 2 * std::numbers::pi / omega * i / grid;
            worst = std::max(worst, std::abs(symbol * std::cos(omega * t)));
        }
        return {worst, h * h};
    }
    const PowerSeries s = derive_first_order(Stencil::euler(), truncation_order).multiplier;
    double rate = 0, hp = 1;
    for (std::size_t i = 0; i <= s.order(); ++i, hp *= h) rate += s[i].to_double() * hp;
    const double symbol = std::expm1(rate * h) + h;
    double worst = 0;
    for (int i = 0; i <= grid; ++i) {
        double t = static_cast<double>(i) / grid;
        worst = std::max(worst, std::abs(symbol * std::exp(rate * t)));
    }
    return {worst, h};
}

/// Least-squares slope of log(max residual) against log(h). truncation_order is
/// the highest power of h kept in the multiplier S.
inline double residual_order_estimate(Scheme scheme, std::size_t truncation_order, const std::vector<double>& h_list) {
    if (h_list.size() < 4) throw DomainError("residual_order_estimate needs at least four step sizes");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!(h_list[i] > 0) || (scheme == Scheme::verlet && !(h_list[i] < 2)))
            throw DomainError("step size out of range");
        if (i > 0 && !(h_list[i] < h_list[i - 1])) throw DomainError("step sizes must decrease strictly");
    }
    if (h_list.front() / h_list.back() < 10) throw DomainError("step sizes must span at least one decade");

    std::vector<double> lx, ly;
    for (double h : h_list) {
        ResidualSample r = stencil_residual_sample(scheme, truncation_order, h);
        if (r.residual < 100 * std::numeric_limits<double>::epsilon() * r.scale)
            throw DomainError("residual is at roundoff level for h = " + format_g15(h) + "; use larger step sizes");
        lx.push_back(std::log(h));
        ly.push_back(std::log(r.residual));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace modeq
