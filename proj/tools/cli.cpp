#include "cli.hpp"

#include "modeq/modeq.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace modeq::cli {
namespace {

struct Options {
    std::string scheme;
    std::string pathway = "substitution";
    std::string format = "json";
    std::string out;
    std::string svg;
    std::string h = "1";
    std::string order_tag = "exact";
    std::size_t order = 4;
    unsigned k = 1;
    unsigned terms = 1;
    std::size_t check_period = 0;
    std::size_t span = 600;
    std::size_t steps = 12;
    bool accelerated = false;
    bool central = false;
    bool residual = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

std::string render(const Json& j, const std::string& csv, const Options& o) {
    return o.format == "csv" ? csv : j.dump(2) + "\n";
}

std::string cmd_derive(const Options& o) {
    PowerSeries s;
    if (o.scheme == "euler") {
        if (o.pathway != "substitution") throw DomainError("the euler scheme only has the substitution pathway");
        s = derive_first_order(Stencil::euler(), o.order).multiplier;
    } else {
        if (o.pathway == "substitution") s = derive_second_order_symmetric(Stencil::stormer_verlet(), o.order).multiplier;
        else if (o.pathway == "arcsine") s = arcsine_multiplier(o.order);
        else s = closed_form_multiplier(o.order);
    }
    Json j{{"scheme", o.scheme}, {"order", o.order}, {"multiplier", to_json(s)}, {"pathway", o.pathway}};
    std::string csv = csv_line({"exponent", "coefficient"});
    for (std::size_t i = 0; i <= s.order(); ++i) csv += csv_line({std::to_string(i), s[i].str()});
    return render(j, csv, o);
}

std::string cmd_arcsin(const Options& o) {
    PowerSeries expansion = arcsin_sq_expansion(o.order);
    PowerSeries a = arcsin_half_series(o.order);
    PowerSeries reversion = ps_mul(a, a);
    Json j{{"order", o.order},
           {"expansion", to_json(expansion)},
           {"reversion", to_json(reversion)},
           {"agree", expansion == reversion}};
    std::string csv = csv_line({"exponent", "expansion", "reversion"});
    for (std::size_t i = 0; i <= o.order; ++i) csv += csv_line({std::to_string(i), expansion[i].str(), reversion[i].str()});
    return render(j, csv, o);
}

std::string cmd_cramer(const Options& o) {
    Rational den = vandermonde_denominator(o.k);
    Rational minor = numerator_leading_minor(o.k);
    Rational coeff = coefficient_via_cramer(o.k);
    Json j{{"k", o.k}, {"denominator", den.str()}, {"minor", minor.str()}, {"coefficient", coeff.str()}};
    std::string csv = csv_line({"k", "denominator", "minor", "coefficient"}) +
                      csv_line({std::to_string(o.k), den.str(), minor.str(), coeff.str()});
    return render(j, csv, o);
}

std::string cmd_chebyshev(const Options& o) {
    const Rational h = Rational::parse(o.h);
    // Both basis solutions, with 50 interior indices at offset k.
    const std::size_t steps = 2 * static_cast<std::size_t>(o.k) + 48;
    bool holds = stencil_sum_identity_check(solve_recurrence(h, 1, 0, steps), o.k) &&
                 stencil_sum_identity_check(solve_recurrence(h, 0, 1, steps), o.k);
    Json j{{"k", o.k}, {"h", h.str()}, {"identity_holds", holds}, {"leading_term", leading_term_check(o.k)},
           {"polynomial", to_json(chebyshev_poly(o.k))}};
    std::vector<std::string> header{"k", "h", "identity_holds"};
    std::vector<std::string> row{std::to_string(o.k), h.str(), holds ? "true" : "false"};
    if (o.check_period > 0) {
        bool periodic = periodicity_check(h, o.check_period, std::max(o.span, 2 * o.check_period));
        j["period"] = o.check_period;
        j["periodic"] = periodic;
        header.emplace_back("periodic");
        row.emplace_back(periodic ? "true" : "false");
    }
    return render(j, csv_line(header) + csv_line(row), o);
}

std::string cmd_basel(const Options& o) {
    if (o.accelerated && o.central) throw UsageError("--accelerated and --central are mutually exclusive");
    Rational value;
    std::string target = "pi^2/6";
    if (o.accelerated) {
        value = Rational(3) * central_sum(o.terms);
    } else if (o.central) {
        value = central_sum(o.terms);
        target = "pi^2/18";
    } else {
        value = basel_sum(o.terms);
    }
    std::string decimal = to_decimal(value, tally_digits);
    Json j{{"n", o.terms}, {"exact", value.str()}, {"decimal", decimal}, {"target", target}};
    std::string csv = csv_line({"n", "exact", "decimal", "target"}) +
                      csv_line({std::to_string(o.terms), value.str(), decimal, target});
    return render(j, csv, o);
}

double parse_real(const std::string& text) {
    return text.find('.') != std::string::npos ? parse_decimal(text).to_double() : Rational::parse(text).to_double();
}

std::string cmd_simulate(const Options& o) {
    if (o.residual) {
        Scheme scheme = o.scheme == "euler" ? Scheme::euler : Scheme::verlet;
        std::vector<double> hs;
        for (int e = 3; e <= 8; ++e) hs.push_back(std::ldexp(1.0, -e));
        double slope = residual_order_estimate(scheme, o.order, hs);
        Json j{{"scheme", scheme == Scheme::euler ? "euler" : "verlet"},
               {"truncation_order", o.order},
               {"h", hs},
               {"slope", slope}};
        std::string csv = csv_line({"scheme", "truncation_order", "slope"}) +
                          csv_line({j["scheme"].get<std::string>(), std::to_string(o.order), format_g15(slope)});
        return render(j, csv, o);
    }

    const double h = parse_real(o.h);
    const FrequencyLadder ladder = frequency_ladder(h);
    const ModifiedOrder tag = parse_modified_order(o.order_tag);
    Trace dots = discrete_trace(h, o.steps, 1.0, std::cos(ladder.omega_exact * h));
    std::vector<double> grid;
    for (const auto& s : dots.samples()) grid.push_back(s.t);
    Trace mod = modified_trace(h, tag, grid);

    Json samples = Json::array();
    std::string csv = csv_line({"t", "discrete", "modified"});
    for (std::size_t i = 0; i < dots.size(); ++i) {
        samples.push_back({dots[i].t, dots[i].x, mod[i].x});
        csv += csv_line({format_g15(dots[i].t), format_g15(dots[i].x), format_g15(mod[i].x)});
    }
    Json j{{"h", h},
           {"order", to_string(tag)},
           {"ladder", {{"omega_exact", ladder.omega_exact}, {"omega", ladder.omega}}},
           {"samples", std::move(samples)}};
    return render(j, csv, o);
}

std::string cmd_figure1(const Options& o) {
    auto rows = figure1_rows();
    if (!o.svg.empty()) write_file(o.svg, figure1_svg(rows));
    return figure1_csv(rows);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"modeq: exact modified equations of linear difference schemes", "modeq"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats{"json", "csv"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "write output to PATH instead of stdout");
    };

    auto* derive = app.add_subcommand("derive", "modified-equation multiplier S(h)");
    derive->add_option("--scheme", o.scheme)->required()->check(CLI::IsMember({"euler", "verlet"}));
    derive->add_option("--order", o.order, "highest power of h");
    derive->add_option("--pathway", o.pathway)->check(CLI::IsMember({"substitution", "arcsine", "closed_form"}));
    common(derive);

    auto* arcsin = app.add_subcommand("arcsin", "(arcsin(h/2))^2: closed expansion vs series reversion");
    arcsin->add_option("--order", o.order);
    common(arcsin);

    auto* cramer = app.add_subcommand("cramer", "Vandermonde/Cramer coefficient for index k");
    cramer->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    common(cramer);

    auto* cheb = app.add_subcommand("chebyshev", "Chebyshev stencil-sum identity and periodicity");
    cheb->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    cheb->add_option("--h", o.h, "step size p/q");
    cheb->add_option("--check-period", o.check_period)->check(CLI::PositiveNumber);
    cheb->add_option("--span", o.span)->check(CLI::PositiveNumber);
    common(cheb);

    auto* basel = app.add_subcommand("basel", "partial sums converging to pi^2/6");
    basel->add_option("--terms", o.terms)->required()->check(CLI::PositiveNumber);
    basel->add_flag("--accelerated", o.accelerated, "3 * sum (k-1)!^2/(2k)!");
    basel->add_flag("--central", o.central, "sum (k-1)!^2/(2k)! itself");
    common(basel);

    auto* sim = app.add_subcommand("simulate", "floating-point traces and residual orders");
    sim->add_option("--h", o.h, "step size");
    sim->add_option("--steps", o.steps)->check(CLI::PositiveNumber);
    sim->add_option("--tag", o.order_tag, "exact, 0, 1 or 2")->check(CLI::IsMember({"exact", "0", "1", "2"}));
    sim->add_flag("--residual", o.residual, "fit the residual order over h = 2^-3 .. 2^-8");
    sim->add_option("--scheme", o.scheme)->check(CLI::IsMember({"euler", "verlet"}));
    sim->add_option("--order", o.order, "highest power of h kept (with --residual)");
    common(sim);

    auto* fig = app.add_subcommand("figure1", "CSV data of the h = 1 harmonic oscillator figure");
    fig->add_option("--out", o.out, "CSV path");
    fig->add_option("--svg", o.svg, "also render an SVG plot");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        std::string text;
        if (derive->parsed()) text = cmd_derive(o);
        else if (arcsin->parsed()) text = cmd_arcsin(o);
        else if (cramer->parsed()) text = cmd_cramer(o);
        else if (cheb->parsed()) text = cmd_chebyshev(o);
        else if (basel->parsed()) text = cmd_basel(o);
        else if (sim->parsed()) {
            if (o.residual && o.scheme.empty()) throw UsageError("--residual needs --scheme");
            text = cmd_simulate(o);
        } else text = cmd_figure1(o);

        if (o.out.empty()) out << text;
        else write_file(o.out, text);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace modeq::cli
