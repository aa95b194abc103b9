#pragma once

#include "directions.hpp"
#include "io.hpp"
#include "productmethod.hpp"
#include "tracer.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace fieldasym {

enum class Severity { Info, Finding, Error };

inline const char* to_string(Severity s) {
    switch (s) {
        case Severity::Info: return "info";
        case Severity::Finding: return "finding";
        case Severity::Error: return "error";
    }
    return "?";
}

struct Finding {
    Severity severity = Severity::Info;
    std::string message;
    nlohmann::json data;  ///< exact values backing the message
};

/// Machine-readable outcome of one CLI command; serialized next to any CSV or
/// SVG artifacts the command writes.
struct Report {
    std::string command;
    nlohmann::json input;
    std::vector<Finding> findings;
    std::vector<std::string> artifacts;

    void add(Severity severity, std::string message, nlohmann::json data = {}) {
        findings.push_back({severity, std::move(message), std::move(data)});
    }

    bool has_errors() const {
        for (const auto& f : findings)
            if (f.severity == Severity::Error) return true;
        return false;
    }

    nlohmann::json to_json() const {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : findings) {
            nlohmann::json entry{{"severity", to_string(f.severity)}, {"message", f.message}};
            if (!f.data.is_null()) entry["data"] = f.data;
            fs.push_back(std::move(entry));
        }
        return {{"command", command}, {"input", input}, {"findings", fs},
                {"artifacts", artifacts}};
    }
};

inline std::string decimal12(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12f", v);
    return buffer;
}

inline nlohmann::json interval_to_json(const IsolatingInterval& interval) {
    return {{"value", decimal12(interval.midpoint_double())},
            {"lo", format_rational(interval.lo)},
            {"hi", format_rational(interval.hi)},
            {"multiplicity", interval.multiplicity}};
}

inline nlohmann::json spectrum_to_json(const DirectionSpectrum& spectrum_) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : spectrum_.entries) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& r : e.roots) roots.push_back(interval_to_json(r));
        entries.push_back({{"component", to_string(e.component)},
                           {"domain", to_string(e.domain)},
                           {"numerator", e.polynomial.form.numerator.to_string("t")},
                           {"half_exponent", e.polynomial.form.half_exponent},
                           {"zero_is_root", e.zero_is_root},
                           {"roots", roots},
                           {"root_bound", e.root_bound},
                           {"within_bound", e.within_bound}});
    }
    nlohmann::json distinct = nlohmann::json::array();
    for (const auto& d : spectrum_.distinctness) {
        nlohmann::json shared = nlohmann::json::array();
        for (const auto& r : d.shared_unit_roots) shared.push_back(interval_to_json(r));
        distinct.push_back({{"domain", to_string(d.domain)},
                            {"squarefree_resultant", format_rational(d.squarefree_resultant)},
                            {"distinct_everywhere", d.distinct_everywhere},
                            {"distinct_in_unit", d.distinct_in_unit},
                            {"zero_shared", d.zero_shared},
                            {"shared_unit_roots", shared}});
    }
    return {{"order", spectrum_.order}, {"entries", entries}, {"distinctness", distinct}};
}

/// One row per isolated candidate slope of the authoritative forms.
inline void write_spectrum_csv(const std::string& path, const DirectionSpectrum& spectrum_) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "component,domain,variant,root,interval_lo,interval_hi,multiplicity\n";
    for (const auto& e : spectrum_.entries) {
        for (const auto& r : e.roots) {
            out << to_string(e.component) << ',' << to_string(e.domain) << ",authoritative,"
                << decimal12(r.midpoint_double()) << ',' << format_rational(r.lo) << ','
                << format_rational(r.hi) << ',' << r.multiplicity << "\n";
        }
    }
}

inline void write_branches_csv(const std::string& path,
                               const std::vector<CurveBranch>& branches) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "branch,component,domain,x,y\n";
    for (std::size_t b = 0; b < branches.size(); ++b)
        for (const auto& p : branches[b].points)
            out << b << ',' << to_string(branches[b].component) << ','
                << to_string(branches[b].domain) << ',' << decimal12(p[0]) << ','
                << decimal12(p[1]) << "\n";
}

inline void write_kernel_csv(const std::string& path, unsigned max_order) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "kind,order,degree,coefficients\n";
    for (KernelKind kind : {KernelKind::Odd, KernelKind::Even}) {
        for (unsigned l = 0; l <= max_order; ++l) {
            const UniPoly& n = kernel_numerator(kind, l);
            out << to_string(kind) << ',' << l << ',' << n.degree() << ",\"";
            for (int i = 0; i <= n.degree(); ++i)
                out << (i ? " " : "") << format_rational(n.coeff(static_cast<unsigned>(i)));
            out << "\"\n";
        }
    }
}

/// Annulus picture: traced branches with the predicted asymptote lines laid
/// over them.  Deterministic output (fixed formatting, no timestamps).
inline void write_trace_svg(const std::string& path, const ChargeConfiguration& config,
                            const std::vector<CurveBranch>& branches,
                            const DirectionSpectrum& spectrum_, const TraceParams& params) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const double gamma = to_double(config.position_scale());
    const double world = params.outer_radius_scale * gamma * 1.05;
    const double size = 800.0;
    auto sx = [&](double x) { return decimal12((x / world * 0.5 + 0.5) * size); };
    auto sy = [&](double y) { return decimal12((0.5 - y / world * 0.5) * size); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    for (double scale : {params.inner_radius_scale, params.outer_radius_scale}) {
        double r = scale * gamma / world * 0.5 * size;
        out << "<circle cx=\"400\" cy=\"400\" r=\"" << decimal12(r)
            << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    // chart boundary |x| = |y|
    out << "<line x1=\"" << sx(-world) << "\" y1=\"" << sy(-world) << "\" x2=\"" << sx(world)
        << "\" y2=\"" << sy(world) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << sx(-world) << "\" y1=\"" << sy(world) << "\" x2=\"" << sx(world)
        << "\" y2=\"" << sy(-world) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    for (const auto& e : spectrum_.entries) {
        std::vector<double> slopes;
        if (e.zero_is_root) slopes.push_back(0.0);
        for (const auto& r : e.roots) slopes.push_back(r.midpoint_double());
        for (double slope : slopes) {
            double x1, y1;
            if (e.domain == Domain::TypeI) {
                x1 = slope * world;
                y1 = world;
            } else {
                x1 = world;
                y1 = slope * world;
            }
            out << "<line x1=\"" << sx(-x1) << "\" y1=\"" << sy(-y1) << "\" x2=\"" << sx(x1)
                << "\" y2=\"" << sy(y1)
                << "\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
        }
    }
    for (const auto& branch : branches) {
        if (branch.points.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < branch.points.size(); ++i)
            out << (i ? " " : "") << sx(branch.points[i][0]) << ',' << sy(branch.points[i][1]);
        out << "\"/>\n";
    }
    out << "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">zero curves "
           "(blue) and candidate asymptotes (dashed)</text>\n";
    out << "</svg>\n";
}

}  // namespace fieldasym
