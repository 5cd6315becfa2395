#include "beanbound/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace beanbound {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json to_json(const TruncatedSeries<Rational>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s[i].to_string());
    return {{"order", s.order()}, {"field", "rational"}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const TruncatedSeries<double>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s[i]);
    return {{"order", s.order()}, {"field", "float"}, {"coeffs", coeffs}};
}

TruncatedSeries<Rational> rational_series_from_json(const nlohmann::json& j) {
    if (j.at("field") != "rational") throw std::invalid_argument("expected rational series");
    TruncatedSeries<Rational> s(j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    for (int i = 0; i <= s.order(); ++i)
        s.set(i, Rational::parse(coeffs.at(static_cast<std::size_t>(i)).get<std::string>()));
    return s;
}

TruncatedSeries<double> double_series_from_json(const nlohmann::json& j) {
    if (j.at("field") != "float") throw std::invalid_argument("expected float series");
    TruncatedSeries<double> s(j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    for (int i = 0; i <= s.order(); ++i) s.set(i, coeffs.at(static_cast<std::size_t>(i)).get<double>());
    return s;
}

nlohmann::json to_json(const SchwarzParams& p) {
    nlohmann::json j = {{"tau1", p.tau1},
                        {"tau2", {p.tau2.real(), p.tau2.imag()}},
                        {"tau3", {p.tau3.real(), p.tau3.imag()}}};
    if (p.tau4) j["tau4"] = {p.tau4->real(), p.tau4->imag()};
    return j;
}

nlohmann::json to_json(const BtbFunction<Rational>& f) {
    nlohmann::json j = {{"a2", f.a2.to_string()},
                        {"a3", f.a3.to_string()},
                        {"a4", f.a4.to_string()},
                        {"source", provenance_name(f.source)}};
    if (f.a5) j["a5"] = f.a5->to_string();
    if (f.extremal_k) j["k"] = f.extremal_k;
    for (const auto& [idx, v] : f.extra_coeffs) j["a" + std::to_string(idx)] = v.to_string();
    return j;
}

nlohmann::json to_json(const BoundReport& r) {
    const char* kind = r.kind == BoundKind::max_abs
                           ? "max_abs"
                           : (r.kind == BoundKind::max_signed ? "max_signed" : "min_signed");
    const double gap = r.kind == BoundKind::min_signed ? r.attained - r.bound.value
                                                       : r.bound.value - r.attained;
    nlohmann::json j = {
        {"theorem_id", r.theorem_id},
        {"kind", kind},
        {"bound", {{"value", r.bound.value}, {"exact", r.bound.exact}}},
        {"attained", r.attained},
        {"gap", gap},
        {"params", to_json(r.attaining)},
        {"attained_from", r.attained_from},
        {"verdict", verdict_name(r.verdict)},
        {"tolerances", {{"attainment", r.attainment_tol}, {"exceedance", r.exceedance_tol}}},
        {"seed", r.seed},
        {"samples", r.samples},
    };
    if (!r.c4_mode.empty()) j["c4_mode"] = r.c4_mode;
    return j;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    os << "theorem_id,bound,attained,gap,verdict\n";
    for (const auto& r : reports) {
        const double gap = r.kind == BoundKind::min_signed ? r.attained - r.bound.value
                                                           : r.bound.value - r.attained;
        os << r.theorem_id << ',' << fmt_double(r.bound.value) << ',' << fmt_double(r.attained)
           << ',' << fmt_double(gap) << ',' << verdict_name(r.verdict) << '\n';
    }
    return os.str();
}

std::string reports_to_jsonl(const std::vector<BoundReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += to_json(r).dump() + "\n";
    return out;
}

std::string svg_polyline(const std::vector<std::pair<double, double>>& pts, int width,
                         int height) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!pts.empty()) {
        xmin = xmax = pts[0].first;
        ymin = ymax = pts[0].second;
        for (const auto& [x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double margin = 10.0;
    const double sx = (width - 2 * margin) / (xmax - xmin);
    const double sy = (height - 2 * margin) / (ymax - ymin);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double px = margin + (pts[i].first - xmin) * sx;
        const double py = height - margin - (pts[i].second - ymin) * sy;
        if (i) os << ' ';
        os << fmt_double(px) << ',' << fmt_double(py);
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

} // namespace beanbound
