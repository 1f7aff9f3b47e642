#include "fieldgraph/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace fieldgraph {

ModelReport build_report(std::uint32_t p, const Poly& f, std::uint64_t cover_limit) {
    FieldModel model(p, f);
    ModelReport r;
    r.p = p;
    r.k = model.k();
    r.n = model.q();
    r.polynomial = model.modulus_text();

    FieldGraph dig = build_digraph(model);
    for (const Edge& e : dig.edges)
        (e.kind.cls == EdgeClass::additive ? r.additive_edges : r.multiplicative_edges) += 1;

    r.graph = analyze_full_graph(model);
    r.flags = field_property_flags(model, model.q() <= cover_limit);
    r.spectral = check_lower_bounds(model);

    WeightedGraph wg = weighted_from_graph(to_undirected(dig));
    AutGroup aut = automorphism_group(wg);
    r.aut_order = aut.order.str();
    r.aut_generators = aut.generators.size();

    Poly partner = reciprocal(f);
    r.reciprocal_partner = format_poly(partner);
    if (partner == f) {
        r.isomorphic_to_partner = true;
    } else {
        FieldModel pm(p, partner);
        WeightedGraph pw = weighted_from_graph(to_undirected(build_digraph(pm)));
        r.isomorphic_to_partner = are_isomorphic(wg, pw);
    }
    return r;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string report_text(const ModelReport& r) {
    std::ostringstream os;
    os << "model: F_" << r.p << "[x]/(" << r.polynomial << ")   (p=" << r.p << ", k=" << r.k
       << ", n=" << r.n << ")\n";
    os << "edges (directed): " << r.additive_edges << " additive, " << r.multiplicative_edges
       << " multiplicative\n";
    os << "connected: " << yn(r.graph.connected)
       << "   strongly connected: " << yn(r.graph.strongly_connected) << "\n";
    os << "diameter: " << r.graph.diameter << " (bound " << r.graph.diameter_bound << ")"
       << "   directed diameter: " << r.graph.directed_diameter << " (bound "
       << r.graph.directed_diameter_bound << ")\n";
    os << "girth: ";
    if (r.graph.girth == kInfiniteGirth) os << "infinite";
    else os << r.graph.girth;
    os << "\n";
    os << "eulerian: undirected " << yn(r.graph.eulerian_undirected) << ", directed "
       << yn(r.graph.eulerian_directed) << "\n";
    os << "primitive: " << yn(r.flags.primitive)
       << "   multiplicative subgraph connected: " << yn(r.flags.multiplicative_connected) << "\n";
    os << "normal: " << yn(r.flags.normal)
       << "   additive subgraph connected: " << yn(r.flags.additive_connected) << "\n";
    if (r.flags.cover_connected.has_value())
        os << "cover connected: " << yn(*r.flags.cover_connected) << "\n";
    os << "lambda_1: " << fmt_double(r.spectral.lambda1) << "\n";
    os << "  >= 1/(p^(k+1)(2k+1)) = " << fmt_double(r.spectral.bound_general) << ": "
       << yn(r.spectral.general_holds) << "\n";
    os << "  >= 1/(p(2k+1)(p^k-1)) = " << fmt_double(r.spectral.bound_sharper) << ": "
       << yn(r.spectral.sharper_holds) << "\n";
    os << "  >= 2/(diam*(p^k-1)) = " << fmt_double(r.spectral.bound_diameter) << ": "
       << yn(r.spectral.diameter_holds) << "\n";
    if (r.spectral.normal)
        os << "  >= 4 sin^2(pi/p) = " << fmt_double(r.spectral.bound_normal) << ": "
           << yn(r.spectral.normal_holds) << "\n";
    os << "|Aut|: " << r.aut_order << " (" << r.aut_generators << " generators found)\n";
    os << "reciprocal partner: " << r.reciprocal_partner
       << "   isomorphic: " << yn(r.isomorphic_to_partner) << "\n";
    return os.str();
}

std::string report_json(const ModelReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["n"] = r.n;
    j["polynomial"] = r.polynomial;
    j["edges"]["additive"] = r.additive_edges;
    j["edges"]["multiplicative"] = r.multiplicative_edges;
    j["connected"] = r.graph.connected;
    j["strongly_connected"] = r.graph.strongly_connected;
    j["diameter"] = r.graph.diameter;
    j["diameter_bound"] = r.graph.diameter_bound;
    j["directed_diameter"] = r.graph.directed_diameter;
    j["directed_diameter_bound"] = r.graph.directed_diameter_bound;
    if (r.graph.girth == kInfiniteGirth) j["girth"] = nullptr;
    else j["girth"] = r.graph.girth;
    j["eulerian"]["undirected"] = r.graph.eulerian_undirected;
    j["eulerian"]["directed"] = r.graph.eulerian_directed;
    j["primitive"] = r.flags.primitive;
    j["normal"] = r.flags.normal;
    j["additive_connected"] = r.flags.additive_connected;
    j["multiplicative_connected"] = r.flags.multiplicative_connected;
    if (r.flags.cover_connected.has_value()) j["cover_connected"] = *r.flags.cover_connected;
    j["lambda1"] = r.spectral.lambda1;
    j["lambda1_bounds"]["general"] = r.spectral.bound_general;
    j["lambda1_bounds"]["sharper"] = r.spectral.bound_sharper;
    j["lambda1_bounds"]["diameter"] = r.spectral.bound_diameter;
    if (r.spectral.normal) j["lambda1_bounds"]["normal"] = r.spectral.bound_normal;
    j["lambda1_bounds_hold"] = r.spectral.general_holds && r.spectral.sharper_holds &&
                               r.spectral.diameter_holds && r.spectral.normal_holds;
    j["aut_order"] = r.aut_order;
    j["aut_generators"] = r.aut_generators;
    j["reciprocal_partner"] = r.reciprocal_partner;
    j["isomorphic_to_partner"] = r.isomorphic_to_partner;
    return j.dump(2) + "\n";
}

std::string spectrum_csv(std::uint32_t p, const Poly& f) {
    FieldModel model(p, f);
    std::vector<double> ev = spectrum_of(laplacian(to_undirected(build_digraph(model))));
    std::ostringstream os;
    os << "index,eigenvalue\n";
    for (std::size_t i = 0; i < ev.size(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", ev[i]);
        os << i << ',' << buf << '\n';
    }
    return os.str();
}

namespace {

std::string shade(int r0, int g0, int b0, int r1, int g1, int b1, double t) {
    int r = static_cast<int>(std::lround(r0 + (r1 - r0) * t));
    int g = static_cast<int>(std::lround(g0 + (g1 - g0) * t));
    int b = static_cast<int>(std::lround(b0 + (b1 - b0) * t));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string export_dot(std::uint32_t p, const Poly& f, Variant variant, std::uint32_t gen_index) {
    FieldModel model(p, f);
    FieldGraph g = build_subgraph(model, variant, gen_index);

    // Node labels by variant; vertex order is element-code order already.
    auto label = [&](std::uint32_t v) -> std::string {
        const std::uint64_t nz = model.q() - 1;
        switch (g.variant) {
        case Variant::multiplicative:
            return model.element_text(v + 1);
        case Variant::cover:
            return "(" + model.element_text(v / nz) + "," + model.element_text(v % nz + 1) + ")";
        default:
            return model.element_text(v);
        }
    };

    const std::uint32_t k = model.k();
    std::vector<std::string> add_color(k), mul_color(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        double t = k == 1 ? 0.0 : 0.55 * i / (k - 1);
        add_color[i] = shade(0xe0, 0x6f, 0x00, 0xff, 0xc8, 0x8c, t);
        mul_color[i] = shade(0x14, 0x50, 0xc8, 0x78, 0xbe, 0xff, t);
    }

    std::vector<std::size_t> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Edge& ea = g.edges[a];
        const Edge& eb = g.edges[b];
        auto ka = std::tuple(ea.kind.cls, ea.kind.gen_index, std::min(ea.from, ea.to),
                             std::max(ea.from, ea.to), ea.from);
        auto kb = std::tuple(eb.kind.cls, eb.kind.gen_index, std::min(eb.from, eb.to),
                             std::max(eb.from, eb.to), eb.from);
        return ka < kb;
    });

    std::ostringstream os;
    os << "graph \"" << model.modulus_text() << " over F_" << p << "\" {\n";
    os << "  layout=neato;\n  outputorder=edgesfirst;\n";
    os << "  node [shape=circle, style=filled, fillcolor=white, fontsize=10];\n";
    const double radius = std::max(2.0, 0.16 * g.n);
    for (std::uint32_t v = 0; v < g.n; ++v) {
        double angle = 2.0 * std::numbers::pi * v / g.n - std::numbers::pi / 2.0;
        char pos[64];
        std::snprintf(pos, sizeof(pos), "%.4f,%.4f!", radius * std::cos(angle),
                      radius * std::sin(angle));
        os << "  v" << v << " [label=\"" << label(v) << "\", pos=\"" << pos << "\"];\n";
    }
    for (std::size_t i : order) {
        const Edge& e = g.edges[i];
        const bool additive = e.kind.cls == EdgeClass::additive;
        os << "  v" << e.from << " -- v" << e.to << " [color=\""
           << (additive ? add_color[e.kind.gen_index] : mul_color[e.kind.gen_index]) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace fieldgraph
