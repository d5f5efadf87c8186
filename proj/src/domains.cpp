#include "oplab/domains.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace oplab {

DomainSpec make_disk(double radius, const Eigen::Vector2d& center) {
    if (radius <= 0) throw std::invalid_argument("make_disk: radius must be positive");
    DomainSpec d;
    std::ostringstream lab;
    lab << "disk:" << radius;
    d.label = lab.str();
    d.indicator = [radius, center](const Eigen::Vector2d& x) {
        return (x - center).squaredNorm() <= radius * radius;
    };
    d.bounding_box = Eigen::AlignedBox2d(center.array() - radius, center.array() + radius);
    d.smoothness = DomainSpec::Smoothness::pw_c3;
    d.surface_measure = 2.0 * std::numbers::pi * radius;
    d.volume = std::numbers::pi * radius * radius;
    d.mesh_builder = [radius, center](int m) {
        std::vector<BoundaryNode> nodes;
        nodes.reserve(size_t(m));
        const double w = 2.0 * std::numbers::pi * radius / m;
        for (int i = 0; i < m; ++i) {
            const double th = 2.0 * std::numbers::pi * (i + 0.5) / m;
            Eigen::Vector2d n(std::cos(th), std::sin(th));
            nodes.push_back({center + radius * n, n, w});
        }
        return nodes;
    };
    return d;
}

DomainSpec make_rect(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi) {
    if (!(hi.x() > lo.x() && hi.y() > lo.y()))
        throw std::invalid_argument("make_rect: degenerate box");
    DomainSpec d;
    d.label = "rect";
    d.indicator = [lo, hi](const Eigen::Vector2d& x) {
        return x.x() >= lo.x() && x.x() <= hi.x() && x.y() >= lo.y() && x.y() <= hi.y();
    };
    d.bounding_box = Eigen::AlignedBox2d(lo, hi);
    d.smoothness = DomainSpec::Smoothness::pw_c1;
    const double wx = hi.x() - lo.x(), wy = hi.y() - lo.y();
    d.surface_measure = 2.0 * (wx + wy);
    d.volume = wx * wy;
    d.mesh_builder = [lo, hi, wx, wy](int m) {
        // distribute nodes proportionally to edge length
        std::vector<BoundaryNode> nodes;
        const double per = 2.0 * (wx + wy);
        struct Edge {
            Eigen::Vector2d a, b, n;
        };
        const Edge edges[4] = {
            {{lo.x(), lo.y()}, {hi.x(), lo.y()}, {0, -1}},
            {{hi.x(), lo.y()}, {hi.x(), hi.y()}, {1, 0}},
            {{hi.x(), hi.y()}, {lo.x(), hi.y()}, {0, 1}},
            {{lo.x(), hi.y()}, {lo.x(), lo.y()}, {-1, 0}},
        };
        for (const auto& e : edges) {
            const double len = (e.b - e.a).norm();
            int cnt = std::max(1, int(std::lround(m * len / per)));
            const double w = len / cnt;
            for (int i = 0; i < cnt; ++i) {
                const double t = (i + 0.5) / cnt;
                nodes.push_back({e.a + t * (e.b - e.a), e.n, w});
            }
        }
        return nodes;
    };
    return d;
}

DomainSpec make_polygon(const std::vector<Eigen::Vector2d>& vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("make_polygon: need >= 3 vertices");
    DomainSpec d;
    d.label = "polygon";
    d.smoothness = DomainSpec::Smoothness::pw_c1;
    Eigen::AlignedBox2d bb;
    for (const auto& v : vertices) bb.extend(v);
    d.bounding_box = bb;
    double area = 0.0, per = 0.0;
    const size_t nv = vertices.size();
    for (size_t i = 0; i < nv; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % nv];
        area += 0.5 * (a.x() * b.y() - b.x() * a.y());
        per += (b - a).norm();
    }
    const double orient = (area >= 0) ? 1.0 : -1.0; // CCW => exterior normal is right of edge
    d.volume = std::abs(area);
    d.surface_measure = per;
    d.indicator = [vertices, nv](const Eigen::Vector2d& x) {
        // ray casting
        bool inside = false;
        for (size_t i = 0, j = nv - 1; i < nv; j = i++) {
            const auto& a = vertices[i];
            const auto& b = vertices[j];
            if (((a.y() > x.y()) != (b.y() > x.y())) &&
                (x.x() < (b.x() - a.x()) * (x.y() - a.y()) / (b.y() - a.y()) + a.x()))
                inside = !inside;
        }
        return inside;
    };
    d.mesh_builder = [vertices, nv, per, orient](int m) {
        std::vector<BoundaryNode> nodes;
        for (size_t i = 0; i < nv; ++i) {
            const auto& a = vertices[i];
            const auto& b = vertices[(i + 1) % nv];
            const Eigen::Vector2d e = b - a;
            const double len = e.norm();
            Eigen::Vector2d n(orient * e.y() / len, -orient * e.x() / len);
            int cnt = std::max(1, int(std::lround(m * len / per)));
            const double w = len / cnt;
            for (int k = 0; k < cnt; ++k)
                nodes.push_back({a + ((k + 0.5) / cnt) * e, n, w});
        }
        return nodes;
    };
    return d;
}

DomainSpec domain_registry(const std::string& label) {
    auto colon = label.find(':');
    const std::string name = label.substr(0, colon);
    const std::string arg = (colon == std::string::npos) ? "" : label.substr(colon + 1);
    if (name == "disk") {
        double r = 1.0;
        Eigen::Vector2d c(0, 0);
        if (!arg.empty()) {
            auto at = arg.find('@');
            r = std::stod(arg.substr(0, at));
            if (at != std::string::npos) {
                auto comma = arg.find(',', at);
                c.x() = std::stod(arg.substr(at + 1, comma - at - 1));
                c.y() = std::stod(arg.substr(comma + 1));
            }
        }
        return make_disk(r, c);
    }
    if (name == "square") {
        const double h = arg.empty() ? 1.0 : std::stod(arg);
        return make_rect({-h, -h}, {h, h});
    }
    if (name == "triangle") {
        std::vector<Eigen::Vector2d> v;
        for (int k = 0; k < 3; ++k) {
            const double th = 2.0 * std::numbers::pi * k / 3.0 + std::numbers::pi / 2.0;
            v.emplace_back(std::cos(th), std::sin(th));
        }
        return make_polygon(v);
    }
    throw std::invalid_argument("domain_registry: unknown label '" + label + "'");
}

MeshValidation validate_mesh(const DomainSpec& dom, int nodes, double eps) {
    MeshValidation v;
    double wsum = 0.0;
    for (const auto& bn : dom.boundary_mesh(nodes)) {
        v.max_normal_defect = std::max(v.max_normal_defect, std::abs(bn.normal.norm() - 1.0));
        wsum += bn.weight;
        if (dom.indicator(bn.point + eps * bn.normal) ||
            !dom.indicator(bn.point - eps * bn.normal))
            v.orientation_ok = false;
    }
    v.surface_error = std::abs(wsum - dom.surface_measure);
    return v;
}

} // namespace oplab
