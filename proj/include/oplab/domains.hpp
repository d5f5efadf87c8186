#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace oplab {

struct BoundaryNode {
    Eigen::Vector2d point;
    Eigen::Vector2d normal; // exterior unit normal
    double weight;          // surface measure carried by the node
};

// A planar domain with indicator, analytic boundary parametrization where
// available, and a surface quadrature mesh. d = 2 throughout the experiment
// catalog (the paper's setting requires d >= 2; d = 3 would reuse the same
// operator code paths but is not wired into the catalog).
struct DomainSpec {
    enum class Smoothness { lipschitz, pw_c1, pw_c3 };

    std::string label;
    int dimension = 2;
    std::function<bool(const Eigen::Vector2d&)> indicator;
    Eigen::AlignedBox2d bounding_box;
    Smoothness smoothness = Smoothness::pw_c3;

    // analytic surface data
    double surface_measure = 0.0; // perimeter
    double volume = 0.0;          // area

    std::function<std::vector<BoundaryNode>(int)> mesh_builder; // nodes(M)

    std::vector<BoundaryNode> boundary_mesh(int nodes) const { return mesh_builder(nodes); }
};

DomainSpec make_disk(double radius, const Eigen::Vector2d& center = {0.0, 0.0});
DomainSpec make_rect(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi);
// convex or star-shaped polygons with per-facet normals
DomainSpec make_polygon(const std::vector<Eigen::Vector2d>& vertices);

// catalog lookup: "disk:<r>", "disk:<r>@<cx>,<cy>", "square:<half>", "rect:...",
// "triangle" (equilateral, unit circumradius)
DomainSpec domain_registry(const std::string& label);

struct MeshValidation {
    double max_normal_defect = 0.0;     // | |n| - 1 |
    double surface_error = 0.0;         // |sum w - perimeter|
    bool orientation_ok = true;         // indicator(p - eps n) && !indicator(p + eps n)
};

MeshValidation validate_mesh(const DomainSpec& dom, int nodes, double eps = 1e-6);

} // namespace oplab
