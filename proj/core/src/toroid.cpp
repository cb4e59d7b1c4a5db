#include "bctk/toroid.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "bctk/detail/format_util.hpp"
#include "json.hpp"

namespace bctk {

ToroidMesh toroid_mesh(int n, double major_radius, double minor_radius) {
    if (n < 3) {
        throw BadParameters("toroid_mesh: class T2 needs n >= 3");
    }
    if (!(minor_radius > 0.0) || !(major_radius > minor_radius)) {
        throw BadParameters("toroid_mesh: requires R > r > 0");
    }
    ToroidMesh mesh;
    mesh.n = n;
    mesh.major_radius = major_radius;
    mesh.minor_radius = minor_radius;
    mesh.vertices.reserve(static_cast<std::size_t>(n) * n);

    const double step = 2.0 * std::numbers::pi / n;
    for (int h1 = 0; h1 < n; ++h1) {
        const double theta1 = h1 * step;
        for (int h2 = 0; h2 < n; ++h2) {
            const double theta2 = h2 * step;
            const double ring = major_radius + minor_radius * std::cos(theta2);
            mesh.vertices.push_back({ring * std::cos(theta1),
                                     ring * std::sin(theta1),
                                     minor_radius * std::sin(theta2)});
        }
    }

    const auto index = [n](int h1, int h2) {
        return ((h1 % n + n) % n) * n + ((h2 % n + n) % n);
    };
    mesh.edges.reserve(2u * n * n);
    mesh.faces.reserve(static_cast<std::size_t>(n) * n);
    for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
            mesh.edges.push_back({index(h1, h2), index(h1 + 1, h2)});
            mesh.edges.push_back({index(h1, h2), index(h1, h2 + 1)});
            mesh.faces.push_back({index(h1, h2), index(h1 + 1, h2),
                                  index(h1 + 1, h2 + 1), index(h1, h2 + 1)});
        }
    }
    return mesh;
}

void write_obj(const ToroidMesh& mesh, std::ostream& out) {
    for (const auto& v : mesh.vertices) {
        out << "v " << detail::shortest(v[0]) << ' ' << detail::shortest(v[1])
            << ' ' << detail::shortest(v[2]) << '\n';
    }
    for (const auto& e : mesh.edges) {
        out << "l " << e[0] + 1 << ' ' << e[1] + 1 << '\n';
    }
    for (const auto& f : mesh.faces) {
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' '
            << f[3] + 1 << '\n';
    }
}

std::string to_obj(const ToroidMesh& mesh) {
    std::ostringstream out;
    write_obj(mesh, out);
    return out.str();
}

std::string to_json(const ToroidMesh& mesh) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["n"] = mesh.n;
    j["R"] = mesh.major_radius;
    j["r"] = mesh.minor_radius;
    j["vertices"] = mesh.vertices;
    j["edges"] = mesh.edges;
    j["faces"] = mesh.faces;
    return j.dump();
}

}  // namespace bctk
