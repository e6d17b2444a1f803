#include "sdg/wavefront.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sdg {

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }

ContactElement::ContactElement(Point2 f, Point2 n, int orient)
    : focus(f), normal(n), orientation(orient) {
    if (std::abs(norm(n) - 1.0) > 1e-12) throw domain_error("contact element normal is not unit");
    if (orient != 1 && orient != -1) throw usage_error("orientation must be +1 or -1");
}

OrientedFront::OrientedFront(std::vector<Point2> v, std::vector<Point2> n, bool closed_flag)
    : vertices(std::move(v)), normals(std::move(n)), closed(closed_flag) {
    if (vertices.size() != normals.size())
        throw usage_error("front needs one normal per vertex");
    for (const auto& nn : normals)
        if (std::abs(norm(nn) - 1.0) > 1e-9) throw domain_error("front normal is not unit");
    for (size_t i = 1; i < vertices.size(); ++i)
        if (dist(vertices[i - 1], vertices[i]) == 0)
            throw domain_error("front has coincident consecutive vertices");
}

OrientedFront OrientedFront::circle(Point2 center, double radius, int segments) {
    if (radius <= 0 || segments < 3) throw usage_error("circle needs radius > 0, segments >= 3");
    std::vector<Point2> v, n;
    for (int i = 0; i < segments; ++i) {
        double th = 2.0 * M_PI * i / segments;
        Point2 u{std::cos(th), std::sin(th)};
        v.push_back(center + radius * u);
        n.push_back(u); // outward
    }
    return OrientedFront(std::move(v), std::move(n), true);
}

OrientedFront OrientedFront::ellipse(Point2 center, double a, double b, int segments) {
    if (a <= 0 || b <= 0 || segments < 3) throw usage_error("bad ellipse parameters");
    std::vector<Point2> v, n;
    for (int i = 0; i < segments; ++i) {
        double th = 2.0 * M_PI * i / segments;
        v.push_back(center + Point2{a * std::cos(th), b * std::sin(th)});
        // outward normal of (a cos, b sin) is (b cos, a sin)/|.|
        Point2 u{b * std::cos(th), a * std::sin(th)};
        double len = norm(u);
        n.push_back({u.x / len, u.y / len});
    }
    return OrientedFront(std::move(v), std::move(n), true);
}

Point2 external_touch_point(const Sphere& a, const Sphere& c, double tol) {
    double d = dist(a.center, c.center);
    if (d == 0) throw domain_error("spheres are concentric");
    if (std::abs(a.radius + c.radius - d) > tol)
        throw domain_error("spheres do not touch externally");
    return a.center + (a.radius / d) * (c.center - a.center);
}

Point2 internal_touch_point(Point2 a, Point2 b, double s) {
    double d = dist(a, b);
    if (d == 0) throw domain_error("distance undefined for coincident points");
    if (!(s > 0)) throw domain_error("radius must be strictly positive");
    return b + (s / d) * (b - a);
}

bool perpendicular_check(Point2 c, const ContactElement& p, double tol) {
    double d = dist(c, p.focus);
    if (d <= tol) throw domain_error("distance undefined: point coincides with the focus");
    // lateral distance of c from the line through the focus along the normal
    return std::abs(cross(c - p.focus, p.normal)) <= tol;
}

Point2 ray_point(const ContactElement& p, double s) {
    if (!(s > 0)) throw domain_error("ray parameter must be strictly positive");
    return p.focus + (s * p.orientation) * p.normal;
}

bool collinearity_check(Point2 a, Point2 b, Point2 c, double tol) {
    if (dist(a, b) <= tol || dist(b, c) <= tol || dist(a, c) <= tol)
        throw domain_error("collinearity undefined for coincident points");
    return std::abs(dist(a, b) + dist(b, c) - dist(a, c)) <= tol;
}

OffsetResult offset_front(const OrientedFront& b, double s, int orientation) {
    if (!(s > 0)) throw domain_error("offset distance must be strictly positive");
    if (orientation != 1 && orientation != -1) throw usage_error("orientation must be +1 or -1");
    OffsetResult out;
    out.front.closed = b.closed;
    out.front.normals = b.normals;
    for (size_t i = 0; i < b.vertices.size(); ++i)
        out.front.vertices.push_back(b.vertices[i] + (s * orientation) * b.normals[i]);

    size_t n = b.vertices.size();
    size_t segs = b.closed ? n : (n == 0 ? 0 : n - 1);
    auto seg = [&](const std::vector<Point2>& v, size_t i) {
        return v[(i + 1) % n] - v[i];
    };
    std::vector<bool> reversed(segs, false);
    for (size_t i = 0; i < segs; ++i) {
        Point2 d0 = seg(b.vertices, i);
        Point2 d1 = seg(out.front.vertices, i);
        if (dot(d0, d1) <= 0) {
            reversed[i] = true;
            out.cusps.reversed_segments.push_back(static_cast<int>(i));
        }
    }
    // adjacent offset segments crossing: turn direction flips against the base
    for (size_t i = 0; i + 1 < segs || (b.closed && i < segs); ++i) {
        size_t j = (i + 1) % segs;
        if (j == 0 && !b.closed) break;
        double base_turn = cross(seg(b.vertices, i), seg(b.vertices, j));
        double off_turn = cross(seg(out.front.vertices, i), seg(out.front.vertices, j));
        if (base_turn * off_turn < 0 && !reversed[i] && !reversed[j])
            out.cusps.crossing_vertices.push_back(static_cast<int>(j));
    }
    return out;
}

Sphere fit_circle(const std::vector<Point2>& pts) {
    if (pts.size() < 3) throw usage_error("circle fit needs at least 3 points");
    // Kasa fit: minimize |x|^2 + ax + by + c over (a, b, c)
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sxz = 0, syz = 0, sz = 0;
    double m = static_cast<double>(pts.size());
    for (const auto& p : pts) {
        double z = p.x * p.x + p.y * p.y;
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
        sx += p.x;
        sy += p.y;
        sxz += p.x * z;
        syz += p.y * z;
        sz += z;
    }
    // solve [sxx sxy sx; sxy syy sy; sx sy m] [A B C]' = [sxz; syz; sz]
    double mat[3][4] = {{sxx, sxy, sx, sxz}, {sxy, syy, sy, syz}, {sx, sy, m, sz}};
    for (int k = 0; k < 3; ++k) {
        int piv = k;
        for (int r = k + 1; r < 3; ++r)
            if (std::abs(mat[r][k]) > std::abs(mat[piv][k])) piv = r;
        std::swap(mat[k], mat[piv]);
        if (mat[k][k] == 0) throw domain_error("degenerate circle fit");
        for (int r = 0; r < 3; ++r) {
            if (r == k) continue;
            double f = mat[r][k] / mat[k][k];
            for (int c2 = k; c2 < 4; ++c2) mat[r][c2] -= f * mat[k][c2];
        }
    }
    double A = mat[0][3] / mat[0][0];
    double B = mat[1][3] / mat[1][1];
    double C = mat[2][3] / mat[2][2];
    Point2 center{A / 2, B / 2};
    double r2 = C + center.x * center.x + center.y * center.y;
    if (r2 <= 0) throw domain_error("degenerate circle fit");
    return Sphere(center, std::sqrt(r2));
}

std::string front_to_csv(const OrientedFront& front) {
    std::ostringstream out;
    out.precision(17);
    for (size_t i = 0; i < front.vertices.size(); ++i)
        out << front.vertices[i].x << "," << front.vertices[i].y << "," << front.normals[i].x
            << "," << front.normals[i].y << "\n";
    return out.str();
}

OrientedFront front_from_csv_text(const std::string& text) {
    std::vector<Point2> v, n;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != 4) throw usage_error("front CSV rows are x,y,nx,ny");
        v.push_back({row[0], row[1]});
        n.push_back({row[2], row[3]});
    }
    // closed when first and last vertices are far apart is unknowable from
    // the file; default to closed polylines, the common case for fronts
    return OrientedFront(std::move(v), std::move(n), true);
}

OrientedFront read_front_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open front file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return front_from_csv_text(ss.str());
}

void write_front_csv(const std::string& path, const OrientedFront& front) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot write front file '" + path + "'");
    out << front_to_csv(front);
}

} // namespace sdg
