#pragma once

#include <string>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

struct Point2 {
    double x = 0, y = 0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
double dist(Point2 a, Point2 b);
double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 a);

struct Sphere {
    Point2 center;
    double radius;

    Sphere(Point2 c, double r) : center(c), radius(r) {
        if (!(r > 0)) throw domain_error("sphere radius must be strictly positive");
    }
};

/// Numeric rendering of a contact element: focus plus oriented unit normal.
struct ContactElement {
    Point2 focus;
    Point2 normal;   // unit within 1e-12
    int orientation; // +1 outer, -1 inner

    ContactElement(Point2 f, Point2 n, int orient);
};

/// Polyline with explicit per-vertex unit normals.
struct OrientedFront {
    std::vector<Point2> vertices;
    std::vector<Point2> normals;
    bool closed = false;

    OrientedFront() = default;
    OrientedFront(std::vector<Point2> v, std::vector<Point2> n, bool closed_flag);

    static OrientedFront circle(Point2 center, double radius, int segments);
    static OrientedFront ellipse(Point2 center, double a, double b, int segments);
};

constexpr double kWavefrontTol = 1e-9;

/// Touch point of two externally tangent spheres: the point dividing the
/// center segment at distance r from a; requires r + s = dist within tol.
Point2 external_touch_point(const Sphere& a, const Sphere& c, double tol = kWavefrontTol);

/// The unique c with S(a, ab+s) and S(b, s) touching at c: b pushed away
/// from a by s.
Point2 internal_touch_point(Point2 a, Point2 b, double s);

/// Is c - focus parallel to the contact element's normal within tol?
bool perpendicular_check(Point2 c, const ContactElement& p, double tol = kWavefrontTol);

/// P |- s: the point at distance s from the focus along the oriented normal.
Point2 ray_point(const ContactElement& p, double s);

/// |ab + bc - ac| <= tol, all three distances defined.
bool collinearity_check(Point2 a, Point2 b, Point2 c, double tol = kWavefrontTol);

struct CuspReport {
    std::vector<int> reversed_segments; // segment i flipped direction
    std::vector<int> crossing_vertices; // adjacent offset segments cross
    bool clean() const { return reversed_segments.empty() && crossing_vertices.empty(); }
};

struct OffsetResult {
    OrientedFront front;
    CuspReport cusps;
};

/// B |- s: per-vertex move along the oriented normal; cusp data reports
/// where the offset map fails local injectivity.
OffsetResult offset_front(const OrientedFront& b, double s, int orientation);

/// Algebraic circle fit (least squares) through >= 3 points.
Sphere fit_circle(const std::vector<Point2>& pts);

/// CSV rows "x,y,nx,ny".
OrientedFront read_front_csv(const std::string& path);
void write_front_csv(const std::string& path, const OrientedFront& front);
std::string front_to_csv(const OrientedFront& front);
OrientedFront front_from_csv_text(const std::string& text);

} // namespace sdg
