#include <doctest.h>

#include <cmath>

#include "sdg/wavefront.hpp"

using namespace sdg;

TEST_CASE("external touch point") {
    Sphere a({0, 0}, 1), c({3, 0}, 2);
    Point2 b = external_touch_point(a, c);
    CHECK(b.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.y == doctest::Approx(0.0).epsilon(1e-12));
    // ab + bc = ac
    CHECK(dist(a.center, b) + dist(b, c.center) ==
          doctest::Approx(dist(a.center, c.center)).epsilon(1e-12));
    // swapped arguments give the same point
    Point2 b2 = external_touch_point(c, a);
    CHECK(dist(b, b2) < 1e-12);
    // precondition: radii must sum to the center distance
    CHECK_THROWS_AS(external_touch_point(Sphere({0, 0}, 1), Sphere({3, 0}, 1)), domain_error);

    SUBCASE("tangency is second order: moving on one sphere barely moves the distance") {
        // b' on S(a, 1) near b keeps |ab'| = 1 exactly, and |b'c| - |bc| = O(|b'-b|^2)
        double worst = 0;
        for (double th : {1e-3, 2e-3, 5e-3, 1e-2}) {
            Point2 bp{std::cos(th), std::sin(th)};
            double delta = dist(bp, b);
            double change = std::abs(dist(bp, c.center) - c.radius);
            worst = std::max(worst, change / (delta * delta));
        }
        // the analytic constant is (1/2)(1/r + 1/s) = 3/4 here
        CHECK(worst < 1.0);
    }
}

TEST_CASE("internal touch point") {
    Point2 c = internal_touch_point({0, 0}, {1, 0}, 2);
    CHECK(c.x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(collinearity_check({0, 0}, {1, 0}, c));
    Point2 tiny = internal_touch_point({0, 0}, {1, 0}, 1e-9);
    CHECK(dist(tiny, {1, 0}) <= 2e-9);
    CHECK_THROWS_AS(internal_touch_point({1, 1}, {1, 1}, 1), domain_error);
}

TEST_CASE("perpendicularity to a contact element") {
    ContactElement p({0, 0}, {0, 1}, 1);
    CHECK(perpendicular_check({0, 3}, p));
    CHECK_FALSE(perpendicular_check({1, 0}, p));
    // on the normal line at distance 1e-3 with 1e-6 lateral offset: the
    // lateral distance, not the angle, is what the tolerance bounds
    CHECK(perpendicular_check({1e-6, 1e-3}, p, 1e-4));
    CHECK_FALSE(perpendicular_check({1e-3, 1e-3}, p, 1e-4));
    CHECK_THROWS_WITH_AS(perpendicular_check({0, 0}, p), doctest::Contains("distance undefined"),
                         domain_error);
    CHECK_THROWS_AS(ContactElement({0, 0}, {0, 2}, 1), domain_error);
}

TEST_CASE("rays") {
    ContactElement p({0, 0}, {1, 0}, 1);
    Point2 r2 = ray_point(p, 2);
    CHECK(r2.x == doctest::Approx(2.0));
    ContactElement pin({0, 0}, {1, 0}, -1);
    CHECK(ray_point(pin, 2).x == doctest::Approx(-2.0));
    CHECK_THROWS_AS(ray_point(p, 0), domain_error);
    CHECK_THROWS_AS(ray_point(p, -1), domain_error);
    // any three distinct ray points are collinear
    CHECK(collinearity_check(ray_point(p, 1), ray_point(p, 2), ray_point(p, 3)));
    CHECK(dist(ray_point(p, 2), p.focus) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("collinearity") {
    CHECK(collinearity_check({0, 0}, {1, 0}, {2, 0}));
    CHECK_FALSE(collinearity_check({0, 0}, {0, 1}, {1, 0}));
    CHECK_THROWS_AS(collinearity_check({0, 0}, {0, 0}, {1, 0}), domain_error);
}

TEST_CASE("offsetting a circle changes the radius by s") {
    OrientedFront circle = OrientedFront::circle({0, 0}, 2.0, 256);
    auto outward = offset_front(circle, 0.5, +1);
    CHECK(outward.cusps.clean());
    for (const auto& v : outward.front.vertices)
        CHECK(std::abs(norm(v) - 2.5) < 1e-9);
    auto inward = offset_front(circle, 0.5, -1);
    CHECK(inward.cusps.clean());
    for (const auto& v : inward.front.vertices)
        CHECK(std::abs(norm(v) - 1.5) < 1e-9);
}

TEST_CASE("offsetting a straight segment translates it") {
    std::vector<Point2> v{{0, 0}, {1, 0}, {2, 0}};
    std::vector<Point2> n{{0, 1}, {0, 1}, {0, 1}};
    OrientedFront seg(v, n, false);
    auto moved = offset_front(seg, 0.25, +1);
    CHECK(moved.cusps.clean());
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(moved.front.vertices[i].x == doctest::Approx(v[i].x));
        CHECK(moved.front.vertices[i].y == doctest::Approx(0.25));
    }
}

TEST_CASE("offset semigroup on a convex front") {
    OrientedFront ellipse = OrientedFront::ellipse({0, 0}, 3.0, 2.0, 128);
    auto once = offset_front(ellipse, 0.3, +1);
    auto twice = offset_front(once.front, 0.45, +1);
    auto direct = offset_front(ellipse, 0.75, +1);
    REQUIRE(twice.front.vertices.size() == direct.front.vertices.size());
    for (size_t i = 0; i < direct.front.vertices.size(); ++i)
        CHECK(dist(twice.front.vertices[i], direct.front.vertices[i]) < 1e-9);
}

TEST_CASE("cusps appear exactly past the minimal curvature radius") {
    // ellipse with semi-axes a = 3, b = 1: curvature radius along the curve is
    // rho(th) = (a^2 sin^2 + b^2 cos^2)^(3/2) / (a b), minimal at th = 0: b^2/a
    double a = 3.0, b = 1.0;
    int segments = 512;
    OrientedFront ellipse = OrientedFront::ellipse({0, 0}, a, b, segments);
    double rho_min = b * b / a;

    auto below = offset_front(ellipse, rho_min * 0.9, -1);
    CHECK(below.cusps.reversed_segments.empty());

    auto above = offset_front(ellipse, rho_min * 1.1, -1);
    CHECK_FALSE(above.cusps.reversed_segments.empty());

    SUBCASE("flagged segments sit within one vertex of the analytic prediction") {
        double s = rho_min * 1.1;
        auto rho = [&](double th) {
            double q = a * a * std::sin(th) * std::sin(th) + b * b * std::cos(th) * std::cos(th);
            return std::pow(q, 1.5) / (a * b);
        };
        for (int i = 0; i < segments; ++i) {
            double mid = 2.0 * M_PI * (i + 0.5) / segments;
            bool predicted = s > rho(mid);
            bool flagged = std::find(above.cusps.reversed_segments.begin(),
                                     above.cusps.reversed_segments.end(),
                                     i) != above.cusps.reversed_segments.end();
            if (predicted != flagged) {
                // disagreement allowed only adjacent to the threshold crossing
                double lo = 2.0 * M_PI * (i - 0.5) / segments;
                double hi = 2.0 * M_PI * (i + 1.5) / segments;
                bool near_crossing = (s > rho(lo)) != (s > rho(hi));
                CHECK(near_crossing);
            }
        }
    }
}

TEST_CASE("sphere reconstruction from sampled points") {
    OrientedFront circle = OrientedFront::circle({1.5, -2.0}, 3.25, 64);
    Sphere fitted = fit_circle(circle.vertices);
    CHECK(std::abs(fitted.center.x - 1.5) < 1e-9);
    CHECK(std::abs(fitted.center.y + 2.0) < 1e-9);
    CHECK(std::abs(fitted.radius - 3.25) < 1e-9);
    // three points suffice
    std::vector<Point2> three{circle.vertices[0], circle.vertices[21], circle.vertices[40]};
    Sphere small = fit_circle(three);
    CHECK(std::abs(small.radius - 3.25) < 1e-9);
    CHECK_THROWS_AS(fit_circle({{0, 0}, {1, 1}}), usage_error);
}

TEST_CASE("front CSV round trip") {
    OrientedFront circle = OrientedFront::circle({0, 0}, 1.0, 16);
    std::string csv = front_to_csv(circle);
    OrientedFront back = front_from_csv_text(csv);
    REQUIRE(back.vertices.size() == circle.vertices.size());
    for (size_t i = 0; i < back.vertices.size(); ++i) {
        CHECK(dist(back.vertices[i], circle.vertices[i]) < 1e-15);
        CHECK(dist(back.normals[i], circle.normals[i]) < 1e-15);
    }
    CHECK_THROWS_AS(front_from_csv_text("1,2,3\n"), usage_error);
}

TEST_CASE("sphere invariants") {
    CHECK_THROWS_AS(Sphere({0, 0}, 0.0), domain_error);
    CHECK_THROWS_AS(Sphere({0, 0}, -1.0), domain_error);
}
