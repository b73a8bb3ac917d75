#pragma once

namespace quadpoly {

struct Point2 {
    double x;
    double y;
};

/// Sign of the determinant | b-a  c-a |, computed exactly: +1 for a left
/// turn a -> b -> c, -1 for a right turn, 0 when collinear.
int orient2d(Point2 a, Point2 b, Point2 c);

/// Closed segments [p1,p2] and [q1,q2] share at least one point.
bool segments_touch(Point2 p1, Point2 p2, Point2 q1, Point2 q2);

}  // namespace quadpoly
