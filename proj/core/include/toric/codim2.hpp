#pragma once

#include "toric/bases.hpp"

namespace toric {

struct Vec2 {
    Int x, y;

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const { return x != o.x ? x < o.x : y < o.y; }
    Vec2 operator-() const { return Vec2{-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// 90-degree rotation of a Gale row, primitive-normalized; zero stays zero.
Vec2 reduced_ray(const Vec2& b);

/// Exact counterclockwise comparison starting from the positive x-axis.
/// Equal directions compare equal (returns false both ways).
bool angular_less(const Vec2& a, const Vec2& b);

/// Reduced Gale diagram of a codimension-2 configuration: one ray per
/// column, the distinct nonzero directions in cyclic order (so the interior
/// of each consecutive cone is ray-free), and the complete fan obtained by
/// also adding the opposite of every ray.
struct ReducedGaleDiagram {
    IntMatrix gale;             // n x 2, rows b_i
    std::vector<Vec2> rays;     // per column, (0,0) for free columns
    std::vector<Vec2> cyclic;   // distinct nonzero rays, ccw
    std::vector<Vec2> fan;      // distinct rays and their opposites, ccw
};
ReducedGaleDiagram reduced_gale_from_rows(const IntMatrix& b);
ReducedGaleDiagram reduced_gale_diagram(const IntMatrix& a);

/// Minimal generating set of cone(u, v) meet Z^2 (u, v nonzero, not
/// opposite), by irreducibility filtering in the fundamental parallelogram.
struct HilbertBasis2D {
    Vec2 u, v;
    std::vector<Vec2> basis;
};
HilbertBasis2D hilbert_basis_2d(const Vec2& u, const Vec2& v);

/// Union of the Hilbert bases of the consecutive cones of the rays
/// (H_1 u ... u H_{n'}).
std::vector<Vec2> hilbert_union(const ReducedGaleDiagram& diagram);

/// Union of the Hilbert bases over the complete two-sided fan.  Each of its
/// cones is an intersection of closed halfplanes of the ray lines, so a
/// conformal split of a kernel vector cannot leave the cone of its
/// parameter; this is the union that captures the whole Graver basis.
std::vector<Vec2> hilbert_union_full_fan(const ReducedGaleDiagram& diagram);

/// Graver basis and indispensable set through the Hilbert-basis route:
/// Graver elements are B.u over the full-fan union; indispensable ones are
/// B.u with both u and -u in the one-sided union.
std::pair<BasisSet, BasisSet> graver_and_indispensable_codim2(const IntMatrix& a);

/// Circuits are exactly the vectors B.ray_i over nonzero Gale rows.
BasisSet circuits_codim2(const IntMatrix& a);

/// Centrally symmetric polygon conv{ +-ray_i }; per-index vertex flags.
struct CentralPolygon {
    std::vector<Vec2> vertices;      // ccw hull vertices
    std::vector<bool> vertex_flag;   // per column index
    std::vector<size_t> non_vertex_indices() const;
};
CentralPolygon central_polygon(const IntMatrix& t);

/// Strong robustness in codimension 2: every Hilbert-union element has its
/// opposite in the union.  Agrees with the circuit criterion by
/// construction; a disagreement is an internal fault.
bool is_strongly_robust_codim2(const IntMatrix& a);

}  // namespace toric
