#include "toric/codim2.hpp"

#include <algorithm>
#include <set>

namespace toric {

Vec2 reduced_ray(const Vec2& b) {
    if (b.is_zero()) return Vec2{0, 0};
    Int g = gcd_int(b.x, b.y);
    return Vec2{-b.y / g, b.x / g};
}

namespace {

// 0 for the closed upper half (y > 0, or y == 0 and x > 0), 1 below.
int half(const Vec2& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
    return 1;
}

}  // namespace

bool angular_less(const Vec2& a, const Vec2& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

ReducedGaleDiagram reduced_gale_from_rows(const IntMatrix& b) {
    if (b.cols() != 2) throw Error("wrong codimension");
    ReducedGaleDiagram d;
    d.gale = b;
    d.rays.reserve(b.rows());
    std::set<Vec2> distinct;
    for (size_t i = 0; i < b.rows(); ++i) {
        Vec2 ray = reduced_ray(Vec2{b(i, 0), b(i, 1)});
        if (!ray.is_zero()) distinct.insert(ray);
        d.rays.push_back(ray);
    }
    d.cyclic.assign(distinct.begin(), distinct.end());
    std::sort(d.cyclic.begin(), d.cyclic.end(), angular_less);
    std::set<Vec2> two_sided = distinct;
    for (const Vec2& r : distinct) two_sided.insert(-r);
    d.fan.assign(two_sided.begin(), two_sided.end());
    std::sort(d.fan.begin(), d.fan.end(), angular_less);
    return d;
}

ReducedGaleDiagram reduced_gale_diagram(const IntMatrix& a) {
    require_grading(a);
    GaleTransform g = gale_transform(a);
    if (g.matrix.cols() != 2) throw Error("wrong codimension");
    return reduced_gale_from_rows(g.matrix);
}

HilbertBasis2D hilbert_basis_2d(const Vec2& u, const Vec2& v) {
    if (u.is_zero() || v.is_zero()) throw Error("degenerate cone");
    Int gu = gcd_int(u.x, u.y), gv = gcd_int(v.x, v.y);
    Vec2 up{u.x / gu, u.y / gu}, vp{v.x / gv, v.y / gv};
    if (up == -vp) throw Error("degenerate cone");
    HilbertBasis2D out{u, v, {}};
    if (up == vp) {
        out.basis.push_back(up);
        return out;
    }
    if (cross(up, vp) < 0) std::swap(up, vp);  // ccw orientation
    const Int det = cross(up, vp);

    // lattice points of the closed fundamental parallelogram
    std::vector<Vec2> candidates;
    Int sx = up.x + vp.x, sy = up.y + vp.y;
    Int xlo = std::min(Int(0), std::min(up.x, std::min(vp.x, sx)));
    Int xhi = std::max(Int(0), std::max(up.x, std::max(vp.x, sx)));
    Int ylo = std::min(Int(0), std::min(up.y, std::min(vp.y, sy)));
    Int yhi = std::max(Int(0), std::max(up.y, std::max(vp.y, sy)));
    for (Int x = xlo; x <= xhi; ++x)
        for (Int y = ylo; y <= yhi; ++y) {
            Vec2 z{x, y};
            if (z.is_zero()) continue;
            Int alpha = cross(z, vp);   // = a * det
            Int beta = cross(up, z);    // = b * det
            if (alpha < 0 || alpha > det) continue;
            if (beta < 0 || beta > det) continue;
            candidates.push_back(z);
        }

    std::set<Vec2> cset(candidates.begin(), candidates.end());
    for (const Vec2& z : candidates) {
        bool reducible = false;
        for (const Vec2& p : candidates) {
            Vec2 q{z.x - p.x, z.y - p.y};
            if (q.is_zero() || q == z) continue;
            if (cset.count(q)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.basis.push_back(z);
    }
    std::sort(out.basis.begin(), out.basis.end());
    return out;
}

namespace {

std::vector<Vec2> union_over(const std::vector<Vec2>& cyclic) {
    std::set<Vec2> u;
    const size_t p = cyclic.size();
    for (size_t i = 0; i < p; ++i) {
        const Vec2& a = cyclic[i];
        const Vec2& b = cyclic[(i + 1) % p];
        if (a == b) continue;  // single direction, the ray alone
        for (const Vec2& h : hilbert_basis_2d(a, b).basis) u.insert(h);
    }
    if (p == 1) u.insert(cyclic[0]);
    return std::vector<Vec2>(u.begin(), u.end());
}

}  // namespace

std::vector<Vec2> hilbert_union(const ReducedGaleDiagram& diagram) {
    return union_over(diagram.cyclic);
}

std::vector<Vec2> hilbert_union_full_fan(const ReducedGaleDiagram& diagram) {
    return union_over(diagram.fan);
}

namespace {

IVec kernel_vector_of(const IntMatrix& gale, const Vec2& u) {
    IVec x(gale.rows());
    for (size_t i = 0; i < gale.rows(); ++i) x[i] = gale(i, 0) * u.x + gale(i, 1) * u.y;
    return x;
}

}  // namespace

std::pair<BasisSet, BasisSet> graver_and_indispensable_codim2(const IntMatrix& a) {
    ReducedGaleDiagram d = reduced_gale_diagram(a);
    std::vector<IVec> gr, ind;
    for (const Vec2& h : hilbert_union_full_fan(d))
        gr.push_back(kernel_vector_of(d.gale, h));
    std::vector<Vec2> u = hilbert_union(d);
    std::set<Vec2> uset(u.begin(), u.end());
    for (const Vec2& h : u)
        if (uset.count(-h)) ind.push_back(kernel_vector_of(d.gale, h));
    return {BasisSet::from_vectors(std::move(gr)), BasisSet::from_vectors(std::move(ind))};
}

BasisSet circuits_codim2(const IntMatrix& a) {
    ReducedGaleDiagram d = reduced_gale_diagram(a);
    std::vector<IVec> cs;
    for (const Vec2& ray : d.rays)
        if (!ray.is_zero()) cs.push_back(kernel_vector_of(d.gale, ray));
    return BasisSet::from_vectors(std::move(cs));
}

namespace {

// strict-turn monotone chain; returns ccw vertex list
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(Vec2{hull[k - 1].x - hull[k - 2].x, hull[k - 1].y - hull[k - 2].y},
                               Vec2{pts[i].x - hull[k - 2].x, pts[i].y - hull[k - 2].y}) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(Vec2{hull[k - 1].x - hull[k - 2].x, hull[k - 1].y - hull[k - 2].y},
                               Vec2{pts[i].x - hull[k - 2].x, pts[i].y - hull[k - 2].y}) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

std::vector<size_t> CentralPolygon::non_vertex_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < vertex_flag.size(); ++i)
        if (!vertex_flag[i]) out.push_back(i + 1);
    return out;
}

CentralPolygon central_polygon(const IntMatrix& t) {
    if (!is_simple(t)) throw Error("matrix is not simple");
    ReducedGaleDiagram d = reduced_gale_diagram(t);
    std::vector<Vec2> pts;
    for (const Vec2& r : d.rays) {
        if (r.is_zero()) continue;
        pts.push_back(r);
        pts.push_back(-r);
    }
    CentralPolygon p;
    p.vertices = convex_hull(std::move(pts));
    std::set<Vec2> vset(p.vertices.begin(), p.vertices.end());
    p.vertex_flag.reserve(d.rays.size());
    for (const Vec2& r : d.rays)
        p.vertex_flag.push_back(!r.is_zero() && vset.count(r) > 0);
    return p;
}

bool is_strongly_robust_codim2(const IntMatrix& a) {
    ReducedGaleDiagram d = reduced_gale_diagram(a);
    std::vector<Vec2> u = hilbert_union(d);
    std::set<Vec2> uset(u.begin(), u.end());
    std::set<Vec2> indisp;
    for (const Vec2& h : u)
        if (uset.count(-h)) {
            indisp.insert(h);
            indisp.insert(-h);
        }
    // every Graver parameter must be indispensable
    bool full = true;
    for (const Vec2& h : hilbert_union_full_fan(d))
        if (!indisp.count(h)) {
            full = false;
            break;
        }
    // circuit criterion: both signs of every ray must appear in the union
    bool circ = true;
    for (const Vec2& r : d.rays) {
        if (r.is_zero()) continue;
        if (!uset.count(r) || !uset.count(-r)) {
            circ = false;
            break;
        }
    }
    if (full != circ)
        throw std::logic_error("codim-2 robustness criteria disagree");
    return full;
}

}  // namespace toric
