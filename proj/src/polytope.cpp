#include "chebvar/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chebvar/errors.hpp"

namespace chebvar {

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec cross(const RatVec& a, const RatVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x.num != 0) return false;
    return true;
}

/// Scales to a primitive integer vector with positive leading entry rule
/// left to the caller; used to canonicalize facet normals.
RatVec primitive(const RatVec& v) {
    long long l = 1;
    for (const Rat& x : v) l = std::lcm(l, x.den);
    std::vector<long long> w;
    w.reserve(v.size());
    long long g = 0;
    for (const Rat& x : v) {
        long long y = x.num * (l / x.den);
        w.push_back(y);
        g = std::gcd(g, std::abs(y));
    }
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(g ? w[i] / g : w[i]);
    return r;
}

std::vector<RatVec> dedupe_points(std::vector<RatVec> pts) {
    auto less = [](const RatVec& a, const RatVec& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    };
    std::sort(pts.begin(), pts.end(), less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Exact affine dimension of a point set and a basis of directions.
int affine_dim(const std::vector<RatVec>& pts, std::vector<RatVec>& dirs) {
    dirs.clear();
    if (pts.empty()) return -1;
    const RatVec& p0 = pts[0];
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec d = sub(pts[i], p0);
        // eliminate against current basis
        for (const RatVec& b : dirs) {
            // find pivot of b
            size_t piv = 0;
            while (piv < b.size() && b[piv].num == 0) ++piv;
            if (piv < b.size() && d[piv].num != 0) {
                Rat f = d[piv] / b[piv];
                for (size_t k = 0; k < d.size(); ++k) d[k] -= f * b[k];
            }
        }
        if (!is_zero(d)) {
            // reduce to echelon-ish: keep as is, but normalize pivot order
            dirs.push_back(d);
            // re-echelonize dirs by pivot position for stability of elimination
            std::sort(dirs.begin(), dirs.end(), [](const RatVec& a, const RatVec& b) {
                size_t pa = 0, pb = 0;
                while (pa < a.size() && a[pa].num == 0) ++pa;
                while (pb < b.size() && b[pb].num == 0) ++pb;
                return pa < pb;
            });
        }
    }
    return static_cast<int>(dirs.size());
}

/// Orthogonal complement basis (over Q) of the span of dirs in R^m.
std::vector<RatVec> complement_basis(const std::vector<RatVec>& dirs, int m) {
    std::vector<RatVec> out;
    if (m == 1) {
        if (dirs.empty()) out.push_back({Rat(1)});
        return out;
    }
    if (m == 2) {
        if (dirs.empty()) {
            out.push_back({Rat(1), Rat(0)});
            out.push_back({Rat(0), Rat(1)});
        } else if (dirs.size() == 1) {
            out.push_back({-dirs[0][1], dirs[0][0]});
        }
        return out;
    }
    // m == 3
    if (dirs.empty()) {
        out.push_back({Rat(1), Rat(0), Rat(0)});
        out.push_back({Rat(0), Rat(1), Rat(0)});
        out.push_back({Rat(0), Rat(0), Rat(1)});
    } else if (dirs.size() == 1) {
        const RatVec& d = dirs[0];
        RatVec e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)}, e3{Rat(0), Rat(0), Rat(1)};
        for (const RatVec& e : {e1, e2, e3}) {
            RatVec c = cross(d, e);
            if (is_zero(c)) continue;
            if (out.empty() || !is_zero(cross(out[0], c))) out.push_back(c);
            if (out.size() == 2) break;
        }
    } else if (dirs.size() == 2) {
        out.push_back(cross(dirs[0], dirs[1]));
    }
    return out;
}

struct Hull2D {
    std::vector<RatVec> ccw_vertices;
};

Rat orient2(const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Monotone chain; input deduped. Returns ccw vertex cycle.
Hull2D hull_2d(std::vector<RatVec> pts) {
    auto less = [](const RatVec& a, const RatVec& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    };
    std::sort(pts.begin(), pts.end(), less);
    const size_t n = pts.size();
    std::vector<RatVec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient2(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient2(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return {h};
}

/// 2D coordinates of 3D points projected along the axis with the largest
/// |normal| component, orientation-adjusted so the projected polygon is ccw
/// when seen from the normal side.
std::vector<RatVec> project_to_plane(const std::vector<RatVec>& pts, const RatVec& normal, int& drop_axis) {
    int axis = 0;
    Rat best = normal[0].sign() < 0 ? -normal[0] : normal[0];
    for (int i = 1; i < 3; ++i) {
        Rat mag = normal[i].sign() < 0 ? -normal[i] : normal[i];
        if (best < mag) {
            best = mag;
            axis = i;
        }
    }
    drop_axis = axis;
    std::vector<RatVec> out;
    out.reserve(pts.size());
    for (const RatVec& p : pts) {
        RatVec q;
        for (int i = 0; i < 3; ++i)
            if (i != axis) q.push_back(p[i]);
        out.push_back(q);
    }
    return out;
}

}  // namespace

bool ExponentMatrix::has_column(const IVec& c) const {
    for (int j = 0; j < n(); ++j) {
        if (E.col(j) == c) return true;
    }
    return false;
}

std::pair<int, int> ExponentMatrix::density_violation() const {
    for (int j = 0; j < n(); ++j) {
        for (int i = 0; i < m(); ++i) {
            if (E(i, j) > 0) {
                IVec c = E.col(j);
                c(i) -= 1;
                if (!has_column(c)) return {j, i};
            }
        }
    }
    return {-1, -1};
}

bool LatticePolytope::contains(const RatVec& x) const {
    for (const Facet& f : facets) {
        if (dot(f.normal, x) > f.offset) return false;
    }
    return true;
}

bool LatticePolytope::contains(const IVec& x) const {
    RatVec r(x.size());
    for (int i = 0; i < x.size(); ++i) r[i] = Rat(x(i));
    return contains(r);
}

LatticePolytope convex_hull(const std::vector<RatVec>& points, int ambient_dim) {
    if (ambient_dim > 3) throw unsupported_dimension("convex_hull: ambient dimension > 3");
    if (points.empty()) throw invalid_input("convex_hull: empty point set");
    for (const RatVec& p : points)
        if (static_cast<int>(p.size()) != ambient_dim)
            throw invalid_input("convex_hull: inconsistent point dimension");

    std::vector<RatVec> pts = dedupe_points(points);
    LatticePolytope P;
    P.ambient_dim = ambient_dim;

    std::vector<RatVec> dirs;
    P.dim = affine_dim(pts, dirs);

    // equality constraints for the affine hull
    std::vector<Facet> eq;
    for (const RatVec& nraw : complement_basis(dirs, ambient_dim)) {
        RatVec n = primitive(nraw);
        Rat c = dot(n, pts[0]);
        eq.push_back({n, c});
        RatVec neg(n.size());
        for (size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
        eq.push_back({neg, -c});
    }

    if (P.dim == 0) {
        P.vertices = {pts[0]};
        P.facets = eq;
        return P;
    }

    if (P.dim == 1) {
        const RatVec d = primitive(dirs[0]);
        // extremes along d
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            if (dot(d, pts[i]) < dot(d, pts[lo])) lo = i;
            if (dot(d, pts[i]) > dot(d, pts[hi])) hi = i;
        }
        P.vertices = {pts[lo], pts[hi]};
        P.facets = eq;
        P.facets.push_back({d, dot(d, pts[hi])});
        RatVec nd(d.size());
        for (size_t i = 0; i < d.size(); ++i) nd[i] = -d[i];
        P.facets.push_back({nd, dot(nd, pts[lo])});
        return P;
    }

    if (P.dim == 2 && ambient_dim == 2) {
        Hull2D h = hull_2d(pts);
        P.vertices = h.ccw_vertices;
        const size_t n = P.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const RatVec& a = P.vertices[i];
            const RatVec& b = P.vertices[(i + 1) % n];
            RatVec nrm = primitive({b[1] - a[1], a[0] - b[0]});
            P.facets.push_back({nrm, dot(nrm, a)});
        }
        return P;
    }

    if (P.dim == 2 && ambient_dim == 3) {
        // polygon inside a plane: 2D hull of projected points
        RatVec pn = primitive(complement_basis(dirs, 3)[0]);
        int drop;
        std::vector<RatVec> proj = project_to_plane(pts, pn, drop);
        // map projected hull vertices back to 3D points
        std::map<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>, RatVec> back;
        for (size_t i = 0; i < pts.size(); ++i) {
            back[{{proj[i][0].num, proj[i][0].den}, {proj[i][1].num, proj[i][1].den}}] = pts[i];
        }
        Hull2D h = hull_2d(proj);
        for (const RatVec& q : h.ccw_vertices)
            P.vertices.push_back(back.at({{q[0].num, q[0].den}, {q[1].num, q[1].den}}));
        P.facets = eq;
        // edge facets: normal = edge x plane-normal, oriented against the rest
        const size_t n = P.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const RatVec& a = P.vertices[i];
            const RatVec& b = P.vertices[(i + 1) % n];
            RatVec nrm = primitive(cross(sub(b, a), pn));
            Rat off = dot(nrm, a);
            const RatVec& c = P.vertices[(i + 2) % n];
            if (dot(nrm, c) > off) {
                for (Rat& x : nrm) x = -x;
                off = -off;
            }
            P.facets.push_back({nrm, off});
        }
        return P;
    }

    // full-dimensional in R^3: facet enumeration over point triples
    const size_t n = pts.size();
    std::map<std::vector<long long>, Facet> facet_set;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                RatVec nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(nrm)) continue;
                nrm = primitive(nrm);
                Rat off = dot(nrm, pts[i]);
                bool below = true, above = true;
                for (size_t l = 0; l < n && (below || above); ++l) {
                    int s = (dot(nrm, pts[l]) - off).sign();
                    if (s > 0) below = false;
                    if (s < 0) above = false;
                }
                if (!below && !above) continue;
                if (above) {
                    for (Rat& x : nrm) x = -x;
                    off = -off;
                }
                std::vector<long long> key;
                for (const Rat& x : nrm) {
                    key.push_back(x.num);
                    key.push_back(x.den);
                }
                key.push_back(off.num);
                key.push_back(off.den);
                facet_set.emplace(key, Facet{nrm, off});
            }
        }
    }
    for (auto& [key, f] : facet_set) P.facets.push_back(f);

    // vertices: points whose tight facets span R^3
    for (const RatVec& p : pts) {
        std::vector<RatVec> tight;
        for (const Facet& f : P.facets) {
            if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
        }
        std::vector<RatVec> basis;
        std::vector<RatVec> shifted;
        shifted.push_back(RatVec{Rat(0), Rat(0), Rat(0)});
        for (const RatVec& t : tight) shifted.push_back(t);
        if (affine_dim(shifted, basis) == 3) P.vertices.push_back(p);
    }
    P.vertices = dedupe_points(P.vertices);
    return P;
}

LatticePolytope convex_hull_int(const std::vector<IVec>& points, int ambient_dim) {
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const IVec& p : points) {
        RatVec r(p.size());
        for (int i = 0; i < p.size(); ++i) r[i] = Rat(p(i));
        pts.push_back(std::move(r));
    }
    return convex_hull(pts, ambient_dim);
}

Rat normalized_volume(const LatticePolytope& P) {
    if (P.dim != P.ambient_dim)
        throw degenerate_polytope("normalized_volume: polytope is not full-dimensional (dim " +
                                  std::to_string(P.dim) + " in R^" + std::to_string(P.ambient_dim) + ")");
    const int m = P.ambient_dim;
    if (m == 1) {
        Rat lo = P.vertices[0][0], hi = P.vertices[0][0];
        for (const RatVec& v : P.vertices) {
            if (v[0] < lo) lo = v[0];
            if (hi < v[0]) hi = v[0];
        }
        return hi - lo;
    }
    if (m == 2) {
        // vertices are in ccw order
        Rat tw;
        const size_t n = P.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const RatVec& a = P.vertices[i];
            const RatVec& b = P.vertices[(i + 1) % n];
            tw += a[0] * b[1] - b[0] * a[1];
        }
        return tw.sign() < 0 ? -tw : tw;
    }
    // m == 3: fan from the lexicographically smallest vertex
    RatVec v0 = P.vertices[0];
    for (const RatVec& v : P.vertices) {
        for (int i = 0; i < 3; ++i) {
            if (v[i] != v0[i]) {
                if (v[i] < v0[i]) v0 = v;
                break;
            }
        }
    }
    Rat six_vol;
    for (const Facet& f : P.facets) {
        if (dot(f.normal, v0) == f.offset) continue;
        std::vector<RatVec> fv;
        for (const RatVec& v : P.vertices) {
            if (dot(f.normal, v) == f.offset) fv.push_back(v);
        }
        if (fv.size() < 3) continue;
        int drop;
        std::vector<RatVec> proj = project_to_plane(fv, f.normal, drop);
        std::map<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>, RatVec> back;
        for (size_t i = 0; i < fv.size(); ++i)
            back[{{proj[i][0].num, proj[i][0].den}, {proj[i][1].num, proj[i][1].den}}] = fv[i];
        Hull2D h = hull_2d(proj);
        std::vector<RatVec> cyc;
        for (const RatVec& q : h.ccw_vertices)
            cyc.push_back(back.at({{q[0].num, q[0].den}, {q[1].num, q[1].den}}));
        Rat acc;
        for (size_t i = 1; i + 1 < cyc.size(); ++i) {
            RatVec a = sub(cyc[0], v0), b = sub(cyc[i], v0), c = sub(cyc[i + 1], v0);
            acc += dot(a, cross(b, c));
        }
        six_vol += acc.sign() < 0 ? -acc : acc;
    }
    return six_vol;  // sum of |det| over the fan = 3! * vol
}

std::vector<IVec> lattice_points(const LatticePolytope& P) {
    if (P.ambient_dim > 3) throw unsupported_dimension("lattice_points: ambient dimension > 3");
    const int m = P.ambient_dim;
    std::vector<long long> lo(m, 0), hi(m, 0);
    for (int i = 0; i < m; ++i) {
        lo[i] = P.vertices[0][i].floor();
        hi[i] = P.vertices[0][i].ceil();
        for (const RatVec& v : P.vertices) {
            lo[i] = std::min(lo[i], v[i].floor());
            hi[i] = std::max(hi[i], v[i].ceil());
        }
    }
    std::vector<IVec> out;
    IVec x(m);
    std::vector<long long> idx(m);
    auto rec = [&](auto&& self, int d) -> void {
        if (d == m) {
            if (P.contains(x)) out.push_back(x);
            return;
        }
        for (long long v = lo[d]; v <= hi[d]; ++v) {
            x(d) = static_cast<int>(v);
            self(self, d + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a(i) != b(i)) return a(i) < b(i);
        }
        return false;
    });
    return out;
}

LatticePolytope dilate(const LatticePolytope& P, int k) {
    if (k < 0) throw invalid_input("dilate: negative factor");
    std::vector<RatVec> pts;
    for (const RatVec& v : P.vertices) {
        RatVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rat(k);
        pts.push_back(w);
    }
    return convex_hull(pts, P.ambient_dim);
}

LatticePolytope minkowski_sum_simplex(const LatticePolytope& P, int m) {
    std::vector<RatVec> pts;
    for (const RatVec& v : P.vertices) {
        pts.push_back(v);
        for (int i = 0; i < m; ++i) {
            RatVec w = v;
            w[i] += Rat(1);
            pts.push_back(w);
        }
    }
    return convex_hull(pts, P.ambient_dim);
}

int rational_rank(const IMat& A) {
    // exact elimination on a Rat copy
    std::vector<std::vector<Rat>> W(A.rows(), std::vector<Rat>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) W[i][j] = Rat(A(i, j));
    int rank = 0;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < A.rows(); ++i) {
            if (W[i][col].num != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(W[piv], W[row]);
        for (int i = row + 1; i < A.rows(); ++i) {
            if (W[i][col].num == 0) continue;
            Rat f = W[i][col] / W[row][col];
            for (int j = col; j < A.cols(); ++j) W[i][j] -= f * W[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

long long lattice_index(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    if (rational_rank(A.E) < m)
        throw rank_deficiency_error("lattice_index: rank(A) < m");
    auto det_cols = [&](const std::vector<int>& cols) -> long long {
        if (m == 1) return A.E(0, cols[0]);
        if (m == 2)
            return static_cast<long long>(A.E(0, cols[0])) * A.E(1, cols[1]) -
                   static_cast<long long>(A.E(0, cols[1])) * A.E(1, cols[0]);
        long long d = 0;
        for (int i = 0; i < 3; ++i) {
            long long a = A.E(0, cols[i]);
            long long b = A.E(1, cols[(i + 1) % 3]) * static_cast<long long>(A.E(2, cols[(i + 2) % 3]));
            long long c = A.E(1, cols[(i + 2) % 3]) * static_cast<long long>(A.E(2, cols[(i + 1) % 3]));
            d += a * (b - c);
        }
        return d;
    };
    long long g = 0;
    std::vector<int> cols(m);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == m) {
            g = std::gcd(g, std::abs(det_cols(cols)));
            return;
        }
        for (int j = start; j < n; ++j) {
            cols[depth] = j;
            self(self, j + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return g;
}

std::vector<IVec> integer_kernel(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    // column-style Hermite reduction, tracking unimodular U with A U = W
    std::vector<std::vector<long long>> W(m, std::vector<long long>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) W[i][j] = A.E(i, j);
    std::vector<std::vector<long long>> U(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) U[j][j] = 1;

    auto colop = [&](int dst, int src, long long f) {
        // col_dst -= f * col_src
        for (int i = 0; i < m; ++i) W[i][dst] -= f * W[i][src];
        for (int i = 0; i < n; ++i) U[i][dst] -= f * U[i][src];
    };
    auto colswap = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(W[i][a], W[i][b]);
        for (int i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
    };

    int lead = 0;
    for (int r = 0; r < m && lead < n; ++r) {
        // gcd sweep on row r over columns >= lead
        while (true) {
            int piv = -1;
            long long best = 0;
            for (int j = lead; j < n; ++j) {
                long long v = std::abs(W[r][j]);
                if (v != 0 && (piv < 0 || v < best)) {
                    piv = j;
                    best = v;
                }
            }
            if (piv < 0) break;  // all zero: no pivot in this row
            colswap(lead, piv);
            bool clean = true;
            for (int j = lead + 1; j < n; ++j) {
                if (W[r][j] != 0) {
                    long long f = W[r][j] / W[r][lead];
                    colop(j, lead, f);
                    if (W[r][j] != 0) clean = false;
                }
            }
            if (clean) {
                ++lead;
                break;
            }
        }
    }
    std::vector<IVec> out;
    for (int j = lead; j < n; ++j) {
        bool zero = true;
        for (int i = 0; i < m; ++i) zero = zero && W[i][j] == 0;
        if (!zero) throw internal_consistency_error("integer_kernel: reduction failed");
        IVec v(n);
        for (int i = 0; i < n; ++i) v(i) = static_cast<int>(U[i][j]);
        // sign convention: first nonzero entry positive
        for (int i = 0; i < n; ++i) {
            if (v(i) != 0) {
                if (v(i) < 0) v = -v;
                break;
            }
        }
        out.push_back(v);
    }
    return out;
}

SpecialPolytopes special_polytopes(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    if (m > 3) throw unsupported_dimension("special_polytopes: m > 3");
    SpecialPolytopes S;

    std::vector<IVec> ptsA;
    ptsA.push_back(IVec::Zero(m));
    for (int j = 0; j < n; ++j) ptsA.push_back(A.col(j));
    S.P_A = convex_hull_int(ptsA, m);

    std::vector<IVec> ptsB, ptsC, ptsCos;
    ptsC.push_back(IVec::Zero(m));
    for (int j = 0; j < n; ++j) {
        IVec a = A.col(j);
        // sign boxes for P_B, parity boxes for P_C
        for (int mask = 0; mask < (1 << m); ++mask) {
            IVec b(m), c(m);
            for (int i = 0; i < m; ++i) {
                b(i) = (mask >> i) & 1 ? -a(i) : a(i);
                c(i) = (mask >> i) & 1 ? (a(i) % 2) : a(i);
            }
            ptsB.push_back(b);
            ptsC.push_back(c);
        }
        ptsCos.push_back(a);
        ptsCos.push_back(-a);
    }
    S.P_B = convex_hull_int(ptsB, m);
    S.P_C = convex_hull_int(ptsC, m);
    S.P_A_cos = convex_hull_int(ptsCos, m);
    return S;
}

bool same_polytope(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.ambient_dim != Q.ambient_dim || P.dim != Q.dim) return false;
    auto canon = [](const LatticePolytope& R) {
        std::vector<RatVec> v = R.vertices;
        std::sort(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) {
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
            }
            return false;
        });
        return v;
    };
    return canon(P) == canon(Q);
}

}  // namespace chebvar
