#include "chebvar/root_system.hpp"

#include <algorithm>

#include "chebvar/errors.hpp"

namespace chebvar {

WeylGroupA2::WeylGroupA2() {
    Eigen::Matrix2i s1, s2, id;
    s1 << -1, 0, 1, 1;
    s2 << 1, 1, 0, -1;
    id.setIdentity();
    elements_ = {id};
    std::vector<Eigen::Matrix2i> frontier = {id};
    while (!frontier.empty()) {
        std::vector<Eigen::Matrix2i> next;
        for (const auto& g : frontier) {
            for (const auto& s : {s1, s2}) {
                Eigen::Matrix2i h = s * g;
                bool seen = false;
                for (const auto& e : elements_) seen = seen || e == h;
                if (!seen) {
                    elements_.push_back(h);
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    if (elements_.size() != 6)
        throw internal_consistency_error("WeylGroupA2: group closure has order " +
                                         std::to_string(elements_.size()));
}

namespace {

const WeylGroupA2& weyl() {
    static WeylGroupA2 W;
    return W;
}

cplx ipow(cplx x, int k) {
    if (k < 0) return 1.0 / ipow(x, -k);
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

cplx weyl_orbit_value(const Eigen::Vector2i& alpha, const std::array<cplx, 2>& x) {
    if (x[0] == 0.0 || x[1] == 0.0) throw domain_error("weyl_orbit_value: zero coordinate");
    cplx s = 0.0;
    for (const auto& B : weyl().elements()) {
        Eigen::Vector2i e = B * alpha;
        s += ipow(x[0], e(0)) * ipow(x[1], e(1));
    }
    return s;
}

GenChebTable::RatPoly GenChebTable::build(int a, int b) {
    auto mul_var = [](const RatPoly& p, int var) {
        RatPoly r;
        for (const auto& [e, c] : p) {
            auto f = e;
            (var == 0 ? f.first : f.second) += 1;
            r[f] = c;
        }
        return r;
    };
    auto axpy = [](RatPoly& dst, const RatPoly& src, const Rat& f) {
        for (const auto& [e, c] : src) {
            Rat& slot = dst[e];
            slot += c * f;
            if (slot.num == 0) dst.erase(e);
        }
    };

    if (a == 0 && b == 0) return {{{0, 0}, Rat(6)}};
    if (a == 1 && b == 0) return {{{1, 0}, Rat(1)}};
    if (a == 0 && b == 1) return {{{0, 1}, Rat(1)}};
    if (a == 1 && b == 1) return {{{1, 1}, Rat(1, 4)}, {{0, 0}, Rat(-3)}};
    RatPoly r;
    if (b == 0) {
        // T_{a,0} = 1/2 x T_{a-1,0} - 2 T_{a-2,1}
        axpy(r, mul_var(poly(a - 1, 0), 0), Rat(1, 2));
        axpy(r, poly(a - 2, 1), Rat(-2));
    } else if (a == 0) {
        axpy(r, mul_var(poly(0, b - 1), 1), Rat(1, 2));
        axpy(r, poly(1, b - 2), Rat(-2));
    } else if (a >= 2) {
        // T_{a,b} = 1/2 x T_{a-1,b} - T_{a-2,b+1} - T_{a-1,b-1}
        axpy(r, mul_var(poly(a - 1, b), 0), Rat(1, 2));
        axpy(r, poly(a - 2, b + 1), Rat(-1));
        axpy(r, poly(a - 1, b - 1), Rat(-1));
    } else {
        // a == 1, b >= 2: T_{1,b} = 1/2 y T_{1,b-1} - T_{2,b-2} - T_{0,b-1}
        axpy(r, mul_var(poly(1, b - 1), 1), Rat(1, 2));
        axpy(r, poly(2, b - 2), Rat(-1));
        axpy(r, poly(0, b - 1), Rat(-1));
    }
    return r;
}

const GenChebTable::RatPoly& GenChebTable::poly(int a, int b) {
    if (a < 0 || b < 0) throw invalid_input("gen_cheb: negative index");
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RatPoly p = build(a, b);
    return memo_.emplace(key, std::move(p)).first->second;
}

ImplicitPoly GenChebTable::poly_double(int a, int b) {
    ImplicitPoly out;
    out.num_vars = 2;
    for (const auto& [e, c] : poly(a, b)) out.add({e.first, e.second}, c.to_double());
    return out;
}

cplx GenChebTable::eval(int a, int b, const std::array<cplx, 2>& t) {
    cplx s = 0.0;
    for (const auto& [e, c] : poly(a, b)) {
        s += c.to_double() * ipow(t[0], e.first) * ipow(t[1], e.second);
    }
    return s;
}

std::array<cplx, 3> a2_surface_point(const Eigen::Matrix<int, 2, 3>& A, const std::array<cplx, 2>& t,
                                     GenChebTable& table) {
    std::array<cplx, 3> out;
    for (int j = 0; j < 3; ++j) out[j] = table.eval(A(0, j), A(1, j), t);
    return out;
}

}  // namespace chebvar
