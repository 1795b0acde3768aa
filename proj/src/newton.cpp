#include "tropdisc/newton.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tropdisc/cycles.hpp"
#include "tropdisc/linalg.hpp"
#include "tropdisc/lp.hpp"
#include "tropdisc/rng.hpp"

namespace tropdisc {

namespace {

Rat rat_pow(const Rat& base, const Int& exponent) {
    Int e = exponent;
    Rat b = base;
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    Rat out(1);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out *= b;
        b *= b;
        e /= 2;
    }
    return out;
}

std::vector<IntVec> dedup_points(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

void validate_points(const std::vector<IntVec>& pts, const char* who) {
    if (pts.empty())
        throw Error(Errc::invalid_input, std::string(who) + ": empty point list");
    for (const IntVec& p : pts)
        if (p.size() != pts.front().size())
            throw Error(Errc::dimension_mismatch,
                        std::string(who) + ": points of unequal length");
}

// Exact intrinsic coordinates: a saturated basis E of the linear span of
// p_i - p_0, and every point rewritten as p_0 + E q_i with q_i integral
// (integrality is guaranteed by saturation).
struct AffineChart {
    IntVec origin;
    IntMatrix basis; // ambient x k
    std::vector<IntVec> coords;
    int k = 0;
};

AffineChart make_chart(const std::vector<IntVec>& pts) {
    AffineChart chart;
    chart.origin = pts.front();
    const int ambient = static_cast<int>(chart.origin.size());
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec d(ambient);
        for (int c = 0; c < ambient; ++c) d[c] = pts[i][c] - chart.origin[c];
        diffs.push_back(std::move(d));
    }
    chart.basis = saturate_columns(from_columns(ambient, diffs));
    chart.k = chart.basis.cols();
    for (const IntVec& p : pts) {
        RatVec b(ambient);
        for (int c = 0; c < ambient; ++c) b[c] = Rat(p[c] - chart.origin[c]);
        const auto x = solve_rational(chart.basis, b);
        IntVec q(chart.k);
        for (int c = 0; c < chart.k; ++c) q[c] = (*x)[c].get_num();
        chart.coords.push_back(std::move(q));
    }
    return chart;
}

// facet inequality <normal, q> <= offset in chart coordinates
struct Facet {
    IntVec normal;
    Int offset;
    bool operator<(const Facet& o) const {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

struct HullData {
    AffineChart chart;
    std::vector<int> vertex_idx; // indices into chart.coords
    std::vector<Facet> facets;   // empty when k = 0
};

// p is in conv(others) iff nonnegative lambda with sum 1 reproduce p
bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& others) {
    if (others.empty()) return false;
    const int k = static_cast<int>(p.size());
    std::vector<RatVec> a(k + 1, RatVec(others.size(), Rat(0)));
    RatVec b(k + 1, Rat(0));
    for (std::size_t j = 0; j < others.size(); ++j) {
        for (int c = 0; c < k; ++c) a[c][j] = Rat(others[j][c]);
        a[k][j] = Rat(1);
    }
    for (int c = 0; c < k; ++c) b[c] = Rat(p[c]);
    b[k] = Rat(1);
    return lp_feasible(a, b);
}

HullData build_hull(const std::vector<IntVec>& deduped) {
    HullData hull;
    hull.chart = make_chart(deduped);
    const int k = hull.chart.k;
    const auto& q = hull.chart.coords;

    if (k == 0) {
        hull.vertex_idx.push_back(0);
        return hull;
    }
    if (k == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(q.size()); ++i) {
            if (q[i][0] < q[lo][0]) lo = i;
            if (q[i][0] > q[hi][0]) hi = i;
        }
        hull.vertex_idx = {lo, hi};
        hull.facets.push_back({IntVec{Int(1)}, q[hi][0]});
        hull.facets.push_back({IntVec{Int(-1)}, -q[lo][0]});
        return hull;
    }

    for (int i = 0; i < static_cast<int>(q.size()); ++i) {
        std::vector<IntVec> others;
        for (int j = 0; j < static_cast<int>(q.size()); ++j)
            if (j != i) others.push_back(q[j]);
        if (!in_convex_hull(q[i], others)) hull.vertex_idx.push_back(i);
    }

    // every facet is spanned by k affinely independent vertices, so scanning
    // all k-subsets of vertices finds each facet at least once
    std::set<Facet> facets;
    const int nv = static_cast<int>(hull.vertex_idx.size());
    std::vector<int> pick(k);
    for (int j = 0; j < k; ++j) pick[j] = j;
    while (true) {
        // candidate hyperplane through the picked vertices
        const IntVec& base = q[hull.vertex_idx[pick[0]]];
        IntMatrix span(k - 1, k);
        for (int j = 1; j < k; ++j)
            for (int c = 0; c < k; ++c)
                span.at(j - 1, c) = q[hull.vertex_idx[pick[j]]][c] - base[c];
        const IntMatrix normal = kernel_basis_raw(span);
        if (normal.cols() == 1) {
            IntVec nu = normal.column(0); // saturated 1-dim kernel => primitive
            Int beta(0);
            for (int c = 0; c < k; ++c) beta += nu[c] * base[c];
            int above = 0, below = 0;
            for (int vi : hull.vertex_idx) {
                Int val(0);
                for (int c = 0; c < k; ++c) val += nu[c] * q[vi][c];
                if (val > beta) ++above;
                if (val < beta) ++below;
            }
            if (above == 0) {
                facets.insert({std::move(nu), std::move(beta)});
            } else if (below == 0) {
                for (Int& c : nu) c = -c;
                facets.insert({std::move(nu), -beta});
            }
        }
        // next k-subset in lexicographic order
        int j = k - 1;
        while (j >= 0 && pick[j] == nv - k + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
    }
    hull.facets.assign(facets.begin(), facets.end());
    return hull;
}

int affine_rank(const std::vector<IntVec>& pts) {
    if (pts.size() <= 1) return 0;
    const int k = static_cast<int>(pts.front().size());
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec d(k);
        for (int c = 0; c < k; ++c) d[c] = pts[i][c] - pts.front()[c];
        diffs.push_back(std::move(d));
    }
    return rank_of(from_columns(k, diffs));
}

} // namespace

MonomialSet sample_extreme_monomials(const Configuration& a, int samples,
                                     std::uint64_t seed,
                                     const std::vector<IntVec>& explicit_ws) {
    if (codimension(a) != 1)
        throw Error(Errc::defective,
                    "sample_extreme_monomials: dual variety is not a hypersurface");
    MonomialSet out;
    const auto record = [&](const IntVec& w) {
        IntVec u = initial_monomial(a, to_rat(w));
        out.monomials[std::move(u)].push_back(w);
    };
    for (const IntVec& w : explicit_ws) record(w);
    for (int k = 0; k < samples; ++k) {
        try {
            record(sample_weight_vector(a.n(), seed + static_cast<std::uint64_t>(k)));
        } catch (const GenericityError&) {
            // a certified non-generic draw contributes nothing
        }
    }
    if (!out.monomials.empty())
        for (const Int& e : out.monomials.begin()->first) out.degree += e;
    return out;
}

PolytopeSummary hull_summary(const std::vector<IntVec>& points) {
    validate_points(points, "hull_summary");
    if (points.size() > 200)
        throw Error(Errc::invalid_input, "hull_summary: more than 200 points");
    const std::vector<IntVec> pts = dedup_points(points);
    const AffineChart probe = make_chart(pts);
    if (probe.k > 4)
        throw Error(Errc::dimension_too_large,
                    "hull_summary: affine dimension exceeds 4");

    const HullData hull = build_hull(pts);
    PolytopeSummary out;
    out.dim = hull.chart.k;
    for (int vi : hull.vertex_idx) out.vertices.push_back(pts[vi]);
    std::sort(out.vertices.begin(), out.vertices.end());

    if (out.dim == 0) {
        out.fvector = {1};
        return out;
    }
    if (out.dim == 1) {
        out.fvector = {2};
        return out;
    }

    // proper faces are exactly the intersections of facet vertex sets
    std::set<std::vector<int>> faces;
    std::vector<std::vector<int>> worklist;
    for (const Facet& f : hull.facets) {
        std::vector<int> on;
        for (int vi : hull.vertex_idx) {
            Int val(0);
            for (int c = 0; c < out.dim; ++c) val += f.normal[c] * hull.chart.coords[vi][c];
            if (val == f.offset) on.push_back(vi);
        }
        if (faces.insert(on).second) worklist.push_back(on);
    }
    while (!worklist.empty()) {
        const std::vector<int> current = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& other : std::vector<std::vector<int>>(faces.begin(), faces.end())) {
            std::vector<int> meet;
            std::set_intersection(current.begin(), current.end(), other.begin(),
                                  other.end(), std::back_inserter(meet));
            if (!meet.empty() && faces.insert(meet).second) worklist.push_back(meet);
        }
    }

    out.fvector.assign(out.dim, 0);
    for (const std::vector<int>& face : faces) {
        std::vector<IntVec> pts_of_face;
        for (int vi : face) pts_of_face.push_back(hull.chart.coords[vi]);
        ++out.fvector[affine_rank(pts_of_face)];
    }
    return out;
}

std::vector<IntVec> lattice_points(const std::vector<IntVec>& vertices) {
    validate_points(vertices, "lattice_points");
    const std::vector<IntVec> pts = dedup_points(vertices);
    const HullData hull = build_hull(pts);
    const int k = hull.chart.k;
    const int ambient = static_cast<int>(hull.chart.origin.size());

    std::vector<IntVec> found;
    if (k == 0) {
        found.push_back(hull.chart.origin);
        return found;
    }

    IntVec lo(k), hi(k);
    for (int c = 0; c < k; ++c) {
        lo[c] = hi[c] = hull.chart.coords[hull.vertex_idx.front()][c];
        for (int vi : hull.vertex_idx) {
            lo[c] = std::min(lo[c], hull.chart.coords[vi][c]);
            hi[c] = std::max(hi[c], hull.chart.coords[vi][c]);
        }
    }
    Int box(1);
    for (int c = 0; c < k; ++c) box *= hi[c] - lo[c] + 1;
    if (box > 1000000)
        throw Error(Errc::lattice_too_large,
                    "lattice_points: bounding box exceeds 10^6 candidates");

    IntVec q = lo;
    while (true) {
        bool inside = true;
        for (const Facet& f : hull.facets) {
            Int val(0);
            for (int c = 0; c < k; ++c) val += f.normal[c] * q[c];
            if (val > f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) {
            IntVec p = hull.chart.origin;
            for (int c = 0; c < k; ++c)
                for (int r = 0; r < ambient; ++r) p[r] += hull.chart.basis.at(r, c) * q[c];
            found.push_back(std::move(p));
        }
        int c = 0;
        while (c < k && q[c] == hi[c]) {
            q[c] = lo[c];
            ++c;
        }
        if (c == k) break;
        q[c] += 1;
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::map<IntVec, Int> recover_discriminant(const Configuration& a,
                                           const std::vector<IntVec>& newton_vertices,
                                           std::uint64_t seed) {
    if (codimension(a) != 1)
        throw Error(Errc::defective,
                    "recover_discriminant: dual variety is not a hypersurface");
    const std::vector<IntVec> lattice = lattice_points(newton_vertices);
    if (lattice.size() > 500)
        throw Error(Errc::lattice_too_large,
                    "recover_discriminant: more than 500 lattice points");
    std::map<IntVec, Int> out;
    if (lattice.size() == 1) {
        out[lattice.front()] = 1;
        return out;
    }

    const int n = a.n(), d = a.d(), m = n - d;
    const IntMatrix& gale = a.gale();
    Rng rng(seed);

    // one Horn-parametrization point x = (u_i * t^{a_i}), u in ker(A),
    // all coordinates nonzero
    const auto draw_sample = [&]() -> std::optional<RatVec> {
        IntVec u(n, Int(0));
        bool ok = false;
        for (int tries = 0; tries < 64 && !ok; ++tries) {
            IntVec lambda(m);
            for (int j = 0; j < m; ++j) lambda[j] = Int(rng.range(-9, 9));
            u = mat_vec(gale, lambda);
            ok = std::none_of(u.begin(), u.end(), [](const Int& v) { return v == 0; });
        }
        if (!ok) return std::nullopt;
        RatVec t(d);
        for (int j = 0; j < d; ++j) t[j] = Rat(2 * rng.range(-4, 4) + 1);
        RatVec x(n);
        for (int i = 0; i < n; ++i) {
            Rat v(u[i]);
            for (int j = 0; j < d; ++j) v *= rat_pow(t[j], a.matrix().at(j, i));
            x[i] = std::move(v);
        }
        return x;
    };

    const auto evaluate = [&](const RatVec& x, const IntVec& e) -> Rat {
        Rat v(1);
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) v *= rat_pow(x[i], e[i]);
        return v;
    };

    for (int attempt = 0; attempt < 8; ++attempt) {
        const int rows = static_cast<int>(lattice.size()) + 10;
        IntMatrix system(rows, static_cast<int>(lattice.size()));
        bool complete = true;
        for (int r = 0; r < rows && complete; ++r) {
            const auto x = draw_sample();
            if (!x) {
                complete = false;
                break;
            }
            RatVec row(lattice.size());
            Int denom(1);
            for (std::size_t c = 0; c < lattice.size(); ++c) {
                row[c] = evaluate(*x, lattice[c]);
                denom = lcm(denom, Int(row[c].get_den()));
            }
            for (std::size_t c = 0; c < lattice.size(); ++c) {
                const Rat scaled = row[c] * Rat(denom); // integral by the lcm
                system.at(r, static_cast<int>(c)) = scaled.get_num();
            }
        }
        if (!complete) continue;

        const IntMatrix kernel = rational_nullspace(system);
        if (kernel.cols() != 1) continue;
        IntVec coeff = kernel.column(0);
        Int content(0);
        for (const Int& c : coeff) content = gcd(content, c);
        for (Int& c : coeff) c /= content;
        for (const Int& c : coeff) {
            if (c == 0) continue;
            if (c < 0)
                for (Int& v : coeff) v = -v;
            break;
        }

        // the kernel vector must vanish at fresh samples too
        bool verified = true;
        for (int check = 0; check < 5 && verified; ++check) {
            const auto x = draw_sample();
            if (!x) {
                verified = false;
                break;
            }
            Rat acc(0);
            for (std::size_t c = 0; c < lattice.size(); ++c)
                if (coeff[c] != 0) acc += Rat(coeff[c]) * evaluate(*x, lattice[c]);
            verified = is_zero(acc);
        }
        if (!verified) continue;

        for (std::size_t c = 0; c < lattice.size(); ++c) out[lattice[c]] = coeff[c];
        return out;
    }
    throw Error(Errc::kernel_not_one_dimensional,
                "recover_discriminant: interpolation kernel is not one-dimensional");
}

} // namespace tropdisc
