#include "tropdisc/fan.hpp"

#include "tropdisc/linalg.hpp"
#include "tropdisc/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tropdisc {

namespace {

// w ∈ cone(rays) + span(lineality), exact closed test
bool cone_contains(const WeightedCone& cone, const std::vector<IntVec>& lineality,
                   const RatVec& w) {
    int n = static_cast<int>(w.size());
    int k = static_cast<int>(cone.rays.size());
    int m = static_cast<int>(lineality.size());
    if (k + m == 0) {
        for (const Rat& x : w)
            if (!is_zero(x)) return false;
        return true;
    }
    // variables: lambda_j >= 0 per ray, mu_j split into mu+ - mu- per lineality vector
    std::vector<RatVec> rows(n, RatVec(k + 2 * m, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = Rat(cone.rays[j][i]);
        for (int j = 0; j < m; ++j) {
            rows[i][k + j] = Rat(lineality[j][i]);
            rows[i][k + m + j] = -Rat(lineality[j][i]);
        }
    }
    return lp_feasible(rows, w);
}

bool in_span(const IntMatrix& basis, const IntVec& v) {
    if (basis.cols() == 0) return is_zero(v);
    return rank_of(hcat(basis, from_columns(basis.rows(), {v}))) == rank_of(basis);
}

} // namespace

WeightedFan bergman_fan(const IntMatrix& u) {
    int n = u.rows();
    FlatLattice lattice = FlatLattice::build(RowMatroid(u));
    WeightedFan fan;
    fan.ambient = n;
    fan.lineality.push_back(IntVec(n, 1));
    fan.pure_dim = lattice.top_rank(); // top_rank-1 rays plus the all-ones line
    for (const Chain& chain : maximal_chains(lattice)) {
        WeightedCone cone;
        for (int idx : chain) cone.rays.push_back(incidence_vector(n, lattice.flat(idx)));
        cone.mult = 1;
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

WeightedFan pushforward(const WeightedFan& fan, const IntMatrix& v) {
    if (v.cols() != fan.ambient)
        throw Error(Errc::dimension_mismatch, "pushforward: map does not match the fan's ambient dimension");
    int s = v.rows();
    WeightedFan out;
    out.ambient = s;

    std::vector<IntVec> lin_cols;
    for (const IntVec& l : fan.lineality) lin_cols.push_back(mat_vec(v, l));
    IntMatrix lin_img = saturate_columns(from_columns(s, lin_cols));
    for (int j = 0; j < lin_img.cols(); ++j) out.lineality.push_back(lin_img.column(j));
    int lin_rank = lin_img.cols();

    // first pass: the image dimension of every cone decides which survive
    std::vector<IntMatrix> sat_sources;
    std::vector<int> dims;
    int max_dim = lin_rank;
    for (const WeightedCone& cone : fan.cones) {
        std::vector<IntVec> gens = cone.rays;
        gens.insert(gens.end(), fan.lineality.begin(), fan.lineality.end());
        IntMatrix sat_src = saturate_columns(from_columns(fan.ambient, gens));
        IntMatrix img_gens = mat_mul(v, sat_src);
        int dim = rank_of(img_gens);
        max_dim = std::max(max_dim, dim);
        sat_sources.push_back(std::move(sat_src));
        dims.push_back(dim);
    }
    out.pure_dim = max_dim;

    for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
        if (dims[ci] != max_dim) continue; // image dimension dropped
        const WeightedCone& cone = fan.cones[ci];
        IntMatrix img_gens = mat_mul(v, sat_sources[ci]);
        WeightedCone image;
        image.mult = cone.mult;
        if (dims[ci] > 0) {
            // Index of the image of the cone's span lattice inside the
            // saturated span, taken modulo the lineality space: the cycle is
            // invariant under the saturated lineality subtorus, so its
            // intrinsic multiplicities live in the quotient lattice.  (The
            // map may stretch the lineality direction itself — here that
            // stretch is not a geometric multiplicity.)
            std::vector<IntVec> img_cols;
            for (int j = 0; j < img_gens.cols(); ++j) img_cols.push_back(img_gens.column(j));
            for (const IntVec& l : out.lineality) img_cols.push_back(l);
            image.mult *= lattice_index(from_columns(s, img_cols),
                                        saturate_columns(img_gens));
        }
        for (const IntVec& r : cone.rays) {
            IntVec ir = mat_vec(v, r);
            if (is_zero(ir)) continue;
            if (lin_rank > 0 && in_span(lin_img, ir)) continue; // absorbed into lineality
            ir = primitive(ir);
            if (std::find(image.rays.begin(), image.rays.end(), ir) == image.rays.end())
                image.rays.push_back(std::move(ir));
        }
        out.cones.push_back(std::move(image));
    }
    return out;
}

WeightedFan tropical_discriminant(const Configuration& a) {
    int n = a.n(), d = a.d();
    FlatLattice lattice = FlatLattice::build(RowMatroid(a.gale()));
    const IntMatrix& at = a.rowspace(); // n×d, columns span rowspace(A)
    WeightedFan fan;
    fan.ambient = n;
    for (int j = 0; j < d; ++j) fan.lineality.push_back(at.column(j));
    IntVec ones(n, 1);

    // generator list per chain: flat incidence vectors, the all-ones vector,
    // and the row space basis; its integer span is the image lattice of the
    // (unimodular) flag cone lattice under (I_n | A^t)
    auto chain_gens = [&](const Chain& chain) {
        std::vector<IntVec> gens;
        for (int idx : chain) gens.push_back(incidence_vector(n, lattice.flat(idx)));
        gens.push_back(ones);
        for (int j = 0; j < d; ++j) gens.push_back(at.column(j));
        return from_columns(n, gens);
    };

    // The dimension of the sum is the largest rank over maximal flags.
    int max_dim = d;
    for (const Chain& chain : maximal_chains(lattice))
        max_dim = std::max(max_dim, rank_of(chain_gens(chain)));
    fan.pure_dim = max_dim;

    // Cones come from flags with ranks exactly 1, 2, ..., max_dim - d.  In
    // the non-defective case these are precisely the maximal proper flags.
    // When the sum drops dimension (defective A), longer flags only re-cover
    // the same max_dim-dimensional cones with redundant generators, and each
    // covered point has exactly one bottom-saturated flag of this length, so
    // this family represents the tropical cycle without overcounting.
    const int k = max_dim - d;
    for (const Chain& chain : bottom_saturated_chains(lattice, k)) {
        IntMatrix g = chain_gens(chain);
        if (rank_of(g) != max_dim) continue; // degenerate flag, covered by others
        WeightedCone cone;
        cone.mult = lattice_index(g, saturate_columns(g));
        for (int idx : chain) {
            IntVec ray = incidence_vector(n, lattice.flat(idx));
            if (in_span(at, ray)) continue;
            cone.rays.push_back(std::move(ray));
        }
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

bool membership(const WeightedFan& fan, const RatVec& w) {
    if (static_cast<int>(w.size()) != fan.ambient)
        throw Error(Errc::dimension_mismatch, "membership: vector length does not match ambient dimension");
    for (const WeightedCone& cone : fan.cones)
        if (cone_contains(cone, fan.lineality, w)) return true;
    return false;
}

std::vector<std::vector<Chain>> bergman_cone_classes(const FlatLattice& lattice) {
    std::map<std::vector<Mask>, std::vector<Chain>> groups;
    for (const Chain& chain : maximal_chains(lattice))
        groups[chain_basis_key(lattice, chain)].push_back(chain);
    std::vector<std::vector<Chain>> out;
    out.reserve(groups.size());
    for (auto& [key, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<int> class_image_dims(const FlatLattice& lattice, const IntMatrix& v) {
    int n = lattice.ground_size();
    if (v.cols() != n)
        throw Error(Errc::dimension_mismatch, "class_image_dims: map does not match the ground set");
    std::vector<int> dims;
    for (const auto& cls : bergman_cone_classes(lattice)) {
        std::set<int> flats;
        for (const Chain& chain : cls) flats.insert(chain.begin(), chain.end());
        std::vector<IntVec> cols;
        for (int idx : flats) cols.push_back(mat_vec(v, incidence_vector(n, lattice.flat(idx))));
        cols.push_back(mat_vec(v, IntVec(n, 1)));
        dims.push_back(rank_of(from_columns(v.rows(), cols)));
    }
    return dims;
}

UVMap discriminant_uv(const Configuration& a) {
    int n = a.n(), d = a.d();
    const IntMatrix& b = a.gale(); // n×(n−d)
    UVMap uv;
    uv.u = IntMatrix(n + d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - d; ++j) uv.u.at(i, j) = b.at(i, j);
    for (int i = 0; i < d; ++i) uv.u.at(n + i, n - d + i) = 1;
    uv.v = hcat(IntMatrix::identity(n), a.rowspace());
    return uv;
}

// ---------------------------------------------------------------------------
// graph summary of a fan that is two-dimensional modulo lineality
// ---------------------------------------------------------------------------

namespace {

// primitive integer direction in fixed plane coordinates
struct Dir {
    Int a, b;
    bool operator==(const Dir& o) const { return a == o.a && b == o.b; }
};

Dir make_dir(const Int& a, const Int& b) {
    Int g = gcd(a, b);
    if (g == 0) throw Error(Errc::invalid_input, "graph summary: zero direction");
    return Dir{a / g, b / g};
}

Int cross(const Dir& p, const Dir& q) { return p.a * q.b - p.b * q.a; }

// 0 on the closed upper half circle starting at (1,0), 1 on the lower one
int half_of(const Dir& p) {
    if (p.b > 0 || (p.b == 0 && p.a > 0)) return 0;
    return 1;
}

// strict counterclockwise order starting from (1,0); total on primitive dirs
bool ccw_less(const Dir& p, const Dir& q) {
    int hp = half_of(p), hq = half_of(q);
    if (hp != hq) return hp < hq;
    return cross(p, q) > 0;
}

// closed sector with cross(s, e) > 0 (opening angle < pi)
struct Sector {
    Dir s, e;
};

bool sector_contains(const Sector& sec, const Dir& d) {
    return cross(sec.s, d) >= 0 && cross(d, sec.e) >= 0;
}

struct Plane {
    IntMatrix basis;                // 2×k rows, canonical lattice basis
    IntMatrix complement;           // k×(k−2) columns spanning the orthogonal complement
    std::vector<Sector> sectors;
    std::vector<Dir> candidates;
};

Dir plane_coordinates(const Plane& plane, const IntVec& v) {
    IntMatrix bt = plane.basis.transpose(); // k×2
    auto sol = solve_rational(bt, to_rat(v));
    if (!sol)
        throw Error(Errc::span_mismatch, "graph summary: vector not in its plane");
    IntVec scaled = scale_to_integer(*sol);
    return make_dir(scaled[0], scaled[1]);
}

IntVec lift_dir(const Plane& plane, const Dir& d) {
    int k = plane.basis.cols();
    IntVec v(k, 0);
    for (int j = 0; j < k; ++j) v[j] = d.a * plane.basis.at(0, j) + d.b * plane.basis.at(1, j);
    return primitive(v);
}

bool in_union(const Plane& plane, const Dir& d) {
    for (const Sector& sec : plane.sectors)
        if (sector_contains(sec, d)) return true;
    return false;
}

} // namespace

GraphSummary graph_summary(const WeightedFan& fan) {
    int lin_dim = fan.lineality_dim();
    if (fan.pure_dim - lin_dim != 2 || fan.cones.empty())
        throw Error(Errc::invalid_input,
                    "graph summary requires a fan of dimension two modulo its lineality space");
    int n = fan.ambient;

    GraphSummary out;
    if (lin_dim == 0) {
        out.projection = IntMatrix::identity(n);
    } else {
        IntMatrix lin_rows(lin_dim, n);
        for (int i = 0; i < lin_dim; ++i) lin_rows.row[i] = fan.lineality[i];
        out.projection = integer_kernel_basis(lin_rows).transpose();
    }
    const IntMatrix& proj = out.projection;
    int k = proj.rows();

    // group the projected cones into planes, one sector per cone
    std::map<IntVec, Plane> planes; // keyed by the flattened canonical basis
    for (const WeightedCone& cone : fan.cones) {
        std::vector<IntVec> prays;
        for (const IntVec& r : cone.rays) {
            IntVec pr = primitive(mat_vec(proj, r));
            if (std::find(prays.begin(), prays.end(), pr) == prays.end())
                prays.push_back(std::move(pr));
        }
        if (prays.size() < 2)
            throw Error(Errc::invalid_input, "graph summary: cone is not two-dimensional modulo lineality");
        IntMatrix rays_rows(static_cast<int>(prays.size()), k);
        for (size_t i = 0; i < prays.size(); ++i) rays_rows.row[i] = prays[i];
        IntMatrix complement =
            (k == 2) ? IntMatrix(2, 0) : kernel_basis_raw(rays_rows); // k×(k−2)
        IntMatrix basis = (k == 2) ? IntMatrix::identity(2)
                                   : row_hnf(kernel_basis_raw(complement.transpose()).transpose());
        if (basis.rows() != 2)
            throw Error(Errc::invalid_input, "graph summary: cone is not two-dimensional modulo lineality");

        IntVec key;
        for (const auto& row : basis.row) key.insert(key.end(), row.begin(), row.end());
        auto [it, inserted] = planes.try_emplace(key);
        Plane& plane = it->second;
        if (inserted) {
            plane.basis = basis;
            plane.complement = complement;
        }

        // the sector spanned by this cone: the two angular extremes
        std::vector<Dir> dirs;
        for (const IntVec& pr : prays) dirs.push_back(plane_coordinates(plane, pr));
        bool found = false;
        for (size_t i = 0; i < dirs.size() && !found; ++i) {
            for (size_t j = 0; j < dirs.size() && !found; ++j) {
                if (i == j || cross(dirs[i], dirs[j]) <= 0) continue;
                Sector sec{dirs[i], dirs[j]};
                bool all = true;
                for (const Dir& d : dirs)
                    if (!sector_contains(sec, d)) { all = false; break; }
                if (all) {
                    plane.sectors.push_back(sec);
                    found = true;
                }
            }
        }
        if (!found)
            throw Error(Errc::invalid_input, "graph summary: cone is not pointed modulo lineality");
    }

    std::vector<Plane*> plane_list;
    for (auto& [key, plane] : planes) plane_list.push_back(&plane);

    // candidate rays per plane: sector endpoints plus the coordinate axes
    for (Plane* plane : plane_list) {
        auto add = [&](const Dir& d) {
            if (std::find(plane->candidates.begin(), plane->candidates.end(), d) ==
                plane->candidates.end())
                plane->candidates.push_back(d);
        };
        add(Dir{1, 0});
        add(Dir{0, 1});
        add(Dir{-1, 0});
        add(Dir{0, -1});
        for (const Sector& sec : plane->sectors) {
            add(sec.s);
            add(sec.e);
        }
    }

    // rays where two distinct planes cross: candidates for both, so that the
    // arc structure of each is refined at every potential branch point
    for (size_t i = 0; i < plane_list.size(); ++i) {
        for (size_t j = i + 1; j < plane_list.size(); ++j) {
            Plane* p = plane_list[i];
            Plane* q = plane_list[j];
            IntMatrix normals = vcat(p->complement.transpose(), q->complement.transpose());
            if (normals.rows() == 0) continue; // k == 2: a single plane overall
            IntMatrix line = kernel_basis_raw(normals);
            if (line.cols() != 1) continue;
            IntVec g = primitive(line.column(0));
            for (int sign = 0; sign < 2; ++sign) {
                IntVec dir_vec = g;
                if (sign == 1)
                    for (Int& x : dir_vec) x = -x;
                Dir dp = plane_coordinates(*p, dir_vec);
                Dir dq = plane_coordinates(*q, dir_vec);
                if (in_union(*p, dp) && in_union(*q, dq)) {
                    if (std::find(p->candidates.begin(), p->candidates.end(), dp) ==
                        p->candidates.end())
                        p->candidates.push_back(dp);
                    if (std::find(q->candidates.begin(), q->candidates.end(), dq) ==
                        q->candidates.end())
                        q->candidates.push_back(dq);
                }
            }
        }
    }

    // marked elementary arcs per plane, then germ counts per global direction
    struct PlaneArcs {
        std::vector<Dir> dirs;      // circularly sorted candidates
        std::vector<bool> marked;   // arc i runs from dirs[i] to dirs[i+1 mod size]
    };
    std::vector<PlaneArcs> arcs(plane_list.size());
    std::map<IntVec, std::vector<std::pair<int, int>>> germs; // lifted dir -> (plane, adjacent marked count)
    for (size_t pi = 0; pi < plane_list.size(); ++pi) {
        Plane* plane = plane_list[pi];
        PlaneArcs& pa = arcs[pi];
        pa.dirs = plane->candidates;
        std::sort(pa.dirs.begin(), pa.dirs.end(), ccw_less);
        int m = static_cast<int>(pa.dirs.size());
        pa.marked.assign(m, false);
        for (int i = 0; i < m; ++i) {
            const Dir& s = pa.dirs[i];
            const Dir& e = pa.dirs[(i + 1) % m];
            Dir mid = make_dir(s.a + e.a, s.b + e.b); // gaps < pi: axes are candidates
            pa.marked[i] = in_union(*plane, mid);
        }
        for (int i = 0; i < m; ++i) {
            int count = (pa.marked[(i + m - 1) % m] ? 1 : 0) + (pa.marked[i] ? 1 : 0);
            if (count > 0)
                germs[lift_dir(*plane, pa.dirs[i])].push_back({static_cast<int>(pi), count});
        }
    }

    // a direction stays a vertex unless exactly one plane passes smoothly through
    std::set<IntVec> vertex_dirs;
    for (const auto& [vec, glist] : germs) {
        int total = 0;
        for (const auto& [plane_idx, count] : glist) total += count;
        bool smooth = (glist.size() == 1 && glist[0].second == 2);
        if (total > 0 && !smooth) vertex_dirs.insert(vec);
    }

    out.vertices.assign(vertex_dirs.begin(), vertex_dirs.end());
    auto vertex_index = [&](const IntVec& v) {
        return static_cast<int>(std::lower_bound(out.vertices.begin(), out.vertices.end(), v) -
                                out.vertices.begin());
    };

    // edges: maximal runs of marked arcs between vertices, walked per plane
    for (size_t pi = 0; pi < plane_list.size(); ++pi) {
        Plane* plane = plane_list[pi];
        PlaneArcs& pa = arcs[pi];
        int m = static_cast<int>(pa.dirs.size());
        std::vector<bool> is_vertex(m);
        bool any_vertex = false;
        for (int i = 0; i < m; ++i) {
            is_vertex[i] = pa.marked[i] || pa.marked[(i + m - 1) % m]
                               ? vertex_dirs.count(lift_dir(*plane, pa.dirs[i])) > 0
                               : false;
            any_vertex = any_vertex || is_vertex[i];
        }
        bool any_marked = std::find(pa.marked.begin(), pa.marked.end(), true) != pa.marked.end();
        if (any_marked && !any_vertex)
            throw Error(Errc::invalid_input, "graph summary: support contains a full plane");
        for (int start = 0; start < m; ++start) {
            if (!is_vertex[start] || !pa.marked[start]) continue;
            // walk forward to the next vertex through marked arcs
            int i = start;
            while (true) {
                int next = (i + 1) % m;
                if (is_vertex[next]) {
                    int a = vertex_index(lift_dir(*plane, pa.dirs[start]));
                    int b = vertex_index(lift_dir(*plane, pa.dirs[next]));
                    out.edges.emplace_back(std::min(a, b), std::max(a, b));
                    break;
                }
                if (!pa.marked[next])
                    throw Error(Errc::invalid_input, "graph summary: broken arc run");
                i = next;
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());

    out.degrees.assign(out.vertices.size(), 0);
    for (const auto& [a, b] : out.edges) {
        out.degrees[a] += 1;
        out.degrees[b] += 1;
    }
    return out;
}

} // namespace tropdisc
