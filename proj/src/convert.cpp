#include "apxpoly/convert.hpp"

#include <algorithm>
#include <map>

#include "apxpoly/errors.hpp"
#include "apxpoly/support.hpp"

namespace apxpoly {

namespace {

/*
 * Incremental double description for a pointed cone {y : rows . y <= 0} in
 * reduced coordinates. The caller has already split off the lineality space,
 * so the row matrix has full column rank; an invertible row subset provides
 * the initial extreme rays, and the remaining rows are added one at a time.
 * Adjacency uses the combinatorial zero-set test, which is exact for pointed
 * cones whose stored rays are all extreme.
 */
class DoubleDescription {
  public:
    DoubleDescription(const RatMat& rows, std::size_t dim) : rows_(rows), dim_(dim) {}

    RatMat run() {
        if (dim_ == 0) return {};
        const std::vector<std::size_t> basis_rows = independent_rows();
        if (basis_rows.size() != dim_) throw Error("reduced cone is not pointed");
        init_from_basis(basis_rows);
        std::vector<bool> used(rows_.size(), false);
        for (auto i : basis_rows) used[i] = true;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!used[i]) add_row(i);
        }
        RatMat out;
        out.reserve(rays_.size());
        for (auto& r : rays_) out.push_back(std::move(r.dir));
        return out;
    }

  private:
    struct Ray {
        RatVec dir;
        std::vector<std::uint64_t> active;  // bitset over row indices
    };

    std::vector<std::size_t> independent_rows() const {
        RatMat work;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < rows_.size() && chosen.size() < dim_; ++i) {
            RatMat trial = work;
            trial.push_back(rows_[i]);
            RatMat copy = trial;
            if (rref(copy).size() == trial.size()) {
                work = std::move(trial);
                chosen.push_back(i);
            }
        }
        return chosen;
    }

    void init_from_basis(const std::vector<std::size_t>& basis_rows) {
        RatMat a(dim_, zero_vec(dim_));
        for (std::size_t t = 0; t < dim_; ++t) a[t] = rows_[basis_rows[t]];
        const auto inv = invert(a);
        if (!inv) throw Error("initial row basis is singular");
        blocks_ = (rows_.size() + 63) / 64;
        for (std::size_t j = 0; j < dim_; ++j) {
            Ray ray;
            ray.dir = RatVec(dim_);
            for (std::size_t i = 0; i < dim_; ++i) ray.dir[i] = -(*inv)[i][j];
            ray.dir = sup_normalize(ray.dir);
            ray.active.assign(blocks_, 0);
            for (std::size_t t = 0; t < dim_; ++t) {
                if (t != j) set_bit(ray.active, basis_rows[t]);
            }
            rays_.push_back(std::move(ray));
        }
    }

    static void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
        bits[i / 64] |= (std::uint64_t{1} << (i % 64));
    }

    static std::vector<std::uint64_t> intersect(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
        return r;
    }

    static bool contains_all(const std::vector<std::uint64_t>& big,
                             const std::vector<std::uint64_t>& small) {
        for (std::size_t i = 0; i < big.size(); ++i) {
            if ((small[i] & ~big[i]) != 0) return false;
        }
        return true;
    }

    bool adjacent(std::size_t p, std::size_t q) const {
        const auto common = intersect(rays_[p].active, rays_[q].active);
        for (std::size_t s = 0; s < rays_.size(); ++s) {
            if (s == p || s == q) continue;
            if (contains_all(rays_[s].active, common)) return false;
        }
        return true;
    }

    void add_row(std::size_t idx) {
        const RatVec& a = rows_[idx];
        std::vector<Rational> vals(rays_.size());
        for (std::size_t r = 0; r < rays_.size(); ++r) vals[r] = dot(a, rays_[r].dir);

        std::vector<Ray> next;
        std::map<RatVec, bool> seen;
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (vals[r] > 0) continue;
            Ray kept = rays_[r];
            if (vals[r] == 0) set_bit(kept.active, idx);
            seen.emplace(kept.dir, true);
            next.push_back(std::move(kept));
        }
        for (std::size_t p = 0; p < rays_.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (std::size_t q = 0; q < rays_.size(); ++q) {
                if (vals[q] >= 0) continue;
                if (!adjacent(p, q)) continue;
                RatVec dir = vec_sub(vec_scale(vals[p], rays_[q].dir), vec_scale(vals[q], rays_[p].dir));
                dir = sup_normalize(dir);
                if (is_zero_vec(dir) || seen.count(dir)) continue;
                seen.emplace(dir, true);
                Ray fresh;
                fresh.dir = std::move(dir);
                fresh.active = intersect(rays_[p].active, rays_[q].active);
                set_bit(fresh.active, idx);
                next.push_back(std::move(fresh));
            }
        }
        rays_ = std::move(next);
    }

    const RatMat& rows_;
    std::size_t dim_;
    std::size_t blocks_ = 0;
    std::vector<Ray> rays_;
};

}  // namespace

ConeGenerators cone_generators_from_rows(const RatMat& rows, std::size_t dim) {
    ConeGenerators out;
    RatMat normals;
    for (const auto& r : rows) {
        if (r.size() != dim) throw DimensionMismatch("cone row dimension");
        if (!is_zero_vec(r)) normals.push_back(r);
    }
    if (normals.empty()) {
        for (std::size_t i = 0; i < dim; ++i) out.lines.push_back(unit_vec(dim, i));
        return out;
    }
    out.lines = nullspace(normals);

    // complement spanned by coordinate vectors completing the lineality basis
    std::vector<std::size_t> complement;
    if (out.lines.empty()) {
        for (std::size_t i = 0; i < dim; ++i) complement.push_back(i);
    } else {
        RatMat lin = out.lines;
        const auto pivots = rref(lin);
        std::vector<bool> is_pivot(dim, false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!is_pivot[i]) complement.push_back(i);
        }
    }
    const std::size_t k = complement.size();
    if (k == 0) return out;

    RatMat reduced(normals.size(), zero_vec(k));
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) reduced[i][j] = normals[i][complement[j]];
    }
    DoubleDescription dd(reduced, k);
    for (const auto& y : dd.run()) {
        RatVec x = zero_vec(dim);
        for (std::size_t j = 0; j < k; ++j) x[complement[j]] = y[j];
        // re-express within the original space: the complement coordinates
        // live on coordinate axes, so the lift is coordinate placement
        out.rays.push_back(sup_normalize(x));
    }
    return out;
}

RatMat cone_rows_from_generators(const RatMat& generators, std::size_t dim) {
    RatMat gens;
    for (const auto& g : generators) {
        if (g.size() != dim) throw DimensionMismatch("cone generator dimension");
        if (!is_zero_vec(g)) gens.push_back(g);
    }
    const ConeGenerators polar = cone_generators_from_rows(gens, dim);
    RatMat rows = polar.rays;
    for (const auto& l : polar.lines) {
        rows.push_back(l);
        rows.push_back(vec_scale(-1, l));
    }
    return rows;
}

VPolyhedron vrep_of(const HPolyhedron& p, std::size_t dim_cap) {
    if (p.ambient_dim > dim_cap) throw DimensionCapExceeded();
    if (!is_nonempty(p)) throw EmptyPolyhedron();
    const std::size_t n = p.ambient_dim;

    RatMat hom;
    for (const auto& r : p.rows) {
        RatVec row = r.normal;
        row.push_back(-r.offset);
        hom.push_back(std::move(row));
    }
    RatVec last = zero_vec(n + 1);
    last[n] = -1;  // homogenizing coordinate stays non-negative
    hom.push_back(std::move(last));

    const ConeGenerators gen = cone_generators_from_rows(hom, n + 1);
    RatMat points;
    RatMat rays;
    for (const auto& g : gen.rays) {
        const Rational& h = g[n];
        RatVec x(g.begin(), g.begin() + n);
        if (h > 0) {
            points.push_back(vec_scale(Rational(1) / h, x));
        } else if (h == 0) {
            if (!is_zero_vec(x)) rays.push_back(std::move(x));
        } else {
            throw Error("homogenization produced a negative-weight generator");
        }
    }
    for (const auto& l : gen.lines) {
        if (l[n] != 0) throw Error("homogenization produced a non-horizontal line");
        RatVec x(l.begin(), l.begin() + n);
        rays.push_back(x);
        rays.push_back(vec_scale(-1, x));
    }
    if (points.empty()) throw Error("no point generator for a non-empty polyhedron");
    return VPolyhedron(n, std::move(points), std::move(rays));
}

HPolyhedron hrep_of(const VPolyhedron& q, std::size_t dim_cap) {
    if (q.ambient_dim > dim_cap) throw DimensionCapExceeded();
    const std::size_t n = q.ambient_dim;

    RatMat gens;
    for (const auto& v : q.points) {
        RatVec g = v;
        g.push_back(Rational(1));
        gens.push_back(std::move(g));
    }
    for (const auto& r : q.rays) {
        RatVec g = r;
        g.push_back(Rational(0));
        gens.push_back(std::move(g));
    }

    const ConeGenerators polar = cone_generators_from_rows(gens, n + 1);
    HPolyhedron h(n, {});
    const auto emit = [&](const RatVec& y) {
        RatVec a(y.begin(), y.begin() + n);
        const Rational offset = -y[n];
        if (is_zero_vec(a)) {
            if (offset < 0) throw Error("vacuous row with negative offset for a non-empty set");
            return;
        }
        h.add_row(std::move(a), offset);
    };
    for (const auto& r : polar.rays) emit(r);
    for (const auto& l : polar.lines) {
        emit(l);
        emit(vec_scale(-1, l));
    }
    return h;
}

}  // namespace apxpoly
