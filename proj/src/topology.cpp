#include "actk/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace actk {

Rational Box::center(unsigned axis, unsigned idx) const {
    const auto& [lo, hi] = intervals.at(axis);
    return lo + (hi - lo) * Rational(2 * idx + 1, 2 * static_cast<unsigned long long>(resolution));
}

void Box::check() const {
    if (intervals.empty()) throw std::invalid_argument("box has no dimensions");
    if (resolution < 1) throw std::invalid_argument("box resolution must be >= 1");
    for (const auto& [lo, hi] : intervals)
        if (!(lo < hi)) throw std::invalid_argument("box interval must satisfy lo < hi");
}

Box parse_box(const std::string& text, unsigned resolution) {
    Box box;
    box.resolution = resolution;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("box interval must be lo:hi, got: " + item);
        box.intervals.emplace_back(parse_rational(item.substr(0, colon)),
                                   parse_rational(item.substr(colon + 1)));
    }
    box.check();
    return box;
}

std::size_t OccupancyGrid::cell_count() const {
    std::size_t total = 1;
    for (unsigned i = 0; i < box.dims(); ++i) total *= box.resolution;
    return total;
}

std::size_t OccupancyGrid::flat_index(std::span<const unsigned> idx) const {
    std::size_t flat = 0;
    for (unsigned i = 0; i < box.dims(); ++i) flat = flat * box.resolution + idx[i];
    return flat;
}

std::size_t OccupancyGrid::occupied_count() const {
    return static_cast<std::size_t>(std::count(occupied.begin(), occupied.end(), 1));
}

namespace {

/// Variables actually appearing in a polynomial.
std::vector<unsigned> support_of(const Polynomial& p) {
    std::vector<char> used(p.arity(), 0);
    for (const auto& [e, c] : p.terms())
        for (unsigned i = 0; i < p.arity(); ++i)
            if (e[i] > 0) used[i] = 1;
    std::vector<unsigned> out;
    for (unsigned i = 0; i < p.arity(); ++i)
        if (used[i]) out.push_back(i);
    return out;
}

/// Evaluates a polynomial whose support is the single axis `axis`.
int univariate_sign(const Polynomial& p, unsigned axis, const Rational& value) {
    Rational acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (unsigned k = 0; k < e[axis]; ++k) t *= value;
        acc += t;
    }
    return sign_of(acc);
}

bool sign_matches(Sign s, int v) {
    switch (s) {
        case Sign::LT: return v < 0;
        case Sign::EQ: return v == 0;
        case Sign::GT: return v > 0;
        case Sign::LE: return v <= 0;
        case Sign::GE: return v >= 0;
    }
    return false;
}

}  // namespace

OccupancyGrid occupancy_grid(const Dnf& f, const Box& box, const OccupancyOptions& opt) {
    box.check();
    if (f.arity != box.dims())
        throw std::invalid_argument("formula arity does not match box dimension");
    for (const auto& d : f.disjuncts)
        for (const auto& c : d.conds)
            if (is_strict(c.sign))
                throw std::invalid_argument(
                    "occupancy requires closed signs only; compactify strict formulas first");

    OccupancyGrid g;
    g.box = box;
    const unsigned n = box.dims();
    const unsigned N = box.resolution;
    const std::size_t total = g.cell_count();
    if (total > opt.cell_limit) throw ResourceLimitError("grid cell count exceeds cell limit");
    g.occupied.assign(total, 0);

    if (opt.corner_mode) {
        // Corner sampling: include the cell if any of its 2^n corners is in.
        std::vector<std::vector<Rational>> edges(n);  // N+1 grid lines per axis
        for (unsigned a = 0; a < n; ++a) {
            const auto& [lo, hi] = box.intervals[a];
            for (unsigned i = 0; i <= N; ++i)
                edges[a].push_back(lo + (hi - lo) * Rational(i, N));
        }
        std::vector<unsigned> idx(n, 0);
        std::vector<Rational> pt(n);
        for (std::size_t flat = 0; flat < total; ++flat) {
            bool in = false;
            for (unsigned corner = 0; corner < (1u << n) && !in; ++corner) {
                for (unsigned a = 0; a < n; ++a)
                    pt[a] = edges[a][idx[a] + ((corner >> a) & 1u)];
                in = eval_formula(f, pt);
            }
            g.occupied[flat] = in ? 1 : 0;
            for (unsigned a = n; a-- > 0;) {
                if (++idx[a] < N) break;
                idx[a] = 0;
            }
        }
        return g;
    }

    // Center sampling with condition caching: distinct polynomials are
    // evaluated once per axis value (univariate) or once per cell
    // (multivariate), instead of once per occurrence.
    std::map<Polynomial, std::size_t> poly_index;
    std::vector<const Polynomial*> polys;
    std::vector<std::vector<std::pair<std::size_t, Sign>>> disjuncts;
    for (const auto& d : f.disjuncts) {
        std::vector<std::pair<std::size_t, Sign>> conds;
        for (const auto& c : d.conds) {
            auto [it, inserted] = poly_index.emplace(c.poly, polys.size());
            if (inserted) polys.push_back(&it->first);
            conds.emplace_back(it->second, c.sign);
        }
        disjuncts.push_back(std::move(conds));
    }

    std::vector<std::vector<Rational>> centers(n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned i = 0; i < N; ++i) centers[a].push_back(box.center(a, i));

    const std::size_t P = polys.size();
    enum class PolyKind : std::uint8_t { Constant, Univariate, General };
    std::vector<PolyKind> kind(P);
    std::vector<int> const_sign(P, 0);
    std::vector<unsigned> axis_of(P, 0);
    std::vector<std::vector<std::int8_t>> axis_table(P);
    for (std::size_t p = 0; p < P; ++p) {
        auto support = support_of(*polys[p]);
        if (support.empty()) {
            kind[p] = PolyKind::Constant;
            std::vector<Rational> origin(n, Rational(0));
            const_sign[p] = sign_of(polys[p]->eval(origin));
        } else if (support.size() == 1) {
            kind[p] = PolyKind::Univariate;
            axis_of[p] = support[0];
            auto& table = axis_table[p];
            table.resize(N);
            for (unsigned i = 0; i < N; ++i)
                table[i] = static_cast<std::int8_t>(
                    univariate_sign(*polys[p], support[0], centers[support[0]][i]));
        } else {
            kind[p] = PolyKind::General;
        }
    }

    std::vector<unsigned> idx(n, 0);
    std::vector<Rational> pt(n);
    std::vector<int> cell_sign(P, 0);
    std::vector<std::size_t> stamp(P, static_cast<std::size_t>(-1));
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (unsigned a = 0; a < n; ++a) pt[a] = centers[a][idx[a]];
        auto sign_at = [&](std::size_t p) -> int {
            switch (kind[p]) {
                case PolyKind::Constant: return const_sign[p];
                case PolyKind::Univariate: return axis_table[p][idx[axis_of[p]]];
                case PolyKind::General:
                    if (stamp[p] != flat) {
                        cell_sign[p] = sign_of(polys[p]->eval(pt));
                        stamp[p] = flat;
                    }
                    return cell_sign[p];
            }
            return 0;
        };
        bool in = false;
        for (const auto& conds : disjuncts) {
            bool all = true;
            for (const auto& [p, s] : conds) {
                if (!sign_matches(s, sign_at(p))) { all = false; break; }
            }
            if (all) { in = true; break; }
        }
        g.occupied[flat] = in ? 1 : 0;
        for (unsigned a = n; a-- > 0;) {
            if (++idx[a] < N) break;
            idx[a] = 0;
        }
    }
    return g;
}

std::uint64_t CubicalComplex::pack(std::span<const unsigned> coords) const {
    std::uint64_t key = 0;
    for (unsigned i = 0; i < ambient_dim_; ++i)
        key = (key << coord_bits_) | coords[i];
    return key;
}

void CubicalComplex::unpack(std::uint64_t key, std::vector<unsigned>& coords) const {
    coords.resize(ambient_dim_);
    const std::uint64_t mask = (std::uint64_t(1) << coord_bits_) - 1;
    for (unsigned i = ambient_dim_; i-- > 0;) {
        coords[i] = static_cast<unsigned>(key & mask);
        key >>= coord_bits_;
    }
}

CubicalComplex CubicalComplex::from_grid(const OccupancyGrid& g) {
    CubicalComplex c;
    const unsigned n = g.box.dims();
    const unsigned N = g.box.resolution;
    c.ambient_dim_ = n;
    c.coord_bits_ = 1;
    while ((1u << c.coord_bits_) < 2 * N + 1) ++c.coord_bits_;
    if (static_cast<std::uint64_t>(c.coord_bits_) * n > 63)
        throw ResourceLimitError("grid too large to encode cubical cells");
    c.keys_.assign(n + 1, {});

    std::vector<unsigned> idx(n, 0);
    std::vector<unsigned> coords(n);
    const std::size_t total = g.cell_count();
    const unsigned faces = 1;
    (void)faces;
    std::vector<unsigned> choice(n, 0);  // 0: left face, 1: interval, 2: right face
    for (std::size_t flat = 0; flat < total; ++flat) {
        if (g.occupied[flat]) {
            // Enumerate all 3^n members of the cube's closure.
            std::fill(choice.begin(), choice.end(), 0);
            for (;;) {
                unsigned dim = 0;
                for (unsigned a = 0; a < n; ++a) {
                    coords[a] = 2 * idx[a] + choice[a];
                    if (choice[a] == 1) ++dim;
                }
                c.keys_[dim].push_back(c.pack(coords));
                unsigned a = n;
                for (; a-- > 0;) {
                    if (++choice[a] < 3) break;
                    choice[a] = 0;
                }
                if (a == static_cast<unsigned>(-1)) break;
            }
        }
        for (unsigned a = n; a-- > 0;) {
            if (++idx[a] < N) break;
            idx[a] = 0;
        }
    }
    for (auto& keys : c.keys_) {
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
    return c;
}

std::size_t CubicalComplex::cell_count(unsigned q) const {
    return q < keys_.size() ? keys_[q].size() : 0;
}

std::size_t CubicalComplex::total_cells() const {
    std::size_t total = 0;
    for (const auto& keys : keys_) total += keys.size();
    return total;
}

std::vector<std::size_t> CubicalComplex::boundary(unsigned q, std::size_t i) const {
    if (q == 0 || q >= keys_.size() || i >= keys_[q].size())
        throw std::out_of_range("no such cell");
    std::vector<unsigned> coords;
    unpack(keys_[q][i], coords);
    std::vector<std::size_t> out;
    const auto& lower = keys_[q - 1];
    for (unsigned a = 0; a < ambient_dim_; ++a) {
        if (coords[a] % 2 == 0) continue;
        for (int d : {-1, +1}) {
            coords[a] = static_cast<unsigned>(static_cast<int>(coords[a]) + d);
            std::uint64_t key = pack(coords);
            coords[a] = static_cast<unsigned>(static_cast<int>(coords[a]) - d);
            auto it = std::lower_bound(lower.begin(), lower.end(), key);
            if (it == lower.end() || *it != key)
                throw std::logic_error("closed complex is missing a face");
            out.push_back(static_cast<std::size_t>(it - lower.begin()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool CubicalComplex::boundary_squared_is_zero() const {
    for (unsigned q = 2; q < keys_.size(); ++q) {
        std::vector<std::size_t> counts;
        for (std::size_t i = 0; i < keys_[q].size(); ++i) {
            counts.clear();
            for (std::size_t face : boundary(q, i)) {
                auto sub = boundary(q - 1, face);
                counts.insert(counts.end(), sub.begin(), sub.end());
            }
            std::sort(counts.begin(), counts.end());
            for (std::size_t j = 0; j < counts.size();) {
                std::size_t k = j;
                while (k < counts.size() && counts[k] == counts[j]) ++k;
                if ((k - j) % 2 != 0) return false;
                j = k;
            }
        }
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

/// GF(2) symmetric difference of two sorted index lists.
std::vector<std::size_t> symdiff(const std::vector<std::size_t>& a,
                                 const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::size_t CubicalComplex::rank_boundary(unsigned q, const std::vector<char>* cleared,
                                          std::vector<char>* pivots_out) const {
    // Sparse GF(2) column reduction; a column is dependent when it cancels,
    // otherwise its lowest surviving row becomes a pivot.
    const std::size_t rows = cell_count(q - 1);
    const std::size_t cols = cell_count(q);
    std::vector<std::ptrdiff_t> pivot_of_row(rows, -1);
    std::vector<std::vector<std::size_t>> reduced;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < cols; ++i) {
        if (cleared && (*cleared)[i]) continue;
        std::vector<std::size_t> col = boundary(q, i);
        while (!col.empty()) {
            std::size_t low = col.back();
            std::ptrdiff_t j = pivot_of_row[low];
            if (j < 0) {
                pivot_of_row[low] = static_cast<std::ptrdiff_t>(reduced.size());
                if (pivots_out) (*pivots_out)[low] = 1;
                reduced.push_back(std::move(col));
                ++rank;
                break;
            }
            col = symdiff(col, reduced[static_cast<std::size_t>(j)]);
        }
    }
    return rank;
}

std::vector<std::size_t> CubicalComplex::betti_numbers(unsigned mmax) const {
    if (mmax >= keys_.size()) throw std::invalid_argument("mmax exceeds complex dimension");
    // Ranks of all boundary maps; the edge map's rank comes from a spanning
    // forest, higher maps from sparse reduction with clearing.
    std::vector<std::size_t> rank(keys_.size() + 1, 0);  // rank[q] = rank of d_q
    const std::size_t V = cell_count(0);
    {
        UnionFind uf(V);
        std::size_t merged = 0;
        for (std::size_t e = 0; e < cell_count(1); ++e) {
            auto ends = boundary(1, e);
            if (uf.unite(ends[0], ends[1])) ++merged;
        }
        rank[1] = merged;
    }
    std::vector<char> cleared;
    for (unsigned q = static_cast<unsigned>(keys_.size()) - 1; q >= 2; --q) {
        if (cell_count(q) == 0) continue;
        std::vector<char> pivots(cell_count(q - 1), 0);
        const std::vector<char>* cl = cleared.empty() ? nullptr : &cleared;
        rank[q] = rank_boundary(q, cl, &pivots);
        cleared = std::move(pivots);
    }
    std::vector<std::size_t> betti(mmax + 1, 0);
    for (unsigned q = 0; q <= mmax; ++q) {
        const std::size_t nq = cell_count(q);
        betti[q] = nq - rank[q] - rank[q + 1];
    }
    return betti;
}

std::size_t component_count(const OccupancyGrid& g) {
    const unsigned n = g.box.dims();
    const unsigned N = g.box.resolution;
    const std::size_t total = g.cell_count();
    UnionFind uf(total);
    std::size_t roots = 0;
    std::vector<unsigned> idx(n, 0);
    std::vector<int> off(n, -1);
    for (std::size_t flat = 0; flat < total; ++flat) {
        if (g.occupied[flat]) {
            ++roots;
            // Union with every occupied neighbor differing by at most one per
            // axis (such cells share at least a vertex of the closed complex).
            std::fill(off.begin(), off.end(), -1);
            for (;;) {
                bool ok = true;
                bool all_zero = true;
                std::size_t nflat = 0;
                for (unsigned a = 0; a < n && ok; ++a) {
                    int v = static_cast<int>(idx[a]) + off[a];
                    if (off[a] != 0) all_zero = false;
                    if (v < 0 || v >= static_cast<int>(N)) ok = false;
                    else nflat = nflat * N + static_cast<std::size_t>(v);
                }
                if (ok && !all_zero && g.occupied[nflat] && uf.unite(flat, nflat)) --roots;
                unsigned a = n;
                for (; a-- > 0;) {
                    if (++off[a] <= 1) break;
                    off[a] = -1;
                }
                if (a == static_cast<unsigned>(-1)) break;
            }
        }
        for (unsigned a = n; a-- > 0;) {
            if (++idx[a] < N) break;
            idx[a] = 0;
        }
    }
    return roots;
}

}  // namespace actk
