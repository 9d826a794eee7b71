#include "tcsurf/f2linear.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tcsurf {

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Gf2Vec Gf2Matrix::apply(const Gf2Vec& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("Gf2Matrix::apply: dimension mismatch");
    Gf2Vec out(static_cast<std::size_t>(rows), 0);
    for (int r = 0; r < rows; ++r) {
        std::uint8_t acc = 0;
        for (int c = 0; c < cols; ++c) acc ^= static_cast<std::uint8_t>(at(r, c) & v[static_cast<std::size_t>(c)]);
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

Gf2Vec Gf2Matrix::column(int c) const {
    Gf2Vec out(static_cast<std::size_t>(rows), 0);
    for (int r = 0; r < rows; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
    return out;
}

void Gf2Matrix::setColumn(int c, const Gf2Vec& v) {
    for (int r = 0; r < rows; ++r) at(r, c) = v[static_cast<std::size_t>(r)];
}

Gf2Matrix Gf2Matrix::mul(const Gf2Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("Gf2Matrix::mul: dimension mismatch");
    Gf2Matrix out(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k)
            if (at(r, k))
                for (int c = 0; c < o.cols; ++c) out.at(r, c) ^= o.at(k, c);
    return out;
}

Gf2Matrix Gf2Matrix::plusIdentity() const {
    if (rows != cols) throw std::invalid_argument("plusIdentity: square matrix required");
    Gf2Matrix out = *this;
    for (int i = 0; i < rows; ++i) out.at(i, i) ^= 1;
    return out;
}

bool isZeroVec(const Gf2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

Gf2Vec addVec(const Gf2Vec& a, const Gf2Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("addVec: dimension mismatch");
    Gf2Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

std::vector<Gf2Vec> rowReduce(std::vector<Gf2Vec> rows) {
    std::vector<Gf2Vec> basis;
    std::vector<int> pivots;
    for (Gf2Vec& row : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (row[static_cast<std::size_t>(pivots[k])]) row = addVec(row, basis[k]);
        int p = -1;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c]) {
                p = static_cast<int>(c);
                break;
            }
        if (p < 0) continue;
        // Eliminate the new pivot from earlier rows to reach full RREF.
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k][static_cast<std::size_t>(p)]) basis[k] = addVec(basis[k], row);
        basis.push_back(row);
        pivots.push_back(p);
    }
    // Order rows by pivot column.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
    std::vector<Gf2Vec> out;
    out.reserve(basis.size());
    for (std::size_t i : order) out.push_back(basis[i]);
    return out;
}

Gf2Vec residue(const std::vector<Gf2Vec>& rref, Gf2Vec v) {
    for (const Gf2Vec& row : rref) {
        std::size_t p = 0;
        while (p < row.size() && !row[p]) ++p;
        if (p < row.size() && v[p]) v = addVec(v, row);
    }
    return v;
}

int rank(const Gf2Matrix& m) {
    std::vector<Gf2Vec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        Gf2Vec row(static_cast<std::size_t>(m.cols));
        for (int c = 0; c < m.cols; ++c) row[static_cast<std::size_t>(c)] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    return static_cast<int>(rowReduce(std::move(rows)).size());
}

std::vector<Gf2Vec> kernelBasis(const Gf2Matrix& m) {
    // Column-eliminate a copy alongside an identity bookkeeping matrix;
    // columns that reach zero give kernel vectors.
    Gf2Matrix work = m;
    Gf2Matrix trace = Gf2Matrix::identity(m.cols);
    std::vector<bool> colUsed(static_cast<std::size_t>(work.cols), false);
    for (int r = 0; r < work.rows; ++r) {
        int pc = -1;
        for (int c = 0; c < work.cols; ++c)
            if (!colUsed[static_cast<std::size_t>(c)] && work.at(r, c)) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        colUsed[static_cast<std::size_t>(pc)] = true;
        for (int c = 0; c < work.cols; ++c) {
            if (c == pc || !work.at(r, c)) continue;
            for (int rr = 0; rr < work.rows; ++rr) work.at(rr, c) ^= work.at(rr, pc);
            for (int rr = 0; rr < trace.rows; ++rr) trace.at(rr, c) ^= trace.at(rr, pc);
        }
    }
    std::vector<Gf2Vec> out;
    for (int c = 0; c < work.cols; ++c) {
        bool zero = true;
        for (int r = 0; r < work.rows; ++r)
            if (work.at(r, c)) {
                zero = false;
                break;
            }
        if (zero) out.push_back(trace.column(c));
    }
    return out;
}

bool isInvertible(const Gf2Matrix& m) { return m.rows == m.cols && rank(m) == m.rows; }

Gf2Matrix inverseMatrix(const Gf2Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverseMatrix: square matrix required");
    const int n = m.rows;
    std::vector<Gf2Vec> rows;
    for (int r = 0; r < n; ++r) {
        Gf2Vec row(static_cast<std::size_t>(2 * n), 0);
        for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = m.at(r, c);
        row[static_cast<std::size_t>(n + r)] = 1;
        rows.push_back(std::move(row));
    }
    auto rref = rowReduce(std::move(rows));
    if (static_cast<int>(rref.size()) != n)
        throw std::invalid_argument("inverseMatrix: matrix is singular");
    Gf2Matrix out(n, n);
    for (int r = 0; r < n; ++r) {
        // Row r of the RREF has pivot at column r (full rank).
        for (int c = 0; c < n; ++c) out.at(r, c) = rref[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)];
    }
    return out;
}

const Gf2Matrix* ActionSpec::find(const std::string& label) const {
    for (const auto& [name, m] : generators)
        if (name == label) return &m;
    return nullptr;
}

std::vector<Gf2Vec> imageSum(const Gf2Space& space, const ActionSpec& actions) {
    std::vector<Gf2Vec> rows;
    for (const auto& [name, m] : actions.generators) {
        (void)name;
        if (m.rows != space.dim() || m.cols != space.dim())
            throw std::invalid_argument("imageSum: action matrix does not fit the space");
        const Gf2Matrix rel = m.plusIdentity();
        for (int c = 0; c < rel.cols; ++c) rows.push_back(rel.column(c));
    }
    return rowReduce(std::move(rows));
}

CoinvariantClass coinvariantClass(const Gf2Vec& v, const Gf2Space& space,
                                  const ActionSpec& actions) {
    if (static_cast<int>(v.size()) != space.dim())
        throw std::invalid_argument("coinvariantClass: vector does not fit the space");
    const auto relations = imageSum(space, actions);
    CoinvariantClass out;
    out.quotientDim = space.dim() - static_cast<int>(relations.size());
    out.representative = residue(relations, v);
    out.isZero = isZeroVec(out.representative);
    return out;
}

Gf2Vec wedge(const Gf2Space& space, const Gf2Vec& v1, const Gf2Vec& v2, const Gf2Vec& v3) {
    const int n = space.dim();
    if (static_cast<int>(v1.size()) != n || static_cast<int>(v2.size()) != n ||
        static_cast<int>(v3.size()) != n)
        throw std::invalid_argument("wedge: vector does not fit the space");
    Gf2Vec out;
    out.reserve(static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::uint8_t acc = 0;
                const int idx[3] = {i, j, k};
                // All six assignments of (i,j,k) to the three slots.
                const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (const auto& p : perms)
                    acc ^= static_cast<std::uint8_t>(v1[static_cast<std::size_t>(idx[p[0]])] &
                                                     v2[static_cast<std::size_t>(idx[p[1]])] &
                                                     v3[static_cast<std::size_t>(idx[p[2]])]);
                out.push_back(acc);
            }
    return out;
}

int CubeData::subsetIndex(int i, int j, int k) const {
    const std::array<int, 3> key = {i, j, k};
    for (std::size_t s = 0; s < subsets.size(); ++s)
        if (subsets[s] == key) return static_cast<int>(s);
    throw std::invalid_argument("subsetIndex: not a basis subset");
}

CubeData exteriorCube(const Gf2Space& space, const ActionSpec& actions) {
    const int n = space.dim();
    if (n < 3) throw std::invalid_argument("exteriorCube: dimension must be at least 3");
    CubeData cube;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                cube.subsets.push_back({i, j, k});
                cube.space.labels.push_back(space.labels[static_cast<std::size_t>(i)] + "^" +
                                            space.labels[static_cast<std::size_t>(j)] + "^" +
                                            space.labels[static_cast<std::size_t>(k)]);
            }
    const int cubeDim = cube.space.dim();
    for (const auto& [name, m] : actions.generators) {
        Gf2Matrix induced(cubeDim, cubeDim);
        for (int s = 0; s < cubeDim; ++s) {
            const auto& sub = cube.subsets[static_cast<std::size_t>(s)];
            const Gf2Vec img = wedge(space, m.column(sub[0]), m.column(sub[1]), m.column(sub[2]));
            induced.setColumn(s, img);
        }
        cube.actions.generators.emplace_back(name, std::move(induced));
    }
    return cube;
}

QuotientData quotientBySubspace(const Gf2Space& space, const ActionSpec& actions,
                                const std::vector<Gf2Vec>& subspaceBasis) {
    const int n = space.dim();
    const auto rref = rowReduce(subspaceBasis);
    for (const auto& [name, m] : actions.generators)
        for (const Gf2Vec& s : rref)
            if (!isZeroVec(residue(rref, m.apply(s))))
                throw std::invalid_argument("quotientBySubspace: subspace not stable under " +
                                            name);

    QuotientData q;
    std::set<int> pivotSet;
    for (const Gf2Vec& row : rref) {
        int p = 0;
        while (p < n && !row[static_cast<std::size_t>(p)]) ++p;
        pivotSet.insert(p);
    }
    for (int c = 0; c < n; ++c) {
        if (pivotSet.count(c))
            q.pivotCols.push_back(c);
        else {
            q.freeCols.push_back(c);
            q.space.labels.push_back(space.labels[static_cast<std::size_t>(c)]);
        }
    }
    const int qdim = q.space.dim();
    q.projection = Gf2Matrix(qdim, n);
    for (int c = 0; c < n; ++c) {
        Gf2Vec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(c)] = 1;
        const Gf2Vec red = residue(rref, e);
        for (int r = 0; r < qdim; ++r)
            q.projection.at(r, c) = red[static_cast<std::size_t>(q.freeCols[static_cast<std::size_t>(r)])];
    }
    for (const auto& [name, m] : actions.generators) {
        Gf2Matrix induced(qdim, qdim);
        for (int r = 0; r < qdim; ++r) {
            Gf2Vec lift(static_cast<std::size_t>(n), 0);
            lift[static_cast<std::size_t>(q.freeCols[static_cast<std::size_t>(r)])] = 1;
            induced.setColumn(r, q.projection.apply(m.apply(lift)));
        }
        q.actions.generators.emplace_back(name, std::move(induced));
    }
    return q;
}

std::string renderVec(const Gf2Space& space, const Gf2Vec& v) {
    std::string out;
    for (int i = 0; i < space.dim(); ++i) {
        if (!v[static_cast<std::size_t>(i)]) continue;
        if (!out.empty()) out += "+";
        out += space.labels[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "0" : out;
}

} // namespace tcsurf
