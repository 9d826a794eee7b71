#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tcsurf {

using Gf2Vec = std::vector<std::uint8_t>;

struct Gf2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
    static Gf2Matrix identity(int n);

    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    Gf2Vec apply(const Gf2Vec& v) const;
    Gf2Vec column(int c) const;
    void setColumn(int c, const Gf2Vec& v);
    Gf2Matrix mul(const Gf2Matrix& o) const;
    Gf2Matrix plusIdentity() const;

    friend bool operator==(const Gf2Matrix& x, const Gf2Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

bool isZeroVec(const Gf2Vec& v);
Gf2Vec addVec(const Gf2Vec& a, const Gf2Vec& b);

/// Reduced row echelon form; zero rows dropped, pivots eliminated above and
/// below, rows ordered by pivot column.
std::vector<Gf2Vec> rowReduce(std::vector<Gf2Vec> rows);

/// Reduce v modulo a row-reduced basis; the result has zeros at every pivot.
Gf2Vec residue(const std::vector<Gf2Vec>& rref, Gf2Vec v);

int rank(const Gf2Matrix& m);
std::vector<Gf2Vec> kernelBasis(const Gf2Matrix& m);
bool isInvertible(const Gf2Matrix& m);
Gf2Matrix inverseMatrix(const Gf2Matrix& m);

/// Finite-dimensional GF(2) vector space with a named basis.
struct Gf2Space {
    std::vector<std::string> labels;

    int dim() const { return static_cast<int>(labels.size()); }
};

/// Generator-indexed action matrices on one space.  Each matrix column is
/// the image of the corresponding basis vector; group elements act
/// invertibly, so every matrix must be invertible.
struct ActionSpec {
    std::vector<std::pair<std::string, Gf2Matrix>> generators;

    const Gf2Matrix* find(const std::string& label) const;
};

/// Row-reduced basis of sum_g Image(A_g + Id).  This is the coinvariant
/// relation subspace: the span of m - g.m over all group elements equals
/// the span over a monoid-generating set, because
/// m - gh.m = (m - g.m) + g.(m - h.m).
std::vector<Gf2Vec> imageSum(const Gf2Space& space, const ActionSpec& actions);

struct CoinvariantClass {
    int quotientDim = 0;
    Gf2Vec representative;
    bool isZero = false;
};

/// Class of v in the coinvariants: v reduced modulo imageSum.
CoinvariantClass coinvariantClass(const Gf2Vec& v, const Gf2Space& space,
                                  const ActionSpec& actions);

/// Multilinear expansion of v1 (x) v2 (x) v3 onto the 3-subset basis of the
/// exterior cube.  Characteristic 2: no signs, and tuples with a repeated
/// basis index vanish, which forces wedges of linearly dependent triples to
/// zero.
Gf2Vec wedge(const Gf2Space& space, const Gf2Vec& v1, const Gf2Vec& v2, const Gf2Vec& v3);

struct CubeData {
    Gf2Space space;                           // basis labels "u^v^w"
    std::vector<std::array<int, 3>> subsets;  // lexicographic 3-subsets
    ActionSpec actions;                       // induced diagonal action

    int subsetIndex(int i, int j, int k) const;
};

/// Third exterior power with the induced action
/// g.(e_i ^ e_j ^ e_k) = (g.e_i) ^ (g.e_j) ^ (g.e_k).
CubeData exteriorCube(const Gf2Space& space, const ActionSpec& actions);

struct QuotientData {
    Gf2Space space;
    ActionSpec actions;
    Gf2Matrix projection;          // old coords -> quotient coords
    std::vector<int> pivotCols;    // killed coordinates
    std::vector<int> freeCols;     // surviving coordinates, in order
};

/// Quotient by an action-stable subspace; rejects non-stable input since
/// that signals a modelling error.  The projection is action-equivariant.
QuotientData quotientBySubspace(const Gf2Space& space, const ActionSpec& actions,
                                const std::vector<Gf2Vec>& subspaceBasis);

std::string renderVec(const Gf2Space& space, const Gf2Vec& v);

} // namespace tcsurf
