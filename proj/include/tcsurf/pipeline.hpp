#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tcsurf/bar.hpp"
#include "tcsurf/dihedral_module.hpp"
#include "tcsurf/f2linear.hpp"
#include "tcsurf/nu.hpp"

namespace tcsurf {

using PairK = PairElement<KleinElement>;

/// One signed basis tuple of the 24-term degree-4 product cycle.
struct OmegaTerm {
    int sign = 1;
    std::array<PairK, 4> entries;

    BarTuple<PairK> tuple() const { return {entries[0], entries[1], entries[2], entries[3]}; }
};

using OmegaTable = std::vector<OmegaTerm>;

/// One row of the evaluated fourth power: a signed pure tensor of four
/// group-ring binomials.  Comparisons happen mod 2 on the expanded support;
/// the integer signs are kept for faithful rendering.
struct TTerm {
    int sign = 1;
    std::array<RingElement<KleinElement, int>, 4> factors;
};

struct TTermTable {
    std::vector<TTerm> rows;  // T1..T24

    TensorElement<KleinElement> expandedRow(int index) const;  // 0-based, mod 2
    TensorElement<KleinElement> mod2Sum() const;
};

// Construction of the fundamental cycles.
BarChain<KleinElement> buildKappa();
OmegaTable buildOmegaTable();              // shuffle order; equals the golden grid
BarChain<PairK> buildOmega();              // same terms as a bar chain
std::vector<TensorElement<KleinElement>> computeNu4Rows(const OmegaTable& omega);
TTermTable computeNu4Omega();

// Golden data, transcribed once and cross-checked by independent
// computation paths.
OmegaTable goldenOmega();
TTermTable goldenTTable();
ActionSpec goldenJAction();
extern const Gf2Space kCubeQuotientSpace;  // basis a..f
ActionSpec goldenCubeAction();             // rows (x,1), (1,x), (y,1)

/// The verbatim action table on J (golden transcription).
ActionSpec buildJAction();
/// The same table derived independently inside the quotient algebra.
ActionSpec oracleJAction();

struct CubeQuotient {
    CubeData cube;        // third exterior power of J
    QuotientData quotient;  // by the exterior cube of L = span{w,wx,w2,w2x}
};

CubeQuotient buildCubeQuotient(const ActionSpec& jAction);

/// Deliberate corruption of one golden entry, used to show the certificate
/// is falsifiable.
struct Mutation {
    enum class Kind { TTerm, OmegaTerm, JEntry, CubeEntry };
    Kind kind = Kind::TTerm;
    int index = 0;          // 1-based row index for T/omega targets
    std::string rowLabel;   // generator pair label for table targets
    std::string colLabel;   // basis label for table targets
};

/// Parse "T7", "omega3", "jtable:x1:w", "cubetable:y1:a"; empty optional on
/// malformed input.  Row tokens: x1, 1x, y1, 1y, ybar1, 1ybar.
std::optional<Mutation> parseMutation(const std::string& text);

struct Checkpoint {
    std::string name;
    bool passed = false;
    std::string expectedSource;  // "golden-table" or "oracle"
    std::string detail;
};

/// Structured report of the certification pipeline: one record per
/// checkpoint, the derived coinvariant relation basis, and the verdict.
struct Certificate {
    int genus = 2;
    std::vector<Checkpoint> checkpoints;
    std::vector<std::string> relationBasis;
    std::string verdict;    // "certified" or "not certified"
    std::string statement;
    double elapsedMs = 0.0;

    bool certified() const { return verdict == "certified"; }
    const Checkpoint* firstFailure() const;
    std::string toJson() const;
};

/// Run the full degree-four certification for the Klein bottle: build the
/// product cycle, evaluate the fourth power of the canonical cocycle,
/// project through the finite dihedral quotients, and decide nonvanishing
/// in coinvariants.  Stops at the first failing checkpoint.
Certificate certifyKlein(const std::optional<Mutation>& mutation = std::nullopt);

/// Certification for a genus-g non-orientable surface: the Klein case for
/// g = 2, and for g >= 3 the genus induction (chain-map identity, mod-2
/// homology dimensions, induced isomorphism on H2) on top of the base case.
/// Rejects g < 2.
Certificate certifySurface(int genus, const std::optional<Mutation>& mutation = std::nullopt);

// Table renderings shared by the CLI and the golden files.
std::string renderOmegaTable(const OmegaTable& t);
std::string renderTTermTable(const TTermTable& t);
std::string renderJTable(const ActionSpec& a);
std::string renderCubeTable(const ActionSpec& a);

} // namespace tcsurf
