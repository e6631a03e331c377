#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "qsolve/mpoly.hpp"
#include "qsolve/partition.hpp"
#include "qsolve/symbols.hpp"
#include "qsolve/upoly.hpp"

namespace qsolve {

using Vertex = std::pair<int, int>;  // (a, s)

/// Monotone lattice path (0,0) → upper-right boundary carrying the ansatz.
struct PathSpec {
    std::vector<Vertex> vertices;

    void validate(const DegreeTable& deg) const;
    std::string to_string() const;
};

/// Pick a path minimizing the number of unknown ansatz coefficients
/// (Σ M over path vertices), by dynamic programming over the region DAG.
/// Ties prefer the step that increases a.
PathSpec choose_path(const DegreeTable& deg);

enum class RelationMode { Full, Minimal, Rectangle };

struct RelationSpec {
    RelationMode mode = RelationMode::Full;
    int rect_a = 0;  // rectangle bounds: vertices with a ≤ rect_a, s ≤ rect_s
    int rect_s = 0;

    static RelationSpec full() { return {RelationMode::Full, 0, 0}; }
    static RelationSpec minimal() { return {RelationMode::Minimal, 0, 0}; }
    static RelationSpec rectangle(int n, int s) { return {RelationMode::Rectangle, n, s}; }
    static RelationSpec parse(const std::string& text);
    std::string to_string() const;
};

/// Plaquette set selected for propagation (lower-left corners).
struct RelationRegion {
    std::vector<Vertex> plaquettes;  // ordered by (a+s, a)
};

enum class QStatus { Fixed, Ansatz, Derived };

struct QEntry {
    Vertex vertex;
    QStatus status = QStatus::Fixed;
    UPoly<MPoly> poly;
};

struct Equation {
    MPoly poly;
    bool from_consistency = false;
    Vertex plaquette;   // lower-left corner
    int coeff_index = 0;
};

/// Q-function lattice on (a region of) the Young diagram together with the
/// accumulated zero-remainder / consistency equations on the unknowns.
class QGrid {
  public:
    QGrid(const Partition& lam, const PathSpec& path, const std::vector<Rational>& inhom = {});

    /// select the plaquette region; throws RegionExcludesPath if the region
    /// cannot host the non-fixed path vertices
    void select_relations(const RelationSpec& spec);

    /// derive all remaining Q-functions on the region and accumulate equations
    void propagate(bool emit_consistency = true);

    /// momentum quantisation constraints: the homogenized cyclotomic factors
    /// of Q(1/2)^L − Q(−1/2)^L, one substituted MPoly per divisor of L
    std::vector<MPoly> momentum_split() const;

    const DegreeTable& degrees() const { return deg_; }
    const PathSpec& path() const { return path_; }
    const SymbolTable& symbols() const { return syms_; }
    const std::vector<Equation>& equations() const { return eqs_; }
    const RelationRegion& region() const { return region_; }
    const std::vector<Rational>& inhomogeneities() const { return inhom_; }
    bool propagated() const { return propagated_; }

    bool has_entry(const Vertex& v) const { return entries_.count(v) > 0; }
    const QEntry& entry(const Vertex& v) const;
    const UPoly<MPoly>& q(int a, int s) const { return entry({a, s}).poly; }

    /// ansatz vertices in path order (vertices carrying fresh unknowns)
    std::vector<Vertex> ansatz_vertices() const;

    /// equations sorted by total degree ascending (stable)
    std::vector<MPoly> system_equations() const;

    /// vertices of the selected region (corners of its plaquettes + path)
    std::set<Vertex> region_vertices() const;

    /// direct region injection (tests of StuckPropagation use this)
    void set_region_for_test(RelationRegion r) { region_ = std::move(r); }

  private:
    void add_equation(MPoly p, bool consistency, Vertex plaq, int idx);

    DegreeTable deg_;
    PathSpec path_;
    std::vector<Rational> inhom_;
    std::map<Vertex, QEntry> entries_;
    SymbolTable syms_;
    RelationRegion region_;
    std::vector<Equation> eqs_;
    std::unordered_set<std::string> eq_keys_;
    bool propagated_ = false;
    bool region_selected_ = false;
};

/// homogenized cyclotomic factorization helpers (exact over the rationals)
UPolyQ cyclotomic(unsigned d);
std::vector<unsigned> divisors(unsigned n);

}  // namespace qsolve
