#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brauerpaths/qfunc.hpp"

namespace brauerpaths {

/// A tuple of Young diagrams; rows are numbered globally by stacking each
/// component under the previous one.
struct MultiShape {
    std::vector<std::vector<int>> components;  // weakly decreasing row lengths

    int total() const;
    int row_count() const;
    void validate() const;
    std::string to_string() const;  // e.g. "(2),(1,1)"
};

struct CellRef {
    int component;
    int row;  // within the component, 0-based
    int col;  // 0-based

    bool operator==(const CellRef& o) const {
        return component == o.component && row == o.row && col == o.col;
    }
};

/// Placement of symbols 1..n into the cells of a MultiShape so that every
/// component tableau has increasing rows and columns.
class StandardTableau {
public:
    StandardTableau(MultiShape shape, std::vector<CellRef> placement);

    const MultiShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(placement_.size()); }
    const CellRef& cell_of(int symbol) const { return placement_[static_cast<std::size_t>(symbol - 1)]; }
    /// Row index counting all components' rows top to bottom.
    int global_row(int symbol) const;

    /// Swaps symbols i and i+1; the result may fail to be standard.
    StandardTableau swapped(int i) const;
    bool is_standard() const;

    bool operator==(const StandardTableau& o) const { return placement_ == o.placement_; }

private:
    MultiShape shape_;
    std::vector<CellRef> placement_;  // placement_[s-1] = cell of symbol s
};

/// "T < U when the highest symbol placed in different rows sits in an
/// earlier row in U."
bool tableau_less(const StandardTableau& a, const StandardTableau& b);

/// All standard tableaux of the shape, sorted by tableau_less.
std::vector<StandardTableau> enumerate_tableaux(const MultiShape& shape);

/// Walk letters for a two-one-row shape: letter i is the component (1 or 2)
/// holding symbol i; step i adds (1,+1) for letter 1 and (1,-1) for letter 2.
struct Walk {
    std::vector<int> letters;

    int height_after(int k) const;  // after the first k steps
    int min_height() const;
    int max_height() const;
    std::string to_string() const;  // e.g. "1122"
    bool operator==(const Walk& o) const { return letters == o.letters; }
};

/// Requires a shape of exactly two one-row components.
Walk walk_of(const StandardTableau& t);
StandardTableau tableau_from_walk(const MultiShape& shape, const Walk& w);

/// Generalised hook length for the mixing pair {T, sigma_i(T)} of a
/// two-one-row tableau: e + height of the <-smaller member's walk after i-1
/// steps. Throws ValidationError when i,i+1 are not a mixing pair.
int hook(const StandardTableau& t, int i, int e);

/// Dense square matrix over RationalFunctionQ.
class QMatrix {
public:
    explicit QMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static QMatrix identity(int n);

    int size() const { return n_; }
    RationalFunctionQ& at(int row, int col) { return a_[static_cast<std::size_t>(row) * n_ + col]; }
    const RationalFunctionQ& at(int row, int col) const {
        return a_[static_cast<std::size_t>(row) * n_ + col];
    }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    bool is_zero() const;
    bool operator==(const QMatrix& o) const;

    RationalFunctionQ trace() const;

private:
    int n_;
    std::vector<RationalFunctionQ> a_;
};

/// The Hecke action on (a subset of) the standard tableaux of a shape, with
/// exact matrices for every generator. Construction fails when a needed
/// coefficient would divide by a vanishing quantum integer, or when the
/// chosen basis subset is not closed under the action.
struct WalkModuleAction {
    MultiShape shape;
    std::vector<int> charges;  // x_1..x_d
    std::vector<StandardTableau> basis;   // sorted by tableau_less
    std::vector<QMatrix> generators;      // generators[i-1] = matrix of g_i

    /// x_1 - x_2 (the wall offset for two-component shapes).
    int charge_offset() const { return charges.at(0) - charges.at(1); }
    std::vector<std::string> basis_names() const;
};

WalkModuleAction build_walk_module(const MultiShape& shape, const std::vector<int>& charges);
WalkModuleAction build_walk_module(const MultiShape& shape, const std::vector<int>& charges,
                                   const std::function<bool(const StandardTableau&)>& keep);

const QMatrix& generator_matrix(const WalkModuleAction& action, int i);  // 1-based

struct RelationCheck {
    std::string name;
    bool pass;
};

struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const;
    std::vector<std::string> failures() const;
};

/// (g-1)(g+q^2) = 0 per generator, braid for adjacent pairs, commutation for
/// distant pairs; failures are reported, never thrown.
RelationReport verify_relations(const WalkModuleAction& action);

struct LeakEntry {
    int generator;   // 1-based
    int from;        // basis index inside the subset
    int to;          // basis index outside the subset
    RationalFunctionQ coeff;                 // nonzero by construction
    std::optional<int> valuation_at_root;    // when a root order was requested
};

struct DecouplingReport {
    std::vector<bool> subset;
    std::optional<int> root_order;
    std::vector<LeakEntry> leaks;

    /// Exactly invariant at generic q: no nonzero outgoing coefficient.
    bool invariant() const { return leaks.empty(); }
};

DecouplingReport decoupling_report(const WalkModuleAction& action, const std::vector<bool>& subset,
                                   std::optional<int> root_order = std::nullopt);

/// Convenience subsets for two-one-row shapes.
std::vector<bool> subset_nonnegative_walks(const WalkModuleAction& action);
std::vector<bool> subset_max_height(const WalkModuleAction& action, int bound);
std::vector<bool> subset_excluding_walk(const WalkModuleAction& action, const std::string& word);

}  // namespace brauerpaths
