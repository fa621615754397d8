#include "brauerpaths/hecke_walks.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace brauerpaths {

int MultiShape::total() const {
    int n = 0;
    for (const auto& comp : components)
        for (int row : comp) n += row;
    return n;
}

int MultiShape::row_count() const {
    int r = 0;
    for (const auto& comp : components) r += static_cast<int>(comp.size());
    return r;
}

void MultiShape::validate() const {
    if (components.empty()) throw ValidationError("shape needs at least one component");
    for (const auto& comp : components) {
        if (comp.empty()) throw ValidationError("empty component in shape");
        for (std::size_t r = 0; r < comp.size(); ++r) {
            if (comp[r] < 1) throw ValidationError("shape rows must be positive");
            if (r > 0 && comp[r] > comp[r - 1])
                throw ValidationError("component rows must be weakly decreasing");
        }
    }
}

std::string MultiShape::to_string() const {
    std::string out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c) out += ",";
        out += "(";
        for (std::size_t r = 0; r < components[c].size(); ++r) {
            if (r) out += ",";
            out += std::to_string(components[c][r]);
        }
        out += ")";
    }
    return out;
}

StandardTableau::StandardTableau(MultiShape shape, std::vector<CellRef> placement)
    : shape_(std::move(shape)), placement_(std::move(placement)) {}

int StandardTableau::global_row(int symbol) const {
    const CellRef& c = cell_of(symbol);
    int offset = 0;
    for (int k = 0; k < c.component; ++k)
        offset += static_cast<int>(shape_.components[static_cast<std::size_t>(k)].size());
    return offset + c.row;
}

StandardTableau StandardTableau::swapped(int i) const {
    auto placement = placement_;
    std::swap(placement[static_cast<std::size_t>(i - 1)], placement[static_cast<std::size_t>(i)]);
    return StandardTableau(shape_, std::move(placement));
}

bool StandardTableau::is_standard() const {
    // entry at each cell, then row/column monotonicity per component
    std::map<std::tuple<int, int, int>, int> entry;
    for (int s = 1; s <= size(); ++s) {
        const CellRef& c = cell_of(s);
        entry[{c.component, c.row, c.col}] = s;
    }
    for (std::size_t comp = 0; comp < shape_.components.size(); ++comp) {
        const auto& rows = shape_.components[comp];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (int col = 0; col < rows[r]; ++col) {
                auto it = entry.find({static_cast<int>(comp), static_cast<int>(r), col});
                if (it == entry.end()) return false;
                int v = it->second;
                if (col > 0 && entry[{static_cast<int>(comp), static_cast<int>(r), col - 1}] >= v)
                    return false;
                if (r > 0 && entry[{static_cast<int>(comp), static_cast<int>(r) - 1, col}] >= v)
                    return false;
            }
        }
    }
    return true;
}

bool tableau_less(const StandardTableau& a, const StandardTableau& b) {
    for (int s = a.size(); s >= 1; --s) {
        int ra = a.global_row(s), rb = b.global_row(s);
        if (ra != rb) return rb < ra;
    }
    return false;
}

namespace {

void fill_tableaux(const MultiShape& shape, int symbol, int n,
                   std::vector<std::vector<int>>& filled, std::vector<CellRef>& placement,
                   std::vector<StandardTableau>& out) {
    if (symbol > n) {
        out.emplace_back(shape, placement);
        return;
    }
    for (std::size_t comp = 0; comp < shape.components.size(); ++comp) {
        const auto& rows = shape.components[comp];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = filled[comp][r];
            if (c >= rows[r]) continue;
            if (r > 0 && filled[comp][r - 1] <= c) continue;  // cell above still empty
            filled[comp][r] = c + 1;
            placement.push_back({static_cast<int>(comp), static_cast<int>(r), c});
            fill_tableaux(shape, symbol + 1, n, filled, placement, out);
            placement.pop_back();
            filled[comp][r] = c;
        }
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_tableaux(const MultiShape& shape) {
    shape.validate();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> filled;
    for (const auto& comp : shape.components) filled.emplace_back(comp.size(), 0);
    std::vector<CellRef> placement;
    fill_tableaux(shape, 1, shape.total(), filled, placement, out);
    std::sort(out.begin(), out.end(), tableau_less);
    return out;
}

int Walk::height_after(int k) const {
    int h = 0;
    for (int i = 0; i < k; ++i) h += letters[static_cast<std::size_t>(i)] == 1 ? 1 : -1;
    return h;
}

int Walk::min_height() const {
    int h = 0, lo = 0;
    for (int l : letters) {
        h += l == 1 ? 1 : -1;
        lo = std::min(lo, h);
    }
    return lo;
}

int Walk::max_height() const {
    int h = 0, hi = 0;
    for (int l : letters) {
        h += l == 1 ? 1 : -1;
        hi = std::max(hi, h);
    }
    return hi;
}

std::string Walk::to_string() const {
    std::string s;
    for (int l : letters) s += static_cast<char>('0' + l);
    return s;
}

namespace {

bool is_two_one_row(const MultiShape& shape) {
    return shape.components.size() == 2 && shape.components[0].size() == 1 &&
           shape.components[1].size() == 1;
}

}  // namespace

Walk walk_of(const StandardTableau& t) {
    if (!is_two_one_row(t.shape()))
        throw ValidationError("walks require a shape of two one-row components");
    Walk w;
    w.letters.reserve(static_cast<std::size_t>(t.size()));
    for (int s = 1; s <= t.size(); ++s) w.letters.push_back(t.cell_of(s).component + 1);
    return w;
}

StandardTableau tableau_from_walk(const MultiShape& shape, const Walk& w) {
    if (!is_two_one_row(shape))
        throw ValidationError("walks require a shape of two one-row components");
    std::vector<CellRef> placement;
    int c1 = 0, c2 = 0;
    for (int l : w.letters) {
        if (l == 1)
            placement.push_back({0, 0, c1++});
        else
            placement.push_back({1, 0, c2++});
    }
    if (c1 != shape.components[0][0] || c2 != shape.components[1][0])
        throw ValidationError("walk does not fit the shape");
    StandardTableau t(shape, std::move(placement));
    if (!t.is_standard()) throw ValidationError("walk does not give a standard tableau");
    return t;
}

int hook(const StandardTableau& t, int i, int e) {
    const CellRef& a = t.cell_of(i);
    const CellRef& b = t.cell_of(i + 1);
    if (a.component == b.component)
        throw ValidationError("symbols " + std::to_string(i) + "," + std::to_string(i + 1) +
                              " do not mix");
    StandardTableau u = t.swapped(i);
    const StandardTableau& smaller = tableau_less(t, u) ? t : u;
    return e + walk_of(smaller).height_after(i - 1);
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunctionQ(1);
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const RationalFunctionQ& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const RationalFunctionQ& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const RationalFunctionQ& f) { return f.is_zero(); });
}

bool QMatrix::operator==(const QMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

RationalFunctionQ QMatrix::trace() const {
    RationalFunctionQ t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

std::vector<std::string> WalkModuleAction::basis_names() const {
    std::vector<std::string> names;
    names.reserve(basis.size());
    const bool walks = shape.components.size() == 2 && shape.components[0].size() == 1 &&
                       shape.components[1].size() == 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (walks) {
            names.push_back(walk_of(basis[k]).to_string());
        } else {
            std::string s = "T" + std::to_string(k);
            names.push_back(s);
        }
    }
    return names;
}

WalkModuleAction build_walk_module(const MultiShape& shape, const std::vector<int>& charges) {
    return build_walk_module(shape, charges, [](const StandardTableau&) { return true; });
}

WalkModuleAction build_walk_module(const MultiShape& shape, const std::vector<int>& charges,
                                   const std::function<bool(const StandardTableau&)>& keep) {
    shape.validate();
    if (charges.size() != shape.components.size())
        throw ValidationError("need one charge per component");
    const int n = shape.total();

    std::vector<StandardTableau> all = enumerate_tableaux(shape);
    std::vector<StandardTableau> basis;
    std::vector<int> basis_index(all.size(), -1);  // index into basis or -1
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (keep(all[k])) {
            basis_index[k] = static_cast<int>(basis.size());
            basis.push_back(all[k]);
        }
    }
    auto find_all_index = [&](const StandardTableau& t) {
        for (std::size_t k = 0; k < all.size(); ++k)
            if (all[k] == t) return static_cast<int>(k);
        throw ValidationError("sigma_i left the standard basis");
    };

    WalkModuleAction action{shape, charges, std::move(basis), {}};
    const int dim = static_cast<int>(action.basis.size());

    for (int i = 1; i <= n - 1; ++i) {
        QMatrix g(dim);
        for (int col = 0; col < dim; ++col) {
            const StandardTableau& t = action.basis[static_cast<std::size_t>(col)];
            const CellRef& a = t.cell_of(i);
            const CellRef& b = t.cell_of(i + 1);
            if (a.component == b.component && a.row == b.row) {
                g.at(col, col) = RationalFunctionQ(1);  // case (a)
                continue;
            }
            if (a.component == b.component && a.col == b.col) {
                g.at(col, col) = -(RationalFunctionQ::q() * RationalFunctionQ::q());  // case (b)
                continue;
            }
            // case (c): the pair {t, sigma_i t} mixes with hook length h
            StandardTableau u = t.swapped(i);
            if (!u.is_standard())
                throw ValidationError("sigma_" + std::to_string(i) +
                                      " produced a non-standard tableau in case (c)");
            const bool t_is_smaller = tableau_less(t, u);
            const StandardTableau& smaller = t_is_smaller ? t : u;
            int h = (smaller.cell_of(i).col - smaller.cell_of(i).row) -
                    (smaller.cell_of(i + 1).col - smaller.cell_of(i + 1).row) +
                    charges[static_cast<std::size_t>(smaller.cell_of(i).component)] -
                    charges[static_cast<std::size_t>(smaller.cell_of(i + 1).component)];
            if (h == 0)
                throw ValidationError("hook length 0 between symbols " + std::to_string(i) +
                                      " and " + std::to_string(i + 1) +
                                      ": the action is undefined on this basis");
            RationalFunctionQ qh = qint(h);
            RationalFunctionQ diag =
                RationalFunctionQ(1) -
                RationalFunctionQ::q() * qint(t_is_smaller ? h + 1 : h - 1) / qh;
            RationalFunctionQ off =
                -(RationalFunctionQ::q() * qint(t_is_smaller ? h - 1 : h + 1) / qh);
            g.at(col, col) = diag;
            int u_basis = basis_index[static_cast<std::size_t>(find_all_index(u))];
            if (u_basis < 0) {
                if (!off.is_zero())
                    throw ValidationError(
                        "basis subset is not closed: g_" + std::to_string(i) +
                        " couples a kept tableau to a dropped one with nonzero coefficient");
            } else {
                g.at(u_basis, col) = off;
            }
        }
        action.generators.push_back(std::move(g));
    }
    return action;
}

const QMatrix& generator_matrix(const WalkModuleAction& action, int i) {
    if (i < 1 || i > static_cast<int>(action.generators.size()))
        throw ValidationError("generator index out of range");
    return action.generators[static_cast<std::size_t>(i - 1)];
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

std::vector<std::string> RelationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

RelationReport verify_relations(const WalkModuleAction& action) {
    RelationReport report;
    const int gens = static_cast<int>(action.generators.size());
    const int dim = gens ? action.generators[0].size() : 0;
    QMatrix id = QMatrix::identity(dim);
    RationalFunctionQ q2 = RationalFunctionQ::q() * RationalFunctionQ::q();
    QMatrix q2id(dim);
    for (int i = 0; i < dim; ++i) q2id.at(i, i) = q2;

    for (int i = 1; i <= gens; ++i) {
        const QMatrix& g = action.generators[static_cast<std::size_t>(i - 1)];
        bool ok = ((g - id) * (g + q2id)).is_zero();
        report.checks.push_back({"quadratic g" + std::to_string(i), ok});
    }
    for (int i = 1; i < gens; ++i) {
        const QMatrix& a = action.generators[static_cast<std::size_t>(i - 1)];
        const QMatrix& b = action.generators[static_cast<std::size_t>(i)];
        bool ok = (a * b * a) == (b * a * b);
        report.checks.push_back(
            {"braid g" + std::to_string(i) + ",g" + std::to_string(i + 1), ok});
    }
    for (int i = 1; i <= gens; ++i)
        for (int j = i + 2; j <= gens; ++j) {
            const QMatrix& a = action.generators[static_cast<std::size_t>(i - 1)];
            const QMatrix& b = action.generators[static_cast<std::size_t>(j - 1)];
            bool ok = (a * b) == (b * a);
            report.checks.push_back(
                {"commute g" + std::to_string(i) + ",g" + std::to_string(j), ok});
        }
    return report;
}

DecouplingReport decoupling_report(const WalkModuleAction& action, const std::vector<bool>& subset,
                                   std::optional<int> root_order) {
    if (subset.size() != action.basis.size())
        throw ValidationError("subset size does not match the basis");
    DecouplingReport report{subset, root_order, {}};
    for (int i = 1; i <= static_cast<int>(action.generators.size()); ++i) {
        const QMatrix& g = action.generators[static_cast<std::size_t>(i - 1)];
        for (int col = 0; col < g.size(); ++col) {
            if (!subset[static_cast<std::size_t>(col)]) continue;
            for (int row = 0; row < g.size(); ++row) {
                if (subset[static_cast<std::size_t>(row)]) continue;
                const RationalFunctionQ& c = g.at(row, col);
                if (c.is_zero()) continue;
                LeakEntry leak{i, col, row, c, std::nullopt};
                if (root_order) leak.valuation_at_root = c.valuation_at_root_of_unity(*root_order);
                report.leaks.push_back(std::move(leak));
            }
        }
    }
    return report;
}

std::vector<bool> subset_nonnegative_walks(const WalkModuleAction& action) {
    std::vector<bool> keep;
    keep.reserve(action.basis.size());
    for (const auto& t : action.basis) keep.push_back(walk_of(t).min_height() >= 0);
    return keep;
}

std::vector<bool> subset_max_height(const WalkModuleAction& action, int bound) {
    std::vector<bool> keep;
    keep.reserve(action.basis.size());
    for (const auto& t : action.basis) keep.push_back(walk_of(t).max_height() <= bound);
    return keep;
}

std::vector<bool> subset_excluding_walk(const WalkModuleAction& action, const std::string& word) {
    std::vector<bool> keep;
    keep.reserve(action.basis.size());
    for (const auto& t : action.basis) keep.push_back(walk_of(t).to_string() != word);
    return keep;
}

}  // namespace brauerpaths
