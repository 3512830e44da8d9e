#include "umaxpro/design.hpp"

#include <algorithm>
#include <cmath>

namespace umaxpro {

void check_selector(const SubspaceSelector& sel, int n_var) {
    if (sel.dims.empty()) throw DesignError("subspace selector is empty");
    int prev = -1;
    for (int v : sel.dims) {
        if (v < 0 || v >= n_var)
            throw DesignError("subspace selector index " + std::to_string(v) + " out of range");
        if (v <= prev) throw DesignError("subspace selector indices must be strictly increasing");
        prev = v;
    }
}

static void check_permutation(const LhsDesign& lhs, int v) {
    std::vector<char> seen(lhs.n_sim + 1, 0);
    for (int s = 0; s < lhs.n_sim; ++s) {
        int lv = lhs.level(s, v);
        if (lv < 1 || lv > lhs.n_sim)
            throw DesignError("level " + std::to_string(lv) + " out of range in dimension " +
                              std::to_string(v));
        if (seen[lv])
            throw DesignError("duplicate level " + std::to_string(lv) + " in dimension " +
                              std::to_string(v));
        seen[lv] = 1;
    }
}

Design realize(const LhsDesign& lhs) {
    if (lhs.n_sim < 2 || lhs.n_var < 1) throw DesignError("malformed LhsDesign shape");
    if (lhs.placement == Placement::random &&
        lhs.offsets.size() != static_cast<std::size_t>(lhs.n_sim) * lhs.n_var)
        throw DesignError("random placement requires an offset matrix");
    for (int v = 0; v < lhs.n_var; ++v) check_permutation(lhs, v);

    Design out(lhs.n_sim, lhs.n_var);
    for (int v = 0; v < lhs.n_var; ++v) {
        for (int s = 0; s < lhs.n_sim; ++s) {
            int lv = lhs.level(s, v);
            if (lhs.placement == Placement::median) {
                out.at(s, v) = median_coordinate(lv, lhs.n_sim);
            } else {
                double u = lhs.offsets[static_cast<std::size_t>(s) * lhs.n_var + v];
                if (!(u > 0.0 && u < 1.0))
                    throw DesignError("within-stratum offset outside (0,1)");
                out.at(s, v) = (lv - 1 + u) / lhs.n_sim;
            }
        }
    }
    return out;
}

LhsDiagnostics validate_lhs(const Design& design, int n_levels) {
    LhsDiagnostics diag;
    diag.dim_pass.assign(design.n_var, true);
    diag.offending_rows.assign(design.n_var, {});
    for (int v = 0; v < design.n_var; ++v) {
        // Boundary ties resolve to the upper stratum (floor-based indexing).
        std::vector<std::vector<int>> occupants(n_levels);
        for (int s = 0; s < design.n_sim; ++s) {
            int b = static_cast<int>(std::floor(design.at(s, v) * n_levels));
            b = std::clamp(b, 0, n_levels - 1);
            occupants[b].push_back(s);
        }
        for (const auto& occ : occupants) {
            if (occ.size() > 1)
                diag.offending_rows[v].insert(diag.offending_rows[v].end(), occ.begin(), occ.end());
        }
        bool one_each = design.n_sim == n_levels;
        for (const auto& occ : occupants)
            if (occ.size() != 1) one_each = false;
        diag.dim_pass[v] = one_each;
        if (!one_each) diag.all_pass = false;
    }
    return diag;
}

Design project(const Design& design, const SubspaceSelector& sel) {
    check_selector(sel, design.n_var);
    Design out(design.n_sim, static_cast<int>(sel.dims.size()));
    for (int s = 0; s < design.n_sim; ++s)
        for (std::size_t k = 0; k < sel.dims.size(); ++k)
            out.at(s, static_cast<int>(k)) = design.at(s, sel.dims[k]);
    return out;
}

LhsDesign project(const LhsDesign& lhs, const SubspaceSelector& sel) {
    check_selector(sel, lhs.n_var);
    LhsDesign out(lhs.n_sim, static_cast<int>(sel.dims.size()));
    out.placement = lhs.placement;
    for (std::size_t k = 0; k < sel.dims.size(); ++k)
        for (int s = 0; s < lhs.n_sim; ++s)
            out.level(s, static_cast<int>(k)) = lhs.level(s, sel.dims[k]);
    if (lhs.placement == Placement::random && !lhs.offsets.empty()) {
        out.offsets.resize(static_cast<std::size_t>(lhs.n_sim) * sel.dims.size());
        for (int s = 0; s < lhs.n_sim; ++s)
            for (std::size_t k = 0; k < sel.dims.size(); ++k)
                out.offsets[static_cast<std::size_t>(s) * sel.dims.size() + k] =
                    lhs.offsets[static_cast<std::size_t>(s) * lhs.n_var + sel.dims[k]];
    }
    return out;
}

Design translate_mod1(const Design& design, const std::vector<double>& shift) {
    if (shift.size() != static_cast<std::size_t>(design.n_var))
        throw DesignError("shift length must equal n_var");
    Design out(design.n_sim, design.n_var);
    for (int s = 0; s < design.n_sim; ++s)
        for (int v = 0; v < design.n_var; ++v)
            out.at(s, v) = wrap01(design.at(s, v) + shift[v]);
    return out;
}

}  // namespace umaxpro
