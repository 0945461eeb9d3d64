#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace olhgen {

enum class RecipeKind {
    seed,        // catalog entry, published table, canonical column, zero row
    kronecker,   // L = A⊗B + γC⊗D under the orthogonal-LH hypotheses
    prop1_pair,  // (L, U) pair with U = -n0 A⊗B + C⊗D
    prop2,       // shifted orthogonal design for the outer level band
    stack,       // vertical stacking, first or second method
    theorem3,    // expansion by a fold matrix of order 2, 4, 8 or 16
    search,      // columnwise local search
    select,      // leading columns of the child
};

constexpr std::string_view to_string(RecipeKind k) noexcept {
    switch (k) {
        case RecipeKind::seed: return "seed";
        case RecipeKind::kronecker: return "kronecker";
        case RecipeKind::prop1_pair: return "prop1_pair";
        case RecipeKind::prop2: return "prop2";
        case RecipeKind::stack: return "stack";
        case RecipeKind::theorem3: return "theorem3";
        case RecipeKind::search: return "search";
        case RecipeKind::select: return "select";
    }
    return "unknown";
}

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

/// Provenance node. Leaves are seeds or searches; interior nodes record the
/// construction and its integer parameters in insertion order.
struct Recipe {
    using Params = std::vector<std::pair<std::string, std::int64_t>>;

    RecipeKind kind = RecipeKind::seed;
    std::string name;
    Params params;
    std::vector<RecipePtr> children;

    std::int64_t param(std::string_view key, std::int64_t fallback = 0) const {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        return fallback;
    }

    bool has_param(std::string_view key) const {
        for (const auto& [k, v] : params)
            if (k == key) return true;
        return false;
    }

    /// Compact one-line rendering, e.g. `theorem3(factor=16, seed[catalog](n=12, m=6))`.
    std::string summary() const {
        std::string out(to_string(kind));
        if (!name.empty()) out += "[" + name + "]";
        out += "(";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) out += ", ";
            out += k + "=" + std::to_string(v);
            first = false;
        }
        for (const auto& child : children) {
            if (!first) out += ", ";
            out += child ? child->summary() : std::string("?");
            first = false;
        }
        out += ")";
        return out;
    }

    bool well_founded() const {
        if (children.empty()) return kind == RecipeKind::seed || kind == RecipeKind::search;
        for (const auto& child : children)
            if (!child || !child->well_founded()) return false;
        return true;
    }
};

inline RecipePtr make_recipe(RecipeKind kind, std::string name,
                             Recipe::Params params,
                             std::vector<RecipePtr> children = {}) {
    auto r = std::make_shared<Recipe>();
    r->kind = kind;
    r->name = std::move(name);
    r->params = std::move(params);
    r->children = std::move(children);
    return r;
}

}  // namespace olhgen
