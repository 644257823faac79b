#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "korbit/error.hpp"

namespace korbit {

using VarId = int;

enum class VarKind {
    Coordinate,   // q^a
    Momentum,     // p_a
    Coalgebra,    // f_i
    OrbitParam,   // j_mu
    QuantumConst, // hbar
    Shift,        // beta_mu
    Auxiliary,
};

struct VarInfo {
    std::string name;
    VarKind kind;
    bool is_real;
};

// Ordered table of variables. The declaration order is fixed at construction
// and defines the monomial order of every Expression built over the table.
class VariableTable {
public:
    VarId add(const std::string& name, VarKind kind, bool is_real = true) {
        if (index_.count(name))
            throw Error(ErrorCode::SemanticError, "duplicate variable '" + name + "'");
        VarId id = static_cast<VarId>(vars_.size());
        vars_.push_back(VarInfo{name, kind, is_real});
        index_[name] = id;
        return id;
    }

    int size() const { return static_cast<int>(vars_.size()); }

    const VarInfo& info(VarId id) const {
        if (id < 0 || id >= size())
            throw Error(ErrorCode::UnknownVariable, "variable id out of range");
        return vars_[static_cast<size_t>(id)];
    }

    const std::string& name(VarId id) const { return info(id).name; }
    VarKind kind(VarId id) const { return info(id).kind; }
    bool is_real(VarId id) const { return info(id).is_real; }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    VarId id_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
        return it->second;
    }

    void set_reality(VarId id, bool is_real) { vars_[static_cast<size_t>(id)].is_real = is_real; }

private:
    std::vector<VarInfo> vars_;
    std::map<std::string, VarId> index_;
};

using TablePtr = std::shared_ptr<VariableTable>;

} // namespace korbit
