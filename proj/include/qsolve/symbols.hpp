#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsolve/errors.hpp"

namespace qsolve {

/// Identifies one unknown ansatz coefficient: the u^power coefficient of the
/// Q-function at Young-diagram vertex (a,s). Total order is vertex-major,
/// power-minor and is the variable order of every polynomial system.
struct SymbolId {
    int a = 0;
    int s = 0;
    int power = 0;

    friend bool operator==(const SymbolId& x, const SymbolId& y) {
        return x.a == y.a && x.s == y.s && x.power == y.power;
    }
    friend bool operator<(const SymbolId& x, const SymbolId& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.s != y.s) return x.s < y.s;
        return x.power < y.power;
    }
    std::string name() const {
        return "c[" + std::to_string(a) + "," + std::to_string(s) + "," + std::to_string(power) + "]";
    }
};

/// Registry mapping SymbolIds to dense variable indices. Creation order must
/// respect the SymbolId total order so indices are stable across a run.
class SymbolTable {
  public:
    size_t add(const SymbolId& id) {
        if (!ids_.empty() && !(ids_.back() < id)) throw Error("symbols must be registered in increasing order");
        ids_.push_back(id);
        index_[id] = ids_.size() - 1;
        return ids_.size() - 1;
    }
    size_t size() const { return ids_.size(); }
    const SymbolId& at(size_t i) const { return ids_.at(i); }
    size_t index_of(const SymbolId& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error("unknown symbol " + id.name());
        return it->second;
    }
    bool contains(const SymbolId& id) const { return index_.count(id) > 0; }
    const std::vector<SymbolId>& ids() const { return ids_; }

  private:
    std::vector<SymbolId> ids_;
    std::map<SymbolId, size_t> index_;
};

}  // namespace qsolve
