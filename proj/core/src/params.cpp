#include "uqaw/params.hpp"

#include <mutex>
#include <shared_mutex>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {
std::shared_mutex& registry_mutex() {
    static std::shared_mutex m;
    return m;
}
}  // namespace

ParamSet::ParamSet() { names_.push_back("q"); }

ParamSet& ParamSet::global() {
    static ParamSet instance;
    return instance;
}

int ParamSet::declare(const std::string& name) {
    if (name.empty()) throw invalid_argument_error("empty parameter name");
    std::unique_lock lock(registry_mutex());
    for (int i = 0; i < static_cast<int>(names_.size()); ++i)
        if (names_[i] == name) return i;
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
}

std::optional<int> ParamSet::index_of(const std::string& name) const {
    std::shared_lock lock(registry_mutex());
    for (int i = 0; i < static_cast<int>(names_.size()); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int ParamSet::require(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw unknown_parameter("UnknownParameter: " + name);
    return *idx;
}

std::string ParamSet::name(int index) const {
    std::shared_lock lock(registry_mutex());
    if (index < 0 || index >= static_cast<int>(names_.size()))
        throw invalid_argument_error("parameter index out of range");
    return names_[index];
}

int ParamSet::size() const {
    std::shared_lock lock(registry_mutex());
    return static_cast<int>(names_.size());
}

std::vector<std::string> ParamSet::names() const {
    std::shared_lock lock(registry_mutex());
    return names_;
}

}  // namespace uqaw
