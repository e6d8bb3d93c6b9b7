// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/source_model.hpp"

#include <set>
#include <string>
#include <vector>

namespace oasforge {

/// Controller and advice classes of a model, ordered by qualified name.
struct ControllerSet {
    std::vector<const ClassDecl*> controllers;
    std::vector<const ClassDecl*> advices;

    friend bool operator==(const ControllerSet&, const ControllerSet&) = default;
};

/// Controllers and advices active under one profile.
struct ProfileUnit {
    std::string profile_name;
    ControllerSet controller_set;
};

/// Profiles a class is restricted to; `all` means active everywhere.
struct ProfileSet {
    bool all = true;
    std::set<std::string> names;

    static ProfileSet everywhere() { return {}; }
    bool contains(const std::string& profile) const { return all || names.contains(profile); }

    friend bool operator==(const ProfileSet&, const ProfileSet&) = default;
};

inline constexpr std::string_view kDefaultProfile = "default";

ControllerSet discover_rest_classes(const SourceModel& model);

/// Reads the class's profile annotation. Expressions (negation, `&`, `|`)
/// and unresolvable constants yield ALL plus a diagnostic in `diags`.
ProfileSet assign_profiles(const ClassDecl& cls, const SourceModel& model, Diagnostics* diags = nullptr);

/// One unit per observed profile plus "default" (always first; the rest
/// sorted). ALL classes appear in every unit.
std::vector<ProfileUnit> group_by_profile(const ControllerSet& set, const SourceModel& model,
                                          Diagnostics* diags = nullptr);

} // namespace oasforge
