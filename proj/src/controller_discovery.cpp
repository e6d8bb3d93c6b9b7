// SPDX-License-Identifier: Apache-2.0
#include "oasforge/controller_discovery.hpp"

#include <algorithm>

namespace oasforge {

namespace {

bool carries_controller_marker(const ClassDecl& cls, const SourceModel& model)
{
    for (const ClassDecl* c : all_supertypes(cls, model))
        if (c->annotation("RestController") || c->annotation("Controller"))
            return true;
    return false;
}

bool is_advice(const ClassDecl& cls)
{
    return cls.annotation("ControllerAdvice") || cls.annotation("RestControllerAdvice");
}

bool is_profile_expression(std::string_view name)
{
    return name.find_first_of("!&|()") != std::string_view::npos;
}

void report(Diagnostics* diags, std::string_view code, std::string message, const ClassDecl& cls, int line)
{
    if (diags)
        diags->push_back({std::string(code), Severity::warning, std::move(message), cls.source_file,
                          line ? line : cls.line});
}

} // namespace

ControllerSet discover_rest_classes(const SourceModel& model)
{
    ControllerSet out;
    for (const auto& [_, cls] : model.classes()) {
        if (cls.kind == ClassKind::interface_ || cls.kind == ClassKind::enum_)
            continue;
        if (!cls.is_abstract && carries_controller_marker(cls, model))
            out.controllers.push_back(&cls);
        if (is_advice(cls))
            out.advices.push_back(&cls);
    }
    return out;
}

ProfileSet assign_profiles(const ClassDecl& cls, const SourceModel& model, Diagnostics* diags)
{
    const AnnotationUse* profile = cls.annotation("Profile");
    if (!profile)
        return ProfileSet::everywhere();
    const AttributeValue* value = profile->first_attribute({"value"});
    if (!value)
        return ProfileSet::everywhere();

    ProfileSet out;
    out.all = false;
    for (const AttributeValue* element : value->elements()) {
        auto name = resolve_string_constant(*element, cls, model);
        if (!name) {
            report(diags, diag::unresolved_constant,
                   "cannot resolve profile name '" + element->text + "' of " + cls.qualified_name +
                       "; treating the class as active in every profile",
                   cls, profile->line);
            return ProfileSet::everywhere();
        }
        if (is_profile_expression(*name)) {
            report(diags, diag::profile_expression,
                   "profile expression '" + *name + "' on " + cls.qualified_name +
                       " is not supported; treating the class as active in every profile",
                   cls, profile->line);
            return ProfileSet::everywhere();
        }
        out.names.insert(*name);
    }
    if (out.names.empty())
        return ProfileSet::everywhere();
    return out;
}

std::vector<ProfileUnit> group_by_profile(const ControllerSet& set, const SourceModel& model, Diagnostics* diags)
{
    std::map<const ClassDecl*, ProfileSet> memberships;
    std::set<std::string> observed;
    auto assign = [&](const ClassDecl* cls) {
        if (memberships.contains(cls))
            return;
        ProfileSet profiles = assign_profiles(*cls, model, diags);
        observed.insert(profiles.names.begin(), profiles.names.end());
        memberships.emplace(cls, std::move(profiles));
    };
    for (const ClassDecl* c : set.controllers)
        assign(c);
    for (const ClassDecl* a : set.advices)
        assign(a);

    std::vector<std::string> names{std::string(kDefaultProfile)};
    for (const auto& p : observed)
        if (p != kDefaultProfile)
            names.push_back(p);

    std::vector<ProfileUnit> units;
    for (const auto& name : names) {
        ProfileUnit unit{name, {}};
        for (const ClassDecl* c : set.controllers)
            if (memberships.at(c).contains(name))
                unit.controller_set.controllers.push_back(c);
        for (const ClassDecl* a : set.advices)
            if (memberships.at(a).contains(name))
                unit.controller_set.advices.push_back(a);
        units.push_back(std::move(unit));
    }
    return units;
}

} // namespace oasforge
