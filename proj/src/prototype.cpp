#include "uiverify/prototype.hpp"

#include <algorithm>
#include <set>

#include "json_util.hpp"
#include "text_util.hpp"
#include "uiverify/io.hpp"

namespace uiverify {

std::string_view to_string(Platform platform) {
    switch (platform) {
    case Platform::Web: return "Web";
    case Platform::Mobile: return "Mobile";
    case Platform::Desktop: return "Desktop";
    }
    return "?";
}

std::optional<Platform> platform_from_string(std::string_view name) {
    if (name == "Web") return Platform::Web;
    if (name == "Mobile") return Platform::Mobile;
    if (name == "Desktop") return Platform::Desktop;
    return std::nullopt;
}

const State* Prototype::find_state(std::string_view name) const {
    for (const auto& state : states) {
        if (text::iequals(state.name, name)) return &state;
    }
    return nullptr;
}

const Transition* Prototype::find_transition(std::string_view source_state,
                                             std::string_view scenario_title) const {
    for (const auto& transition : transitions) {
        if (text::iequals(transition.source, source_state) &&
            transition.scenario_title == scenario_title) {
            return &transition;
        }
    }
    return nullptr;
}

const Widget* find_widget(const State& state, std::string_view name) {
    if (name.empty()) return nullptr;
    for (const auto& widget : state.widgets) {
        if (text::iequals(widget.name, name)) return &widget;
    }
    return nullptr;
}

std::vector<std::string> unreachable_states(const Prototype& prototype) {
    std::set<std::string> reached{text::to_lower(prototype.initial_state)};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : prototype.transitions) {
            if (reached.count(text::to_lower(t.source)) &&
                reached.insert(text::to_lower(t.target)).second) {
                changed = true;
            }
        }
    }
    std::vector<std::string> out;
    for (const auto& state : prototype.states) {
        if (!reached.count(text::to_lower(state.name))) out.push_back(state.name);
    }
    return out;
}

namespace {

std::string scalar_to_string(const jsonu::json& value, const std::string& path) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
    if (value.is_number_float()) return value.dump();
    throw SyntaxError(path + ": property values must be scalars");
}

Widget parse_widget(const jsonu::json& entry, const std::string& path,
                    const OntologyModel& model) {
    Widget widget;
    widget.name = jsonu::require_string(entry, "name", path);
    if (widget.name.empty()) throw SyntaxError(path + ": widget name must not be empty");
    widget.element_class = jsonu::require_string(entry, "class", path);

    const ElementClass* cls = model.find_class(widget.element_class);
    if (!cls) throw UnknownClassError(widget.element_class);
    if (cls->is_abstract) {
        throw ValidationError("widget \"" + widget.name + "\" instantiates abstract class \"" +
                                  widget.element_class + "\"",
                              path);
    }

    if (entry.contains("properties")) {
        const jsonu::json& props = entry["properties"];
        if (!props.is_object()) throw SyntaxError(path + ".properties: expected an object");
        std::set<std::string> ancestry = model.subclass_closure(widget.element_class);
        for (const auto& [key, raw] : props.items()) {
            const DataPropertyDef* prop = model.find_data_property(key);
            if (!prop) {
                throw ValidationError("widget \"" + widget.name +
                                          "\" uses undeclared data property \"" + key + "\"",
                                      path);
            }
            bool applies = std::any_of(prop->applies_to.begin(), prop->applies_to.end(),
                                       [&](const std::string& c) { return ancestry.count(c); });
            if (!applies) {
                throw ValidationError("data property \"" + key + "\" does not apply to class \"" +
                                          widget.element_class + "\"",
                                      path);
            }
            std::string value = scalar_to_string(raw, path + ".properties." + key);
            if (auto type = prop->datatype(); type && !value_matches_datatype(*type, value)) {
                throw ValidationError("value \"" + value + "\" of property \"" + key +
                                          "\" is not a valid " + std::string(to_string(*type)),
                                      path);
            }
            widget.properties.emplace(key, std::move(value));
        }
    }
    return widget;
}

} // namespace

Prototype load_prototype(std::string_view json_text, const OntologyModel& model,
                         std::vector<std::string>* warnings) {
    using jsonu::json;
    json doc = jsonu::parse_document(json_text);
    if (!doc.is_object()) throw SyntaxError("prototype: expected a JSON object at top level");

    Prototype proto;
    proto.name = jsonu::require_string(doc, "name", "prototype");
    if (doc.contains("platforms")) {
        for (const auto& name :
             jsonu::string_array(doc["platforms"], "prototype.platforms")) {
            auto platform = platform_from_string(name);
            if (!platform) {
                throw SyntaxError("prototype.platforms: unknown platform \"" + name + "\"");
            }
            proto.platforms.push_back(*platform);
        }
    }
    proto.initial_state = jsonu::require_string(doc, "initial_state", "prototype");

    std::set<std::string> state_names;
    const json& state_array = jsonu::require_array(doc, "states", "prototype");
    for (size_t i = 0; i < state_array.size(); ++i) {
        const json& entry = state_array[i];
        std::string path = "states[" + std::to_string(i) + "]";
        State state;
        state.name = jsonu::require_string(entry, "name", path);
        if (state.name.empty()) throw SyntaxError(path + ": state name must not be empty");
        if (!state_names.insert(text::to_lower(state.name)).second) {
            throw ValidationError("duplicate state name \"" + state.name + "\"", path);
        }
        if (entry.contains("widgets")) {
            const json& widget_array = entry["widgets"];
            if (!widget_array.is_array()) {
                throw SyntaxError(path + ".widgets: expected an array");
            }
            std::set<std::string> widget_names;
            for (size_t j = 0; j < widget_array.size(); ++j) {
                Widget widget = parse_widget(widget_array[j],
                                             path + ".widgets[" + std::to_string(j) + "]", model);
                if (!widget_names.insert(text::to_lower(widget.name)).second) {
                    throw ValidationError("duplicate widget name \"" + widget.name +
                                              "\" in state \"" + state.name + "\"",
                                          path);
                }
                state.widgets.push_back(std::move(widget));
            }
        }
        proto.states.push_back(std::move(state));
    }

    if (!proto.find_state(proto.initial_state)) {
        throw ValidationError("initial state \"" + proto.initial_state +
                              "\" is not a declared state");
    }

    if (doc.contains("transitions")) {
        const json& transition_array = doc["transitions"];
        if (!transition_array.is_array()) {
            throw SyntaxError("prototype.transitions: expected an array");
        }
        std::set<std::pair<std::string, std::string>> edges;
        for (size_t i = 0; i < transition_array.size(); ++i) {
            const json& entry = transition_array[i];
            std::string path = "transitions[" + std::to_string(i) + "]";
            Transition transition;
            transition.scenario_title = jsonu::require_string(entry, "scenario", path);
            transition.source = jsonu::require_string(entry, "source", path);
            transition.target = jsonu::require_string(entry, "target", path);
            for (const std::string* endpoint : {&transition.source, &transition.target}) {
                if (!proto.find_state(*endpoint)) {
                    throw ValidationError("transition endpoint \"" + *endpoint +
                                              "\" is not a declared state",
                                          path);
                }
            }
            if (!edges.emplace(text::to_lower(transition.source), transition.scenario_title)
                     .second) {
                throw ValidationError("state \"" + transition.source +
                                          "\" has two transitions for scenario \"" +
                                          transition.scenario_title + "\"",
                                      path);
            }
            proto.transitions.push_back(std::move(transition));
        }
    }

    if (warnings) {
        for (const auto& name : unreachable_states(proto)) {
            warnings->push_back("state \"" + name + "\" is not reachable from the initial state \"" +
                                proto.initial_state + "\"");
        }
    }
    return proto;
}

Prototype load_prototype_file(const std::string& path, const OntologyModel& model,
                              std::vector<std::string>* warnings) {
    return load_prototype(read_file(path), model, warnings);
}

std::string serialize_prototype(const Prototype& prototype) {
    using ordered = nlohmann::ordered_json;
    ordered doc;
    doc["name"] = prototype.name;
    ordered platform_array = ordered::array();
    for (Platform platform : prototype.platforms) {
        platform_array.push_back(std::string(to_string(platform)));
    }
    doc["platforms"] = std::move(platform_array);
    doc["initial_state"] = prototype.initial_state;

    ordered state_array = ordered::array();
    for (const auto& state : prototype.states) {
        ordered state_entry;
        state_entry["name"] = state.name;
        ordered widget_array = ordered::array();
        for (const auto& widget : state.widgets) {
            ordered widget_entry;
            widget_entry["name"] = widget.name;
            widget_entry["class"] = widget.element_class;
            if (!widget.properties.empty()) {
                ordered props = ordered::object();
                for (const auto& [key, value] : widget.properties) props[key] = value;
                widget_entry["properties"] = std::move(props);
            }
            widget_array.push_back(std::move(widget_entry));
        }
        state_entry["widgets"] = std::move(widget_array);
        state_array.push_back(std::move(state_entry));
    }
    doc["states"] = std::move(state_array);

    ordered transition_array = ordered::array();
    for (const auto& transition : prototype.transitions) {
        ordered entry;
        entry["scenario"] = transition.scenario_title;
        entry["source"] = transition.source;
        entry["target"] = transition.target;
        transition_array.push_back(std::move(entry));
    }
    doc["transitions"] = std::move(transition_array);

    return doc.dump(2) + "\n";
}

} // namespace uiverify
