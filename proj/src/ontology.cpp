#include "uiverify/ontology.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "json_util.hpp"
#include "text_util.hpp"
#include "uiverify/io.hpp"

namespace uiverify {

namespace {

std::string default_display_name(std::string_view id) {
    std::string out(id);
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

bool is_base64(std::string_view v) {
    size_t pad = 0;
    for (char c : v) {
        if (c == '=') {
            ++pad;
            continue;
        }
        if (pad > 0) return false; // padding only at the very end
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '+' || c == '/';
        if (!ok) return false;
    }
    return pad <= 2;
}

bool is_hex(std::string_view v) {
    if (v.size() % 2 != 0) return false;
    return std::all_of(v.begin(), v.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    });
}

bool is_integer(std::string_view v) {
    size_t i = (!v.empty() && (v[0] == '+' || v[0] == '-')) ? 1 : 0;
    if (i >= v.size()) return false;
    for (; i < v.size(); ++i) {
        if (v[i] < '0' || v[i] > '9') return false;
    }
    return true;
}

bool is_date(std::string_view v) {
    // YYYY-MM-DD
    if (v.size() != 10 || v[4] != '-' || v[7] != '-') return false;
    auto digits = [&](size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            if (v[i] < '0' || v[i] > '9') return false;
        }
        return true;
    };
    if (!digits(0, 4) || !digits(5, 7) || !digits(8, 10)) return false;
    int month = (v[5] - '0') * 10 + (v[6] - '0');
    int day = (v[8] - '0') * 10 + (v[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

} // namespace

std::string_view to_string(ClauseRole role) {
    switch (role) {
    case ClauseRole::Condition: return "Condition";
    case ClauseRole::Event: return "Event";
    case ClauseRole::Action: return "Action";
    }
    return "?";
}

std::optional<ClauseRole> clause_role_from_string(std::string_view name) {
    if (name == "Condition") return ClauseRole::Condition;
    if (name == "Event") return ClauseRole::Event;
    if (name == "Action") return ClauseRole::Action;
    return std::nullopt;
}

std::optional<ClauseRole> clause_for_keyword(std::string_view keyword) {
    if (keyword == "Given") return ClauseRole::Condition;
    if (keyword == "When") return ClauseRole::Event;
    if (keyword == "Then") return ClauseRole::Action;
    return std::nullopt;
}

std::string_view keyword_for_clause(ClauseRole role) {
    switch (role) {
    case ClauseRole::Condition: return "Given";
    case ClauseRole::Event: return "When";
    case ClauseRole::Action: return "Then";
    }
    return "?";
}

std::string_view to_string(Datatype type) {
    switch (type) {
    case Datatype::String: return "String";
    case Datatype::Base64Binary: return "Base64Binary";
    case Datatype::HexBinary: return "HexBinary";
    case Datatype::Integer: return "Integer";
    case Datatype::Boolean: return "Boolean";
    case Datatype::Date: return "Date";
    }
    return "?";
}

std::optional<Datatype> datatype_from_string(std::string_view name) {
    if (name == "String") return Datatype::String;
    if (name == "Base64Binary") return Datatype::Base64Binary;
    if (name == "HexBinary") return Datatype::HexBinary;
    if (name == "Integer") return Datatype::Integer;
    if (name == "Boolean") return Datatype::Boolean;
    if (name == "Date") return Datatype::Date;
    return std::nullopt;
}

bool value_matches_datatype(Datatype type, std::string_view value) {
    switch (type) {
    case Datatype::String: return true;
    case Datatype::Base64Binary: return is_base64(value);
    case Datatype::HexBinary: return is_hex(value);
    case Datatype::Integer: return is_integer(value);
    case Datatype::Boolean:
        return value == "true" || value == "false" || value == "1" || value == "0";
    case Datatype::Date: return is_date(value);
    }
    return false;
}

std::string_view to_string(ConsistencyCode code) {
    switch (code) {
    case ConsistencyCode::Cycle: return "CYCLE";
    case ConsistencyCode::UnknownClass: return "UNKNOWN_CLASS";
    case ConsistencyCode::UnknownPropertyTarget: return "UNKNOWN_PROPERTY_TARGET";
    case ConsistencyCode::EquivMismatch: return "EQUIV_MISMATCH";
    case ConsistencyCode::AmbiguousTemplate: return "AMBIGUOUS_TEMPLATE";
    case ConsistencyCode::EmptyRoleset: return "EMPTY_ROLESET";
    case ConsistencyCode::BadDatatype: return "BAD_DATATYPE";
    }
    return "?";
}

std::string PhraseTemplate::pattern() const {
    std::string out = literals[0];
    for (size_t i = 0; i < slots.size(); ++i) {
        out += "\"{" + slots[i].name + "}\"";
        out += literals[i + 1];
    }
    return out;
}

int PhraseTemplate::element_slot_index() const {
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].type == SlotType::Element) return static_cast<int>(i);
    }
    return -1;
}

int PhraseTemplate::value_slot_count() const {
    int n = 0;
    for (const auto& slot : slots) {
        if (slot.type == SlotType::Value) ++n;
    }
    return n;
}

std::string PhraseTemplate::render(const std::optional<std::string>& element_arg,
                                   const std::vector<std::string>& value_args) const {
    if (static_cast<int>(value_args.size()) != value_slot_count()) {
        throw ValidationError("render: expected " + std::to_string(value_slot_count()) +
                              " value argument(s), got " + std::to_string(value_args.size()));
    }
    if (element_slot_index() >= 0 && !element_arg) {
        throw ValidationError("render: template needs an element argument");
    }
    std::string out = literals[0];
    size_t next_value = 0;
    for (size_t i = 0; i < slots.size(); ++i) {
        const std::string& arg =
            slots[i].type == SlotType::Element ? *element_arg : value_args[next_value++];
        out += "\"" + arg + "\"";
        out += literals[i + 1];
    }
    return out;
}

PhraseTemplate parse_phrase_template(std::string_view pattern,
                                     const std::map<std::string, SlotType>& slot_types) {
    auto split = text::split_quoted(pattern);
    if (!split) {
        throw SyntaxError("template \"" + std::string(pattern) + "\": unterminated quote");
    }
    if (split->args.empty()) {
        throw SyntaxError("template \"" + std::string(pattern) +
                          "\": must mention at least one quoted argument");
    }
    PhraseTemplate out;
    out.literals = split->literals;
    std::set<std::string> seen;
    for (const auto& arg : split->args) {
        if (arg.size() < 3 || arg.front() != '{' || arg.back() != '}') {
            throw SyntaxError("template \"" + std::string(pattern) +
                              "\": quoted placeholder must look like \"{name}\"");
        }
        std::string name = arg.substr(1, arg.size() - 2);
        auto it = slot_types.find(name);
        if (it == slot_types.end()) {
            throw SyntaxError("template \"" + std::string(pattern) + "\": slot \"" + name +
                              "\" has no declared type");
        }
        if (!seen.insert(name).second) {
            throw SyntaxError("template \"" + std::string(pattern) + "\": slot \"" + name +
                              "\" appears twice");
        }
        out.slots.push_back(Slot{name, it->second});
    }
    for (const auto& [name, type] : slot_types) {
        (void)type;
        if (!seen.count(name)) {
            throw SyntaxError("template \"" + std::string(pattern) + "\": declared slot \"" +
                              name + "\" is unused");
        }
    }
    int elements = 0;
    for (const auto& slot : out.slots) {
        if (slot.type == SlotType::Element) ++elements;
    }
    if (elements > 1) {
        throw SyntaxError("template \"" + std::string(pattern) +
                          "\": at most one element slot is allowed");
    }
    return out;
}

ConsistencyError::ConsistencyError(ConsistencyReport report)
    : Error([&report] {
          std::string what = "inconsistent ontology";
          if (!report.findings.empty()) {
              what += ": " + report.findings.front().message;
              if (report.findings.size() > 1) {
                  what += " (+" + std::to_string(report.findings.size() - 1) + " more)";
              }
          }
          return what;
      }()),
      report_(std::move(report)) {}

OntologyModel::OntologyModel(std::string version,
                             std::vector<ElementClass> classes,
                             std::vector<DataPropertyDef> data_properties,
                             std::vector<BehaviorDef> behaviors)
    : version_(std::move(version)),
      classes_(std::move(classes)),
      data_properties_(std::move(data_properties)),
      behaviors_(std::move(behaviors)) {
    for (size_t i = 0; i < classes_.size(); ++i) class_index_.emplace(classes_[i].id, i);
    for (size_t i = 0; i < data_properties_.size(); ++i) {
        property_index_.emplace(data_properties_[i].id, i);
    }
    for (size_t i = 0; i < behaviors_.size(); ++i) behavior_index_.emplace(behaviors_[i].id, i);
}

const ElementClass* OntologyModel::find_class(std::string_view id) const {
    auto it = class_index_.find(std::string(id));
    return it == class_index_.end() ? nullptr : &classes_[it->second];
}

const DataPropertyDef* OntologyModel::find_data_property(std::string_view id) const {
    auto it = property_index_.find(std::string(id));
    return it == property_index_.end() ? nullptr : &data_properties_[it->second];
}

const BehaviorDef* OntologyModel::find_behavior(std::string_view id) const {
    auto it = behavior_index_.find(std::string(id));
    return it == behavior_index_.end() ? nullptr : &behaviors_[it->second];
}

std::set<std::string> OntologyModel::subclass_closure(std::string_view class_id) const {
    const ElementClass* start = find_class(class_id);
    if (!start) throw UnknownClassError(std::string(class_id));
    std::set<std::string> closure;
    std::vector<const ElementClass*> stack{start};
    while (!stack.empty()) {
        const ElementClass* cls = stack.back();
        stack.pop_back();
        if (!closure.insert(cls->id).second) continue;
        for (const auto& parent : cls->parents) {
            if (const ElementClass* p = find_class(parent)) stack.push_back(p);
        }
    }
    return closure;
}

bool OntologyModel::element_satisfies(std::string_view widget_class,
                                      std::string_view behavior_id) const {
    const BehaviorDef* behavior = find_behavior(behavior_id);
    if (!behavior) throw UnknownBehaviorError(std::string(behavior_id));
    std::set<std::string> closure = subclass_closure(widget_class);
    return std::any_of(behavior->allowed_elements.begin(), behavior->allowed_elements.end(),
                       [&](const std::string& allowed) { return closure.count(allowed) > 0; });
}

bool OntologyModel::operator==(const OntologyModel& other) const {
    return version_ == other.version_ && classes_ == other.classes_ &&
           data_properties_ == other.data_properties_ && behaviors_ == other.behaviors_;
}

OntologyModel parse_ontology_document(std::string_view json_text) {
    using jsonu::json;
    json doc = jsonu::parse_document(json_text);
    if (!doc.is_object()) throw SyntaxError("ontology: expected a JSON object at top level");

    std::string version = jsonu::require_string(doc, "version", "ontology");

    std::vector<ElementClass> classes;
    std::set<std::string> class_ids;
    const json& class_array = jsonu::require_array(doc, "classes", "ontology");
    for (size_t i = 0; i < class_array.size(); ++i) {
        const json& entry = class_array[i];
        std::string path = "classes[" + std::to_string(i) + "]";
        ElementClass cls;
        cls.id = jsonu::require_string(entry, "id", path);
        if (cls.id.empty()) throw SyntaxError(path + ": class id must be non-empty");
        if (!class_ids.insert(cls.id).second) {
            throw SyntaxError(path + ": duplicate class id \"" + cls.id + "\"");
        }
        cls.display_name = jsonu::optional_string(entry, "display_name",
                                                  default_display_name(cls.id));
        if (entry.contains("parents")) {
            cls.parents = jsonu::string_array(entry["parents"], path + ".parents");
        }
        cls.is_abstract = jsonu::optional_bool(entry, "abstract", false, path);
        classes.push_back(std::move(cls));
    }

    std::vector<DataPropertyDef> properties;
    std::set<std::string> property_ids;
    if (doc.contains("data_properties")) {
        const json& prop_array = jsonu::require_array(doc, "data_properties", "ontology");
        for (size_t i = 0; i < prop_array.size(); ++i) {
            const json& entry = prop_array[i];
            std::string path = "data_properties[" + std::to_string(i) + "]";
            DataPropertyDef prop;
            prop.id = jsonu::require_string(entry, "id", path);
            if (!property_ids.insert(prop.id).second) {
                throw SyntaxError(path + ": duplicate data property id \"" + prop.id + "\"");
            }
            prop.range = jsonu::require_string(entry, "range", path);
            prop.applies_to =
                jsonu::string_array(jsonu::require(entry, "applies_to", path), path + ".applies_to");
            properties.push_back(std::move(prop));
        }
    }

    std::vector<BehaviorDef> behaviors;
    std::set<std::string> behavior_ids;
    if (doc.contains("behaviors")) {
        const json& behavior_array = jsonu::require_array(doc, "behaviors", "ontology");
        for (size_t i = 0; i < behavior_array.size(); ++i) {
            const json& entry = behavior_array[i];
            std::string path = "behaviors[" + std::to_string(i) + "]";
            BehaviorDef behavior;
            behavior.id = jsonu::require_string(entry, "id", path);
            if (!behavior_ids.insert(behavior.id).second) {
                throw SyntaxError(path + ": duplicate behavior id \"" + behavior.id + "\"");
            }
            path = "behavior \"" + behavior.id + "\"";

            const json& template_array = jsonu::require_array(entry, "templates", path);
            if (template_array.empty()) {
                throw SyntaxError(path + ": needs at least one phrase template");
            }
            for (const json& template_entry : template_array) {
                std::string pattern = jsonu::require_string(template_entry, "pattern", path);
                std::map<std::string, SlotType> slot_types;
                const json& slot_obj = jsonu::require(template_entry, "slots", path);
                if (!slot_obj.is_object()) {
                    throw SyntaxError(path + ": \"slots\" must map names to types");
                }
                for (const auto& [name, type_json] : slot_obj.items()) {
                    if (!type_json.is_string()) {
                        throw SyntaxError(path + ": slot \"" + name + "\": type must be a string");
                    }
                    std::string type_name = type_json.get<std::string>();
                    if (type_name == "element") {
                        slot_types.emplace(name, SlotType::Element);
                    } else if (type_name == "value") {
                        slot_types.emplace(name, SlotType::Value);
                    } else {
                        throw SyntaxError(path + ": slot \"" + name +
                                          "\": type must be \"element\" or \"value\"");
                    }
                }
                try {
                    behavior.templates.push_back(parse_phrase_template(pattern, slot_types));
                } catch (const SyntaxError& e) {
                    throw SyntaxError(path + ": " + e.what());
                }
            }

            const json& roles_array = jsonu::require_array(entry, "roles", path);
            for (const json& role_json : roles_array) {
                if (!role_json.is_string()) {
                    throw SyntaxError(path + ": roles must be strings");
                }
                auto role = clause_role_from_string(role_json.get<std::string>());
                if (!role) {
                    throw SyntaxError(path + ": unknown clause role \"" +
                                      role_json.get<std::string>() + "\"");
                }
                behavior.roles.insert(*role);
            }

            behavior.allowed_elements = jsonu::string_array(
                jsonu::require(entry, "allowed_elements", path), path + ".allowed_elements");
            if (behavior.allowed_elements.empty()) {
                throw SyntaxError(path + ": allowed_elements must not be empty");
            }

            if (entry.contains("equivalent_to") && !entry["equivalent_to"].is_null()) {
                if (!entry["equivalent_to"].is_string()) {
                    throw SyntaxError(path + ": equivalent_to must be a string");
                }
                behavior.equivalence_group = entry["equivalent_to"].get<std::string>();
            }
            behaviors.push_back(std::move(behavior));
        }
    }

    return OntologyModel(std::move(version), std::move(classes), std::move(properties),
                         std::move(behaviors));
}

namespace {

// Strongly connected components of the child -> parent graph, in a
// deterministic order. Used to report each inheritance cycle once.
std::vector<std::vector<size_t>> inheritance_sccs(const OntologyModel& model) {
    const auto& classes = model.classes();
    size_t n = classes.size();
    std::vector<std::vector<size_t>> edges(n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& parent : classes[i].parents) {
            for (size_t j = 0; j < n; ++j) {
                if (classes[j].id == parent) {
                    edges[i].push_back(j);
                    break;
                }
            }
        }
    }

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    std::vector<std::vector<size_t>> sccs;
    int counter = 0;

    std::function<void(size_t)> strongconnect = [&](size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (size_t w : edges[v]) {
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<size_t> scc;
            for (;;) {
                size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                scc.push_back(w);
                if (w == v) break;
            }
            std::sort(scc.begin(), scc.end());
            sccs.push_back(std::move(scc));
        }
    };
    for (size_t v = 0; v < n; ++v) {
        if (index[v] < 0) strongconnect(v);
    }
    std::sort(sccs.begin(), sccs.end());
    return sccs;
}

std::set<std::string> satisfier_set(const OntologyModel& model, const BehaviorDef& behavior) {
    std::set<std::string> out;
    for (const auto& cls : model.classes()) {
        auto closure = model.subclass_closure(cls.id);
        for (const auto& allowed : behavior.allowed_elements) {
            if (closure.count(allowed)) {
                out.insert(cls.id);
                break;
            }
        }
    }
    return out;
}

std::multiset<std::pair<bool, int>> template_shape(const BehaviorDef& behavior) {
    std::multiset<std::pair<bool, int>> out;
    for (const auto& t : behavior.templates) {
        out.insert({t.element_slot_index() >= 0, t.value_slot_count()});
    }
    return out;
}

} // namespace

ConsistencyReport check_consistency(const OntologyModel& model) {
    ConsistencyReport report;
    auto add = [&](ConsistencyCode code, std::string locus, std::string message) {
        report.findings.push_back(
            ConsistencyFinding{code, Severity::Error, std::move(locus), std::move(message)});
    };

    // inheritance cycles: one finding per strongly connected component
    for (const auto& scc : inheritance_sccs(model)) {
        const auto& classes = model.classes();
        bool self_loop = false;
        if (scc.size() == 1) {
            const auto& cls = classes[scc[0]];
            self_loop = std::find(cls.parents.begin(), cls.parents.end(), cls.id) !=
                        cls.parents.end();
        }
        if (scc.size() < 2 && !self_loop) continue;
        std::string chain;
        for (size_t v : scc) {
            chain += classes[v].id;
            chain += " -> ";
        }
        chain += classes[scc[0]].id;
        add(ConsistencyCode::Cycle, "class:" + classes[scc[0]].id,
            "inheritance cycle: " + chain);
    }

    // dangling references
    for (const auto& cls : model.classes()) {
        for (const auto& parent : cls.parents) {
            if (!model.find_class(parent)) {
                add(ConsistencyCode::UnknownClass, "class:" + cls.id,
                    "class \"" + cls.id + "\" inherits from undeclared class \"" + parent + "\"");
            }
        }
    }
    for (const auto& behavior : model.behaviors()) {
        for (const auto& allowed : behavior.allowed_elements) {
            if (!model.find_class(allowed)) {
                add(ConsistencyCode::UnknownClass, "behavior:" + behavior.id,
                    "behavior \"" + behavior.id + "\" allows undeclared class \"" + allowed +
                        "\"");
            }
        }
    }
    for (const auto& prop : model.data_properties()) {
        for (const auto& target : prop.applies_to) {
            if (!model.find_class(target)) {
                add(ConsistencyCode::UnknownPropertyTarget, "property:" + prop.id,
                    "data property \"" + prop.id + "\" applies to undeclared class \"" + target +
                        "\"");
            }
        }
        if (!prop.datatype()) {
            add(ConsistencyCode::BadDatatype, "property:" + prop.id,
                "data property \"" + prop.id + "\" has unknown datatype \"" + prop.range + "\"");
        }
    }

    // behaviors must play at least one transition role
    for (const auto& behavior : model.behaviors()) {
        if (behavior.roles.empty()) {
            add(ConsistencyCode::EmptyRoleset, "behavior:" + behavior.id,
                "behavior \"" + behavior.id + "\" plays no clause role");
        }
    }

    // two templates that match the same step texts make binding ambiguous
    std::map<std::string, std::vector<std::string>> by_signature;
    for (const auto& behavior : model.behaviors()) {
        for (size_t i = 0; i < behavior.templates.size(); ++i) {
            std::string key = text::literal_signature(behavior.templates[i].literals);
            by_signature[key].push_back(behavior.id + "/template:" + std::to_string(i));
        }
    }
    for (const auto& [key, owners] : by_signature) {
        (void)key;
        if (owners.size() < 2) continue;
        std::string names;
        for (const auto& owner : owners) {
            if (!names.empty()) names += ", ";
            names += owner;
        }
        add(ConsistencyCode::AmbiguousTemplate, "behavior:" + owners.front(),
            "templates match the same step texts: " + names);
    }

    // behaviors declared equivalent must be interchangeable
    std::map<std::string, std::vector<const BehaviorDef*>> groups;
    for (const auto& behavior : model.behaviors()) {
        if (behavior.equivalence_group) {
            groups[*behavior.equivalence_group].push_back(&behavior);
        }
    }
    for (const auto& [group, members] : groups) {
        if (members.size() < 2) continue;
        const BehaviorDef& first = *members.front();
        auto first_satisfiers = satisfier_set(model, first);
        auto first_shape = template_shape(first);
        for (size_t i = 1; i < members.size(); ++i) {
            const BehaviorDef& other = *members[i];
            std::string disagreement;
            if (other.roles != first.roles) {
                disagreement = "clause roles";
            } else if (satisfier_set(model, other) != first_satisfiers) {
                disagreement = "accepted element classes";
            } else if (template_shape(other) != first_shape) {
                disagreement = "template argument shapes";
            }
            if (!disagreement.empty()) {
                add(ConsistencyCode::EquivMismatch, "equivalence:" + group,
                    "behaviors \"" + first.id + "\" and \"" + other.id +
                        "\" share equivalence group \"" + group + "\" but differ in " +
                        disagreement);
            }
        }
    }

    return report;
}

OntologyModel load_ontology(std::string_view json_text) {
    OntologyModel model = parse_ontology_document(json_text);
    ConsistencyReport report = check_consistency(model);
    if (!report.is_consistent()) throw ConsistencyError(std::move(report));
    return model;
}

OntologyModel load_ontology_file(const std::string& path) {
    return load_ontology(read_file(path));
}

std::string serialize_ontology(const OntologyModel& model) {
    using ordered = nlohmann::ordered_json;
    ordered doc;
    doc["version"] = model.version();

    ordered class_array = ordered::array();
    for (const auto& cls : model.classes()) {
        ordered entry;
        entry["id"] = cls.id;
        if (cls.display_name != default_display_name(cls.id)) {
            entry["display_name"] = cls.display_name;
        }
        if (!cls.parents.empty()) entry["parents"] = cls.parents;
        if (cls.is_abstract) entry["abstract"] = true;
        class_array.push_back(std::move(entry));
    }
    doc["classes"] = std::move(class_array);

    ordered prop_array = ordered::array();
    for (const auto& prop : model.data_properties()) {
        ordered entry;
        entry["id"] = prop.id;
        entry["range"] = prop.range;
        entry["applies_to"] = prop.applies_to;
        prop_array.push_back(std::move(entry));
    }
    doc["data_properties"] = std::move(prop_array);

    ordered behavior_array = ordered::array();
    for (const auto& behavior : model.behaviors()) {
        ordered entry;
        entry["id"] = behavior.id;
        ordered template_array = ordered::array();
        for (const auto& t : behavior.templates) {
            ordered template_entry;
            template_entry["pattern"] = t.pattern();
            ordered slot_obj = ordered::object();
            for (const auto& slot : t.slots) {
                slot_obj[slot.name] = slot.type == SlotType::Element ? "element" : "value";
            }
            template_entry["slots"] = std::move(slot_obj);
            template_array.push_back(std::move(template_entry));
        }
        entry["templates"] = std::move(template_array);
        ordered roles_array = ordered::array();
        for (ClauseRole role : behavior.roles) roles_array.push_back(std::string(to_string(role)));
        entry["roles"] = std::move(roles_array);
        entry["allowed_elements"] = behavior.allowed_elements;
        if (behavior.equivalence_group) entry["equivalent_to"] = *behavior.equivalence_group;
        behavior_array.push_back(std::move(entry));
    }
    doc["behaviors"] = std::move(behavior_array);

    return doc.dump(2) + "\n";
}

} // namespace uiverify
