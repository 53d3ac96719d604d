#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uiverify/errors.hpp"

namespace uiverify {

/// The three transition components a step can play. Surface keywords map
/// one-to-one: Given = Condition, When = Event, Then = Action.
enum class ClauseRole { Condition, Event, Action };

std::string_view to_string(ClauseRole role);
std::optional<ClauseRole> clause_role_from_string(std::string_view name);
std::optional<ClauseRole> clause_for_keyword(std::string_view keyword);
std::string_view keyword_for_clause(ClauseRole role);

enum class Datatype { String, Base64Binary, HexBinary, Integer, Boolean, Date };

std::string_view to_string(Datatype type);
std::optional<Datatype> datatype_from_string(std::string_view name);

/// Lexical conformance of a property value to a datatype.
bool value_matches_datatype(Datatype type, std::string_view value);

/// One node in the interaction-element taxonomy. Multiple parents are
/// allowed; abstract classes group others and cannot be instantiated
/// as widgets.
struct ElementClass {
    std::string id;
    std::string display_name;
    std::vector<std::string> parents;
    bool is_abstract = false;

    bool operator==(const ElementClass&) const = default;
};

struct DataPropertyDef {
    std::string id;
    std::string range; // datatype name, validated by check_consistency
    std::vector<std::string> applies_to;

    std::optional<Datatype> datatype() const { return datatype_from_string(range); }
    bool operator==(const DataPropertyDef&) const = default;
};

enum class SlotType { Element, Value };

struct Slot {
    std::string name;
    SlotType type = SlotType::Value;

    bool operator==(const Slot&) const = default;
};

/// A natural-language surface form for a behavior. Arguments appear in
/// double quotes; everything between them is literal prose. Stored as the
/// interleaving  literals[0] "slot0" literals[1] "slot1" ... literals[n].
struct PhraseTemplate {
    std::vector<std::string> literals; // always slots.size() + 1 entries
    std::vector<Slot> slots;

    bool operator==(const PhraseTemplate&) const = default;

    /// Reconstructs the pattern string, placeholders as "{name}".
    std::string pattern() const;

    /// Index of the element slot, or -1 when the template has none.
    int element_slot_index() const;
    int value_slot_count() const;

    /// Fills the slots and returns the surface text.
    std::string render(const std::optional<std::string>& element_arg,
                       const std::vector<std::string>& value_args) const;
};

/// Parses a pattern like  I choose "{option}" referring to "{target}"
/// against a slot-name -> type map. Throws SyntaxError when the pattern
/// breaks a template rule (stray quote, unknown/duplicate slot, more than
/// one element slot).
PhraseTemplate parse_phrase_template(std::string_view pattern,
                                     const std::map<std::string, SlotType>& slot_types);

struct BehaviorDef {
    std::string id;
    std::vector<PhraseTemplate> templates;
    std::set<ClauseRole> roles;
    std::vector<std::string> allowed_elements;
    std::optional<std::string> equivalence_group;

    bool operator==(const BehaviorDef&) const = default;
};

enum class ConsistencyCode {
    Cycle,
    UnknownClass,
    UnknownPropertyTarget,
    EquivMismatch,
    AmbiguousTemplate,
    EmptyRoleset,
    BadDatatype,
};

std::string_view to_string(ConsistencyCode code);

enum class Severity { Warning, Error };

struct ConsistencyFinding {
    ConsistencyCode code;
    Severity severity = Severity::Error;
    std::string locus;   // e.g. "class:Dialog_Window", "behavior:choose/template:0"
    std::string message;
};

struct ConsistencyReport {
    std::vector<ConsistencyFinding> findings;

    bool is_consistent() const {
        for (const auto& f : findings) {
            if (f.severity == Severity::Error) return false;
        }
        return true;
    }
};

/// Thrown by load_ontology when the document parses but the model is
/// inconsistent; carries the full report.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(ConsistencyReport report);
    const ConsistencyReport& report() const { return report_; }

private:
    ConsistencyReport report_;
};

/// The behavior ontology: element-class taxonomy, data properties, behavior
/// definitions and equivalence groups. Immutable once constructed; safe to
/// share across concurrent readers.
class OntologyModel {
public:
    OntologyModel() = default;
    OntologyModel(std::string version,
                  std::vector<ElementClass> classes,
                  std::vector<DataPropertyDef> data_properties,
                  std::vector<BehaviorDef> behaviors);

    const std::string& version() const { return version_; }
    const std::vector<ElementClass>& classes() const { return classes_; }
    const std::vector<DataPropertyDef>& data_properties() const { return data_properties_; }
    const std::vector<BehaviorDef>& behaviors() const { return behaviors_; }

    const ElementClass* find_class(std::string_view id) const;
    const DataPropertyDef* find_data_property(std::string_view id) const;
    const BehaviorDef* find_behavior(std::string_view id) const;

    /// All ancestors of class_id plus the class itself. Tolerates cycles and
    /// dangling parent references (the checker reports those separately).
    /// Throws UnknownClassError for an undeclared class_id.
    std::set<std::string> subclass_closure(std::string_view class_id) const;

    /// True iff subclass_closure(widget_class) intersects the behavior's
    /// allowed element classes. Throws UnknownClassError / UnknownBehaviorError.
    bool element_satisfies(std::string_view widget_class, std::string_view behavior_id) const;

    bool operator==(const OntologyModel& other) const;

private:
    std::string version_;
    std::vector<ElementClass> classes_;
    std::vector<DataPropertyDef> data_properties_;
    std::vector<BehaviorDef> behaviors_;
    std::unordered_map<std::string, size_t> class_index_;
    std::unordered_map<std::string, size_t> property_index_;
    std::unordered_map<std::string, size_t> behavior_index_;
};

/// Parses an ontology document (UTF-8 JSON) into a model without judging
/// its consistency. Throws SyntaxError on malformed or mis-shaped input.
OntologyModel parse_ontology_document(std::string_view json_text);

/// Structural consistency checks: unresolved references, inheritance
/// cycles, bad datatype ranges, empty role sets, ambiguous templates and
/// mismatched equivalence groups. Findings are data, never thrown.
ConsistencyReport check_consistency(const OntologyModel& model);

/// parse_ontology_document + check_consistency; throws ConsistencyError on
/// any error-severity finding.
OntologyModel load_ontology(std::string_view json_text);
OntologyModel load_ontology_file(const std::string& path);

/// Canonical document text; load(serialize(m)) == m.
std::string serialize_ontology(const OntologyModel& model);

} // namespace uiverify
