#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "salv/address.hpp"

namespace salv {

/// Model-wide unique token: letters, digits, underscore, non-empty.
using EntityId = std::string;

bool is_valid_id(const EntityId& id);

enum class Layer { asset, communication, service, organization };

constexpr Layer kAllLayers[] = {Layer::asset, Layer::communication, Layer::service,
                                Layer::organization};

const char* to_string(Layer layer);
std::optional<Layer> layer_from_string(const std::string& token);

// ---------------------------------------------------------------------------
// Asset layer

enum class AssetKind { device, link, software, data };

enum class DeviceClass {
    workstation,
    server,
    ied,
    rtu,
    plc,
    dcs,
    sensor,
    actuator,
    firewall_appliance,
    router_appliance,
    other,
};

enum class LinkMedium { ethernet, serial, dialup, leased_line, power_line, radio, wan };

struct AssetEntity {
    EntityId id;
    AssetKind kind = AssetKind::device;
    std::optional<DeviceClass> device_class;            // device
    std::string zone;                                   // free-form token, may be empty
    std::optional<EntityId> host;                       // software/data: housing device
    std::optional<std::pair<EntityId, EntityId>> link_endpoints; // link: two devices
    std::optional<LinkMedium> medium;                   // link

    bool operator==(const AssetEntity&) const = default;
};

// ---------------------------------------------------------------------------
// Communication layer

enum class CommKind { endpoint, enabler, inhibitor, network };

enum class EnablerClass { hub, sw, router, vlan }; // sw: "switch" is a keyword

enum class RuleAction { allow, deny };

/// One firewall rule. Absent src/dst/proto/port fields are wildcards.
struct FirewallRule {
    RuleAction action = RuleAction::deny;
    std::optional<AddrRange> src;                  // nullopt = any
    std::optional<AddrRange> dst;                  // nullopt = any
    std::optional<std::string> proto;              // nullopt = any
    std::optional<std::pair<int, int>> port;       // inclusive range, nullopt = any

    bool operator==(const FirewallRule&) const = default;
};

using FirewallRuleSet = std::vector<FirewallRule>;

enum class NatDirection { dst_rewrite, src_rewrite };

struct NatMapping {
    NatDirection direction = NatDirection::dst_rewrite;
    Ipv4 external;
    Ipv4 internal;

    bool operator==(const NatMapping&) const = default;
};

struct Route {
    AddrRange destination;
    EntityId next_hop;

    bool operator==(const Route&) const = default;
};

/// (service-name, port) pair for supporting services declared on a comm
/// entity, e.g. management and measurement services.
struct CommService {
    std::string name;
    int port = 0;

    bool operator==(const CommService&) const = default;
};

struct CommEntity {
    EntityId id;
    CommKind kind = CommKind::endpoint;
    std::optional<EntityId> device;                // endpoint/enabler/inhibitor host device
    std::optional<Ipv4> address;                   // endpoint
    std::optional<AddrRange> range;                // network
    std::optional<EnablerClass> enabler_class;     // enabler
    std::vector<Route> routes;                     // enabler with routing state
    std::optional<FirewallRuleSet> ruleset;        // inhibitor
    std::vector<NatMapping> nat;                   // inhibitor
    std::vector<CommService> services;

    bool operator==(const CommEntity&) const = default;
};

// ---------------------------------------------------------------------------
// Service layer

struct ServiceContract {
    std::string protocol;
    std::string schema;

    bool operator==(const ServiceContract&) const = default;
};

struct ServiceLevel {
    double availability = 1.0; // fraction in [0,1]
    double responsiveness_ms = 0.0;

    bool operator==(const ServiceLevel&) const = default;
};

struct ServiceEntity {
    EntityId id;
    EntityId host;                                 // software or device
    std::string description;
    std::vector<std::string> operations;
    std::optional<EntityId> endpoint_ref;          // comm endpoint
    std::optional<ServiceContract> contract;
    std::string fault_policy;
    std::optional<ServiceLevel> sla;
    bool requires_auth = false;
    bool auth_provider = false;                    // declared authentication service
    bool vulnerable = false;
    std::string vulnerability_note;

    bool operator==(const ServiceEntity&) const = default;
};

struct DataFlow {
    EntityId id;
    EntityId from;                                 // service
    EntityId to;                                   // service
    std::string protocol;
    std::string payload;                           // data-object id or schema name
    std::optional<double> p;                       // compromise-transmission probability

    bool operator==(const DataFlow&) const = default;
};

struct Composition {
    EntityId id;
    EntityId outer;                                // composite service
    std::vector<EntityId> inner;                   // component services
    std::optional<double> p;

    bool operator==(const Composition&) const = default;
};

// ---------------------------------------------------------------------------
// Organization layer

enum class OrgKind { person, role, process, policy };

enum class PrivilegeRight { read, write, configure, operate };

struct Privilege {
    PrivilegeRight right = PrivilegeRight::read;
    EntityId target;                               // entity in any layer

    auto operator<=>(const Privilege&) const = default;
};

struct ProcessStep {
    std::string task;
    EntityId actor;                                // role
    std::vector<Privilege> delegated_privileges;

    bool operator==(const ProcessStep&) const = default;
};

/// Reference from a policy to an enforcing mechanism; rule_index points
/// at a specific firewall rule when the mechanism is an inhibitor.
struct EnforcementRef {
    EntityId mechanism;
    std::optional<int> rule_index;

    auto operator<=>(const EnforcementRef&) const = default;
};

struct OrgEntity {
    EntityId id;
    OrgKind kind = OrgKind::person;
    std::vector<EntityId> roles;                   // person
    std::vector<Privilege> privileges;             // role
    std::vector<ProcessStep> steps;                // process
    std::string statement;                         // policy
    std::vector<EnforcementRef> enforced_by;       // policy

    bool operator==(const OrgEntity&) const = default;
};

// ---------------------------------------------------------------------------
// Cross-layer edges

enum class EdgeKind {
    hosted_on,
    bound_to,
    flows_to,
    composed_with,
    operated_by,
    governed_by,
    enforced_by,
    depends_on,
};

constexpr EdgeKind kAllEdgeKinds[] = {
    EdgeKind::hosted_on,  EdgeKind::bound_to,    EdgeKind::flows_to,    EdgeKind::composed_with,
    EdgeKind::operated_by, EdgeKind::governed_by, EdgeKind::enforced_by, EdgeKind::depends_on,
};

const char* to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(const std::string& token);

struct CrossLayerEdge {
    EdgeKind kind = EdgeKind::depends_on;
    EntityId from;
    EntityId to;
    std::optional<double> p;                       // analyst-assigned probability

    bool operator==(const CrossLayerEdge& other) const {
        return kind == other.kind && from == other.from && to == other.to && p == other.p;
    }
    // Identity for duplicate detection is the (kind, from, to) triple.
    bool operator<(const CrossLayerEdge& other) const {
        return std::tie(kind, from, to) < std::tie(other.kind, other.from, other.to);
    }

    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Viewpoint specifications (stored with the model for reproducibility)

struct ViewpointSpec {
    std::string name;
    std::set<Layer> layers;                        // empty = all
    std::set<std::string> zones;                   // empty = all
    std::set<std::string> kinds;                   // entity-kind tokens, empty = all
    std::set<EntityId> seeds;
    std::set<EdgeKind> expand;                     // empty = all kinds
    std::optional<int> depth;                      // nullopt = unlimited

    bool operator==(const ViewpointSpec&) const = default;
};

// ---------------------------------------------------------------------------
// The model

using Entity =
    std::variant<AssetEntity, CommEntity, ServiceEntity, DataFlow, Composition, OrgEntity>;

Layer layer_of(const Entity& entity);
const EntityId& id_of(const Entity& entity);

/// Entity-kind token as used by decls and viewpoint kind filters
/// (device, link, ..., endpoint, ..., service, dataflow, composition, ...).
std::string kind_token(const Entity& entity);

enum class ModelError {
    duplicate_id,
    layer_kind_mismatch,
    duplicate_edge,
    unknown_seed,
    unknown_endpoint,
    unknown_zone,
    unknown_service,
    not_a_policy,
    empty_viewpoint,
    not_a_polytree,
    too_large,
    invalid_model,
    invalid_argument,
};

const char* to_string(ModelError error);

class Error : public std::runtime_error {
  public:
    Error(ModelError code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ModelError code() const { return code_; }

  private:
    ModelError code_;
};

/// The four-layer entity graph. Single-writer while under construction;
/// immutable and freely shareable once validated.
class ArchModel {
  public:
    ArchModel() = default;
    explicit ArchModel(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::map<EntityId, Entity>& entities() const { return entities_; }
    const std::set<CrossLayerEdge>& edges() const { return edges_; }
    const std::map<std::string, ViewpointSpec>& viewpoint_specs() const { return specs_; }

    /// Stores an entity in the given layer. Referential checks are
    /// deferred to validate_model so partial models can be assembled.
    /// Throws Error{duplicate_id} / Error{layer_kind_mismatch}.
    EntityId add_entity(Layer layer, Entity entity);

    /// Appends an edge. Dangling endpoints are allowed until validation.
    /// Throws Error{duplicate_edge} on a repeated (kind, from, to) triple.
    const CrossLayerEdge& add_edge(CrossLayerEdge edge);

    void add_viewpoint_spec(ViewpointSpec spec);

    const Entity* find(const EntityId& id) const;
    bool contains(const EntityId& id) const { return entities_.count(id) > 0; }

    const AssetEntity* find_asset(const EntityId& id) const;
    const CommEntity* find_comm(const EntityId& id) const;
    const ServiceEntity* find_service(const EntityId& id) const;
    const OrgEntity* find_org(const EntityId& id) const;

    std::vector<const CommEntity*> comm_entities() const;
    std::vector<const CommEntity*> endpoints() const;

    bool operator==(const ArchModel&) const = default;

  private:
    std::string name_;
    std::map<EntityId, Entity> entities_;
    std::set<CrossLayerEdge> edges_;
    std::map<std::string, ViewpointSpec> specs_;
};

/// Edges implied by entity fields: host/device references give hosted_on,
/// dataflows give flows_to, compositions give composed_with, service
/// endpoint refs give bound_to, policy enforcement gives enforced_by and
/// person role membership gives operated_by (role held by person).
std::set<CrossLayerEdge> implied_edges(const ArchModel& model);

/// Inserts any implied edge the model is still missing. The ADL parser
/// applies this automatically; programmatic builders call it once the
/// entities are in place. Idempotent.
void materialize_edges(ArchModel& model);

// Enum token helpers (ADL keywords).
const char* to_string(AssetKind kind);
const char* to_string(DeviceClass cls);
const char* to_string(LinkMedium medium);
const char* to_string(CommKind kind);
const char* to_string(EnablerClass cls);
const char* to_string(RuleAction action);
const char* to_string(NatDirection direction);
const char* to_string(OrgKind kind);
const char* to_string(PrivilegeRight right);
std::optional<AssetKind> asset_kind_from_string(const std::string& token);
std::optional<DeviceClass> device_class_from_string(const std::string& token);
std::optional<LinkMedium> medium_from_string(const std::string& token);
std::optional<CommKind> comm_kind_from_string(const std::string& token);
std::optional<EnablerClass> enabler_class_from_string(const std::string& token);
std::optional<RuleAction> rule_action_from_string(const std::string& token);
std::optional<NatDirection> nat_direction_from_string(const std::string& token);
std::optional<OrgKind> org_kind_from_string(const std::string& token);
std::optional<PrivilegeRight> privilege_right_from_string(const std::string& token);

} // namespace salv
