#include "salv/model.hpp"

#include <algorithm>
#include <cctype>

namespace salv {

bool is_valid_id(const EntityId& id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

const char* to_string(Layer layer) {
    switch (layer) {
        case Layer::asset: return "asset";
        case Layer::communication: return "communication";
        case Layer::service: return "service";
        case Layer::organization: return "organization";
    }
    return "?";
}

std::optional<Layer> layer_from_string(const std::string& token) {
    for (Layer layer : kAllLayers) {
        if (token == to_string(layer)) return layer;
    }
    return std::nullopt;
}

const char* to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::hosted_on: return "hosted_on";
        case EdgeKind::bound_to: return "bound_to";
        case EdgeKind::flows_to: return "flows_to";
        case EdgeKind::composed_with: return "composed_with";
        case EdgeKind::operated_by: return "operated_by";
        case EdgeKind::governed_by: return "governed_by";
        case EdgeKind::enforced_by: return "enforced_by";
        case EdgeKind::depends_on: return "depends_on";
    }
    return "?";
}

std::optional<EdgeKind> edge_kind_from_string(const std::string& token) {
    for (EdgeKind kind : kAllEdgeKinds) {
        if (token == to_string(kind)) return kind;
    }
    return std::nullopt;
}

std::string CrossLayerEdge::to_string() const {
    return std::string(salv::to_string(kind)) + "(" + from + " -> " + to + ")";
}

const char* to_string(AssetKind kind) {
    switch (kind) {
        case AssetKind::device: return "device";
        case AssetKind::link: return "link";
        case AssetKind::software: return "software";
        case AssetKind::data: return "data";
    }
    return "?";
}

const char* to_string(DeviceClass cls) {
    switch (cls) {
        case DeviceClass::workstation: return "workstation";
        case DeviceClass::server: return "server";
        case DeviceClass::ied: return "ied";
        case DeviceClass::rtu: return "rtu";
        case DeviceClass::plc: return "plc";
        case DeviceClass::dcs: return "dcs";
        case DeviceClass::sensor: return "sensor";
        case DeviceClass::actuator: return "actuator";
        case DeviceClass::firewall_appliance: return "firewall_appliance";
        case DeviceClass::router_appliance: return "router_appliance";
        case DeviceClass::other: return "other";
    }
    return "?";
}

const char* to_string(LinkMedium medium) {
    switch (medium) {
        case LinkMedium::ethernet: return "ethernet";
        case LinkMedium::serial: return "serial";
        case LinkMedium::dialup: return "dialup";
        case LinkMedium::leased_line: return "leased_line";
        case LinkMedium::power_line: return "power_line";
        case LinkMedium::radio: return "radio";
        case LinkMedium::wan: return "wan";
    }
    return "?";
}

const char* to_string(CommKind kind) {
    switch (kind) {
        case CommKind::endpoint: return "endpoint";
        case CommKind::enabler: return "enabler";
        case CommKind::inhibitor: return "inhibitor";
        case CommKind::network: return "network";
    }
    return "?";
}

const char* to_string(EnablerClass cls) {
    switch (cls) {
        case EnablerClass::hub: return "hub";
        case EnablerClass::sw: return "switch";
        case EnablerClass::router: return "router";
        case EnablerClass::vlan: return "vlan";
    }
    return "?";
}

const char* to_string(RuleAction action) {
    return action == RuleAction::allow ? "allow" : "deny";
}

const char* to_string(NatDirection direction) {
    return direction == NatDirection::dst_rewrite ? "dst_rewrite" : "src_rewrite";
}

const char* to_string(OrgKind kind) {
    switch (kind) {
        case OrgKind::person: return "person";
        case OrgKind::role: return "role";
        case OrgKind::process: return "process";
        case OrgKind::policy: return "policy";
    }
    return "?";
}

const char* to_string(PrivilegeRight right) {
    switch (right) {
        case PrivilegeRight::read: return "read";
        case PrivilegeRight::write: return "write";
        case PrivilegeRight::configure: return "configure";
        case PrivilegeRight::operate: return "operate";
    }
    return "?";
}

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> enum_from_string(const Enum (&values)[N], const std::string& token) {
    for (Enum value : values) {
        if (token == to_string(value)) return value;
    }
    return std::nullopt;
}

} // namespace

std::optional<AssetKind> asset_kind_from_string(const std::string& token) {
    constexpr AssetKind values[] = {AssetKind::device, AssetKind::link, AssetKind::software,
                                    AssetKind::data};
    return enum_from_string(values, token);
}

std::optional<DeviceClass> device_class_from_string(const std::string& token) {
    constexpr DeviceClass values[] = {
        DeviceClass::workstation, DeviceClass::server,  DeviceClass::ied,
        DeviceClass::rtu,         DeviceClass::plc,     DeviceClass::dcs,
        DeviceClass::sensor,      DeviceClass::actuator, DeviceClass::firewall_appliance,
        DeviceClass::router_appliance, DeviceClass::other};
    return enum_from_string(values, token);
}

std::optional<LinkMedium> medium_from_string(const std::string& token) {
    constexpr LinkMedium values[] = {LinkMedium::ethernet,  LinkMedium::serial,
                                     LinkMedium::dialup,    LinkMedium::leased_line,
                                     LinkMedium::power_line, LinkMedium::radio, LinkMedium::wan};
    return enum_from_string(values, token);
}

std::optional<CommKind> comm_kind_from_string(const std::string& token) {
    constexpr CommKind values[] = {CommKind::endpoint, CommKind::enabler, CommKind::inhibitor,
                                   CommKind::network};
    return enum_from_string(values, token);
}

std::optional<EnablerClass> enabler_class_from_string(const std::string& token) {
    constexpr EnablerClass values[] = {EnablerClass::hub, EnablerClass::sw, EnablerClass::router,
                                       EnablerClass::vlan};
    return enum_from_string(values, token);
}

std::optional<RuleAction> rule_action_from_string(const std::string& token) {
    constexpr RuleAction values[] = {RuleAction::allow, RuleAction::deny};
    return enum_from_string(values, token);
}

std::optional<NatDirection> nat_direction_from_string(const std::string& token) {
    constexpr NatDirection values[] = {NatDirection::dst_rewrite, NatDirection::src_rewrite};
    return enum_from_string(values, token);
}

std::optional<OrgKind> org_kind_from_string(const std::string& token) {
    constexpr OrgKind values[] = {OrgKind::person, OrgKind::role, OrgKind::process,
                                  OrgKind::policy};
    return enum_from_string(values, token);
}

std::optional<PrivilegeRight> privilege_right_from_string(const std::string& token) {
    constexpr PrivilegeRight values[] = {PrivilegeRight::read, PrivilegeRight::write,
                                         PrivilegeRight::configure, PrivilegeRight::operate};
    return enum_from_string(values, token);
}

const char* to_string(ModelError error) {
    switch (error) {
        case ModelError::duplicate_id: return "duplicate-id";
        case ModelError::layer_kind_mismatch: return "layer-kind-mismatch";
        case ModelError::duplicate_edge: return "duplicate-edge";
        case ModelError::unknown_seed: return "unknown-seed";
        case ModelError::unknown_endpoint: return "unknown-endpoint";
        case ModelError::unknown_zone: return "unknown-zone";
        case ModelError::unknown_service: return "unknown-service";
        case ModelError::not_a_policy: return "not-a-policy";
        case ModelError::empty_viewpoint: return "empty-viewpoint";
        case ModelError::not_a_polytree: return "not-a-polytree";
        case ModelError::too_large: return "too-large";
        case ModelError::invalid_model: return "invalid-model";
        case ModelError::invalid_argument: return "invalid-argument";
    }
    return "?";
}

Layer layer_of(const Entity& entity) {
    struct Visitor {
        Layer operator()(const AssetEntity&) const { return Layer::asset; }
        Layer operator()(const CommEntity&) const { return Layer::communication; }
        Layer operator()(const ServiceEntity&) const { return Layer::service; }
        Layer operator()(const DataFlow&) const { return Layer::service; }
        Layer operator()(const Composition&) const { return Layer::service; }
        Layer operator()(const OrgEntity&) const { return Layer::organization; }
    };
    return std::visit(Visitor{}, entity);
}

const EntityId& id_of(const Entity& entity) {
    return std::visit([](const auto& e) -> const EntityId& { return e.id; }, entity);
}

std::string kind_token(const Entity& entity) {
    struct Visitor {
        std::string operator()(const AssetEntity& e) const { return to_string(e.kind); }
        std::string operator()(const CommEntity& e) const { return to_string(e.kind); }
        std::string operator()(const ServiceEntity&) const { return "service"; }
        std::string operator()(const DataFlow&) const { return "dataflow"; }
        std::string operator()(const Composition&) const { return "composition"; }
        std::string operator()(const OrgEntity& e) const { return to_string(e.kind); }
    };
    return std::visit(Visitor{}, entity);
}

EntityId ArchModel::add_entity(Layer layer, Entity entity) {
    const EntityId& id = id_of(entity);
    if (layer_of(entity) != layer) {
        throw Error(ModelError::layer_kind_mismatch,
                    "entity '" + id + "' does not belong to layer " + to_string(layer));
    }
    if (entities_.count(id)) {
        throw Error(ModelError::duplicate_id, "duplicate entity id '" + id + "'");
    }
    auto [it, inserted] = entities_.emplace(id, std::move(entity));
    (void)inserted;
    return it->first;
}

const CrossLayerEdge& ArchModel::add_edge(CrossLayerEdge edge) {
    auto [it, inserted] = edges_.insert(std::move(edge));
    if (!inserted) {
        throw Error(ModelError::duplicate_edge, "duplicate edge " + it->to_string());
    }
    return *it;
}

void ArchModel::add_viewpoint_spec(ViewpointSpec spec) {
    std::string name = spec.name;
    if (specs_.count(name)) {
        throw Error(ModelError::duplicate_id, "duplicate viewpoint '" + name + "'");
    }
    specs_.emplace(std::move(name), std::move(spec));
}

const Entity* ArchModel::find(const EntityId& id) const {
    auto it = entities_.find(id);
    return it == entities_.end() ? nullptr : &it->second;
}

const AssetEntity* ArchModel::find_asset(const EntityId& id) const {
    const Entity* e = find(id);
    return e ? std::get_if<AssetEntity>(e) : nullptr;
}

const CommEntity* ArchModel::find_comm(const EntityId& id) const {
    const Entity* e = find(id);
    return e ? std::get_if<CommEntity>(e) : nullptr;
}

const ServiceEntity* ArchModel::find_service(const EntityId& id) const {
    const Entity* e = find(id);
    return e ? std::get_if<ServiceEntity>(e) : nullptr;
}

const OrgEntity* ArchModel::find_org(const EntityId& id) const {
    const Entity* e = find(id);
    return e ? std::get_if<OrgEntity>(e) : nullptr;
}

std::vector<const CommEntity*> ArchModel::comm_entities() const {
    std::vector<const CommEntity*> out;
    for (const auto& [id, entity] : entities_) {
        if (const auto* comm = std::get_if<CommEntity>(&entity)) out.push_back(comm);
    }
    return out;
}

std::vector<const CommEntity*> ArchModel::endpoints() const {
    std::vector<const CommEntity*> out;
    for (const CommEntity* comm : comm_entities()) {
        if (comm->kind == CommKind::endpoint) out.push_back(comm);
    }
    return out;
}

std::set<CrossLayerEdge> implied_edges(const ArchModel& model) {
    std::set<CrossLayerEdge> out;
    auto put = [&out](EdgeKind kind, const EntityId& from, const EntityId& to,
                      std::optional<double> p = std::nullopt) {
        out.insert(CrossLayerEdge{kind, from, to, p});
    };
    for (const auto& [id, entity] : model.entities()) {
        if (const auto* asset = std::get_if<AssetEntity>(&entity)) {
            if (asset->host) put(EdgeKind::hosted_on, id, *asset->host);
        } else if (const auto* comm = std::get_if<CommEntity>(&entity)) {
            if (comm->device) put(EdgeKind::hosted_on, id, *comm->device);
        } else if (const auto* svc = std::get_if<ServiceEntity>(&entity)) {
            if (!svc->host.empty()) put(EdgeKind::hosted_on, id, svc->host);
            if (svc->endpoint_ref) put(EdgeKind::bound_to, id, *svc->endpoint_ref);
        } else if (const auto* flow = std::get_if<DataFlow>(&entity)) {
            if (flow->from != flow->to) put(EdgeKind::flows_to, flow->from, flow->to, flow->p);
        } else if (const auto* comp = std::get_if<Composition>(&entity)) {
            for (const EntityId& inner : comp->inner) {
                if (inner != comp->outer)
                    put(EdgeKind::composed_with, inner, comp->outer, comp->p);
            }
        } else if (const auto* org = std::get_if<OrgEntity>(&entity)) {
            // A held role is exercised by its person: compromise of the
            // person propagates through the role to whatever it operates.
            for (const EntityId& role : org->roles) put(EdgeKind::operated_by, role, id);
            for (const EnforcementRef& ref : org->enforced_by)
                put(EdgeKind::enforced_by, id, ref.mechanism);
        }
    }
    return out;
}

void materialize_edges(ArchModel& model) {
    for (const CrossLayerEdge& edge : implied_edges(model)) {
        if (!model.edges().count(edge)) model.add_edge(edge);
    }
}

} // namespace salv
