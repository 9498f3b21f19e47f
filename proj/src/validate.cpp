#include "salv/validate.hpp"

#include <algorithm>

namespace salv {
namespace {

class Validator {
  public:
    explicit Validator(const ArchModel& model) : model_(model) {}

    std::vector<Violation> run() {
        for (const auto& [id, entity] : model_.entities()) {
            if (!is_valid_id(id)) {
                add("invalid_id", id, "entity id is not a valid token");
            }
            std::visit([&](const auto& e) { check(id, e); }, entity);
        }
        for (const CrossLayerEdge& edge : model_.edges()) check_edge(edge);
        check_implied_edges_present();
        for (const auto& [name, spec] : model_.viewpoint_specs()) {
            for (const EntityId& seed : spec.seeds) {
                if (!model_.contains(seed))
                    add("dangling_reference", "viewpoint " + name,
                        "seed '" + seed + "' does not resolve");
            }
        }
        std::sort(violations_.begin(), violations_.end());
        violations_.erase(std::unique(violations_.begin(), violations_.end()),
                          violations_.end());
        return std::move(violations_);
    }

  private:
    void add(std::string code, std::string subject, std::string message) {
        violations_.push_back({std::move(code), std::move(subject), std::move(message)});
    }

    bool resolves(const EntityId& subject, const EntityId& ref, const char* what) {
        if (model_.contains(ref)) return true;
        add("dangling_reference", subject,
            std::string(what) + " '" + ref + "' does not resolve");
        return false;
    }

    bool is_device(const EntityId& ref) {
        const AssetEntity* asset = model_.find_asset(ref);
        return asset && asset->kind == AssetKind::device;
    }

    void check(const EntityId& id, const AssetEntity& asset) {
        switch (asset.kind) {
            case AssetKind::software:
            case AssetKind::data:
                if (!asset.host) {
                    add("missing_host", id, "software/data must reference a housing device");
                } else if (resolves(id, *asset.host, "host") && !is_device(*asset.host)) {
                    add("bad_reference_kind", id, "host '" + *asset.host + "' is not a device");
                }
                break;
            case AssetKind::link: {
                if (!asset.link_endpoints) {
                    add("bad_link", id, "link must reference two devices");
                    break;
                }
                const auto& [a, b] = *asset.link_endpoints;
                if (a == b) add("bad_link", id, "link endpoints must be distinct devices");
                for (const EntityId& dev : {a, b}) {
                    if (resolves(id, dev, "link endpoint") && !is_device(dev))
                        add("bad_reference_kind", id,
                            "link endpoint '" + dev + "' is not a device");
                }
                break;
            }
            case AssetKind::device:
                break;
        }
    }

    void check(const EntityId& id, const CommEntity& comm) {
        if (comm.kind != CommKind::network) {
            if (!comm.device) {
                add("missing_host", id, "comm entity must reference a hosting device");
            } else if (resolves(id, *comm.device, "device") && !is_device(*comm.device)) {
                add("bad_reference_kind", id, "device '" + *comm.device + "' is not a device");
            }
        }
        if (comm.kind == CommKind::endpoint && comm.address) {
            int containing = 0;
            for (const CommEntity* other : model_.comm_entities()) {
                if (other->kind == CommKind::network && other->range &&
                    other->range->contains(*comm.address))
                    ++containing;
            }
            if (containing == 0)
                add("endpoint_no_network", id,
                    "address " + comm.address->to_string() +
                        " falls inside no declared network range");
            else if (containing > 1)
                add("endpoint_multiple_networks", id,
                    "address " + comm.address->to_string() +
                        " falls inside more than one network range");
        }
        if (comm.kind == CommKind::inhibitor && !comm.ruleset) {
            add("missing_ruleset", id, "inhibitor carries no rule set");
        }
        for (const Route& route : comm.routes) {
            if (resolves(id, route.next_hop, "route next-hop") &&
                !model_.find_comm(route.next_hop)) {
                add("bad_reference_kind", id,
                    "route next-hop '" + route.next_hop + "' is not a comm entity");
            }
        }
        if (comm.ruleset) {
            for (std::size_t i = 0; i < comm.ruleset->size(); ++i) {
                const FirewallRule& rule = (*comm.ruleset)[i];
                if (rule.port && (rule.port->first < 0 || rule.port->second > 65535 ||
                                  rule.port->first > rule.port->second))
                    add("port_range", id,
                        "rule " + std::to_string(i) + " port range out of bounds");
            }
        }
        for (const NatMapping& nat : comm.nat) {
            if (nat.external == nat.internal)
                add("nat_identity", id, "nat mapping external equals internal");
        }
        for (const CommService& svc : comm.services) {
            if (svc.port < 0 || svc.port > 65535)
                add("port_range", id, "service '" + svc.name + "' port out of bounds");
        }
    }

    void check(const EntityId& id, const ServiceEntity& svc) {
        if (svc.host.empty()) {
            add("missing_host", id, "service must reference a hosting software or device");
        } else if (resolves(id, svc.host, "host")) {
            const AssetEntity* asset = model_.find_asset(svc.host);
            if (!asset ||
                (asset->kind != AssetKind::software && asset->kind != AssetKind::device))
                add("bad_reference_kind", id,
                    "host '" + svc.host + "' is not software or a device");
        }
        if (svc.endpoint_ref && resolves(id, *svc.endpoint_ref, "endpoint")) {
            const CommEntity* comm = model_.find_comm(*svc.endpoint_ref);
            if (!comm || comm->kind != CommKind::endpoint)
                add("bad_reference_kind", id,
                    "endpoint '" + *svc.endpoint_ref + "' is not a comm endpoint");
        }
        if (svc.sla && (svc.sla->availability < 0.0 || svc.sla->availability > 1.0))
            add("sla_range", id, "sla availability outside [0,1]");
    }

    void check(const EntityId& id, const DataFlow& flow) {
        if (flow.from == flow.to) add("self_reference", id, "dataflow from equals to");
        for (const EntityId& ref : {flow.from, flow.to}) {
            if (resolves(id, ref, "dataflow service") && !model_.find_service(ref))
                add("bad_reference_kind", id, "'" + ref + "' is not a service");
        }
        if (flow.p && (*flow.p < 0.0 || *flow.p > 1.0))
            add("probability_range", id, "p outside [0,1]");
    }

    void check(const EntityId& id, const Composition& comp) {
        if (resolves(id, comp.outer, "outer service") && !model_.find_service(comp.outer))
            add("bad_reference_kind", id, "outer '" + comp.outer + "' is not a service");
        for (const EntityId& inner : comp.inner) {
            if (inner == comp.outer) {
                add("self_reference", id, "service cannot compose with itself");
                continue;
            }
            if (resolves(id, inner, "inner service") && !model_.find_service(inner))
                add("bad_reference_kind", id, "inner '" + inner + "' is not a service");
        }
        if (comp.p && (*comp.p < 0.0 || *comp.p > 1.0))
            add("probability_range", id, "p outside [0,1]");
    }

    void check(const EntityId& id, const OrgEntity& org) {
        for (const EntityId& role : org.roles) {
            if (resolves(id, role, "role")) {
                const OrgEntity* target = model_.find_org(role);
                if (!target || target->kind != OrgKind::role)
                    add("bad_reference_kind", id, "'" + role + "' is not a role");
            }
        }
        for (const Privilege& priv : org.privileges)
            resolves(id, priv.target, "privilege target");
        for (const ProcessStep& step : org.steps) {
            if (resolves(id, step.actor, "step actor")) {
                const OrgEntity* actor = model_.find_org(step.actor);
                if (!actor || actor->kind != OrgKind::role)
                    add("bad_reference_kind", id,
                        "step actor '" + step.actor + "' is not a role");
            }
            for (const Privilege& priv : step.delegated_privileges)
                resolves(id, priv.target, "delegated privilege target");
        }
        for (const EnforcementRef& ref : org.enforced_by) {
            if (!resolves(id, ref.mechanism, "enforcement mechanism")) continue;
            const Entity* target = model_.find(ref.mechanism);
            const CommEntity* comm = std::get_if<CommEntity>(target);
            bool is_inhibitor = comm && comm->kind == CommKind::inhibitor;
            bool is_service = model_.find_service(ref.mechanism) != nullptr;
            if (!is_inhibitor && !is_service) {
                add("bad_reference_kind", id,
                    "enforcement mechanism '" + ref.mechanism +
                        "' is neither an inhibitor nor a service");
            }
            if (ref.rule_index) {
                int count = is_inhibitor && comm->ruleset
                                ? static_cast<int>(comm->ruleset->size())
                                : 0;
                if (*ref.rule_index < 0 || *ref.rule_index >= count)
                    add("rule_index_range", id,
                        "enforcement rule index " + std::to_string(*ref.rule_index) +
                            " out of range for '" + ref.mechanism + "'");
            }
        }
    }

    // (from layer.kind, to layer.kind) compatibility per edge kind.
    void check_edge(const CrossLayerEdge& edge) {
        const std::string subject = edge.to_string();
        const Entity* from = model_.find(edge.from);
        const Entity* to = model_.find(edge.to);
        if (!from) add("dangling_reference", subject, "edge source does not resolve");
        if (!to) add("dangling_reference", subject, "edge target does not resolve");
        if (edge.p && (*edge.p < 0.0 || *edge.p > 1.0))
            add("probability_range", subject, "p outside [0,1]");
        if (!from || !to) return;

        auto is_device = [](const Entity& e) {
            const auto* a = std::get_if<AssetEntity>(&e);
            return a && a->kind == AssetKind::device;
        };
        auto is_software = [](const Entity& e) {
            const auto* a = std::get_if<AssetEntity>(&e);
            return a && a->kind == AssetKind::software;
        };
        auto is_plain_service = [](const Entity& e) {
            return std::holds_alternative<ServiceEntity>(e);
        };
        auto is_org_of = [](const Entity& e, OrgKind kind) {
            const auto* o = std::get_if<OrgEntity>(&e);
            return o && o->kind == kind;
        };
        auto is_inhibitor = [](const Entity& e) {
            const auto* c = std::get_if<CommEntity>(&e);
            return c && c->kind == CommKind::inhibitor;
        };

        bool ok = true;
        switch (edge.kind) {
            case EdgeKind::hosted_on: {
                bool from_ok = is_software(*from) ||
                               (std::get_if<AssetEntity>(from) &&
                                std::get_if<AssetEntity>(from)->kind == AssetKind::data) ||
                               std::holds_alternative<CommEntity>(*from) ||
                               is_plain_service(*from);
                bool to_ok = is_device(*to) || (is_plain_service(*from) && is_software(*to));
                ok = from_ok && to_ok;
                break;
            }
            case EdgeKind::bound_to: {
                const auto* comm = std::get_if<CommEntity>(to);
                bool to_comm = comm != nullptr;
                bool link_net =
                    (std::get_if<AssetEntity>(from) &&
                     std::get_if<AssetEntity>(from)->kind == AssetKind::link && to_comm) ||
                    (std::holds_alternative<CommEntity>(*from) &&
                     std::get_if<AssetEntity>(to) &&
                     std::get_if<AssetEntity>(to)->kind == AssetKind::link);
                bool svc_ep = is_plain_service(*from) && comm && comm->kind == CommKind::endpoint;
                ok = svc_ep || link_net;
                break;
            }
            case EdgeKind::flows_to:
            case EdgeKind::composed_with:
                ok = is_plain_service(*from) && is_plain_service(*to);
                break;
            case EdgeKind::operated_by:
                ok = (is_org_of(*to, OrgKind::person) || is_org_of(*to, OrgKind::role)) &&
                     !is_org_of(*from, OrgKind::person) && !is_org_of(*from, OrgKind::policy) &&
                     !is_org_of(*from, OrgKind::process);
                break;
            case EdgeKind::governed_by:
                ok = is_org_of(*to, OrgKind::policy) && !is_org_of(*from, OrgKind::policy);
                break;
            case EdgeKind::enforced_by:
                ok = is_org_of(*from, OrgKind::policy) &&
                     (is_inhibitor(*to) || is_plain_service(*to));
                break;
            case EdgeKind::depends_on:
                ok = true;
                break;
        }
        if (!ok)
            add("edge_layer_mismatch", subject,
                "edge endpoints are inconsistent with its kind");
    }

    // Every field-implied edge must be present, and every enforced_by edge
    // must be backed by a policy field entry; together with the generic
    // edge keys this keeps serialization lossless.
    void check_implied_edges_present() {
        for (const CrossLayerEdge& edge : implied_edges(model_)) {
            if (!model_.edges().count(edge))
                add("missing_edge", edge.to_string(),
                    "edge implied by entity fields is absent (run materialize_edges)");
        }
        for (const CrossLayerEdge& edge : model_.edges()) {
            if (edge.kind != EdgeKind::enforced_by) continue;
            const OrgEntity* org = model_.find_org(edge.from);
            if (!org) continue; // dangling handled above
            bool backed = false;
            for (const EnforcementRef& ref : org->enforced_by)
                if (ref.mechanism == edge.to) backed = true;
            if (!backed)
                add("unbacked_edge", edge.to_string(),
                    "enforced_by edge has no matching policy field entry");
        }
    }

    const ArchModel& model_;
    std::vector<Violation> violations_;
};

} // namespace

std::vector<Violation> validate_model(const ArchModel& model) {
    return Validator(model).run();
}

} // namespace salv
