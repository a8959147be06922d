#include "cci/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cci/radio.hpp"

#include <json.hpp>

namespace cci {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json parse(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::runtime_error("malformed JSON document");
    return doc;
}

double require_number(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::runtime_error(std::string("missing or non-numeric field '") + key + "'");
    return j.at(key).get<double>();
}

std::uint32_t require_uint(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw std::runtime_error(std::string("missing or non-integer field '") + key + "'");
    return j.at(key).get<std::uint32_t>();
}

} // namespace

Network network_from_json(const std::string& text) {
    const ordered_json doc = parse(text);
    if (!doc.contains("schema") || doc.at("schema") != 1)
        throw std::runtime_error("unsupported or missing schema version (expected 1)");

    Network net;
    for (const auto& jn : doc.value("nodes", ordered_json::array())) {
        Node n;
        n.id = require_uint(jn, "id");
        for (const auto& ja : jn.value("antennas", ordered_json::array())) {
            Antenna a;
            const auto& pos = ja.at("position");
            if (!pos.is_array() || pos.size() != 2)
                throw std::runtime_error("antenna position must be [x, y]");
            a.position = {pos[0].get<double>(), pos[1].get<double>()};
            a.boresight_rad = require_number(ja, "boresight_rad");
            a.beamwidth_w = require_number(ja, "beamwidth_w");
            n.antennas.push_back(a);
        }
        net.nodes.push_back(std::move(n));
    }
    for (const auto& jl : doc.value("links", ordered_json::array())) {
        Link l;
        l.id = require_uint(jl, "id");
        l.source = require_uint(jl, "source");
        l.target = require_uint(jl, "target");
        l.source_antenna = require_uint(jl, "source_antenna");
        l.target_antenna = require_uint(jl, "target_antenna");
        l.frequency_hz = require_number(jl, "frequency_hz");
        l.bandwidth_hz = require_number(jl, "bandwidth_hz");
        l.tx_directivity = require_number(jl, "tx_directivity");
        l.rx_directivity = require_number(jl, "rx_directivity");
        l.max_power_w = dbm_to_watts(require_number(jl, "max_power_dbm"));
        l.noise_w = dbm_to_watts(require_number(jl, "noise_dbm"));
        net.links.push_back(l);
    }
    for (const auto& jr : doc.value("red_edges", ordered_json::array())) {
        InterferenceEdge r;
        r.id = require_uint(jr, "id");
        r.base = require_uint(jr, "base");
        r.victim = require_uint(jr, "victim");
        r.victim_node = require_uint(jr, "victim_node");
        net.red_edges.push_back(r);
    }
    return net;
}

std::string network_to_json(const Network& net) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["nodes"] = ordered_json::array();
    for (const Node& n : net.nodes) {
        ordered_json jn;
        jn["id"] = n.id;
        jn["antennas"] = ordered_json::array();
        for (const Antenna& a : n.antennas) {
            ordered_json ja;
            ja["position"] = {a.position.x, a.position.y};
            ja["boresight_rad"] = a.boresight_rad;
            ja["beamwidth_w"] = a.beamwidth_w;
            jn["antennas"].push_back(std::move(ja));
        }
        doc["nodes"].push_back(std::move(jn));
    }
    doc["links"] = ordered_json::array();
    for (const Link& l : net.links) {
        ordered_json jl;
        jl["id"] = l.id;
        jl["source"] = l.source;
        jl["target"] = l.target;
        jl["source_antenna"] = l.source_antenna;
        jl["target_antenna"] = l.target_antenna;
        jl["frequency_hz"] = l.frequency_hz;
        jl["bandwidth_hz"] = l.bandwidth_hz;
        jl["tx_directivity"] = l.tx_directivity;
        jl["rx_directivity"] = l.rx_directivity;
        jl["max_power_dbm"] = watts_to_dbm(l.max_power_w);
        jl["noise_dbm"] = watts_to_dbm(l.noise_w);
        doc["links"].push_back(std::move(jl));
    }
    doc["red_edges"] = ordered_json::array();
    for (const InterferenceEdge& r : net.red_edges) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["base"] = r.base;
        jr["victim"] = r.victim;
        jr["victim_node"] = r.victim_node;
        doc["red_edges"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

Network load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return network_from_json(buf.str());
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string schedule_to_json(const Network& net, const QueueSchedule& q) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["num_slots"] = q.num_slots;
    doc["label"] = q.label;
    (void)net;
    return doc.dump(2) + "\n";
}

std::string schedule_to_csv(const Network& net, const QueueSchedule& q) {
    std::string out = "link,slot\n";
    for (const Link& l : net.links) {
        out += std::to_string(l.id);
        out += ',';
        out += std::to_string(q.label[l.id]);
        out += '\n';
    }
    return out;
}

std::string power_table_to_json(const Network& net, const QueueSchedule& q,
                                const PowerTable& table) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["num_slots"] = table.num_slots;
    doc["links"] = ordered_json::array();
    for (const Link& l : net.links) {
        ordered_json jl;
        jl["id"] = l.id;
        jl["slot"] = q.label[l.id];
        ordered_json powers = ordered_json::array();
        for (int j = 0; j < table.num_slots; ++j)
            powers.push_back(watts_to_dbm(table.at(l.id, j)));
        jl["power_dbm"] = std::move(powers);
        doc["links"].push_back(std::move(jl));
    }
    return doc.dump(2) + "\n";
}

std::string power_table_to_csv(const Network& net, const QueueSchedule& q,
                               const PowerTable& table) {
    std::string out = "link,priority_slot,slot,power_dbm\n";
    for (const Link& l : net.links)
        for (int j = 0; j < table.num_slots; ++j) {
            out += std::to_string(l.id);
            out += ',';
            out += std::to_string(q.label[l.id]);
            out += ',';
            out += std::to_string(j);
            out += ',';
            out += format_double(watts_to_dbm(table.at(l.id, j)));
            out += '\n';
        }
    return out;
}

std::string ratio_result_to_json(const RatioSearchResult& r) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["x_m"] = r.x_m;
    doc["y_m_bps"] = r.y_m;
    doc["depth_used"] = r.depth_used;
    doc["evaluations"] = r.evaluations;
    doc["samples"] = ordered_json::array();
    for (const RatioSample& s : r.samples) {
        ordered_json js;
        js["x"] = s.x;
        js["y_bps"] = s.y;
        doc["samples"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

std::string ratio_result_to_csv(const RatioSearchResult& r) {
    std::string out = "kind,x,y_bps\n";
    for (const RatioSample& s : r.samples) {
        out += "sample,";
        out += format_double(s.x);
        out += ',';
        out += format_double(s.y);
        out += '\n';
    }
    out += "optimum,";
    out += format_double(r.x_m);
    out += ',';
    out += format_double(r.y_m);
    out += '\n';
    return out;
}

std::string plan_to_json(const Network& net, const FrequencyPlan& plan) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["frequencies"] = plan.states.size();
    doc["assignments"] = plan.assignments;
    doc["profit_trace"] = ordered_json::array();
    for (const auto& [count, capacity] : plan.profit_trace) {
        ordered_json jt;
        jt["frequencies"] = count;
        jt["capacity_bps"] = capacity;
        doc["profit_trace"].push_back(std::move(jt));
    }
    doc["partitions"] = ordered_json::array();
    for (const SubgraphState& st : plan.states) {
        ordered_json jp;
        jp["members"] = st.members;
        jp["num_slots"] = st.schedule.num_slots;
        doc["partitions"].push_back(std::move(jp));
    }
    (void)net;
    return doc.dump(2) + "\n";
}

std::string plan_to_csv(const Network& net, const FrequencyPlan& plan) {
    std::string out = "link,frequency_index\n";
    for (const Link& l : net.links) {
        out += std::to_string(l.id);
        out += ',';
        out += std::to_string(plan.assignments[l.id]);
        out += '\n';
    }
    return out;
}

std::string violations_to_json(const std::vector<Violation>& v) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["violations"] = ordered_json::array();
    for (const Violation& x : v) {
        ordered_json jv;
        jv["entity"] = x.entity;
        jv["id"] = x.id;
        jv["rule"] = x.rule;
        doc["violations"].push_back(std::move(jv));
    }
    return doc.dump(2) + "\n";
}

std::string violations_to_csv(const std::vector<Violation>& v) {
    std::string out = "entity,id,rule\n";
    for (const Violation& x : v) {
        out += x.entity;
        out += ',';
        out += std::to_string(x.id);
        out += ",\"";
        out += x.rule;
        out += "\"\n";
    }
    return out;
}

} // namespace cci
