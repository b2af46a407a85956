#include "tenskit/io.hpp"

#include "tenskit/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

namespace tenskit {

namespace {

Scalar entry_scalar(const nlohmann::json& e)
{
    if (e.is_number_integer())
        return Scalar(e.get<long long>());
    if (e.is_string()) {
        const std::string s = e.get<std::string>();
        try {
            return scalar_from_string(s);
        } catch (const Error&) {
            fail_usage("malformed entry '" + s + "'");
        }
    }
    fail_usage("entries must be integers or rational strings");
}

IndexLabel label_from_json(const nlohmann::json& e)
{
    if (!e.is_string())
        fail_usage("index labels must be strings");
    const std::string s = e.get<std::string>();
    try {
        return IndexLabel::parse(s);
    } catch (const Error&) {
        fail_usage("malformed index label '" + s + "'");
    }
}

int int_field(const nlohmann::json& j, const char* key, int lo)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        fail_usage(std::string("missing or non-integer field \"") + key + "\"");
    const int v = j[key].get<int>();
    if (v < lo)
        fail_usage(std::string("field \"") + key + "\" must be at least " + std::to_string(lo));
    return v;
}

std::vector<Scalar> entries_field(const nlohmann::json& j, std::size_t want)
{
    if (!j.contains("entries") || !j["entries"].is_array())
        fail_usage("missing or non-array field \"entries\"");
    const auto& arr = j["entries"];
    if (arr.size() != want)
        fail_usage("expected " + std::to_string(want) + " entries, found " +
                   std::to_string(arr.size()));
    std::vector<Scalar> out;
    out.reserve(want);
    for (const auto& e : arr)
        out.push_back(entry_scalar(e));
    return out;
}

std::vector<IndexLabel> labels_field(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array())
        fail_usage(std::string("missing or non-array field \"") + key + "\"");
    std::vector<IndexLabel> out;
    for (const auto& e : j[key])
        out.push_back(label_from_json(e));
    return out;
}

nlohmann::ordered_json entries_json(const Array& a)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(scalar_to_string(a.flat(i)));
    return out;
}

Array fill_array(int dim, Valence v, const std::vector<Scalar>& entries)
{
    Array out(dim, v);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.flat(i) = entries[i];
    return out;
}

void check_role(const nlohmann::json& j, const char* want)
{
    if (!j.contains("role"))
        return;
    if (!j["role"].is_string() || j["role"].get<std::string>() != want)
        fail_usage(std::string("file does not hold a ") + want + " (role \"" +
                   (j["role"].is_string() ? j["role"].get<std::string>() : "?") + "\")");
}

} // namespace

nlohmann::ordered_json array_to_json(const Array& a)
{
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    j["subs"] = a.valence().subs;
    j["supers"] = a.valence().supers;
    j["entries"] = entries_json(a);
    return j;
}

Array array_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        fail_usage("expected a JSON object");
    const int dim = int_field(j, "dim", 1);
    const int subs = int_field(j, "subs", 0);
    const int supers = int_field(j, "supers", 0);
    std::size_t want = 1;
    for (int i = 0; i < subs + supers; ++i)
        want *= static_cast<std::size_t>(dim);
    return fill_array(dim, Valence{subs, supers}, entries_field(j, want));
}

nlohmann::ordered_json tensor_to_json(const TensorMap& t, const std::string& name)
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["dim"] = t.dim();
    nlohmann::ordered_json sub = nlohmann::ordered_json::array();
    for (const auto& l : t.subs())
        sub.push_back(l.str());
    nlohmann::ordered_json sup = nlohmann::ordered_json::array();
    for (const auto& l : t.supers())
        sup.push_back(l.str());
    j["sub"] = sub;
    j["super"] = sup;
    j["basis"] = t.basis();
    j["entries"] = entries_json(t.coeffs());
    return j;
}

TensorMap tensor_from_json(const nlohmann::json& j, std::string* nameOut)
{
    if (!j.is_object())
        fail_usage("expected a JSON object");
    if (j.contains("kind")) {
        if (j["kind"].is_string() && j["kind"].get<std::string>() == "bilateral")
            fail_usage("file holds a bilateral tensor, not a tensor map");
        fail_usage("unknown \"kind\" field");
    }
    const int dim = int_field(j, "dim", 1);
    const auto subs = labels_field(j, "sub");
    const auto supers = labels_field(j, "super");
    std::string basis = "e";
    if (j.contains("basis")) {
        if (!j["basis"].is_string())
            fail_usage("field \"basis\" must be a string");
        basis = j["basis"].get<std::string>();
    }
    if (nameOut) {
        *nameOut = "";
        if (j.contains("name")) {
            if (!j["name"].is_string())
                fail_usage("field \"name\" must be a string");
            *nameOut = j["name"].get<std::string>();
        }
    }
    std::size_t want = 1;
    for (std::size_t i = 0; i < subs.size() + supers.size(); ++i)
        want *= static_cast<std::size_t>(dim);
    Array coeffs = fill_array(
        dim, Valence{static_cast<int>(subs.size()), static_cast<int>(supers.size())},
        entries_field(j, want));
    return TensorMap(dim, subs, supers, std::move(coeffs), basis);
}

nlohmann::ordered_json bilateral_to_json(const BilateralTensor& b, const std::string& name)
{
    nlohmann::ordered_json j = tensor_to_json(lambda_B(b), name);
    nlohmann::ordered_json out;
    out["name"] = j["name"];
    out["kind"] = "bilateral";
    out["dim"] = j["dim"];
    out["sub"] = j["sub"];
    out["super"] = j["super"];
    out["basis"] = j["basis"];
    out["entries"] = j["entries"];
    return out;
}

BilateralTensor bilateral_from_json(const nlohmann::json& j, std::string* nameOut)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
        j["kind"].get<std::string>() != "bilateral")
        fail_usage("expected a bilateral tensor object (\"kind\": \"bilateral\")");
    nlohmann::json copy = j;
    copy.erase("kind");
    return lambda_B_inv(tensor_from_json(copy, nameOut));
}

nlohmann::json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail_io("cannot read '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail_usage("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j)
{
    std::ofstream out(path);
    if (!out)
        fail_io("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
    if (!out)
        fail_io("write to '" + path + "' failed");
}

Array load_array_file(const std::string& path)
{
    return array_from_json(load_json_file(path));
}

Metric load_metric_file(const std::string& path)
{
    const nlohmann::json j = load_json_file(path);
    check_role(j, "metric");
    return Metric(array_from_json(j));
}

BasisChange load_change_file(const std::string& path)
{
    const nlohmann::json j = load_json_file(path);
    check_role(j, "basis_change");
    std::string from, to;
    if (j.contains("from")) {
        if (!j["from"].is_string())
            fail_usage("field \"from\" must be a string");
        from = j["from"].get<std::string>();
    }
    if (j.contains("to")) {
        if (!j["to"].is_string())
            fail_usage("field \"to\" must be a string");
        to = j["to"].get<std::string>();
    }
    return BasisChange(array_from_json(j), from, to);
}

TensorMap load_tensor_file(const std::string& path, std::string* nameOut)
{
    return tensor_from_json(load_json_file(path), nameOut);
}

Env load_env(const std::string& path)
{
    namespace fs = std::filesystem;
    if (!fs::exists(path))
        fail_io("environment path '" + path + "' does not exist");

    Env out;
    std::map<std::string, bool> standaloneRank;

    auto insert = [&](const std::string& name, TensorMap t, bool standalone,
                      const std::string& file) {
        if (name.empty())
            fail_usage("tensor in '" + file + "' has no \"name\"");
        auto it = out.find(name);
        if (it == out.end()) {
            out.emplace(name, std::move(t));
            standaloneRank[name] = standalone;
            return;
        }
        const bool keepNew = standalone || !standaloneRank[name];
        std::cerr << "warning: duplicate tensor '" << name << "' in '" << file << "' "
                  << (keepNew ? "replaces the earlier binding" : "ignored: a standalone file wins")
                  << "\n";
        if (keepNew) {
            it->second = std::move(t);
            standaloneRank[name] = standalone;
        }
    };

    auto load_one = [&](const std::string& file) {
        const nlohmann::json j = load_json_file(file);
        if (j.is_object() && j.contains("tensors")) {
            if (!j["tensors"].is_array())
                fail_usage("field \"tensors\" in '" + file + "' must be an array");
            for (const auto& el : j["tensors"]) {
                std::string name;
                TensorMap t = tensor_from_json(el, &name);
                insert(name, std::move(t), false, file);
            }
            return;
        }
        std::string name;
        TensorMap t = tensor_from_json(j, &name);
        insert(name, std::move(t), true, file);
    };

    if (fs::is_directory(path)) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            load_one(f);
    } else {
        load_one(path);
    }
    return out;
}

} // namespace tenskit
