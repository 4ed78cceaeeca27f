// Copyright 2026 The lsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lsched/common.hpp"
#include "lsched/pauli.hpp"

namespace lsched {

Circuit circuit_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        throw InputError(std::string("product file is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) {
        throw InputError("product file must hold a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "version" && key != "num_qubits" && key != "products") {
            throw InputError("unknown field '" + key + "' in product file");
        }
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != 1) {
        throw InputError("product file must declare \"version\": 1");
    }
    if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_unsigned()) {
        throw InputError("product file needs a non-negative integer \"num_qubits\"");
    }
    if (!doc.contains("products") || !doc["products"].is_array()) {
        throw InputError("product file needs a \"products\" array");
    }

    Circuit c;
    c.num_qubits = doc["num_qubits"].get<std::size_t>();
    const auto &arr = doc["products"];
    c.products.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); i++) {
        if (!arr[i].is_string()) {
            throw InputError("product " + std::to_string(i) + " is not a string");
        }
        try {
            c.products.push_back(PauliProduct::parse(arr[i].get<std::string>(), i));
        } catch (const InputError &ex) {
            throw InputError("product " + std::to_string(i) + ": " + ex.what());
        }
    }
    c.validate();
    return c;
}

std::string circuit_to_json(const Circuit &circuit) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["num_qubits"] = circuit.num_qubits;
    auto products = nlohmann::ordered_json::array();
    for (const auto &p : circuit.products) {
        products.push_back(p.str());
    }
    doc["products"] = std::move(products);
    return doc.dump() + "\n";
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open product file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return circuit_from_json(ss.str());
}

void write_circuit_file(const std::string &path, const Circuit &circuit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write product file '" + path + "'");
    }
    out << circuit_to_json(circuit);
}

}  // namespace lsched
