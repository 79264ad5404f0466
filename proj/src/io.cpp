// Copyright 2026 The pmx Authors
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

#include "pmx/io.hpp"

#include <fstream>
#include <optional>

namespace pmx {

namespace {

const Json &require(const Json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

double number(const Json &v, const char *what) {
    if (!v.is_number()) throw FormatError(std::string(what) + ": expected a number");
    return v.get<double>();
}

Json vec_to_json(const Vec3 &v) { return Json::array({v[0], v[1], v[2]}); }

Json mat_to_json(const Mat3 &m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return rows;
}

Vec3 vec_from_json(const Json &v, const char *what) {
    if (!v.is_array() || v.size() != 3) throw FormatError(std::string(what) + ": expected 3 numbers");
    return Vec3(number(v[0], what), number(v[1], what), number(v[2], what));
}

Mat3 mat_from_json(const Json &v, const char *what) {
    if (!v.is_array() || v.size() != 3) throw FormatError(std::string(what) + ": expected a 3x3 array");
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.row(i) = vec_from_json(v[i], what).transpose();
    return m;
}

// A single 3-vector or one per input a.
std::array<Vec3, 2> per_input_vec(const Json &v, const char *what) {
    if (v.is_array() && v.size() == 2 && v[0].is_array()) return {vec_from_json(v[0], what), vec_from_json(v[1], what)};
    const Vec3 one = vec_from_json(v, what);
    return {one, one};
}

std::array<Mat3, 2> per_input_mat(const Json &v, const char *what) {
    if (v.is_array() && v.size() == 2 && v[0].is_array() && !v[0].empty() && v[0][0].is_array()) {
        return {mat_from_json(v[0], what), mat_from_json(v[1], what)};
    }
    const Mat3 one = mat_from_json(v, what);
    return {one, one};
}

Json table_to_json(const BooleanTable &t) {
    Json bits = Json::array();
    for (auto b : t.bits()) bits.push_back(static_cast<int>(b));
    return bits;
}

BooleanTable table_from_json(const Json &v, const char *what) {
    if (!v.is_array() || v.size() != 4) throw FormatError(std::string(what) + ": expected 4 bits");
    std::array<std::uint8_t, 4> bits{};
    for (size_t k = 0; k < 4; ++k) {
        if (!v[k].is_number_integer() || (v[k].get<int>() != 0 && v[k].get<int>() != 1)) {
            throw FormatError(std::string(what) + ": truth table entries must be 0 or 1");
        }
        bits[k] = static_cast<std::uint8_t>(v[k].get<int>());
    }
    return BooleanTable(bits);
}

MapMode mode_from_json(const Json &obj) {
    if (!obj.contains("mode")) return MapMode::MeasureReprepare;
    if (!obj["mode"].is_string()) throw FormatError("mode: expected a string");
    try {
        return parse_map_mode(obj["mode"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &v) {
    if (!v.is_array() || v.size() != 2) throw FormatError("complex entries must be [re, im]");
    return {number(v[0], "re"), number(v[1], "im")};
}

bool all_qubits(const SpaceLayout &layout) {
    for (const auto &leg : layout.legs()) {
        if (leg.dim != 2) return false;
    }
    return true;
}

}  // namespace

Json process_to_json(const ProcessMatrix &w) {
    Json doc;
    Json dims = Json::array();
    for (const auto &leg : w.layout().legs()) dims.push_back(leg.dim);
    doc["dims"] = dims;
    if (all_qubits(w.layout())) {
        Json terms = Json::array();
        for (const auto &term : hs_decompose(w.matrix(), w.layout())) {
            Json labels = Json::array();
            for (int i : term.index) labels.push_back(std::string(1, pauli_label(i)));
            terms.push_back({{"labels", labels}, {"coeff", term.coeff.real()}});
        }
        doc["pauli_terms"] = terms;
    } else {
        Json dense = Json::array();
        const auto &m = w.matrix();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) dense.push_back(complex_to_json(m(i, j)));
        }
        doc["dense"] = dense;
    }
    return doc;
}

ProcessMatrix process_from_json(const Json &doc) {
    const Json &dims = require(doc, "dims");
    if (!dims.is_array() || dims.size() != 4) throw FormatError("dims: expected four integers");
    std::vector<LegDim> legs;
    for (size_t k = 0; k < 4; ++k) {
        if (!dims[k].is_number_integer() || dims[k].get<int>() <= 0) throw FormatError("dims: expected positive integers");
        legs.push_back({kAllLegs[k], dims[k].get<int>()});
    }
    std::optional<SpaceLayout> layout;
    try {
        layout.emplace(legs);
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("dims: ") + e.what());
    }
    const int total = layout->total_dim();
    const bool has_terms = doc.contains("pauli_terms");
    const bool has_dense = doc.contains("dense");
    if (has_terms == has_dense) throw FormatError("exactly one of 'pauli_terms' and 'dense' is required");

    ComplexMatrix m = ComplexMatrix::Zero(total, total);
    if (has_terms) {
        if (!all_qubits(*layout)) throw FormatError("pauli_terms needs every leg to be a qubit");
        const Json &terms = doc["pauli_terms"];
        if (!terms.is_array()) throw FormatError("pauli_terms: expected a list");
        for (const auto &term : terms) {
            const Json &labels = require(term, "labels");
            if (!labels.is_array() || labels.size() != 4) throw FormatError("labels: expected four strings");
            std::string word;
            for (const auto &l : labels) {
                if (!l.is_string() || l.get<std::string>().size() != 1 ||
                    std::string("IXYZ").find(l.get<std::string>()[0]) == std::string::npos) {
                    throw FormatError("labels: entries must be one of I, X, Y, Z");
                }
                word += l.get<std::string>();
            }
            m += number(require(term, "coeff"), "coeff") * pauli_string(word);
        }
    } else {
        const Json &dense = doc["dense"];
        if (!dense.is_array() || dense.size() != static_cast<size_t>(total) * total) {
            throw FormatError("dense: expected " + std::to_string(total * total) + " entries");
        }
        for (int i = 0; i < total; ++i) {
            for (int j = 0; j < total; ++j) m(i, j) = complex_from_json(dense[static_cast<size_t>(i) * total + j]);
        }
    }
    return ProcessMatrix(std::move(m), *layout);
}

Json strategy_to_json(const StrategyPair &s) {
    Json alice;
    alice["mode"] = std::string(to_string(s.alice.mode));
    const bool per_input = s.alice.m[0] != s.alice.m[1] || s.alice.n[0] != s.alice.n[1] ||
                           (s.alice.mode == MapMode::Correlated && s.alice.T[0] != s.alice.T[1]);
    if (per_input) {
        alice["m"] = Json::array({vec_to_json(s.alice.m[0]), vec_to_json(s.alice.m[1])});
        alice["n"] = Json::array({vec_to_json(s.alice.n[0]), vec_to_json(s.alice.n[1])});
        if (s.alice.mode == MapMode::Correlated) {
            alice["T"] = Json::array({mat_to_json(s.alice.T[0]), mat_to_json(s.alice.T[1])});
        }
    } else {
        alice["m"] = vec_to_json(s.alice.m[0]);
        alice["n"] = vec_to_json(s.alice.n[0]);
        if (s.alice.mode == MapMode::Correlated) alice["T"] = mat_to_json(s.alice.T[0]);
    }
    alice["F"] = table_to_json(s.alice.F);

    Json bob;
    bob["mode"] = std::string(to_string(s.bob.mode));
    bob["r"] = vec_to_json(s.bob.r);
    bob["t"] = vec_to_json(s.bob.t);
    bob["o"] = vec_to_json(s.bob.o);
    if (s.bob.mode == MapMode::Correlated) bob["S"] = mat_to_json(s.bob.S);
    bob["G"] = table_to_json(s.bob.G);
    if (!s.bob.rho_b2.isApprox(ComplexMatrix::Identity(2, 2) * 0.5, 0.0)) {
        Json rho = Json::array();
        for (int i = 0; i < 2; ++i) {
            rho.push_back(Json::array({complex_to_json(s.bob.rho_b2(i, 0)), complex_to_json(s.bob.rho_b2(i, 1))}));
        }
        bob["rho_b2"] = rho;
    }
    return {{"alice", alice}, {"bob", bob}};
}

StrategyPair strategy_from_json(const Json &doc) {
    StrategyPair s;
    const Json &alice = require(doc, "alice");
    s.alice.mode = mode_from_json(alice);
    s.alice.m = per_input_vec(require(alice, "m"), "alice.m");
    s.alice.n = per_input_vec(require(alice, "n"), "alice.n");
    if (s.alice.mode == MapMode::Correlated) s.alice.T = per_input_mat(require(alice, "T"), "alice.T");
    s.alice.F = table_from_json(require(alice, "F"), "alice.F");

    const Json &bob = require(doc, "bob");
    s.bob.mode = mode_from_json(bob);
    s.bob.r = vec_from_json(require(bob, "r"), "bob.r");
    s.bob.t = vec_from_json(require(bob, "t"), "bob.t");
    s.bob.o = vec_from_json(require(bob, "o"), "bob.o");
    if (s.bob.mode == MapMode::Correlated) s.bob.S = mat_from_json(require(bob, "S"), "bob.S");
    s.bob.G = table_from_json(require(bob, "G"), "bob.G");
    if (bob.contains("rho_b2")) {
        const Json &rho = bob["rho_b2"];
        if (!rho.is_array() || rho.size() != 2) throw FormatError("bob.rho_b2: expected a 2x2 array");
        ComplexMatrix m(2, 2);
        for (int i = 0; i < 2; ++i) {
            if (!rho[i].is_array() || rho[i].size() != 2) throw FormatError("bob.rho_b2: expected a 2x2 array");
            for (int j = 0; j < 2; ++j) m(i, j) = complex_from_json(rho[i][j]);
        }
        s.bob.rho_b2 = m;
    }
    return s;
}

Json report_to_json(const ValidityReport &report) {
    Json forbidden = Json::array();
    for (const auto &term : report.forbidden_terms) {
        forbidden.push_back({{"type", term.type.name()}, {"index", term.index}, {"coeff", term.coeff}});
    }
    Json doc;
    doc["valid"] = report.valid();
    doc["psd"] = report.psd;
    doc["trace_ok"] = report.trace_ok;
    doc["min_eigenvalue"] = report.min_eigenvalue;
    doc["trace"] = report.trace;
    doc["forbidden_terms"] = forbidden;
    return doc;
}

Json distribution_to_json(const JointDistribution &p) {
    Json entries = Json::array();
    for (int bp = 0; bp < 2; ++bp) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int x = 0; x < 2; ++x) {
                    for (int y = 0; y < 2; ++y) {
                        entries.push_back({{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"bprime", bp}, {"p", p.at(x, y, a, b, bp)}});
                    }
                }
            }
        }
    }
    const GuessProbabilities g = guess_probabilities(p);
    Json doc;
    doc["distribution"] = entries;
    doc["alice_guesses_b"] = g.alice_guesses_b;
    doc["bob_guesses_a"] = g.bob_guesses_a;
    doc["success_probability"] = g.success();
    return doc;
}

Json optimization_to_json(const OptimizationResult &result) {
    Json doc;
    doc["best_value"] = result.best_value;
    doc["branch"] = std::string(to_string(result.branch));
    doc["F"] = table_to_json(BooleanTable::from_mask(result.f_mask));
    doc["G"] = table_to_json(BooleanTable::from_mask(result.g_mask));
    doc["best_restart"] = result.best_restart;
    doc["evaluations"] = result.evaluations;
    doc["restart_bests"] = result.restart_bests;
    doc["strategy"] = strategy_to_json(result.best);
    return doc;
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace pmx
