// Copyright 2026 The ptqg Authors
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

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ptqg/circuit.h"
#include "ptqg/errors.h"

namespace ptqg {

namespace {

std::string paulis_to_terms(const PauliOp &p) {
    std::string out;
    for (size_t q : p.support()) {
        if (!out.empty()) {
            out += " | ";
        }
        out += p.at(q);
        out += ' ';
        out += std::to_string(q);
    }
    return out;
}

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string &why) {
    throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + why);
}

uint64_t parse_index(const std::string &w, size_t line_no) {
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line_no, "expected a non-negative integer, got '" + w + "'");
    }
    return std::stoull(w);
}

// Parses "Z 3 | X 4 ..." starting at words[from].
PauliOp parse_terms(const std::vector<std::string> &words, size_t from, size_t n, size_t line_no) {
    PauliOp p(n);
    size_t k = from;
    while (k < words.size()) {
        if (k + 1 >= words.size() || words[k].size() != 1) {
            parse_fail(line_no, "malformed Pauli term list");
        }
        uint64_t q = parse_index(words[k + 1], line_no);
        if (q >= n) {
            parse_fail(line_no, "qubit " + words[k + 1] + " out of range");
        }
        char letter = words[k][0];
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            parse_fail(line_no, "unknown Pauli '" + words[k] + "'");
        }
        PauliOp term(n);
        term.set(q, letter);
        p *= term;
        k += 2;
        if (k < words.size()) {
            if (words[k] != "|") {
                parse_fail(line_no, "expected '|' between Pauli terms");
            }
            k++;
            if (k == words.size()) {
                parse_fail(line_no, "dangling '|'");
            }
        }
    }
    return p;
}

}  // namespace

std::string dump_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "QUBITS " << c.num_qubits() << "\n";
    for (const CircuitEvent &ev : c.events()) {
        switch (ev.kind) {
            case EventKind::kPrepPlus:
                out << "P " << ev.a << "\n";
                break;
            case EventKind::kCZ:
                out << "CZ " << ev.a << " " << ev.b << (ev.succeeded ? " ok" : " fail") << "\n";
                break;
            case EventKind::kMeasX:
                out << "MX " << ev.a << "\n";
                break;
            case EventKind::kMeasZ:
                out << "MZ " << ev.a << "\n";
                break;
        }
    }
    for (uint32_t r : c.roots()) {
        out << "ROOT " << r << "\n";
    }
    for (const CorrectionRule &rule : c.rules()) {
        out << (rule.kind == RuleKind::kParity ? "CORR" : "VOTE");
        for (size_t m : rule.measurements) {
            out << " " << m;
        }
        out << " -> " << paulis_to_terms(rule.byproduct) << "\n";
    }
    for (const PauliOp &t : c.targets()) {
        out << "TARGET " << paulis_to_terms(t) << "\n";
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    std::optional<CircuitBuilder> builder;
    while (std::getline(in, line)) {
        line_no++;
        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#') {
            continue;
        }
        const std::string &head = words[0];
        if (head == "QUBITS") {
            if (builder || words.size() != 2) {
                parse_fail(line_no, "QUBITS must appear once, first, with one argument");
            }
            builder.emplace(parse_index(words[1], line_no));
            continue;
        }
        if (!builder) {
            parse_fail(line_no, "missing QUBITS header");
        }
        size_t n = builder->num_qubits();
        auto qubit = [&](size_t k) {
            if (k >= words.size()) {
                parse_fail(line_no, "missing qubit index");
            }
            uint64_t q = parse_index(words[k], line_no);
            if (q >= n) {
                parse_fail(line_no, "qubit " + words[k] + " out of range");
            }
            return static_cast<uint32_t>(q);
        };
        auto expect_size = [&](size_t count) {
            if (words.size() != count) {
                parse_fail(line_no, "wrong number of fields for " + head);
            }
        };
        if (head == "P") {
            expect_size(2);
            builder->prep_plus(qubit(1));
        } else if (head == "CZ") {
            expect_size(4);
            if (words[3] != "ok" && words[3] != "fail") {
                parse_fail(line_no, "CZ status must be ok or fail");
            }
            builder->cz(qubit(1), qubit(2), words[3] == "ok");
        } else if (head == "MX") {
            expect_size(2);
            builder->measure_x(qubit(1));
        } else if (head == "MZ") {
            expect_size(2);
            builder->measure_z(qubit(1));
        } else if (head == "ROOT") {
            expect_size(2);
            builder->mark_root(qubit(1));
        } else if (head == "CORR" || head == "VOTE") {
            size_t arrow = 1;
            while (arrow < words.size() && words[arrow] != "->") {
                arrow++;
            }
            if (arrow == words.size() || arrow == 1) {
                parse_fail(line_no, head + " needs 'm... -> terms'");
            }
            std::vector<size_t> meas;
            for (size_t k = 1; k < arrow; k++) {
                meas.push_back(parse_index(words[k], line_no));
            }
            PauliOp byproduct = parse_terms(words, arrow + 1, n, line_no);
            if (head == "CORR") {
                if (meas.size() != 1) {
                    parse_fail(line_no, "CORR reads exactly one measurement");
                }
                builder->add_parity_rule(meas[0], std::move(byproduct));
            } else {
                builder->add_majority_rule(std::move(meas), std::move(byproduct));
            }
        } else if (head == "TARGET") {
            builder->add_target(parse_terms(words, 1, n, line_no));
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!builder) {
        throw std::invalid_argument("circuit text has no QUBITS header");
    }
    return std::move(*builder).build();
}

}  // namespace ptqg
