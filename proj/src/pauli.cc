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

#include "ptqg/pauli.h"

#include <bit>
#include <stdexcept>

namespace ptqg {

namespace {

size_t num_words(size_t n) {
    return (n + 63) / 64;
}

void check_same_size(const PauliOp &p, const PauliOp &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
}

}  // namespace

PauliOp::PauliOp(size_t num_qubits) : n_(num_qubits), xs_(num_words(num_qubits)), zs_(num_words(num_qubits)) {
}

PauliOp PauliOp::from_string(std::string_view text) {
    PauliOp result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        result.set(k, text[k] == '_' ? 'I' : text[k]);
    }
    return result;
}

PauliOp PauliOp::single(size_t num_qubits, size_t qubit, char pauli) {
    if (qubit >= num_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range");
    }
    PauliOp result(num_qubits);
    result.set(qubit, pauli);
    return result;
}

char PauliOp::at(size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[int(x(q)) | (int(z(q)) << 1)];
}

void PauliOp::set_x(size_t q, bool v) {
    if (x(q) != v) {
        flip_x(q);
    }
}

void PauliOp::set_z(size_t q, bool v) {
    if (z(q) != v) {
        flip_z(q);
    }
}

void PauliOp::set(size_t q, char pauli) {
    if (q >= n_) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
    switch (pauli) {
        case 'I':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + pauli + "'");
    }
}

bool PauliOp::is_identity() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

size_t PauliOp::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

std::vector<size_t> PauliOp::support() const {
    std::vector<size_t> result;
    for (size_t k = 0; k < xs_.size(); k++) {
        uint64_t w = xs_[k] | zs_[k];
        while (w) {
            result.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

std::string PauliOp::str() const {
    std::string result(n_, 'I');
    for (size_t q = 0; q < n_; q++) {
        result[q] = at(q);
    }
    return result;
}

PauliOp &PauliOp::operator*=(const PauliOp &other) {
    check_same_size(*this, other);
    for (size_t k = 0; k < xs_.size(); k++) {
        xs_[k] ^= other.xs_[k];
        zs_[k] ^= other.zs_[k];
    }
    return *this;
}

bool commutes(const PauliOp &p, const PauliOp &q) {
    check_same_size(p, q);
    auto px = p.x_words(), pz = p.z_words(), qx = q.x_words(), qz = q.z_words();
    uint64_t parity = 0;
    for (size_t k = 0; k < px.size(); k++) {
        parity ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
    }
    return (std::popcount(parity) & 1) == 0;
}

PauliOp conjugate_cz(const PauliOp &p, size_t a, size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits, got " + std::to_string(a) + " twice");
    }
    if (a >= p.num_qubits() || b >= p.num_qubits()) {
        throw std::invalid_argument("CZ qubit out of range");
    }
    PauliOp result = p;
    if (p.x(a)) {
        result.flip_z(b);
    }
    if (p.x(b)) {
        result.flip_z(a);
    }
    return result;
}

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q) {
    PauliOp result = p;
    result *= q;
    return result;
}

}  // namespace ptqg
