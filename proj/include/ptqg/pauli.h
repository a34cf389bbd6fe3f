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

#ifndef PTQG_PAULI_H
#define PTQG_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptqg {

/// Phaseless n-qubit Pauli operator stored as symplectic X/Z bit masks.
///
/// Qubit k carries X when only its x bit is set, Z when only its z bit is
/// set, and Y when both are. Bits at index >= n are always zero.
class PauliOp {
   public:
    PauliOp() = default;
    explicit PauliOp(size_t num_qubits);

    /// Parses "IXZY..." (one letter per qubit, index-ascending). '_' is
    /// accepted as an alias for 'I'.
    static PauliOp from_string(std::string_view text);
    static PauliOp single(size_t num_qubits, size_t qubit, char pauli);

    size_t num_qubits() const {
        return n_;
    }
    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    /// 'I', 'X', 'Y' or 'Z'.
    char at(size_t q) const;

    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    void flip_x(size_t q) {
        xs_[q >> 6] ^= uint64_t{1} << (q & 63);
    }
    void flip_z(size_t q) {
        zs_[q >> 6] ^= uint64_t{1} << (q & 63);
    }
    /// Sets qubit q to 'I', 'X', 'Y' or 'Z'.
    void set(size_t q, char pauli);

    bool is_identity() const;
    size_t weight() const;
    /// Indices of qubits carrying a non-identity factor.
    std::vector<size_t> support() const;
    std::string str() const;

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }

    PauliOp &operator*=(const PauliOp &other);
    bool operator==(const PauliOp &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// True iff the symplectic inner product of p and q is even.
bool commutes(const PauliOp &p, const PauliOp &q);

/// CZ(a,b) p CZ(a,b): X_a -> X_a Z_b, X_b -> Z_a X_b, Z unchanged.
PauliOp conjugate_cz(const PauliOp &p, size_t a, size_t b);

/// Product up to phase (component-wise XOR of the masks).
PauliOp pauli_mul(const PauliOp &p, const PauliOp &q);

}  // namespace ptqg

#endif
