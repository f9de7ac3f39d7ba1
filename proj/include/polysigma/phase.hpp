// Copyright 2026 The polysigma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polysigma/sigma.hpp"

namespace polysigma {

/// The divisors of 360 that are multiples of 4.
inline constexpr std::array<int, 12> kQ12{4,  8,  12, 20,  24,  36,
                                          40, 60, 72, 120, 180, 360};

bool is_q12(int q);

/// A phase modulus from kQ12. Phases are integers r mod q standing for
/// exp(2 pi i r / q).
class PhaseModulus {
 public:
  /// Throws DomainError when q is not in kQ12.
  explicit PhaseModulus(int q);

  int value() const { return q_; }
  /// Phase units per quarter turn.
  int quarter() const { return q_ / 4; }
  int reduce(long long r) const;
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int negate(int r) const { return reduce(-static_cast<long long>(r)); }
  int from_quarter_turns(int turns) const { return reduce(1LL * turns * quarter()); }

 private:
  int q_;
};

/// |epsilon_klm| and the phase exp(i pi/2 (1 - epsilon)) as (q/4)(1 - epsilon)
/// units. The exponent is 0 when the magnitude is 0.
struct LeviCivitaPhase {
  int magnitude = 0;
  int exponent = 0;

  friend bool operator==(const LeviCivitaPhase&, const LeviCivitaPhase&) = default;
};

LeviCivitaPhase levi_civita_phase(int k, int l, int m, int q);

/// exp(2 pi i r / q) sigma_j.
struct PhasedSigmaLabel {
  int q = 4;
  Sigma j = Sigma::s0;
  int r = 0;

  friend bool operator==(const PhasedSigmaLabel&,
                         const PhasedSigmaLabel&) = default;
};

/// exp(2 pi i r / q) Sigma_j^(k), or the adjoined zero.
struct PhasedElementaryLabel {
  int q = 4;
  int n = 3;
  Sigma j = Sigma::s0;
  int k = 1;
  int r = 0;
  bool zero = false;

  static PhasedElementaryLabel make_zero(int q, int n) {
    return {q, n, Sigma::s0, 1, 0, true};
  }

  friend bool operator==(const PhasedElementaryLabel&,
                         const PhasedElementaryLabel&) = default;
};

/// exp(2 pi i r / q) Sigma_j.
struct PhasedFullLabel {
  int q = 4;
  int n = 3;
  Sigma j = Sigma::s0;
  int r = 0;

  friend bool operator==(const PhasedFullLabel&,
                         const PhasedFullLabel&) = default;
};

/// Block k is exp(2 pi i r_k / q) sigma_{j_k}.
struct PhasedHetLabel {
  int q = 4;
  int n = 3;
  std::vector<Sigma> js;
  std::vector<int> rs;

  friend bool operator==(const PhasedHetLabel&, const PhasedHetLabel&) = default;
};

/// Validation: q in kQ12, n >= 2 (n >= 3 for the n-ary families), indices in
/// range, 0 <= r < q. Each throws DomainError.
void validate(const PhasedSigmaLabel& a);
void validate(const PhasedElementaryLabel& a);
void validate(const PhasedFullLabel& a);
void validate(const PhasedHetLabel& a);

/// Product of two phase-shifted Pauli matrices, evaluated term by term as
///   delta_kl s0(r_k + r_l) + |eps_klm| s_m(r_k + r_l + q/4 + (q/4)(1 - eps)),
/// with sigma_0 factors contributing their phase only.
PhasedSigmaLabel pauli_mul(const PhasedSigmaLabel& a, const PhasedSigmaLabel& b);
/// sigma_0(0).
PhasedSigmaLabel pauli_identity(int q);
PhasedSigmaLabel pauli_inverse(const PhasedSigmaLabel& a);

/// n-ary product over l(n-1)+1 labels. Zero absorbs; otherwise the block
/// positions must chain cyclically or the result is zero.
PhasedElementaryLabel elementary_nary_mul(
    std::span<const PhasedElementaryLabel> labels);

PhasedFullLabel full_nary_mul(std::span<const PhasedFullLabel> labels);

/// Phase (2 - n) r and sigma part Sigma_0 (n even) or Sigma_j (n odd).
PhasedFullLabel full_querelement(const PhasedFullLabel& a);

PhasedHetLabel het_nary_mul(std::span<const PhasedHetLabel> labels);

/// Arity 3 only: swap the two (j, r) slots and negate the phases. Throws
/// DomainError for other arities.
PhasedHetLabel het_querelement(const PhasedHetLabel& a);
/// Any arity: block k is the inverse of blocks k+1 .. k+n-2, reduced
/// symbolically.
PhasedHetLabel het_querelement_blockwise(const PhasedHetLabel& a);

std::vector<PhasedSigmaLabel> enumerate_pauli(int q);
/// Nonzero labels ordered by (k, j, r), then Zero last.
std::vector<PhasedElementaryLabel> enumerate_elementary(int n, int q);
std::vector<PhasedFullLabel> enumerate_full(int n, int q);
/// Mixed radix over blocks, digit j_k q + r_k, first block most significant.
std::vector<PhasedHetLabel> enumerate_het(int n, int q);

/// Positions in the matching enumerate_* order.
std::size_t label_index(const PhasedSigmaLabel& a);
std::size_t label_index(const PhasedElementaryLabel& a);
std::size_t label_index(const PhasedFullLabel& a);
std::size_t label_index(const PhasedHetLabel& a);

std::string to_string(const PhasedSigmaLabel& a);
std::string to_string(const PhasedElementaryLabel& a);
std::string to_string(const PhasedFullLabel& a);
std::string to_string(const PhasedHetLabel& a);

}  // namespace polysigma
