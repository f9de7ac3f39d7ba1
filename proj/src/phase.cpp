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

#include "polysigma/phase.hpp"

#include <algorithm>
#include <string>

#include "polysigma/errors.hpp"

namespace polysigma {

namespace {

void require_nary(int n) {
  if (n < 3) throw DomainError("n-ary family needs n >= 3, got " + std::to_string(n));
}

void require_phase(int r, int q) {
  if (r < 0 || r >= q) {
    throw DomainError("phase index " + std::to_string(r) + " outside 0.." +
                      std::to_string(q - 1));
  }
}

void require_block(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw DomainError("block position " + std::to_string(k) + " outside 1.." +
                      std::to_string(n - 1));
  }
}

void require_sigma(Sigma j) { to_sigma(index(j)); }

template <typename Label>
void require_common(std::span<const Label> labels) {
  if (labels.empty()) throw ArityError("product of no factors");
  const int q = labels.front().q;
  const int n = labels.front().n;
  for (const auto& a : labels) {
    if (a.q != q || a.n != n) {
      throw DomainError("operands disagree on (n, q)");
    }
  }
  if (!is_valid_factor_count(labels.size(), n)) {
    throw ArityError("arity " + std::to_string(n) +
                     " admits l(n-1)+1 factors, got " +
                     std::to_string(labels.size()));
  }
}

std::string join_sigmas(const std::vector<Sigma>& js) {
  std::string s;
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(index(js[i]));
  }
  return s;
}

std::string join_ints(const std::vector<int>& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rs[i]);
  }
  return s;
}

}  // namespace

bool is_q12(int q) {
  return std::find(kQ12.begin(), kQ12.end(), q) != kQ12.end();
}

PhaseModulus::PhaseModulus(int q) : q_(q) {
  if (!is_q12(q)) {
    throw DomainError("phase modulus " + std::to_string(q) +
                      " is not a multiple of 4 dividing 360");
  }
}

int PhaseModulus::reduce(long long r) const {
  const long long m = r % q_;
  return static_cast<int>(m < 0 ? m + q_ : m);
}

LeviCivitaPhase levi_civita_phase(int k, int l, int m, int q) {
  const PhaseModulus mod(q);
  const int eps = levi_civita(k, l, m);
  if (eps == 0) return {0, 0};
  return {1, mod.reduce(1LL * mod.quarter() * (1 - eps))};
}

void validate(const PhasedSigmaLabel& a) {
  PhaseModulus{a.q};
  require_sigma(a.j);
  require_phase(a.r, a.q);
}

void validate(const PhasedElementaryLabel& a) {
  PhaseModulus{a.q};
  require_nary(a.n);
  if (a.zero) return;
  require_sigma(a.j);
  require_block(a.k, a.n);
  require_phase(a.r, a.q);
}

void validate(const PhasedFullLabel& a) {
  PhaseModulus{a.q};
  require_nary(a.n);
  require_sigma(a.j);
  require_phase(a.r, a.q);
}

void validate(const PhasedHetLabel& a) {
  PhaseModulus{a.q};
  require_nary(a.n);
  const std::size_t m = static_cast<std::size_t>(a.n - 1);
  if (a.js.size() != m || a.rs.size() != m) {
    throw DomainError("heterogeneous label needs " + std::to_string(m) +
                      " (j, r) pairs");
  }
  for (Sigma j : a.js) require_sigma(j);
  for (int r : a.rs) require_phase(r, a.q);
}

PhasedSigmaLabel pauli_mul(const PhasedSigmaLabel& a, const PhasedSigmaLabel& b) {
  if (a.q != b.q) throw DomainError("pauli_mul: phase moduli differ");
  const PhaseModulus mod(a.q);
  const int r = mod.add(a.r, b.r);
  const int k = index(a.j);
  const int l = index(b.j);
  if (k == 0) return {a.q, b.j, r};
  if (l == 0) return {a.q, a.j, r};
  if (k == l) return {a.q, Sigma::s0, r};
  const int m = 6 - k - l;
  const LeviCivitaPhase e = levi_civita_phase(k, l, m, a.q);
  return {a.q, to_sigma(m), mod.add(mod.add(r, mod.quarter()), e.exponent)};
}

PhasedSigmaLabel pauli_identity(int q) {
  PhaseModulus{q};
  return {q, Sigma::s0, 0};
}

PhasedSigmaLabel pauli_inverse(const PhasedSigmaLabel& a) {
  const PhaseModulus mod(a.q);
  return {a.q, a.j, mod.negate(a.r)};
}

PhasedElementaryLabel elementary_nary_mul(
    std::span<const PhasedElementaryLabel> labels) {
  require_common(labels);
  const int q = labels.front().q;
  const int n = labels.front().n;
  const PhaseModulus mod(q);
  const int m = n - 1;
  SignedSigma acc;
  long long phase = 0;
  bool zero = false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& a = labels[i];
    if (a.zero) return PhasedElementaryLabel::make_zero(q, n);
    if (i > 0 && a.k != labels[i - 1].k % m + 1) zero = true;
    acc = multiply(acc, a.j);
    phase += a.r;
  }
  if (zero) return PhasedElementaryLabel::make_zero(q, n);
  return {q, n, acc.sigma, labels.front().k,
          mod.add(mod.reduce(phase), mod.from_quarter_turns(acc.quarter_turns)),
          false};
}

PhasedFullLabel full_nary_mul(std::span<const PhasedFullLabel> labels) {
  require_common(labels);
  const int q = labels.front().q;
  const PhaseModulus mod(q);
  SignedSigma acc;
  long long phase = 0;
  for (const auto& a : labels) {
    acc = multiply(acc, a.j);
    phase += a.r;
  }
  return {q, labels.front().n, acc.sigma,
          mod.add(mod.reduce(phase), mod.from_quarter_turns(acc.quarter_turns))};
}

PhasedFullLabel full_querelement(const PhasedFullLabel& a) {
  validate(a);
  const PhaseModulus mod(a.q);
  const Sigma j = a.n % 2 == 0 ? Sigma::s0 : a.j;
  return {a.q, a.n, j, mod.reduce(1LL * (2 - a.n) * a.r)};
}

PhasedHetLabel het_nary_mul(std::span<const PhasedHetLabel> labels) {
  require_common(labels);
  const int q = labels.front().q;
  const int n = labels.front().n;
  const PhaseModulus mod(q);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  for (const auto& a : labels) {
    if (a.js.size() != m || a.rs.size() != m) {
      throw DomainError("heterogeneous label has the wrong block count");
    }
  }
  PhasedHetLabel out{q, n, std::vector<Sigma>(m), std::vector<int>(m)};
  for (std::size_t k = 0; k < m; ++k) {
    SignedSigma acc;
    long long phase = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::size_t slot = (k + i) % m;
      acc = multiply(acc, labels[i].js[slot]);
      phase += labels[i].rs[slot];
    }
    out.js[k] = acc.sigma;
    out.rs[k] = mod.add(mod.reduce(phase), mod.from_quarter_turns(acc.quarter_turns));
  }
  return out;
}

PhasedHetLabel het_querelement(const PhasedHetLabel& a) {
  validate(a);
  if (a.n != 3) {
    throw DomainError("the slot-swap querelement is defined for arity 3 only");
  }
  const PhaseModulus mod(a.q);
  return {a.q, a.n, {a.js[1], a.js[0]}, {mod.negate(a.rs[1]), mod.negate(a.rs[0])}};
}

PhasedHetLabel het_querelement_blockwise(const PhasedHetLabel& a) {
  validate(a);
  const PhaseModulus mod(a.q);
  const std::size_t m = static_cast<std::size_t>(a.n - 1);
  PhasedHetLabel out{a.q, a.n, std::vector<Sigma>(m), std::vector<int>(m)};
  for (std::size_t k = 0; k < m; ++k) {
    SignedSigma acc;
    long long phase = 0;
    for (std::size_t s = 1; s + 1 < static_cast<std::size_t>(a.n); ++s) {
      const std::size_t slot = (k + s) % m;
      acc = multiply(acc, a.js[slot]);
      phase += a.rs[slot];
    }
    // (i^t w^R sigma_c)^{-1} = i^{-t} w^{-R} sigma_c
    out.js[k] = acc.sigma;
    out.rs[k] = mod.negate(
        mod.add(mod.reduce(phase), mod.from_quarter_turns(acc.quarter_turns)));
  }
  return out;
}

std::vector<PhasedSigmaLabel> enumerate_pauli(int q) {
  PhaseModulus{q};
  std::vector<PhasedSigmaLabel> out;
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < q; ++r) out.push_back({q, to_sigma(j), r});
  return out;
}

std::vector<PhasedElementaryLabel> enumerate_elementary(int n, int q) {
  PhaseModulus{q};
  require_nary(n);
  std::vector<PhasedElementaryLabel> out;
  for (int k = 1; k <= n - 1; ++k)
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < q; ++r) out.push_back({q, n, to_sigma(j), k, r, false});
  out.push_back(PhasedElementaryLabel::make_zero(q, n));
  return out;
}

std::vector<PhasedFullLabel> enumerate_full(int n, int q) {
  PhaseModulus{q};
  require_nary(n);
  std::vector<PhasedFullLabel> out;
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < q; ++r) out.push_back({q, n, to_sigma(j), r});
  return out;
}

std::vector<PhasedHetLabel> enumerate_het(int n, int q) {
  PhaseModulus{q};
  require_nary(n);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t radix = 4 * static_cast<std::size_t>(q);
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= radix;
  std::vector<PhasedHetLabel> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    PhasedHetLabel a{q, n, std::vector<Sigma>(m), std::vector<int>(m)};
    std::size_t rest = code;
    for (std::size_t k = m; k-- > 0;) {
      const std::size_t digit = rest % radix;
      rest /= radix;
      a.js[k] = static_cast<Sigma>(digit / static_cast<std::size_t>(q));
      a.rs[k] = static_cast<int>(digit % static_cast<std::size_t>(q));
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::size_t label_index(const PhasedSigmaLabel& a) {
  return static_cast<std::size_t>(index(a.j) * a.q + a.r);
}

std::size_t label_index(const PhasedElementaryLabel& a) {
  const std::size_t per_block = 4 * static_cast<std::size_t>(a.q);
  if (a.zero) return per_block * static_cast<std::size_t>(a.n - 1);
  return static_cast<std::size_t>(a.k - 1) * per_block +
         static_cast<std::size_t>(index(a.j) * a.q + a.r);
}

std::size_t label_index(const PhasedFullLabel& a) {
  return static_cast<std::size_t>(index(a.j) * a.q + a.r);
}

std::size_t label_index(const PhasedHetLabel& a) {
  const std::size_t radix = 4 * static_cast<std::size_t>(a.q);
  std::size_t code = 0;
  for (std::size_t k = 0; k < a.js.size(); ++k) {
    code = code * radix + static_cast<std::size_t>(index(a.js[k]) * a.q + a.rs[k]);
  }
  return code;
}

std::string to_string(const PhasedSigmaLabel& a) {
  return "s" + std::to_string(index(a.j)) + "(" + std::to_string(a.r) + ")";
}

std::string to_string(const PhasedElementaryLabel& a) {
  if (a.zero) return "Z";
  return "S" + std::to_string(index(a.j)) + "@" + std::to_string(a.k) + "(" +
         std::to_string(a.r) + ")";
}

std::string to_string(const PhasedFullLabel& a) {
  return "S" + std::to_string(index(a.j)) + "(" + std::to_string(a.r) + ")";
}

std::string to_string(const PhasedHetLabel& a) {
  return "H[" + join_sigmas(a.js) + "](" + join_ints(a.rs) + ")";
}

}  // namespace polysigma
