// Copyright 2026 The Authors.
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


// One line per acceptance criterion, PASS or FAIL, with exact arithmetic
// throughout. The exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "lagmat/lagmat.hpp"
#include "lagmat/pfaffian_oracle.hpp"

namespace lagmat {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

std::vector<ElementSet> random_subfamily(Rng& rng,
                                         const std::vector<ElementSet>& sets) {
  std::vector<ElementSet> v;
  while (v.empty()) {
    for (const auto& s : sets) {
      if (rng() % 2 == 0) v.push_back(s);
    }
  }
  return v;
}

std::vector<BasisCollection> orthogonal_matroids(int n) {
  const auto sets = admissible_sets(n, n);
  std::vector<BasisCollection> out;
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << sets.size()); ++c) {
    std::vector<ElementSet> v;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((c >> i) & 1U) v.push_back(sets[i]);
    }
    BasisCollection b(n, n, std::move(v));
    if (is_orthogonal_matroid(b).holds) out.push_back(std::move(b));
  }
  return out;
}

Representation random_bn(int n, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 7919) {
    const auto rep = generate_random_isotropic(n, 1, Kind::General, s);
    if (!rep.matrix().col_block(2 * n, 1).is_zero()) return rep;
  }
}

Outcome isotropic_representations_are_symplectic() {
  Outcome out;
  const Kind kinds[] = {Kind::General, Kind::Orthogonal, Kind::Symplectic};
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Kind kind = m == 0 ? kinds[seed % 3] : Kind::General;
        const auto rep = generate_random_isotropic(n, m, kind, seed);
        if (!check_isotropy(rep)) {
          out.fail("not isotropic");
        } else if (!is_symplectic_matroid(extract_bases(rep)).holds) {
          out.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " seed=" + std::to_string(seed));
        }
      }
    }
  }
  return out;
}

Outcome strong_exchange_matches_orthogonal() {
  Outcome out;
  auto compare = [&](const BasisCollection& b) {
    const bool orth = is_orthogonal_matroid(b).holds && b.is_lagrangian();
    if (check_strong_exchange(b).holds != orth) {
      std::string s;
      for (const auto& x : b) s += "{" + to_string(x) + "}";
      out.fail(s);
    }
  };
  const auto sets2 = admissible_sets(2, 2);
  int count = 0;
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << sets2.size()); ++c) {
    std::vector<ElementSet> v;
    for (std::size_t i = 0; i < sets2.size(); ++i) {
      if ((c >> i) & 1U) v.push_back(sets2[i]);
    }
    compare(BasisCollection(2, 2, std::move(v)));
    ++count;
  }
  if (count != 15) out.fail("expected 15 collections at n=2");
  Rng rng(2);
  const auto sets3 = admissible_sets(3, 3);
  for (int t = 0; t < 200; ++t) {
    compare(BasisCollection(3, 3, random_subfamily(rng, sets3)));
  }
  return out;
}

void check_pair_theorems(const BasisCollection& a, const BasisCollection& b,
                         Outcome& out) {
  const bool is_pair = is_lagrangian_pair(a, b).holds;
  if (is_pair_via_explosion(a, b) != is_pair) {
    out.fail("explosion criterion disagrees");
  }
  if (!is_pair) return;
  const auto pair = LagrangianPair::make(a, b);
  if (!is_symplectic_matroid(pair_union(pair)).holds) {
    out.fail("union not symplectic");
  }
  const auto exploded = exploded_union(a, b);
  if (exploded.rank() != a.n() + 1 || !is_orthogonal_matroid(exploded).holds) {
    out.fail("exploded union not orthogonal");
  }
  if (!complete_to_pair(pair_intersection_matroid(pair)).same_sides(pair)) {
    out.fail("completion does not invert intersection");
  }
}

Outcome pair_theorems() {
  Outcome out;
  const auto all2 = orthogonal_matroids(2);
  int pairs = 0;
  for (const auto& a : all2) {
    for (const auto& b : all2) {
      pairs += is_lagrangian_pair(a, b).holds ? 1 : 0;
      check_pair_theorems(a, b, out);
    }
  }
  if (pairs == 0) out.fail("no pairs at n=2");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SubspacePair p = random_subspace_pair(3, seed);
    const auto a = extract_bases(
        Representation(3, 0, vcat(p.shared, p.x), Kind::Orthogonal));
    const auto b = extract_bases(
        Representation(3, 0, vcat(p.shared, p.y), Kind::Orthogonal));
    if (!is_lagrangian_pair(a, b).holds) out.fail("represented pair rejected");
    check_pair_theorems(a, b, out);
  }
  const auto all3 = orthogonal_matroids(3);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    check_pair_theorems(all3[rng() % all3.size()], all3[rng() % all3.size()],
                        out);
  }
  return out;
}

Outcome pfaffian_engine() {
  Outcome out;
  if (pfaffian(Matrix(0, 0)) != 1) out.fail("Pf of the empty matrix");
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    const int size = t % 11;
    const Matrix a = t % 2 == 0 ? random_skew(rng, size)
                                : random_rational_skew(rng, size);
    const Rational pf = pfaffian(a);
    if (pf * pf != det(a)) out.fail("Pf^2 != det at size " + std::to_string(size));
    if (pf != pfaffian_oracle(a)) out.fail("oracle mismatch");
    if (size % 2 == 1 && pf != 0) out.fail("odd size nonzero");
  }
  return out;
}

Outcome wenzel_identity() {
  Outcome out;
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 6;
    const Matrix a = t % 2 == 0 ? random_skew(rng, n)
                                : random_rational_skew(rng, n);
    const std::uint64_t full = ElementSet::full_mask(n);
    if (wenzel_identity_residual(a, rng() & full, rng() & full) != 0) {
      out.fail("nonzero residual at n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome orientation_independence() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto rep = generate_random_isotropic(n, 0, Kind::Orthogonal, seed);
    const SignMap reference = orient_dn(rep);
    for (const auto& f : extract_bases(rep)) {
      if (!(orient_dn(rep, f) == reference)) {
        out.fail("D_n depends on F at seed " + std::to_string(seed));
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const auto rep = random_bn(n, seed);
    const SignMap reference = orient_bn(rep);
    Rng rng(seed + 1000);
    Representation other = rep;
    const int steps = 1 + static_cast<int>(rng() % 5);
    for (int step = 0; step < steps; ++step) {
      other = signed_swap(other, 1 + static_cast<int>(rng() % n));
      other = apply_row_operations(other, random_invertible(rng, n));
    }
    if (!(orient_bn(other) == reference)) {
      out.fail("B_n changes at seed " + std::to_string(seed));
    }
  }
  return out;
}

Outcome determinant_identity() {
  Outcome out;
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    const Matrix s = t % 2 == 0 ? random_skew(rng, n)
                                : random_rational_skew(rng, n);
    const Matrix c = random_matrix(rng, n, 1);
    for (std::uint64_t i = 0; i <= ElementSet::full_mask(n); ++i) {
      if (!check_det_identity(s, c, i)) {
        out.fail("t=" + std::to_string(t) + " I=" + std::to_string(i));
      }
    }
  }
  return out;
}

Outcome pair_pipeline() {
  Outcome out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const auto rep = random_bn(n, seed);
    const auto d = decompose_bn_representation(rep);
    const auto* pair = std::get_if<RepresentationPair>(&d);
    if (pair == nullptr) {
      out.fail("no split at seed " + std::to_string(seed));
      continue;
    }
    const auto& s = pair->subspaces;
    if (!(extract_bases(glue_pair_representations(s.shared, s.x, s.y)) ==
          extract_bases(rep))) {
      out.fail("round trip changes the bases at seed " + std::to_string(seed));
    }
    if (!pair_sign_consistency(s.shared, s.x, s.y).consistent) {
      out.fail("decomposed signs at seed " + std::to_string(seed));
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const SubspacePair p = random_subspace_pair(n, seed);
    if (!pair_sign_consistency(p.shared, p.x, p.y).consistent) {
      out.fail("pair signs at seed " + std::to_string(seed));
    }
  }
  return out;
}

Outcome converse_witness() {
  Outcome out;
  const std::vector<ElementSet> sets = {
      parse_set("1 2 3"), parse_set("1 2 3*"), parse_set("1 2* 3*"),
      parse_set("2 1* 3*"), parse_set("3 1* 2*")};
  const BasisCollection b(3, 3, sets);
  if (!is_symplectic_matroid(b).holds) out.fail("witness is not symplectic");
  for (std::uint64_t mask = 1; mask + 1 < (1U << sets.size()); ++mask) {
    std::vector<ElementSet> left;
    std::vector<ElementSet> right;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      ((mask >> i) & 1U ? left : right).push_back(sets[i]);
    }
    bool pair = false;
    try {
      pair = is_lagrangian_pair(BasisCollection(3, 3, left),
                                BasisCollection(3, 3, right))
                 .holds;
    } catch (const NotOrthogonalMatroid&) {
    }
    if (pair) out.fail("split " + std::to_string(mask) + " is a pair");
  }
  if (splits_into_pair(b)) out.fail("splits_into_pair accepts the witness");
  return out;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace lagmat

int main() {
  using lagmat::Criterion;
  const Criterion criteria[] = {
      {"isotropic representations give symplectic matroids", 60,
       lagmat::isotropic_representations_are_symplectic},
      {"strong exchange iff Lagrangian orthogonal", 30,
       lagmat::strong_exchange_matches_orthogonal},
      {"Lagrangian pair theorems", 60, lagmat::pair_theorems},
      {"Pfaffian engine", 30, lagmat::pfaffian_engine},
      {"Wenzel identity", 30, lagmat::wenzel_identity},
      {"orientation independence", 60, lagmat::orientation_independence},
      {"determinant identity", 30, lagmat::determinant_identity},
      {"pair decomposition pipeline", 60, lagmat::pair_pipeline},
      {"converse witness", 30, lagmat::converse_witness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    lagmat::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("threw ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.fail("over the time budget");
    }
    std::printf("[%d] %s %s (%.2f s)%s%s\n", index,
                outcome.pass ? "PASS" : "FAIL", c.name, seconds,
                outcome.pass ? "" : ": ", outcome.detail.c_str());
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
