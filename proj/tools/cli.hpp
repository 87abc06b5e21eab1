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

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it with in-memory streams.
//
// Exit codes: 0 success or PASS, 1 FAIL, 2 input error.

#ifndef LAGMAT_TOOLS_CLI_HPP_
#define LAGMAT_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagmat/lagmat.hpp"
#include "lagmat/pfaffian_oracle.hpp"

namespace lagmat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

using Json = nlohmann::ordered_json;

struct Options {
  std::string axiom;
  std::vector<std::string> files;
  std::uint64_t seed = 0;
  int max_n = 8;
  int oracle_n = 3;
  int trials = 20;
  std::string format = "text";

  bool json() const { return format == "json"; }
};

// An input error raised by the front end itself.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bool looks_like_representation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 5, "kind:") == 0;
  }
  return false;
}

inline Representation load_representation(const std::string& path) {
  return parse_representation(slurp(path));
}

// A basis file, or a representation file whose bases are extracted.
inline BasisCollection load_bases(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_representation(text)) {
    return extract_bases(parse_representation(text));
  }
  return parse_basis_collection(text);
}

inline void require_files(const Options& o, std::size_t count,
                          const std::string& verb) {
  if (o.files.size() != count) {
    throw UsageError(verb + " expects " + std::to_string(count) +
                     " input file" + (count == 1 ? "" : "s"));
  }
}

inline void require_max_n(int n, const Options& o) {
  if (n > o.max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds --max-n " +
                     std::to_string(o.max_n));
  }
}

inline Json sets_json(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json elements = Json::array();
    for (Element e : s.elements()) elements.push_back(to_string(e));
    out.push_back(std::move(elements));
  }
  return out;
}

inline Json representation_json(const Representation& rep) {
  Json labels = Json::array();
  for (int c = 0; c < rep.matrix().cols(); ++c) {
    labels.push_back(c < 2 * rep.n() ? to_string(rep.label_element(c))
                                     : std::to_string(rep.labels()[c]));
  }
  Json rows = Json::array();
  for (int r = 0; r < rep.k(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < rep.matrix().cols(); ++c) {
      row.push_back(to_string(rep.matrix()(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"kind", to_string(rep.kind())}, {"n", rep.n()}, {"m", rep.m()},
          {"k", rep.k()},                 {"labels", labels},
          {"rows", rows}};
}

inline void emit_representation(std::ostream& out, const Representation& rep,
                                const Options& o) {
  if (o.json()) {
    out << representation_json(rep).dump(2) << '\n';
  } else {
    write_representation(out, rep);
  }
}

// PASS / FAIL line plus optional witness lines.
inline int emit_verdict(std::ostream& out, const Options& o,
                        const std::string& check, bool holds,
                        const std::vector<std::pair<std::string, std::string>>&
                            witness = {}) {
  if (o.json()) {
    Json j{{"check", check}, {"result", holds ? "PASS" : "FAIL"}};
    if (!holds) {
      Json w = Json::object();
      for (const auto& [k, v] : witness) w[k] = v;
      j["witness"] = std::move(w);
    }
    out << j.dump(2) << '\n';
  } else {
    out << (holds ? "PASS" : "FAIL") << ' ' << check << '\n';
    if (!holds) {
      for (const auto& [k, v] : witness) out << k << ": " << v << '\n';
    }
  }
  return holds ? kExitPass : kExitFail;
}

// The lexicographically least basis moved into the right block.
inline Representation reducible_layout(const Representation& rep) {
  const ElementSet d = extract_bases(rep).bases().front();
  Representation out = rep;
  for (int p = 0; p < rep.n(); ++p) {
    if (d.contains(out.label_element(p))) out = signed_swap(out, p + 1);
  }
  return out;
}

inline SignMap orient_any(const Representation& rep) {
  if (rep.m() == 0) return orient_dn(rep);
  if (rep.m() == 1) return orient_bn(rep);
  throw UsageError("orient handles m = 0 (D_n) and m = 1 (B_n) only");
}

}  // namespace detail

inline int cmd_bases(const Options& o, std::ostream& out) {
  detail::require_files(o, 1, "bases");
  const BasisCollection b = extract_bases(detail::load_representation(o.files[0]));
  if (o.json()) {
    out << Json{{"n", b.n()}, {"k", b.rank()}, {"bases", detail::sets_json(b.bases())}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& s : b) out << format_set(s) << '\n';
  }
  return kExitPass;
}

inline int check_pair(const BasisCollection& a, const BasisCollection& b,
                      const Options& o, std::ostream& out) {
  detail::require_max_n(a.n(), o);
  const PairCheck r = is_lagrangian_pair(a, b, o.max_n);
  std::vector<std::pair<std::string, std::string>> w;
  if (!r.holds) {
    w = {{"ordering", to_string(*r.witness)},
         {"first_max", to_string(r.first_max)},
         {"second_max", to_string(r.second_max)}};
  }
  return detail::emit_verdict(out, o, "pair", r.holds, w);
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const std::string& axiom = o.axiom;
  if (axiom == "pair") {
    detail::require_files(o, 2, "check --axiom pair");
    return check_pair(detail::load_bases(o.files[0]),
                      detail::load_bases(o.files[1]), o, out);
  }
  detail::require_files(o, 1, "check");
  if (axiom == "oriented-even-delta") {
    const std::string text = detail::slurp(o.files[0]);
    const SignMap p = detail::looks_like_representation(text)
                          ? detail::orient_any(parse_representation(text))
                          : parse_signmap(text);
    const auto r = to_oriented_orthogonal(p);
    return detail::emit_verdict(out, o, axiom, r.valid, {{"reason", r.reason}});
  }
  const BasisCollection b = detail::load_bases(o.files[0]);
  detail::require_max_n(b.n(), o);
  if (axiom == "symplectic" || axiom == "orthogonal") {
    const auto r = axiom == "symplectic" ? is_symplectic_matroid(b, o.max_n)
                                         : is_orthogonal_matroid(b, o.max_n);
    std::vector<std::pair<std::string, std::string>> w;
    if (!r.holds) {
      w = {{"ordering", to_string(*r.witness)},
           {"incomparable", to_string(r.incomparable.first) + " | " +
                                to_string(r.incomparable.second)}};
    }
    return detail::emit_verdict(out, o, axiom, r.holds, w);
  }
  if (axiom == "strong-exchange") {
    const auto r = check_strong_exchange(b);
    return detail::emit_verdict(out, o, axiom, r.holds,
                                {{"A", to_string(r.first)},
                                 {"B", to_string(r.second)},
                                 {"a", to_string(r.pivot)}});
  }
  if (axiom == "symmetric-exchange") {
    const DeltaCollection d = to_delta(b);
    const auto r = check_symmetric_exchange(d);
    return detail::emit_verdict(
        out, o, axiom, r.holds,
        {{"A", to_string(ElementSet::from_masks(r.first, 0))},
         {"B", to_string(ElementSet::from_masks(r.second, 0))},
         {"i", std::to_string(r.pivot)}});
  }
  throw UsageError("unknown axiom '" + axiom + "'");
}

inline int cmd_orient(const Options& o, std::ostream& out) {
  detail::require_files(o, 1, "orient");
  const Representation rep = detail::load_representation(o.files[0]);
  const SignMap p = detail::orient_any(rep);
  if (o.json()) {
    Json signs = Json::array();
    for (const auto& s : p.support_sets()) {
      Json elements = Json::array();
      for (Element e : s.elements()) elements.push_back(to_string(e));
      signs.push_back({{"sign", p.at(s) > 0 ? "+" : "-"}, {"basis", elements}});
    }
    out << Json{{"n", p.n()},
                {"k", p.n()},
                {"bases", detail::sets_json(p.support_sets())},
                {"signs", signs}}
               .dump(2)
        << '\n';
  } else {
    write_signmap(out, p);
  }
  return kExitPass;
}

inline int cmd_explode(const Options& o, std::ostream& out) {
  detail::require_files(o, 1, "explode");
  const Representation rep = detail::load_representation(o.files[0]);
  if (rep.m() != 1) throw UsageError("explode needs m = 1");
  detail::emit_representation(
      out, explode_oriented(detail::reducible_layout(rep)), o);
  return kExitPass;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  detail::require_files(o, 1, "decompose");
  const auto d =
      decompose_bn_representation(detail::load_representation(o.files[0]));
  if (const auto* single = std::get_if<Representation>(&d)) {
    if (o.json()) {
      out << Json{{"result", "SINGLE"},
                  {"representation", detail::representation_json(*single)}}
                 .dump(2)
          << '\n';
    } else {
      out << "SINGLE\n";
      write_representation(out, *single);
    }
    return kExitPass;
  }
  const auto& pair = std::get<RepresentationPair>(d);
  if (o.json()) {
    out << Json{{"result", "PAIR"},
                {"first", detail::representation_json(pair.first)},
                {"second", detail::representation_json(pair.second)}}
               .dump(2)
        << '\n';
  } else {
    out << "PAIR\n";
    write_representation(out, pair.first);
    out << "---\n";
    write_representation(out, pair.second);
  }
  return kExitPass;
}

inline int cmd_pair_glue(const Options& o, std::ostream& out) {
  detail::require_files(o, 2, "pair-glue");
  const SubspacePair p =
      split_subspace_pair(detail::load_representation(o.files[0]),
                          detail::load_representation(o.files[1]));
  detail::emit_representation(out, glue_pair_representations(p.shared, p.x, p.y),
                              o);
  return kExitPass;
}

// Pair detection both ways and, for representation inputs, the sign check
// of the glued representation.
inline int cmd_pair_check(const Options& o, std::ostream& out) {
  detail::require_files(o, 2, "pair-check");
  const std::string t1 = detail::slurp(o.files[0]);
  const std::string t2 = detail::slurp(o.files[1]);
  const bool reps = detail::looks_like_representation(t1) &&
                    detail::looks_like_representation(t2);
  const BasisCollection a = reps ? extract_bases(parse_representation(t1))
                                 : parse_basis_collection(t1);
  const BasisCollection b = reps ? extract_bases(parse_representation(t2))
                                 : parse_basis_collection(t2);
  detail::require_max_n(a.n() + 1, o);
  const bool direct = is_lagrangian_pair(a, b, o.max_n).holds;
  const bool exploded = is_pair_via_explosion(a, b, o.max_n);
  bool signs = true;
  if (reps && direct) {
    const SubspacePair p = split_subspace_pair(parse_representation(t1),
                                               parse_representation(t2));
    signs = pair_sign_consistency(p.shared, p.x, p.y).consistent;
  }
  const bool holds = direct && exploded && signs;
  return detail::emit_verdict(
      out, o, "pair-check", holds,
      {{"maxima", direct ? "pair" : "not a pair"},
       {"explosion", exploded ? "orthogonal" : "not orthogonal"},
       {"signs", signs ? "consistent" : "inconsistent"}});
}

// Brute-force differential suite at one n.
inline int cmd_oracle(const Options& o, std::ostream& out) {
  const int n = o.oracle_n;
  if (n < 1) throw UsageError("--n must be positive");
  detail::require_max_n(n, o);
  Rng rng(o.seed);
  std::vector<std::pair<std::string, bool>> results;
  auto record = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = true;
    for (int t = 0; t < o.trials && ok; ++t) ok = f();
    results.emplace_back(name, ok);
  };
  record("pfaffian-vs-definition", [&] {
    const Matrix a = random_rational_skew(rng, std::min(2 * n, 10));
    const Rational pf = pfaffian(a);
    return pf == pfaffian_oracle(a) && pf * pf == det(a);
  });
  record("wenzel-identity", [&] {
    const Matrix a = random_skew(rng, n);
    const std::uint64_t full = ElementSet::full_mask(n);
    return wenzel_identity_residual(a, rng() & full, rng() & full) == 0;
  });
  record("isotropic-is-symplectic", [&] {
    const auto rep = generate_random_isotropic(n, static_cast<int>(rng() % 3),
                                               Kind::General, rng());
    return is_symplectic_matroid(extract_bases(rep), o.max_n).holds;
  });
  record("strong-exchange-iff-orthogonal", [&] {
    const auto sets = admissible_sets(n, n);
    std::vector<ElementSet> v;
    for (const auto& s : sets) {
      if (rng() % 3 == 0) v.push_back(s);
    }
    if (v.empty()) v.push_back(sets.front());
    const BasisCollection b(n, n, v);
    return check_strong_exchange(b).holds ==
           is_orthogonal_matroid(b, o.max_n).holds;
  });
  record("orient-dn-independent-of-F", [&] {
    const auto rep = generate_random_isotropic(n, 0, Kind::Orthogonal, rng());
    const SignMap ref = orient_dn(rep);
    for (const auto& f : extract_bases(rep)) {
      if (!(orient_dn(rep, f) == ref)) return false;
    }
    return to_oriented_orthogonal(ref).valid;
  });
  record("orient-bn-independent-of-D", [&] {
    const auto rep = generate_random_isotropic(n, 1, Kind::General, rng());
    const SignMap ref = orient_bn(rep);
    for (const auto& d : extract_bases(rep)) {
      if (!(orient_bn(rep, d) == ref)) return false;
    }
    return ref.support_collection() == extract_bases(rep);
  });
  bool all = true;
  Json j = Json::array();
  for (const auto& [name, ok] : results) {
    all = all && ok;
    if (o.json()) {
      j.push_back({{"check", name}, {"result", ok ? "PASS" : "FAIL"}});
    } else {
      out << (ok ? "PASS " : "FAIL ") << name << '\n';
    }
  }
  if (o.json()) out << Json{{"n", n}, {"checks", j}}.dump(2) << '\n';
  return all ? kExitPass : kExitFail;
}

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Symplectic, orthogonal and Lagrangian matroids from "
               "isotropic subspaces",
               "lagmat"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized verbs");
  app.add_option("--max-n", o.max_n, "Largest n for brute-force scans")
      ->check(CLI::Range(1, 64));
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* bases = app.add_subcommand("bases", "Print the bases of a representation");
  bases->add_option("file", o.files, "Representation file")->required();
  auto* check = app.add_subcommand("check", "Verify an axiom");
  check->add_option("--axiom", o.axiom, "Axiom to check")
      ->required()
      ->check(CLI::IsMember({"symplectic", "orthogonal", "strong-exchange",
                             "symmetric-exchange", "oriented-even-delta",
                             "pair"}));
  check->add_option("files", o.files, "Basis, representation or sign files")
      ->required();
  auto* orient = app.add_subcommand("orient", "Orient a D_n or B_n representation");
  orient->add_option("file", o.files, "Representation file")->required();
  auto* explode = app.add_subcommand("explode", "Write the D_{n+1} representation");
  explode->add_option("file", o.files, "B_n representation file")->required();
  auto* decompose =
      app.add_subcommand("decompose", "Split a B_n representation into a pair");
  decompose->add_option("file", o.files, "B_n representation file")->required();
  auto* glue = app.add_subcommand("pair-glue", "Glue two D_n representations");
  glue->add_option("files", o.files, "Two representation files")->required();
  auto* pair_check = app.add_subcommand("pair-check", "Check a Lagrangian pair");
  pair_check->add_option("files", o.files, "Two basis or representation files")
      ->required();
  auto* oracle = app.add_subcommand("oracle", "Run the differential suite");
  oracle->add_option("--n", o.oracle_n, "Ground size")->check(CLI::Range(1, 16));
  oracle->add_option("--trials", o.trials, "Trials per check")
      ->check(CLI::Range(1, 100000));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (bases->parsed()) return cmd_bases(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (orient->parsed()) return cmd_orient(o, out);
    if (explode->parsed()) return cmd_explode(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (glue->parsed()) return cmd_pair_glue(o, out);
    if (pair_check->parsed()) return cmd_pair_check(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace lagmat::cli

#endif  // LAGMAT_TOOLS_CLI_HPP_
