// Copyright 2026 The listdec Authors
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

#include "listdec/codes.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace listdec {
namespace {

std::string point_name(unsigned i, unsigned j) {
  std::ostringstream os;
  os << "gamma^" << i << "*alpha[" << j << "]";
  return os.str();
}

std::int64_t floor_rat(const Rat& r) { return r.floor(); }

std::int64_t ceil_rat(const Rat& r) { return -((-r).floor()); }

std::int64_t smallest_int_above(const Rat& r) { return r.floor() + 1; }

CorollarySetting make_setting(const std::string& name, std::int64_t list_size,
                              const Rat& eps, const Rat& rate) {
  CorollarySetting out;
  out.name = name;
  out.list_size = list_size;
  Rat gap = eps * Rat(list_size) - (Rat(1) - rate - eps);
  if (!(gap > Rat(0)) || list_size < 1) {
    out.feasible = false;
    return out;
  }
  // Radius exceeds 1 - R - eps exactly when s > L(L-1)R/gap + L - 1.
  Rat threshold =
      Rat(list_size * (list_size - 1)) * rate / gap + Rat(list_size - 1);
  out.feasible = true;
  out.s_min = smallest_int_above(threshold);
  out.rho = radius_bound(list_size, out.s_min, rate);
  return out;
}

}  // namespace

std::string family_name(Family family) {
  return family == Family::kFrs ? "frs" : "mult";
}

std::optional<std::string> validate_spec(const CodeSpec& spec) {
  const std::uint64_t p = spec.field.p();
  if (spec.s < 1) return "s must be at least 1";
  if (spec.n < 1) return "n must be at least 1";
  if (spec.k < 1) return "k must be at least 1";
  if (std::uint64_t(spec.k) > std::uint64_t(spec.s) * spec.n) {
    return "k exceeds the block length s*n";
  }
  if (spec.alphas.size() != spec.n) {
    return "alphas must list exactly n evaluation points";
  }
  for (unsigned j = 0; j < spec.n; ++j) {
    if (spec.alphas[j] >= p) {
      return "alpha[" + std::to_string(j + 1) + "] is not a residue mod p";
    }
  }
  if (spec.family == Family::kFrs) {
    if (std::uint64_t(spec.s) * spec.n > p - 1) {
      return "s*n = " + std::to_string(std::uint64_t(spec.s) * spec.n) +
             " exceeds p-1 = " + std::to_string(p - 1) +
             "; the points cannot be pairwise distinct";
    }
    for (unsigned j = 0; j < spec.n; ++j) {
      if (spec.alphas[j] == 0) {
        return "alpha[" + std::to_string(j + 1) + "] must be nonzero";
      }
    }
    // Appropriateness: gamma^i alpha_j pairwise distinct over i in [0, s),
    // j in [1, n]. Scan j-major so the first collision in reading order is
    // the one reported.
    std::map<FieldElem, std::pair<unsigned, unsigned>> seen;
    for (unsigned j = 0; j < spec.n; ++j) {
      FieldElem value = spec.alphas[j];
      for (unsigned i = 0; i < spec.s; ++i) {
        auto [it, inserted] = seen.emplace(value, std::make_pair(i, j));
        if (!inserted) {
          return "points not appropriate: " +
                 point_name(it->second.first, it->second.second + 1) +
                 " = " + point_name(i, j + 1) + " = " + std::to_string(value);
        }
        value = spec.field.mul(value, spec.field.gamma());
      }
    }
  } else {
    if (std::uint64_t(spec.n) > p) return "n exceeds the field size p";
    if (std::uint64_t(spec.k) >= p) return "k must be smaller than p";
    std::map<FieldElem, unsigned> seen;
    for (unsigned j = 0; j < spec.n; ++j) {
      auto [it, inserted] = seen.emplace(spec.alphas[j], j);
      if (!inserted) {
        return "alpha[" + std::to_string(it->second + 1) + "] = alpha[" +
               std::to_string(j + 1) + "] = " + std::to_string(spec.alphas[j]) +
               "; evaluation points must be distinct";
      }
    }
  }
  return std::nullopt;
}

std::vector<FieldElem> make_appropriate_alphas(const FieldSpec& field,
                                               unsigned s, unsigned n) {
  if (s < 1 || n < 1) fail(Errc::BadParameter, "s and n must be at least 1");
  if (std::uint64_t(s) * n > std::uint64_t(field.p()) - 1) {
    fail(Errc::TooLong, "s*n = " + std::to_string(std::uint64_t(s) * n) +
                            " exceeds p-1 = " + std::to_string(field.p() - 1));
  }
  // alpha_j = gamma^{s(j-1)}: the points gamma^{i + s(j-1)} then carry the
  // s*n distinct exponents 0, ..., s*n - 1 < p - 1.
  std::vector<FieldElem> alphas(n);
  FieldElem step = field.pow(field.gamma(), s);
  FieldElem current = 1;
  for (unsigned j = 0; j < n; ++j) {
    alphas[j] = current;
    current = field.mul(current, step);
  }
  return alphas;
}

std::vector<FieldElem> make_distinct_alphas(const FieldSpec& field,
                                            unsigned n) {
  if (n < 1) fail(Errc::BadParameter, "n must be at least 1");
  if (std::uint64_t(n) > field.p()) {
    fail(Errc::TooLong, "n = " + std::to_string(n) +
                            " exceeds the field size p = " +
                            std::to_string(field.p()));
  }
  std::vector<FieldElem> alphas(n);
  for (unsigned j = 0; j < n; ++j) alphas[j] = j;
  return alphas;
}

Codeword encode(const CodeSpec& spec, const Poly& f) {
  if (f.degree() >= int(spec.k)) {
    fail(Errc::DegreeTooHigh, "message degree " + std::to_string(f.degree()) +
                                  " is not below k = " +
                                  std::to_string(spec.k));
  }
  Codeword word;
  word.blocks.assign(spec.n, std::vector<FieldElem>(spec.s));
  if (spec.family == Family::kFrs) {
    for (unsigned j = 0; j < spec.n; ++j) {
      FieldElem x = spec.alphas[j];
      for (unsigned i = 0; i < spec.s; ++i) {
        word.blocks[j][i] = f.eval(x);
        x = spec.field.mul(x, spec.field.gamma());
      }
    }
  } else {
    for (unsigned i = 0; i < spec.s; ++i) {
      Poly d = hasse_derivative(f, i);
      for (unsigned j = 0; j < spec.n; ++j) {
        word.blocks[j][i] = d.eval(spec.alphas[j]);
      }
    }
  }
  return word;
}

Codeword encode_vec(const CodeSpec& spec, const CoeffVec& message) {
  if (message.size() != spec.k) {
    fail(Errc::BadParameter, "message vector must have length k");
  }
  return encode(spec, poly_from_coeff_vec(spec.field, message));
}

unsigned hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.blocks.size() != b.blocks.size()) {
    fail(Errc::SpecMismatch, "codewords have different lengths");
  }
  unsigned distance = 0;
  for (std::size_t j = 0; j < a.blocks.size(); ++j) {
    if (a.blocks[j].size() != b.blocks[j].size()) {
      fail(Errc::SpecMismatch, "codewords have different block shapes");
    }
    if (a.blocks[j] != b.blocks[j]) ++distance;
  }
  return distance;
}

Rat radius_bound(std::uint64_t list_size, std::uint64_t s, const Rat& rate) {
  if (list_size < 1) fail(Errc::BadParameter, "list size must be at least 1");
  if (list_size > s) {
    fail(Errc::ListExceedsFolding,
         "list size " + std::to_string(list_size) + " exceeds folding " +
             std::to_string(s));
  }
  Rat fraction = Rat(std::int64_t(list_size), std::int64_t(list_size) + 1);
  Rat penalty = Rat(std::int64_t(s)) * rate /
                Rat(std::int64_t(s) - std::int64_t(list_size) + 1);
  return fraction * (Rat(1) - penalty);
}

Rat singleton_bound(std::uint64_t list_size, const Rat& rate) {
  if (list_size < 1) fail(Errc::BadParameter, "list size must be at least 1");
  return Rat(std::int64_t(list_size), std::int64_t(list_size) + 1) *
         (Rat(1) - rate);
}

CorollaryParams corollary_params(const Rat& eps, const Rat& rate) {
  if (!(rate > Rat(0)) || !(rate < Rat(1))) {
    fail(Errc::BadParameter, "rate must lie in (0, 1)");
  }
  Rat slack = Rat(1) - rate;
  if (!(eps > Rat(0)) || !(eps < slack)) {
    fail(Errc::InfeasibleEpsilon,
         "eps must lie strictly between 0 and 1 - R = " + slack.str());
  }
  CorollaryParams out;
  out.list_size = smallest_int_above((slack - eps) / eps);
  CorollarySetting base = make_setting("min", out.list_size, eps, rate);
  if (!base.feasible) {
    fail(Errc::InfeasibleEpsilon, "no folding order reaches the target radius");
  }
  out.s_min = base.s_min;
  out.rho = base.rho;
  out.settings[0] = make_setting("a", floor_rat(slack / eps), eps, rate);
  out.settings[1] = make_setting("b", ceil_rat(slack / eps), eps, rate);
  out.settings[2] = make_setting("c", ceil_rat(Rat(1) / eps), eps, rate);
  return out;
}

nlohmann::ordered_json spec_to_json(const CodeSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = family_name(spec.family);
  j["p"] = spec.field.p();
  j["gamma"] = spec.field.gamma();
  j["s"] = spec.s;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["alphas"] = spec.alphas;
  return j;
}

namespace {

std::uint64_t take_uint(const nlohmann::json& j, const char* key,
                        std::uint64_t max_value) {
  if (!j.contains(key)) {
    fail(Errc::BadParameter, std::string("missing key \"") + key + "\"");
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      v.get<std::uint64_t>() > max_value) {
    fail(Errc::BadParameter, std::string("key \"") + key +
                                 "\" must be an integer in [0, " +
                                 std::to_string(max_value) + "]");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

CodeSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::BadParameter, "spec must be a JSON object");
  static const char* const kKeys[] = {"family", "p", "gamma", "s",
                                      "n",      "k", "alphas"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : kKeys) known = known || it.key() == key;
    if (!known) fail(Errc::BadParameter, "unknown key \"" + it.key() + "\"");
  }
  if (!j.contains("family") || !j.at("family").is_string()) {
    fail(Errc::BadParameter, "missing or non-string \"family\"");
  }
  std::string family = j.at("family").get<std::string>();
  if (family != "frs" && family != "mult") {
    fail(Errc::BadParameter, "family must be \"frs\" or \"mult\"");
  }
  std::uint64_t p = take_uint(j, "p", std::uint64_t(1) << 31);
  std::uint64_t gamma = take_uint(j, "gamma", p > 0 ? p - 1 : 0);
  FieldSpec field{std::uint32_t(p), FieldElem(gamma)};

  CodeSpec spec{field,
                family == "frs" ? Family::kFrs : Family::kMult,
                unsigned(take_uint(j, "s", 1u << 20)),
                unsigned(take_uint(j, "n", 1u << 20)),
                unsigned(take_uint(j, "k", 1u << 20)),
                {}};
  if (!j.contains("alphas") || !j.at("alphas").is_array()) {
    fail(Errc::BadParameter, "missing or non-array \"alphas\"");
  }
  for (const auto& a : j.at("alphas")) {
    if (!a.is_number_integer() || a.get<std::int64_t>() < 0 ||
        a.get<std::uint64_t>() >= p) {
      fail(Errc::BadParameter, "alphas entries must be residues in [0, p)");
    }
    spec.alphas.push_back(FieldElem(a.get<std::uint64_t>()));
  }
  return spec;
}

namespace {

nlohmann::ordered_json rat_to_json(const Rat& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

}  // namespace

nlohmann::ordered_json params_to_json(const CorollaryParams& params) {
  nlohmann::ordered_json j;
  j["L"] = params.list_size;
  j["s_min"] = params.s_min;
  j["rho"] = rat_to_json(params.rho);
  j["settings"] = nlohmann::ordered_json::array();
  for (const auto& setting : params.settings) {
    nlohmann::ordered_json s;
    s["name"] = setting.name;
    s["L"] = setting.list_size;
    s["feasible"] = setting.feasible;
    if (setting.feasible) {
      s["s_min"] = setting.s_min;
      s["rho"] = rat_to_json(setting.rho);
    } else {
      s["s_min"] = nullptr;
      s["rho"] = nullptr;
    }
    j["settings"].push_back(std::move(s));
  }
  return j;
}

}  // namespace listdec
