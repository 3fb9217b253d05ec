/*
   Copyright 2026 The LGS Toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgs/error.hpp"
#include "lgs/estimator.hpp"
#include "lgs/params.hpp"
#include "lgs/schemes.hpp"
#include "lgs/serialize.hpp"
#include "lgs/stab_algebra.hpp"
#include "lgs/structural_lab.hpp"
#include "lgs/subcodes.hpp"

using json = nlohmann::ordered_json;
using namespace lgs;

namespace {

constexpr int kExitParam = 2;
constexpr int kExitDecode = 3;
constexpr int kExitInconsistent = 4;
constexpr int kExitIO = 5;
constexpr int kExitRetry = 6;
constexpr int kExitOther = 1;

constexpr const char* kSchemaVersion = "1";

struct ParamFlags {
  std::string set;
  std::string config;
  std::optional<std::uint32_t> q;
  std::optional<std::size_t> delta, m, k, kprime;

  void attach(CLI::App* app) {
    app->add_option("--set", set, "registry parameter set, e.g. LGS-128-a");
    app->add_option("--config", config, "JSON parameter file");
    app->add_option("--q", q, "base field size");
    app->add_option("--delta", delta, "lambda dimension");
    app->add_option("--m", m, "extension degree (n = m)");
    app->add_option("--k", k, "Gabidulin dimension");
    app->add_option("--kprime", kprime, "subcode dimension over F_q");
  }

  SchemeParams resolve() const {
    SchemeParams p;
    p.q = 0;
    if (!config.empty()) p = load_params(config);
    if (!set.empty()) p = named_params(set);
    const bool overridden = q || delta || m || k || kprime;
    if (q) p.q = *q;
    if (delta) p.delta = *delta;
    if (m) p.m = *m;
    if (k) p.k = *k;
    if (kprime) p.k_prime = *kprime;
    if (overridden) p.name.clear();
    if (p.q == 0 || p.m == 0 || p.k == 0 || p.k_prime == 0)
      throw ParamError("parameters: give --set, --config or all of --q --m --k --kprime");
    p.validate();
    return p;
  }
};

struct SeedFlag {
  std::string text;
  void attach(CLI::App* app) { app->add_option("--seed", text, "hex seed (up to 32 bytes)"); }
  /// Draws a fresh seed and announces it when none was given.
  Seed resolve() const {
    if (!text.empty()) return Rng::from_hex(text);
    const Seed s = Rng::system();
    std::cout << "seed: " << Rng::to_hex(s) << "\n";
    return s;
  }
};

double round4(double x) { return std::isfinite(x) ? std::round(x * 1e4) / 1e4 : x; }

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round4(x);
}

json params_json(const SchemeParams& p) {
  json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["q"] = p.q;
  j["delta"] = p.delta;
  j["m"] = p.m;
  j["n"] = p.n();
  j["k"] = p.k;
  j["k_prime"] = p.k_prime;
  j["t_pub"] = p.t_pub();
  return j;
}

json argmin_json(const Argmin& a) {
  json j;
  j["log2"] = a.feasible ? num(a.log2) : json(nullptr);
  j["a"] = a.a;
  j["b"] = a.b;
  j["h"] = a.h;
  j["feasible"] = a.feasible;
  return j;
}

json matrix_json(const MatFq& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_copy(i));
  return rows;
}

json vec_json(const VecFq& v) { return json(v); }

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IOError("cannot write " + out);
  f << text;
  if (!f) throw IOError("write failed: " + out);
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IOError("cannot write " + out);
  f << text;
}

/// Comma or whitespace separated integers in [0, q).
VecFq parse_elements(const std::string& text, std::uint32_t q, std::size_t len, const char* what) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  VecFq v;
  long long x = 0;
  while (in >> x) {
    if (x < 0 || x >= static_cast<long long>(q)) throw ParamError(std::string(what) + ": entry out of range");
    v.push_back(static_cast<fq_t>(x));
  }
  if (!in.eof()) throw ParamError(std::string(what) + ": not a list of integers");
  if (v.size() != len)
    throw ParamError(std::string(what) + ": expected " + std::to_string(len) + " entries, got " +
                     std::to_string(v.size()));
  return v;
}

std::string join(const VecFq& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

BaseField base_of(const FieldParams& fp) { return BaseField(fp.p, fp.base_modulus); }

// ---- estimate / tables -------------------------------------------------------------

json report_json(const ComplexityReport& r) {
  json j;
  j["params"] = params_json(r.params);
  j["omega"] = r.omega;
  j["minrank"] = {{"q", r.minrank.q}, {"m", r.minrank.m}, {"n", r.minrank.n}, {"K", r.minrank.K}, {"r", r.minrank.r}};
  j["kernel_log2"] = num(r.kernel_log2);
  if (r.sm)
    j["sm"] = {{"log2", num(r.sm->log2())}, {"b", r.sm->b}, {"branch1", num(r.sm->branch1)},
               {"branch2", num(r.sm->branch2)}};
  else
    j["sm"] = nullptr;
  j["hybrid_kernel"] = argmin_json(r.hybrid_kernel);
  j["hybrid_sm"] = argmin_json(r.hybrid_sm);
  j["subsupport_kernel"] = argmin_json(r.subsupport.kernel);
  j["subsupport_sm1"] = argmin_json(r.subsupport.sm1);
  j["subsupport_sm2"] = argmin_json(r.subsupport.sm2);
  j["dist_log2"] = num(r.dist_log2);
  j["c_f_log2"] = num(r.c_f_log2);
  j["c_f"] = r.c_f();
  j["c_f_source"] = r.c_f_source;
  const Sizes s = sizes(r.params);
  j["pk_bits"] = s.pk_bits;
  j["pk_bytes"] = s.pk_bytes;
  j["pk_kb"] = round4(s.pk_kb());
  j["ct_bits"] = s.ct_bits;
  j["ct_bytes"] = s.ct_bytes;
  if (const RegistryEntry* e = find_entry(r.params.name))
    j["reference"] = {{"level", e->level}, {"c_f", e->c_f}, {"pk_kb", e->pk_kb}, {"ct_bytes", e->ct_bytes}};
  return j;
}

const char* kCsvHeader =
    "name,level,q,delta,m,k,k_prime,t_pub,kernel_log2,sm_log2,subsupport_kernel_log2,subsupport_sm_log2,"
    "dist_log2,c_f_log2,c_f,c_f_source,pk_kb,ct_bytes,ref_c_f,ref_pk_kb,ref_ct_bytes\n";

std::string fmt(double x) {
  if (!std::isfinite(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string csv_row(const ComplexityReport& r) {
  const SchemeParams& p = r.params;
  const RegistryEntry* e = find_entry(p.name);
  const Sizes s = sizes(p);
  std::ostringstream o;
  o << p.name << ',' << (e ? std::to_string(e->level) : "") << ',' << p.q << ',' << p.delta << ',' << p.m << ','
    << p.k << ',' << p.k_prime << ',' << p.t_pub() << ',' << fmt(r.kernel_log2) << ','
    << (r.sm ? fmt(r.sm->log2()) : "") << ',' << fmt(r.subsupport.kernel.log2) << ','
    << fmt(r.subsupport.sm().log2) << ',' << fmt(r.dist_log2) << ',' << fmt(r.c_f_log2) << ',' << r.c_f() << ','
    << r.c_f_source << ',' << fmt(s.pk_kb()) << ',' << s.ct_bytes << ',';
  if (e) {
    char kb[32];
    std::snprintf(kb, sizeof kb, "%.2f", e->pk_kb);
    o << e->c_f << ',' << kb << ',' << e->ct_bytes;
  } else {
    o << ",,";
  }
  o << '\n';
  return o.str();
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") throw ParamError("--format must be json or csv");
}

// ---- lab helpers -------------------------------------------------------------------

struct LabParent {
  KeyMaterial km;
  MatFq gvec;
};

/// Secret code and its expansion, from the keygen subseeds.
LabParent lab_parent(const SchemeParams& p, const Seed& seed) {
  LabParent lp;
  lp.km = keygen(p, seed);
  lp.gvec = expanded_generator(lp.km.sk.code(), lp.km.sk.basis);
  return lp;
}

json algebra_json(const BaseField& f, const MatrixCodeBasis& code, bool with_generators) {
  json list = json::array();
  for (Side side : {Side::Left, Side::Right})
    for (AlgebraKind kind : {AlgebraKind::Stabilizer, AlgebraKind::Annihilator}) {
      const AlgebraBasis a = algebra(f, code, side, kind);
      json j;
      j["side"] = to_string(side);
      j["kind"] = to_string(kind);
      j["dim"] = a.dim();
      if (with_generators) {
        json gens = json::array();
        for (const MatFq& g : a.gens) gens.push_back(matrix_json(g));
        j["generators"] = gens;
      }
      list.push_back(j);
    }
  return list;
}

json census_json(const CensusResult& r) {
  json j;
  j["trials"] = r.trials.size();
  j["trivial_count"] = r.trivial_count;
  j["trivial_fraction"] = round4(r.trivial_fraction());
  json lh = json::object(), rh = json::object();
  for (const auto& [d, c] : r.left_hist) lh[std::to_string(d)] = c;
  for (const auto& [d, c] : r.right_hist) rh[std::to_string(d)] = c;
  j["left_stab_hist"] = lh;
  j["right_stab_hist"] = rh;
  return j;
}

json header(const char* command) {
  json j;
  j["schema"] = std::string("lgs.") + command;
  j["version"] = kSchemaVersion;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LGS toolkit: lambda-Gabidulin subcode encryption, attack estimates and structural experiments"};
  app.require_subcommand(1);

  ParamFlags pf;
  SeedFlag sf;
  std::string out, pk_path, sk_path, ct_path, msg, format = "json", level = "all";
  bool hex = false, no_generators = false;
  double omega = kDefaultOmega;
  std::size_t trials = 200, subspace = 0;

  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  pf.attach(keygen_cmd);
  sf.attach(keygen_cmd);
  keygen_cmd->add_option("--out", out, "output prefix: writes <out>.sk, <out>.pk, <out>.npk")->required();
  keygen_cmd->add_flag("--hex", hex, "write hex text instead of binary");

  auto* enc_cmd = app.add_subcommand("encrypt", "McEliece-style encryption");
  enc_cmd->add_option("--pk", pk_path, "public key (.pk)")->required();
  enc_cmd->add_option("--msg", msg, "k' comma-separated F_q elements; random if omitted");
  sf.attach(enc_cmd);
  enc_cmd->add_option("--out", out, "ciphertext file")->required();
  enc_cmd->add_flag("--hex", hex, "write hex text instead of binary");

  auto* dec_cmd = app.add_subcommand("decrypt", "McEliece-style decryption");
  dec_cmd->add_option("--sk", sk_path, "secret key")->required();
  dec_cmd->add_option("--pk", pk_path, "public key (.pk)")->required();
  dec_cmd->add_option("--ct", ct_path, "ciphertext")->required();
  dec_cmd->add_option("--out", out, "JSON result file (stdout if omitted)");

  auto* nenc_cmd = app.add_subcommand("nied-encrypt", "Niederreiter-style encryption of a low-rank error");
  nenc_cmd->add_option("--pk", pk_path, "public key (.npk)")->required();
  nenc_cmd->add_option("--msg", msg, "mn comma-separated F_q elements (Unfold(E)); random rank t_pub if omitted");
  sf.attach(nenc_cmd);
  nenc_cmd->add_option("--out", out, "ciphertext file")->required();
  nenc_cmd->add_flag("--hex", hex, "write hex text instead of binary");

  auto* ndec_cmd = app.add_subcommand("nied-decrypt", "Niederreiter-style decryption");
  ndec_cmd->add_option("--sk", sk_path, "secret key")->required();
  ndec_cmd->add_option("--pk", pk_path, "public key (.npk)")->required();
  ndec_cmd->add_option("--ct", ct_path, "ciphertext")->required();
  ndec_cmd->add_option("--out", out, "JSON result file (stdout if omitted)");

  auto* est_cmd = app.add_subcommand("estimate", "attack cost report for one parameter set");
  pf.attach(est_cmd);
  est_cmd->add_option("--omega", omega, "linear algebra exponent");
  est_cmd->add_option("--format", format, "json or csv");
  est_cmd->add_option("--out", out, "report file (stdout if omitted)");

  auto* tab_cmd = app.add_subcommand("tables", "regenerate the registry tables");
  tab_cmd->add_option("--level", level, "128, 192, 256 or all");
  tab_cmd->add_option("--omega", omega, "linear algebra exponent");
  tab_cmd->add_option("--format", format, "json or csv");
  tab_cmd->add_option("--out", out, "report file (stdout if omitted)");

  auto* stab_cmd = app.add_subcommand("stab-analyze", "stabilizer and annihilator algebras of a matrix code");
  stab_cmd->add_option("--pk", pk_path, "analyze the code of a McEliece public key");
  pf.attach(stab_cmd);
  sf.attach(stab_cmd);
  stab_cmd->add_option("--subspace", subspace, "analyze C ∩ V^n for a random V of this dimension");
  stab_cmd->add_flag("--no-generators", no_generators, "omit generator matrices");
  stab_cmd->add_option("--out", out, "JSON file (stdout if omitted)");

  auto* census_cmd = app.add_subcommand("census", "stabilizer census of random subcodes");
  pf.attach(census_cmd);
  sf.attach(census_cmd);
  census_cmd->add_option("--trials", trials, "number of subcodes");
  census_cmd->add_option("--subspace", subspace, "use subspace subcodes of this dimension instead");
  census_cmd->add_option("--out", out, "JSON file (stdout if omitted)");

  auto* toy_cmd = app.add_subcommand("complete-toy", "normal form, completion and exhaustive search at toy size");
  pf.attach(toy_cmd);
  sf.attach(toy_cmd);
  toy_cmd->add_option("--out", out, "JSON file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParam;
  }

  try {
    if (*keygen_cmd) {
      const SchemeParams p = pf.resolve();
      const Seed seed = sf.resolve();
      const KeyMaterial km = keygen(p, seed);
      store_object(out + ".sk", serialize(km.sk), hex);
      store_object(out + ".pk", serialize(km.mce), hex);
      store_object(out + ".npk", serialize(km.nied), hex);
      const Sizes s = sizes(p);
      std::cout << "params: " << p.describe() << "\n"
                << "subcode attempts: " << km.subcode.attempts << "\n"
                << "wrote " << out << ".sk, " << out << ".pk, " << out << ".npk\n"
                << "pk payload: " << s.pk_bits << " bits, ct payload: " << s.ct_bits << " bits\n";
    } else if (*enc_cmd) {
      const PublicKeyMcE pk = parse_public_key_mce(load_object(pk_path));
      const BaseField f = base_of(pk.field);
      const Seed seed = sf.resolve();
      Rng rng(seed);
      VecFq x;
      if (msg.empty()) {
        Rng mrng = rng.fork("msg");
        for (std::size_t i = 0; i < pk.k_prime(); ++i) x.push_back(static_cast<fq_t>(mrng.uniform(f.q())));
      } else {
        x = parse_elements(msg, f.q(), pk.k_prime(), "--msg");
      }
      Rng erng = rng.fork("error");
      const CiphertextMcE ct = encrypt_mce(pk, x, erng);
      store_object(out, serialize(ct, pk.field), hex);
      std::cout << "message: " << join(x) << "\nwrote " << out << "\n";
    } else if (*dec_cmd) {
      const SecretKey sk = parse_secret_key(load_object(sk_path));
      const PublicKeyMcE pk = parse_public_key_mce(load_object(pk_path));
      const CiphertextMcE ct = parse_ciphertext_mce(load_object(ct_path));
      const DecryptedMcE d = decrypt_mce(sk, pk, ct);
      json j = header("decrypt");
      j["message"] = vec_json(d.x);
      j["error_rank"] = d.error_rank;
      if (!out.empty()) emit(j, out);
      std::cout << "message: " << join(d.x) << "\n";
    } else if (*nenc_cmd) {
      const PublicKeyNied pk = parse_public_key_nied(load_object(pk_path));
      const BaseField f = base_of(pk.field);
      const Seed seed = sf.resolve();
      VecFq e;
      if (msg.empty()) {
        Rng rng(Rng::derive(seed, "error"));
        e = unfold(sample_error(f, pk.m, pk.n, pk.t_pub, rng));
      } else {
        e = parse_elements(msg, f.q(), pk.m * pk.n, "--msg");
      }
      const CiphertextNied ct = encrypt_nied(pk, e);
      store_object(out, serialize(ct, pk.field), hex);
      std::cout << "error: " << join(e) << "\nwrote " << out << "\n";
    } else if (*ndec_cmd) {
      const SecretKey sk = parse_secret_key(load_object(sk_path));
      const PublicKeyNied pk = parse_public_key_nied(load_object(pk_path));
      const CiphertextNied ct = parse_ciphertext_nied(load_object(ct_path));
      const VecFq e = decrypt_nied(sk, pk, ct);
      json j = header("nied-decrypt");
      j["error"] = vec_json(e);
      j["error_rank"] = rank(base_of(pk.field), fold(e, pk.m));
      if (!out.empty()) emit(j, out);
      std::cout << "error: " << join(e) << "\n";
    } else if (*est_cmd) {
      check_format(format);
      const ComplexityReport r = c_f(pf.resolve(), omega);
      if (format == "csv") {
        emit_text(std::string(kCsvHeader) + csv_row(r), out);
      } else {
        json j = header("estimate");
        j["report"] = report_json(r);
        emit(j, out);
      }
      if (!out.empty() && out != "-")
        std::cout << r.params.describe() << ": C_f = " << r.c_f() << " (" << r.c_f_source << "), pk "
                  << fmt(sizes(r.params).pk_kb()) << " kB, ct " << sizes(r.params).ct_bytes << " B\n";
    } else if (*tab_cmd) {
      check_format(format);
      unsigned lvl = 0;
      if (level != "all") {
        if (level != "128" && level != "192" && level != "256") throw ParamError("--level must be 128, 192, 256 or all");
        lvl = static_cast<unsigned>(std::stoul(level));
      }
      std::vector<SchemeParams> rows;
      for (const auto& e : registry())
        if (lvl == 0 || e.level == lvl) rows.push_back(e.params);
      std::vector<ComplexityReport> reports(rows.size());
      const long long count = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < count; ++i) reports[i] = c_f(rows[i], omega);
      if (format == "csv") {
        std::string text = kCsvHeader;
        for (const auto& r : reports) text += csv_row(r);
        emit_text(text, out);
      } else {
        json j = header("tables");
        j["level"] = level;
        j["rows"] = json::array();
        for (const auto& r : reports) j["rows"].push_back(report_json(r));
        emit(j, out);
      }
    } else if (*stab_cmd) {
      json j = header("stab-analyze");
      MatrixCodeBasis code;
      std::optional<BaseField> bf;
      if (!pk_path.empty()) {
        const PublicKeyMcE pk = parse_public_key_mce(load_object(pk_path));
        bf.emplace(base_of(pk.field));
        code = pk.matrix_code();
        j["source"] = "public-key";
      } else {
        const SchemeParams p = pf.resolve();
        const Seed seed = sf.resolve();
        const LabParent lp = lab_parent(p, seed);
        bf.emplace(lp.km.sk.field->base());
        j["params"] = params_json(p);
        if (subspace > 0) {
          if (subspace > p.m) throw ParamError("--subspace exceeds m");
          Rng rng(Rng::derive(seed, "subspace"));
          const ExtField& f = *lp.km.sk.field;
          Subspace v;
          EchelonBuilder eb(f.base(), f.m());
          while (v.size() < subspace) {
            ExtElement x = f.random(rng);
            if (eb.add(x.c)) v.push_back(std::move(x));
          }
          code = expand_code(f, lp.km.sk.basis, subspace_subcode(lp.km.sk.code(), v));
          j["source"] = "subspace-subcode";
          j["subspace_dim"] = subspace;
        } else {
          code = lp.km.subcode.matrix_code(p.m);
          j["source"] = "public-subcode";
        }
      }
      j["m"] = code.m;
      j["n"] = code.n;
      j["dim"] = code.dim();
      j["algebras"] = algebra_json(*bf, code, !no_generators);
      emit(j, out);
    } else if (*census_cmd) {
      const SchemeParams p = pf.resolve();
      const Seed seed = sf.resolve();
      const CensusParams cp{p.q, p.m, p.k, p.k_prime, p.delta};
      const CensusResult r =
          subspace > 0 ? structured_census(cp, subspace, trials, seed) : stabilizer_census(cp, trials, seed);
      json j = header("census");
      j["params"] = params_json(p);
      j["seed"] = Rng::to_hex(seed);
      j["mode"] = subspace > 0 ? "subspace-subcode" : "random-subcode";
      if (subspace > 0) j["subspace_dim"] = subspace;
      j["result"] = census_json(r);
      emit(j, out);
    } else if (*toy_cmd) {
      ParamFlags toy = pf;
      if (toy.set.empty() && toy.config.empty()) {
        if (!toy.q) toy.q = 2;
        if (!toy.m) toy.m = 3;
        if (!toy.k) toy.k = 2;
        if (!toy.kprime) toy.kprime = 5;
      }
      const SchemeParams p = toy.resolve();
      const Seed seed = sf.resolve();
      const LabParent lp = lab_parent(p, seed);
      const BaseField& f = lp.km.sk.field->base();
      const std::size_t m = p.m, km = p.k * m;
      const NormalForm nf = normal_form(f, lp.km.subcode.gen, km);
      const Completion c = complete(f, nf, parent_oracle(f, lp.gvec));
      const bool recovered = same_row_space(f, completed_generator(nf, c.a3), lp.gvec);
      const SearchResult full = completion_search_toy(f, nf, m, false, equality_validator(f, lp.gvec));
      const SearchResult punct =
          completion_search_toy(f, nf, m, true, equality_validator(f, lp.gvec.block(0, km, 0, km + m)));

      json j = header("complete-toy");
      j["params"] = params_json(p);
      j["seed"] = Rng::to_hex(seed);
      j["normal_form"] = {{"order", nf.order}, {"a1", matrix_json(nf.a1)}, {"a2", matrix_json(nf.a2)}};
      j["a3"] = matrix_json(c.a3);
      j["recovers_parent"] = recovered;
      auto search_json = [](const SearchResult& s, double bits) {
        return json{{"space_log2", round4(bits)},
                    {"visited", s.visited},
                    {"accepted", s.accepted},
                    {"found", s.found ? matrix_json(*s.found) : json(nullptr)}};
      };
      j["search_full"] = search_json(full, completion_space_bits(p.q, m, p.n(), p.k, p.k_prime, false));
      j["search_punctured"] = search_json(punct, completion_space_bits(p.q, m, p.n(), p.k, p.k_prime, true));
      emit(j, out);
    }
  } catch (const ParamError& e) {
    std::cerr << "error: ParamError: " << e.what() << "\n";
    return kExitParam;
  } catch (const DecodeFailure& e) {
    std::cerr << "error: DecodeFailure: " << e.what() << "\n";
    return kExitDecode;
  } catch (const InconsistentCiphertext& e) {
    std::cerr << "error: InconsistentCiphertext: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const IOError& e) {
    std::cerr << "error: IOError: " << e.what() << "\n";
    return kExitIO;
  } catch (const RetryExhausted& e) {
    std::cerr << "error: RetryExhausted: " << e.what() << "\n";
    return kExitRetry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
