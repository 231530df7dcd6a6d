/*
   Copyright 2026 The gbcrypt authors

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

#include "gbc/textio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gbc {

KvFile KvFile::parse(const std::string& text) {
    KvFile f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        auto eq = line.find('=', start);
        if (eq == std::string::npos) throw ParseError("expected key=value: " + line);
        std::string key = line.substr(start, eq - start);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        std::size_t vs = value.find_first_not_of(" \t");
        value = vs == std::string::npos ? std::string() : value.substr(vs);
        if (f.kv_.count(key)) throw ParseError("duplicate key: " + key);
        f.order_.push_back(key);
        f.kv_.emplace(std::move(key), std::move(value));
    }
    return f;
}

KvFile KvFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const std::string& KvFile::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ParseError("missing key: " + key);
    return it->second;
}

u64 KvFile::get_u64(const std::string& key) const {
    u128 v = get_u128(key);
    if (v >> 64) throw ParseError("value too large for " + key);
    return static_cast<u64>(v);
}

std::vector<u128> KvFile::get_vector(const std::string& key, std::size_t expected) const {
    std::istringstream in(get(key));
    std::vector<u128> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_u128(tok));
    if (out.size() != expected)
        throw ParseError(key + ": expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(out.size()));
    return out;
}

void KvFile::set(const std::string& key, std::string value) {
    if (!kv_.count(key)) order_.push_back(key);
    kv_[key] = std::move(value);
}

std::string KvFile::dump() const {
    std::ostringstream os;
    for (const std::string& k : order_) os << k << '=' << kv_.at(k) << '\n';
    return os.str();
}

void save_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

std::string ciminion_params_text(const CiminionParams& p) {
    KvFile f;
    f.set("cipher", "ciminion");
    f.set("q", to_string(p.field.modulus()));
    f.set("rc", std::to_string(p.rc));
    f.set("re", std::to_string(p.re));
    f.set("variant", variant_name(p.variant));
    f.set("seed", std::to_string(p.seed));
    if (p.variant == CiminionVariant::Fix) {
        f.set("alpha", to_string(p.alpha));
        f.set("beta", to_string(p.beta));
    }
    return f.dump();
}

CiminionParams parse_ciminion_params(const KvFile& f) {
    if (f.get("cipher") != "ciminion") throw ParseError("not a ciminion parameter file");
    PrimeField field(f.get_u128("q"));
    CiminionVariant variant = parse_variant(f.get("variant"));
    u128 alpha = f.has("alpha") ? f.get_u128("alpha") : 1;
    u128 beta = f.has("beta") ? f.get_u128("beta") : 1;
    return make_ciminion_params(field, f.get_u64("rc"), f.get_u64("re"), variant, f.get_u64("seed"),
                                alpha, beta);
}

std::string ciminion_sample_text(const CiminionParams& p, const CiminionSample& s) {
    KvFile f;
    f.set("cipher", "ciminion");
    f.set("q", to_string(p.field.modulus()));
    f.set("nonce", to_string(s.nonce));
    f.set("p1", to_string(s.p1));
    f.set("p2", to_string(s.p2));
    f.set("c1", to_string(s.c1));
    f.set("c2", to_string(s.c2));
    return f.dump();
}

CiminionSample parse_ciminion_sample(const KvFile& f) {
    if (f.get("cipher") != "ciminion") throw ParseError("not a ciminion sample file");
    CiminionSample s;
    s.nonce = f.get_u128("nonce");
    s.p1 = f.get_u128("p1");
    s.p2 = f.get_u128("p2");
    s.c1 = f.get_u128("c1");
    s.c2 = f.get_u128("c2");
    return s;
}

namespace {

std::string matrix_text(const DenseMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i + j) os << ' ';
            os << to_string(m.at(i, j));
        }
    return os.str();
}

DenseMatrix matrix_from(const PrimeField& f, const std::vector<u128>& flat, std::size_t n) {
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.reduce(flat[i * n + j]));
    return m;
}

} // namespace

std::string hydra_params_text(const HydraParams& p) {
    KvFile f;
    f.set("cipher", "hydra");
    f.set("q", to_string(p.field.modulus()));
    f.set("rh", std::to_string(p.rh));
    f.set("seed", std::to_string(p.seed));
    f.set("me", matrix_text(p.me));
    f.set("mi", matrix_text(p.mi));
    f.set("mj", matrix_text(p.mj));
    {
        std::ostringstream os;
        for (std::size_t l = 0; l < 8; ++l) {
            if (l) os << ' ';
            os << to_string(p.rolling_constant[l]);
        }
        f.set("cr", os.str());
    }
    return f.dump();
}

HydraParams parse_hydra_params(const KvFile& f) {
    if (f.get("cipher") != "hydra") throw ParseError("not a hydra parameter file");
    PrimeField field(f.get_u128("q"));
    std::size_t rh = f.get_u64("rh");
    u64 seed = f.get_u64("seed");
    HydraParams p{field,
                  rh,
                  matrix_from(field, f.get_vector("me", 16), 4),
                  matrix_from(field, f.get_vector("mi", 16), 4),
                  matrix_from(field, f.get_vector("mj", 64), 8),
                  hydra_derive_constants(seed, rh, field),
                  Vec8{},
                  seed};
    if (f.has("cr")) {
        std::vector<u128> cr = f.get_vector("cr", 8);
        for (std::size_t l = 0; l < 8; ++l) p.rolling_constant[l] = field.reduce(cr[l]);
    }
    p.validate();
    return p;
}

std::string hydra_sample_text(const HydraParams& p, const HydraSamplePair& s) {
    KvFile f;
    f.set("cipher", "hydra");
    f.set("q", to_string(p.field.modulus()));
    auto vec = [&](const Vec8& v) {
        std::ostringstream os;
        for (std::size_t l = 0; l < 8; ++l) {
            if (l) os << ' ';
            os << to_string(v[l]);
        }
        return os.str();
    };
    f.set("c1", vec(s.c1));
    f.set("c2", vec(s.c2));
    return f.dump();
}

HydraSamplePair parse_hydra_sample(const KvFile& f) {
    if (f.get("cipher") != "hydra") throw ParseError("not a hydra sample file");
    HydraSamplePair s;
    std::vector<u128> c1 = f.get_vector("c1", 8), c2 = f.get_vector("c2", 8);
    for (std::size_t l = 0; l < 8; ++l) {
        s.c1[l] = c1[l];
        s.c2[l] = c2[l];
    }
    return s;
}

Record& Record::add(const std::string& key, const std::string& value) {
    kv_.emplace_back(key, value);
    return *this;
}

Record& Record::add_bits(const std::string& key, double bits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", bits);
    return add(key, std::string(buf));
}

std::string Record::line() const {
    std::ostringstream os;
    os << type_;
    for (const auto& [k, v] : kv_) os << ' ' << k << '=' << v;
    return os.str();
}

} // namespace gbc
