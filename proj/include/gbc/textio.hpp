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

// Parameter and sample files (key=value lines) plus the line-delimited
// record format used by the command line tool.

#ifndef GBC_TEXTIO_HPP
#define GBC_TEXTIO_HPP

#include <map>
#include <string>

#include "gbc/ciminion.hpp"
#include "gbc/hydra.hpp"

namespace gbc {

// key=value per line; '#' starts a comment; keys are unique
class KvFile {
public:
    static KvFile parse(const std::string& text);
    static KvFile load(const std::string& path);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    u128 get_u128(const std::string& key) const { return parse_u128(get(key)); }
    u64 get_u64(const std::string& key) const;
    std::vector<u128> get_vector(const std::string& key, std::size_t expected) const;

    void set(const std::string& key, std::string value);
    std::string dump() const; // deterministic insertion order

private:
    std::vector<std::string> order_;
    std::map<std::string, std::string> kv_;
};

void save_file(const std::string& path, const std::string& text);

std::string ciminion_params_text(const CiminionParams& p);
CiminionParams parse_ciminion_params(const KvFile& f);

std::string ciminion_sample_text(const CiminionParams& p, const CiminionSample& s);
CiminionSample parse_ciminion_sample(const KvFile& f);

std::string hydra_params_text(const HydraParams& p);
HydraParams parse_hydra_params(const KvFile& f);

std::string hydra_sample_text(const HydraParams& p, const HydraSamplePair& s);
HydraSamplePair parse_hydra_sample(const KvFile& f);

// one structured record per line: "<type> key=value key=value ..."
class Record {
public:
    explicit Record(std::string type) : type_(std::move(type)) {}
    Record& add(const std::string& key, const std::string& value);
    Record& add(const std::string& key, u128 value) { return add(key, to_string(value)); }
    Record& add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, long value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, bool value) { return add(key, std::string(value ? "1" : "0")); }
    Record& add_bits(const std::string& key, double bits); // fixed two decimals
    std::string line() const;

private:
    std::string type_;
    std::vector<std::pair<std::string, std::string>> kv_;
};

} // namespace gbc

#endif
